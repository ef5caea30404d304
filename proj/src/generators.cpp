#include "mdcsp/generators.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <sstream>
#include <unordered_set>

namespace mdcsp::gen {

namespace {

std::uint64_t splitmix64(std::uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  for (auto& word : s_) word = splitmix64(seed);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("below(0)");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  for (;;) {
    const std::uint64_t x = next();
    if (x < limit) return x % n;
  }
}

void validate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::WattsStrogatz:
      if (spec.k % 2 != 0) throw Error("watts_strogatz: k must be even");
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw Error("watts_strogatz: p must lie in [0, 1]");
      if (spec.n <= spec.k) throw Error("watts_strogatz: n must exceed k");
      break;
    case Model::BarabasiAlbert:
      if (spec.m < 1 || spec.m >= spec.n) throw Error("barabasi_albert: need 1 <= m < n");
      break;
    case Model::UniformRandom:
      if (!(spec.edge_prob >= 0.0 && spec.edge_prob <= 1.0))
        throw Error("uniform_random: edge_prob must lie in [0, 1]");
      break;
  }
}

Graph watts_strogatz(const GenSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  Rng rng(spec.seed);
  std::vector<std::set<Vertex>> adj(n);
  auto link = [&](Vertex a, Vertex b) {
    adj[a].insert(b);
    adj[b].insert(a);
  };
  for (std::size_t j = 1; j <= spec.k / 2; ++j)
    for (std::size_t i = 0; i < n; ++i) link(static_cast<Vertex>(i), static_cast<Vertex>((i + j) % n));

  for (std::size_t j = 1; j <= spec.k / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rng.uniform() >= spec.p) continue;
      const auto u = static_cast<Vertex>(i);
      const auto v = static_cast<Vertex>((i + j) % n);
      if (!adj[u].contains(v)) continue;  // already rewired away
      if (adj[u].size() >= n - 1) continue;
      Vertex w;
      do {
        w = static_cast<Vertex>(rng.below(n));
      } while (w == u || adj[u].contains(w));
      adj[u].erase(v);
      adj[v].erase(u);
      link(u, w);
    }
  }

  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : adj[u])
      if (u < v) edges.push_back({u, v});
  return Graph::from_edge_list(edges, {.vertex_count = n});
}

Graph barabasi_albert(const GenSpec& spec) {
  validate(spec);
  const std::size_t n = spec.n;
  const std::size_t m = spec.m;
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  std::vector<Vertex> repeated;  // each vertex listed once per incident edge
  for (Vertex leaf = 1; leaf <= m; ++leaf) {
    edges.push_back({0, leaf});
    repeated.push_back(0);
    repeated.push_back(leaf);
  }
  std::vector<Vertex> targets;
  std::unordered_set<Vertex> chosen;
  for (auto source = static_cast<Vertex>(m + 1); source < n; ++source) {
    targets.clear();
    chosen.clear();
    while (targets.size() < m) {
      const Vertex t = repeated[rng.below(repeated.size())];
      if (chosen.insert(t).second) targets.push_back(t);
    }
    for (Vertex t : targets) {
      edges.push_back({source, t});
      repeated.push_back(t);
      repeated.push_back(source);
    }
  }
  return Graph::from_edge_list(edges, {.vertex_count = n});
}

Graph uniform_random(const GenSpec& spec) {
  validate(spec);
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < spec.n; ++i)
    for (Vertex j = i + 1; j < spec.n; ++j)
      if (rng.uniform() < spec.edge_prob) edges.push_back({i, j});
  return Graph::from_edge_list(edges, {.vertex_count = spec.n});
}

Graph generate(const GenSpec& spec) {
  switch (spec.model) {
    case Model::WattsStrogatz:
      return watts_strogatz(spec);
    case Model::BarabasiAlbert:
      return barabasi_albert(spec);
    case Model::UniformRandom:
      break;
  }
  return uniform_random(spec);
}

std::string describe(const GenSpec& spec) {
  std::ostringstream os;
  switch (spec.model) {
    case Model::WattsStrogatz:
      os << "ws(n=" << spec.n << ",k=" << spec.k << ",p=" << spec.p << ")";
      break;
    case Model::BarabasiAlbert:
      os << "ba(n=" << spec.n << ",m=" << spec.m << ")";
      break;
    case Model::UniformRandom:
      os << "uniform(n=" << spec.n << ",edge_prob=" << spec.edge_prob << ")";
      break;
  }
  return os.str();
}

namespace {

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw Error("bad value for " + key + ": '" + text + "'");
  return value;
}

}  // namespace

GenSpec parse_gen_spec(const std::string& text) {
  const auto colon = text.find(':');
  const std::string model = text.substr(0, colon);
  GenSpec spec;
  if (model == "ws" || model == "watts_strogatz") {
    spec.model = Model::WattsStrogatz;
  } else if (model == "ba" || model == "barabasi_albert") {
    spec.model = Model::BarabasiAlbert;
  } else if (model == "uniform" || model == "uniform_random") {
    spec.model = Model::UniformRandom;
  } else {
    throw Error("unknown generator model '" + model + "'");
  }
  if (colon == std::string::npos) return spec;
  std::stringstream rest(text.substr(colon + 1));
  std::string item;
  while (std::getline(rest, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw Error("expected key=value in '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "n") spec.n = parse_number<std::size_t>(key, value);
    else if (key == "k") spec.k = parse_number<std::size_t>(key, value);
    else if (key == "p") spec.p = parse_number<double>(key, value);
    else if (key == "m") spec.m = parse_number<std::size_t>(key, value);
    else if (key == "edge_prob") spec.edge_prob = parse_number<double>(key, value);
    else if (key == "seed") spec.seed = parse_number<std::uint64_t>(key, value);
    else throw Error("unknown generator key '" + key + "'");
  }
  validate(spec);
  return spec;
}

}  // namespace mdcsp::gen
