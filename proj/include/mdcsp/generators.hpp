#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "mdcsp/graph.hpp"

namespace mdcsp::gen {

/// xoshiro256** (Blackman & Vigna), seeded by four successive outputs of
/// SplitMix64 started at the user seed. Spelled out here so generated graphs
/// are identical on every platform and standard library:
///
///   splitmix64: x += 0x9e3779b97f4a7c15;
///               z = x; z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
///               z = (z ^ (z >> 27)) * 0x94d049bb133111eb; return z ^ (z >> 31);
///
///   xoshiro256**: result = rotl(s1 * 5, 7) * 9;
///                 t = s1 << 17; s2 ^= s0; s3 ^= s1; s1 ^= s2; s0 ^= s3;
///                 s2 ^= t; s3 = rotl(s3, 45); return result;
///
/// uniform() takes the top 53 bits: (next() >> 11) * 2^-53, in [0, 1).
/// below(n) draws by rejection from the largest multiple of n below 2^64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  double uniform();
  std::uint64_t below(std::uint64_t n);

 private:
  std::array<std::uint64_t, 4> s_{};
};

enum class Model { WattsStrogatz, BarabasiAlbert, UniformRandom };

struct GenSpec {
  Model model = Model::UniformRandom;
  std::size_t n = 0;
  std::size_t k = 4;        // Watts-Strogatz lattice degree
  double p = 0.0;           // Watts-Strogatz rewiring probability
  std::size_t m = 2;        // Barabasi-Albert edges per new vertex
  double edge_prob = 0.0;   // uniform random
  std::uint64_t seed = 0;
};

// Throws Error describing the first violated constraint.
void validate(const GenSpec& spec);

/// Ring lattice where every vertex joins its k nearest neighbours, then for
/// each offset j = 1..k/2 and each vertex i the edge (i, i+j) is replaced
/// with probability p by (i, x) for x uniform among vertices not equal to and
/// not yet adjacent to i. Edge count stays nk/2.
Graph watts_strogatz(const GenSpec& spec);

/// Preferential attachment from a star on m+1 vertices; each later vertex
/// links to m distinct targets drawn from the degree-weighted vertex list.
/// Edge count is m + m(n - m - 1).
Graph barabasi_albert(const GenSpec& spec);

/// Each unordered pair {i, j}, visited in lexicographic order, is an edge
/// with probability edge_prob.
Graph uniform_random(const GenSpec& spec);

Graph generate(const GenSpec& spec);

std::string describe(const GenSpec& spec);
// Parses "ws:n=100,k=4,p=0.1", "ba:n=100,m=2", "uniform:n=20,edge_prob=0.2".
// A seed key is accepted but optional.
GenSpec parse_gen_spec(const std::string& text);

}  // namespace mdcsp::gen
