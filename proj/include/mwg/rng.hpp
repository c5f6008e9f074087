#pragma once

#include <cstdint>
#include <random>

#include "mwg/graph.hpp"

namespace mwg {

/// Seeded engine used by every randomized suite. Draws go through pick()
/// rather than <random> distributions so that sequences are identical
/// across standard library implementations.
using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(rng() % n); }

inline bool coin(Rng& rng) { return (rng() & 1U) != 0; }

/// Uniform in [0, 1).
inline double unit_interval(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Random path of n edges with range v; stops early only at a vertex that
/// receives no edge.
inline Path random_path_at(const Graph& graph, Rng& rng, VertexId v, std::size_t n) {
  Path p = Path::vertex(v);
  for (std::size_t i = 0; i < n; ++i) {
    auto in = graph.edges_into(p.source());
    if (in.empty()) break;
    p = p.extended(graph, in[pick(rng, in.size())]);
  }
  return p;
}

/// Random path of exactly n edges: uniform range vertex, then uniform choice
/// among the edges received at each step. Requires a graph without sources.
inline Path random_path(const Graph& graph, Rng& rng, std::size_t n) {
  return random_path_at(graph, rng, VertexId{static_cast<std::uint32_t>(pick(rng, graph.vertex_count()))}, n);
}

}  // namespace mwg
