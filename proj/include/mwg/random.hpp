#pragma once

#include "mwg/algebra.hpp"
#include "mwg/correspondence.hpp"
#include "mwg/cylinder.hpp"
#include "mwg/rng.hpp"

namespace mwg {

/// Size limits for randomly drawn objects.
struct RandomShape {
  std::size_t max_vertices = 6;
  std::size_t max_edges = 12;
  std::size_t max_terms = 3;
  std::size_t max_path_length = 2;
};

/// Row-finite graph without sources: every vertex first receives one edge
/// from a random source, then extra random edges are added.
GraphPtr random_graph(Rng& rng, const RandomShape& shape = {});

/// Small nonzero complex rational.
Scalar random_scalar(Rng& rng);

/// s_mu s_nu^* with s(mu) = s(nu).
Monomial random_monomial(const Graph& graph, Rng& rng, const RandomShape& shape = {});
AlgebraElement random_element(const GraphPtr& graph, Rng& rng, const RandomShape& shape = {});

/// Random cylinder function; keys all have range v when v is given.
CylinderFn random_cylinder(const GraphPtr& graph, Rng& rng, const RandomShape& shape = {});
CylinderFn random_cylinder_at(const GraphPtr& graph, Rng& rng, VertexId v, const RandomShape& shape = {});

AElement random_a_element(const GraphPtr& graph, Rng& rng, const RandomShape& shape = {});
CorrVector random_corr_vector(const GraphPtr& graph, Rng& rng, const RandomShape& shape = {});

}  // namespace mwg
