#include "mwg/random.hpp"

#include <algorithm>
#include <string>

namespace mwg {

GraphPtr random_graph(Rng& rng, const RandomShape& shape) {
  const std::size_t nv = 1 + pick(rng, shape.max_vertices);
  const std::size_t ne = nv + pick(rng, shape.max_edges - nv + 1);
  std::vector<std::string> vertices;
  for (std::size_t i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
  std::vector<EdgeSpec> edges;
  for (std::size_t i = 0; i < ne; ++i) {
    const std::size_t range = i < nv ? i : pick(rng, nv);
    edges.push_back({"e" + std::to_string(i), vertices[range], vertices[pick(rng, nv)]});
  }
  return make_graph(std::move(vertices), std::move(edges));
}

Scalar random_scalar(Rng& rng) {
  for (;;) {
    const long re = static_cast<long>(pick(rng, 7)) - 3;
    const long im = pick(rng, 4) == 0 ? static_cast<long>(pick(rng, 5)) - 2 : 0;
    const long den = pick(rng, 3) == 0 ? 2 + static_cast<long>(pick(rng, 2)) : 1;
    if (re == 0 && im == 0) continue;
    return Scalar(mpq_class(mpz_class(re), mpz_class(den)), mpq_class(mpz_class(im), mpz_class(den)));
  }
}

Monomial random_monomial(const Graph& graph, Rng& rng, const RandomShape& shape) {
  const Path mu = random_path(graph, rng, pick(rng, shape.max_path_length + 1));
  // Walk backwards from s(mu) so that s(nu) = s(mu).
  std::vector<EdgeId> reversed;
  VertexId at = mu.source();
  const std::size_t len = pick(rng, shape.max_path_length + 1);
  for (std::size_t i = 0; i < len; ++i) {
    auto out = graph.edges_from(at);
    if (out.empty()) break;
    EdgeId f = out[pick(rng, out.size())];
    reversed.push_back(f);
    at = graph.range(f);
  }
  if (reversed.empty()) return {mu, Path::vertex(mu.source())};
  std::reverse(reversed.begin(), reversed.end());
  return {mu, Path::from_edges(graph, std::move(reversed))};
}

AlgebraElement random_element(const GraphPtr& graph, Rng& rng, const RandomShape& shape) {
  AlgebraElement x(graph);
  const std::size_t terms = 1 + pick(rng, shape.max_terms);
  for (std::size_t i = 0; i < terms; ++i) x.add_term(random_monomial(*graph, rng, shape), random_scalar(rng));
  return x;
}

CylinderFn random_cylinder_at(const GraphPtr& graph, Rng& rng, VertexId v, const RandomShape& shape) {
  CylinderFn f(graph);
  const std::size_t terms = pick(rng, shape.max_terms + 1);
  for (std::size_t i = 0; i < terms; ++i) {
    f.add_term(random_path_at(*graph, rng, v, pick(rng, shape.max_path_length + 1)), random_scalar(rng));
  }
  return f;
}

CylinderFn random_cylinder(const GraphPtr& graph, Rng& rng, const RandomShape& shape) {
  CylinderFn f(graph);
  const std::size_t terms = 1 + pick(rng, shape.max_terms);
  for (std::size_t i = 0; i < terms; ++i) {
    f.add_term(random_path(*graph, rng, pick(rng, shape.max_path_length + 1)), random_scalar(rng));
  }
  return f;
}

AElement random_a_element(const GraphPtr& graph, Rng& rng, const RandomShape& shape) {
  AElement a(graph);
  for (VertexId v : graph->vertices()) a.set_component(v, random_cylinder_at(graph, rng, v, shape));
  return a;
}

CorrVector random_corr_vector(const GraphPtr& graph, Rng& rng, const RandomShape& shape) {
  CorrVector xi(graph);
  for (EdgeId e : graph->edges()) {
    if (coin(rng)) xi.set_component(e, random_cylinder_at(graph, rng, graph->source(e), shape));
  }
  return xi;
}

}  // namespace mwg
