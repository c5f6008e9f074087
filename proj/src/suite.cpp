#include "mwg/suite.hpp"

#include <algorithm>

#include "mwg/expression.hpp"

namespace mwg {

void CheckTally::record(bool ok, const std::function<std::string()>& describe) {
  ++total;
  if (ok) {
    ++passed;
  } else if (first_failure.empty()) {
    first_failure = describe();
  }
}

bool SuiteResult::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& t) { return t.ok(); });
}

CheckTally& SuiteResult::tally(const std::string& name) {
  for (auto& t : checks) {
    if (t.name == name) return t;
  }
  checks.push_back({name, 0, 0, {}});
  return checks.back();
}

void SuiteResult::merge(const SuiteResult& other) {
  for (const auto& t : other.checks) {
    CheckTally& mine = tally(t.name);
    mine.passed += t.passed;
    mine.total += t.total;
    if (mine.first_failure.empty()) mine.first_failure = t.first_failure;
  }
}

namespace {

std::string show(const AlgebraElement& x) { return to_string(x); }

}  // namespace

SuiteResult algebra_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape) {
  SuiteResult result;
  const Graph& g = *graph;

  auto& ck = result.tally("cuntz_krieger");
  for (VertexId v : g.vertices()) {
    AlgebraElement rhs(graph);
    for (EdgeId e : g.edges_into(v)) {
      auto s_e = AlgebraElement::generator(graph, e);
      rhs += s_e * s_e.adjoint();
    }
    const AlgebraElement defect = AlgebraElement::vertex_projection(graph, v) - rhs;
    ck.record(normal_form(defect).empty(), [&] { return "p_" + g.name(v) + " - sum s_e s_e^*"; });
  }
  auto& source_projection = result.tally("source_projection");
  for (EdgeId e : g.edges()) {
    auto s_e = AlgebraElement::generator(graph, e);
    source_projection.record(equals(s_e.adjoint() * s_e, AlgebraElement::vertex_projection(graph, g.source(e))),
                             [&] { return "s_" + g.name(e) + "^* s_" + g.name(e); });
  }

  auto& assoc = result.tally("associativity");
  auto& adj = result.tally("adjoint_antimultiplicative");
  auto& invol = result.tally("adjoint_involution");
  auto& distrib = result.tally("distributivity");
  auto& grading = result.tally("grading");
  auto& idempotent = result.tally("normal_form_idempotent");
  for (std::size_t i = 0; i < samples; ++i) {
    const AlgebraElement x = random_element(graph, rng, shape);
    const AlgebraElement y = random_element(graph, rng, shape);
    const AlgebraElement z = random_element(graph, rng, shape);
    const AlgebraElement xy = x * y;

    assoc.record(equals(xy * z, x * (y * z)), [&] { return show(x) + " | " + show(y) + " | " + show(z); });
    adj.record(equals(xy.adjoint(), y.adjoint() * x.adjoint()), [&] { return show(x) + " | " + show(y); });
    invol.record(equals(x.adjoint().adjoint(), x), [&] { return show(x); });
    distrib.record(equals(x * (y + z), xy + x * z), [&] { return show(x) + " | " + show(y) + " | " + show(z); });

    bool graded = true;
    for (const auto& [m, c] : x.terms()) {
      for (const auto& [n, d] : y.terms()) {
        if (auto p = multiply(m, n)) graded = graded && p->degree() == m.degree() + n.degree();
      }
    }
    grading.record(graded, [&] { return show(x) + " | " + show(y); });

    const NormalForm nf = normal_form(xy);
    const NormalForm again = normal_form(nf.to_element(graph));
    bool same = again.classes.size() == nf.classes.size();
    for (auto it = nf.classes.begin(), jt = again.classes.begin(); same && it != nf.classes.end(); ++it, ++jt) {
      same = it->first == jt->first && it->second.level == jt->second.level && it->second.terms == jt->second.terms;
    }
    idempotent.record(same, [&] { return show(xy); });
  }
  return result;
}

SuiteResult cylinder_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape) {
  SuiteResult result;
  const Graph& g = *graph;
  auto& mult = result.tally("tau_multiplicative");
  auto& star = result.tally("tau_star");
  auto& injective = result.tally("tau_injective");
  auto& intertwine = result.tally("intertwine");
  auto& pullback = result.tally("pullback_homomorphism");
  for (std::size_t i = 0; i < samples; ++i) {
    const CylinderFn f = random_cylinder(graph, rng, shape);
    const CylinderFn h = random_cylinder(graph, rng, shape);
    mult.record(equals(tau(f * h), tau(f) * tau(h)), [&] { return f.to_string() + " | " + h.to_string(); });
    star.record(equals(tau(f.conjugate()), tau(f).adjoint()), [&] { return f.to_string(); });
    const CylinderFn diff = f - h;
    injective.record(is_zero(tau(diff)) == diff.is_zero(), [&] { return diff.to_string(); });
    for (EdgeId e : g.edges()) {
      intertwine.record(check_intertwine(f, e), [&] { return f.to_string() + " along " + g.name(e); });
      pullback.record((f * h).pullback_shift(e) == f.pullback_shift(e) * h.pullback_shift(e),
                      [&] { return f.to_string() + " | " + h.to_string() + " along " + g.name(e); });
    }
  }
  return result;
}

SuiteResult toeplitz_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape) {
  SuiteResult result;
  auto& toeplitz = result.tally("toeplitz");
  auto& module = result.tally("module_axiom");
  auto& symmetric = result.tally("inner_symmetry");
  for (std::size_t i = 0; i < samples; ++i) {
    const CorrVector xi = random_corr_vector(graph, rng, shape);
    const CorrVector eta = random_corr_vector(graph, rng, shape);
    const AElement a = random_a_element(graph, rng, shape);
    const ToeplitzCheck check = toeplitz_relations(xi, eta, a);
    toeplitz.record(check.ok(), [&] {
      return std::string("inner=") + (check.inner_product ? "ok" : "FAIL") + " left=" + (check.left ? "ok" : "FAIL") +
             " right=" + (check.right ? "ok" : "FAIL");
    });
    module.record(inner(xi, right_act(eta, a)) == inner(xi, eta) * a, [] { return std::string("module axiom"); });
    symmetric.record(inner(xi, eta) == inner(eta, xi).conjugate(), [] { return std::string("inner symmetry"); });
  }
  return result;
}

SuiteResult covariance_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape) {
  SuiteResult result;
  auto& cov = result.tally("covariance");
  for (std::size_t i = 0; i < samples; ++i) {
    const VertexId u{static_cast<std::uint32_t>(pick(rng, graph->vertex_count()))};
    const AElement a = AElement::supported_at(u, random_cylinder_at(graph, rng, u, shape));
    cov.record(check_covariance(a, u), [&] { return a.component(u).to_string(); });
  }
  return result;
}

SuiteResult generator_coverage(const GraphPtr& graph) {
  SuiteResult result;
  auto& edges = result.tally("psi_unit_is_generator");
  auto& vertices = result.tally("pi_unit_is_projection");
  for (EdgeId e : graph->edges()) {
    edges.record(equals(psi(CorrVector::unit(graph, e)), AlgebraElement::generator(graph, e)),
                 [&] { return graph->name(e); });
  }
  for (VertexId v : graph->vertices()) {
    vertices.record(equals(pi(AElement::fiber_unit(graph, v)), AlgebraElement::vertex_projection(graph, v)),
                    [&] { return graph->name(v); });
  }
  return result;
}

SuiteResult roundtrip_suite(const GraphPtr& graph, Rng& rng, std::size_t samples, const RandomShape& shape) {
  SuiteResult result;
  auto& rt = result.tally("parse_print_roundtrip");
  for (std::size_t i = 0; i < samples; ++i) {
    AlgebraElement x = random_element(graph, rng, shape);
    if (pick(rng, 4) == 0) x = x * random_element(graph, rng, shape);
    const std::string text = to_string(x);
    bool ok = false;
    try {
      ok = equals(parse_expression(graph, text), x);
    } catch (const std::exception&) {
      ok = false;
    }
    rt.record(ok, [&] { return text; });
  }
  return result;
}

}  // namespace mwg
