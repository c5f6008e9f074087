#include "mwg/correspondence.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwg {

namespace {

void require_same(const GraphPtr& a, const GraphPtr& b) {
  if (a != b) throw GraphError("correspondence operands over different graphs");
}

void require_supported(const CylinderFn& f, VertexId v, const char* what) {
  if (!f.supported_on(v)) {
    throw std::invalid_argument(std::string(what) + ": component is not supported on fibre '" + f.g().name(v) + "'");
  }
}

}  // namespace

AElement::AElement(GraphPtr graph) : graph_(std::move(graph)) {
  components_.assign(graph_->vertex_count(), CylinderFn(graph_));
}

AElement AElement::fiber_unit(GraphPtr graph, VertexId v) {
  AElement a(graph);
  a.set_component(v, CylinderFn::indicator(graph, Path::vertex(v)));
  return a;
}

AElement AElement::supported_at(VertexId v, CylinderFn f) {
  AElement a(f.graph());
  a.set_component(v, std::move(f));
  return a;
}

void AElement::set_component(VertexId v, CylinderFn f) {
  require_same(graph_, f.graph());
  require_supported(f, v, "AElement");
  components_.at(v.index) = std::move(f);
}

AElement operator*(const AElement& a, const AElement& b) {
  require_same(a.graph_, b.graph_);
  AElement out(a.graph_);
  for (std::size_t v = 0; v < a.components_.size(); ++v) out.components_[v] = a.components_[v] * b.components_[v];
  return out;
}

AElement operator+(const AElement& a, const AElement& b) {
  require_same(a.graph_, b.graph_);
  AElement out(a.graph_);
  for (std::size_t v = 0; v < a.components_.size(); ++v) out.components_[v] = a.components_[v] + b.components_[v];
  return out;
}

AElement AElement::conjugate() const {
  AElement out(graph_);
  for (std::size_t v = 0; v < components_.size(); ++v) out.components_[v] = components_[v].conjugate();
  return out;
}

bool operator==(const AElement& a, const AElement& b) {
  require_same(a.graph_, b.graph_);
  return std::equal(a.components_.begin(), a.components_.end(), b.components_.begin());
}

CorrVector::CorrVector(GraphPtr graph) : graph_(std::move(graph)) {
  components_.assign(graph_->edge_count(), CylinderFn(graph_));
}

CorrVector CorrVector::unit(GraphPtr graph, EdgeId e) {
  CorrVector xi(graph);
  xi.set_component(e, CylinderFn::indicator(graph, Path::vertex(graph->source(e))));
  return xi;
}

void CorrVector::set_component(EdgeId e, CylinderFn f) {
  require_same(graph_, f.graph());
  require_supported(f, graph_->source(e), "CorrVector");
  components_.at(e.index) = std::move(f);
}

CorrVector operator+(const CorrVector& a, const CorrVector& b) {
  require_same(a.graph_, b.graph_);
  CorrVector out(a.graph_);
  for (std::size_t e = 0; e < a.components_.size(); ++e) out.components_[e] = a.components_[e] + b.components_[e];
  return out;
}

bool operator==(const CorrVector& a, const CorrVector& b) {
  require_same(a.graph_, b.graph_);
  return std::equal(a.components_.begin(), a.components_.end(), b.components_.begin());
}

CorrVector left_act(const AElement& a, const CorrVector& xi) {
  require_same(a.graph(), xi.graph());
  const Graph& g = *xi.graph();
  CorrVector out(xi.graph());
  for (EdgeId e : g.edges()) {
    out.set_component(e, a.component(g.range(e)).pullback_shift(e) * xi.component(e));
  }
  return out;
}

CorrVector right_act(const CorrVector& xi, const AElement& a) {
  require_same(a.graph(), xi.graph());
  const Graph& g = *xi.graph();
  CorrVector out(xi.graph());
  for (EdgeId e : g.edges()) out.set_component(e, xi.component(e) * a.component(g.source(e)));
  return out;
}

AElement inner(const CorrVector& xi, const CorrVector& eta) {
  require_same(xi.graph(), eta.graph());
  const Graph& g = *xi.graph();
  AElement out(xi.graph());
  for (VertexId v : g.vertices()) {
    CylinderFn sum(xi.graph());
    for (EdgeId e : g.edges_from(v)) sum += xi.component(e).conjugate() * eta.component(e);
    out.set_component(v, std::move(sum));
  }
  return out;
}

AlgebraElement pi(const AElement& a) {
  AlgebraElement out(a.graph());
  for (VertexId v : a.graph()->vertices()) out += tau(a.component(v));
  return out;
}

AlgebraElement psi(const CorrVector& xi) {
  AlgebraElement out(xi.graph());
  for (EdgeId e : xi.graph()->edges()) {
    const CylinderFn& f = xi.component(e);
    if (f.empty()) continue;
    out += AlgebraElement::generator(xi.graph(), e) * tau(f);
  }
  return out;
}

ToeplitzCheck toeplitz_relations(const CorrVector& xi, const CorrVector& eta, const AElement& a) {
  require_same(xi.graph(), eta.graph());
  require_same(xi.graph(), a.graph());
  ToeplitzCheck check;
  check.inner_product = equals(psi(xi).adjoint() * psi(eta), pi(inner(xi, eta)));
  check.left = equals(pi(a) * psi(xi), psi(left_act(a, xi)));
  check.right = equals(psi(xi) * pi(a), psi(right_act(xi, a)));
  return check;
}

bool check_covariance(const AElement& a, VertexId u) {
  const Graph& g = *a.graph();
  for (VertexId v : g.vertices()) {
    if (v != u && !a.component(v).empty()) {
      throw std::invalid_argument("check_covariance: element is not supported on fibre '" + g.name(u) + "'");
    }
  }
  AlgebraElement lhs(a.graph());
  for (EdgeId e : g.edges_into(u)) {
    const CorrVector unit = CorrVector::unit(a.graph(), e);
    lhs += psi(left_act(a, unit)) * psi(unit).adjoint();
  }
  return equals(lhs, pi(a));
}

// ---------------------------------------------------------------------------

GeoAElement::GeoAElement(std::shared_ptr<const MWSystem> sys) : sys_(std::move(sys)) {
  components_.resize(sys_->graph->vertex_count());
}

std::complex<double> GeoAElement::operator()(VertexId v, Point p) const {
  const auto& f = components_.at(v.index);
  return f ? f(p) : std::complex<double>{};
}

GeoCorrVector::GeoCorrVector(std::shared_ptr<const MWSystem> sys) : sys_(std::move(sys)) {
  components_.resize(sys_->graph->edge_count());
}

std::complex<double> GeoCorrVector::operator()(EdgeId e, Point p) const {
  const auto& f = components_.at(e.index);
  return f ? f(p) : std::complex<double>{};
}

namespace {

void require_same(const std::shared_ptr<const MWSystem>& a, const std::shared_ptr<const MWSystem>& b) {
  if (a != b) throw std::invalid_argument("geometric operands over different systems");
}

}  // namespace

GeoCorrVector left_act(const GeoAElement& a, const GeoCorrVector& xi) {
  require_same(a.system(), xi.system());
  const MWSystem& sys = *xi.system();
  GeoCorrVector out(xi.system());
  for (EdgeId e : sys.graph->edges()) {
    if (!xi.component(e) || !a.component(sys.graph->range(e))) continue;
    const Similarity phi = sys.map(e);
    out.set_component(e, [a_fn = a.component(sys.graph->range(e)), xi_fn = xi.component(e), phi](Point p) {
      return a_fn(phi(p)) * xi_fn(p);
    });
  }
  return out;
}

GeoCorrVector right_act(const GeoCorrVector& xi, const GeoAElement& a) {
  require_same(a.system(), xi.system());
  const MWSystem& sys = *xi.system();
  GeoCorrVector out(xi.system());
  for (EdgeId e : sys.graph->edges()) {
    if (!xi.component(e) || !a.component(sys.graph->source(e))) continue;
    out.set_component(e, [xi_fn = xi.component(e), a_fn = a.component(sys.graph->source(e))](Point p) {
      return xi_fn(p) * a_fn(p);
    });
  }
  return out;
}

GeoAElement inner(const GeoCorrVector& xi, const GeoCorrVector& eta) {
  require_same(xi.system(), eta.system());
  const MWSystem& sys = *xi.system();
  GeoAElement out(xi.system());
  for (VertexId v : sys.graph->vertices()) {
    std::vector<std::pair<FiberFn, FiberFn>> pairs;
    for (EdgeId e : sys.graph->edges_from(v)) {
      if (xi.component(e) && eta.component(e)) pairs.emplace_back(xi.component(e), eta.component(e));
    }
    if (pairs.empty()) continue;
    out.set_component(v, [pairs = std::move(pairs)](Point p) {
      std::complex<double> sum{};
      for (const auto& [f, g] : pairs) sum += std::conj(f(p)) * g(p);
      return sum;
    });
  }
  return out;
}

CylinderFn sample_fiber(const MWSystem& sys, const FiberFn& f, VertexId v, std::size_t n) {
  CylinderFn out(sys.graph);
  if (!f) return out;
  for (const Path& alpha : paths_from(*sys.graph, v, n)) {
    out.add_term(alpha, Scalar::from_double(f(code(sys, alpha, n).point)));
  }
  return out;
}

AlgebraElement pi_geo(const GeoAElement& a, std::size_t n) {
  if (n < 1) throw std::invalid_argument("pi_geo: depth must be at least 1");
  const MWSystem& sys = *a.system();
  AlgebraElement out(sys.graph);
  for (VertexId v : sys.graph->vertices()) out += tau(sample_fiber(sys, a.component(v), v, n));
  return out;
}

AlgebraElement psi_geo(const GeoCorrVector& xi, std::size_t n) {
  if (n < 1) throw std::invalid_argument("psi_geo: depth must be at least 1");
  const MWSystem& sys = *xi.system();
  AlgebraElement out(sys.graph);
  for (EdgeId e : sys.graph->edges()) {
    if (!xi.component(e)) continue;
    out += AlgebraElement::generator(sys.graph, e) *
           tau(sample_fiber(sys, xi.component(e), sys.graph->source(e), n));
  }
  return out;
}

double toeplitz_residual_geo(const GeoCorrVector& xi, const GeoCorrVector& eta, const GeoAElement& a,
                             std::size_t n) {
  require_same(xi.system(), eta.system());
  require_same(xi.system(), a.system());
  const AlgebraElement psi_xi = psi_geo(xi, n);
  const AlgebraElement psi_eta = psi_geo(eta, n);
  const AlgebraElement pi_a = pi_geo(a, n);

  const double inner_defect = normal_form(psi_xi.adjoint() * psi_eta - pi_geo(inner(xi, eta), n)).max_abs_coefficient();
  const double left_defect = normal_form(pi_a * psi_xi - psi_geo(left_act(a, xi), n)).max_abs_coefficient();
  const double right_defect = normal_form(psi_xi * pi_a - psi_geo(right_act(xi, a), n)).max_abs_coefficient();
  return std::max({inner_defect, left_defect, right_defect});
}

double geometric_residual_constant(const MWSystem& sys) { return sys.max_diameter(); }

}  // namespace mwg
