#include "mwg/ifs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <unordered_map>

#include "mwg/rng.hpp"

namespace mwg {

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

std::vector<Point> Box::corners(int dimension) const {
  if (dimension == 1) return {{min.x, 0.0}, {max.x, 0.0}};
  return {{min.x, min.y}, {max.x, min.y}, {min.x, max.y}, {max.x, max.y}};
}

bool Box::contains(Point p, double slack) const {
  return p.x >= min.x - slack && p.x <= max.x + slack && p.y >= min.y - slack && p.y <= max.y + slack;
}

Similarity::Similarity(int dimension, double ratio, double angle_degrees, bool reflect, Point translation)
    : ratio_(ratio), angle_degrees_(angle_degrees), reflect_(reflect), translation_(translation) {
  if (dimension == 1) {
    const double turn = std::remainder(angle_degrees, 360.0);
    if (turn != 0.0 && std::abs(turn) != 180.0) {
      throw std::invalid_argument("one-dimensional maps admit rotation angles 0 and 180 only");
    }
    const bool flip = reflect != (std::abs(turn) == 180.0);
    a_ = flip ? -ratio : ratio;
    translation_.y = 0.0;
    return;
  }
  // Exact values for quarter turns keep rotated lattices on the lattice.
  double c = 0.0;
  double s = 0.0;
  const double turn = std::remainder(angle_degrees, 360.0);
  if (turn == 0.0) {
    c = 1.0;
  } else if (turn == 90.0) {
    s = 1.0;
  } else if (std::abs(turn) == 180.0) {
    c = -1.0;
  } else if (turn == -90.0) {
    s = -1.0;
  } else {
    const double rad = angle_degrees * std::numbers::pi / 180.0;
    c = std::cos(rad);
    s = std::sin(rad);
  }
  const double f = reflect ? -1.0 : 1.0;  // F = diag(1, f)
  a_ = ratio * c;
  b_ = -ratio * s * f;
  c_ = ratio * s;
  d_ = ratio * c * f;
}

double MWSystem::max_ratio() const {
  double best = 0.0;
  for (const auto& m : maps) best = std::max(best, m.ratio());
  return best;
}

double MWSystem::max_diameter() const {
  double best = 0.0;
  for (const auto& b : spaces) best = std::max(best, b.diameter());
  return best;
}

ValidationReport validate_system(const MWSystem& sys) {
  ValidationReport report = validate(*sys.graph);
  const Graph& g = *sys.graph;
  if (sys.dimension != 1 && sys.dimension != 2) report.fail("dimension must be 1 or 2");
  if (sys.spaces.size() != g.vertex_count()) report.fail("one space per vertex is required");
  if (sys.maps.size() != g.edge_count()) report.fail("one map per edge is required");
  if (!report.violations.empty() && (sys.spaces.size() != g.vertex_count() || sys.maps.size() != g.edge_count())) {
    return report;
  }
  for (VertexId v : g.vertices()) {
    const Box& b = sys.space(v);
    if (!(b.min.x <= b.max.x && b.min.y <= b.max.y)) report.fail("space of " + g.name(v) + " has min > max");
  }
  for (EdgeId e : g.edges()) {
    const Similarity& m = sys.map(e);
    if (!(m.ratio() > 0.0 && m.ratio() < 1.0)) {
      report.fail(g.name(e) + ": ratio " + std::to_string(m.ratio()) + " is not a contraction ratio in (0,1)");
    }
    const Box& target = sys.space(g.range(e));
    const double slack = kContainmentSlack * std::max(1.0, target.diameter());
    for (Point c : sys.space(g.source(e)).corners(sys.dimension)) {
      Point image = m(c);
      if (!target.contains(image, slack)) {
        report.fail(g.name(e) + ": image of T_" + g.name(g.source(e)) + " is not contained in T_" +
                    g.name(g.range(e)));
        break;
      }
    }
  }
  return report;
}

namespace {

/// Uniform-grid index for nearest-point queries.
class NearestIndex {
 public:
  NearestIndex(std::span<const Point> points, double cell) : points_(points), cell_(cell) {
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto key = cell_of(points[i]);
      buckets_[key].push_back(i);
      lo_x_ = std::min(lo_x_, key.first);
      hi_x_ = std::max(hi_x_, key.first);
      lo_y_ = std::min(lo_y_, key.second);
      hi_y_ = std::max(hi_y_, key.second);
    }
  }

  /// Distance to the nearest indexed point (infinity when empty).
  double nearest(Point p) const {
    double best = std::numeric_limits<double>::infinity();
    if (points_.empty()) return best;
    auto [cx, cy] = cell_of(p);
    const std::int64_t max_ring =
        std::max({std::abs(cx - lo_x_), std::abs(cx - hi_x_), std::abs(cy - lo_y_), std::abs(cy - hi_y_)}) + 1;
    for (std::int64_t ring = 0; ring <= max_ring; ++ring) {
      for (std::int64_t dx = -ring; dx <= ring; ++dx) {
        for (std::int64_t dy = -ring; dy <= ring; ++dy) {
          if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
          auto it = buckets_.find({cx + dx, cy + dy});
          if (it == buckets_.end()) continue;
          for (std::size_t i : it->second) best = std::min(best, distance(p, points_[i]));
        }
      }
      // Every point in ring+1 or beyond is at least ring*cell away.
      if (best <= static_cast<double>(ring) * cell_) break;
    }
    return best;
  }

 private:
  using Key = std::pair<std::int64_t, std::int64_t>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::int64_t>()(k.first * 1000003 + k.second);
    }
  };

  Key cell_of(Point p) const {
    return {static_cast<std::int64_t>(std::floor(p.x / cell_)), static_cast<std::int64_t>(std::floor(p.y / cell_))};
  }

  std::span<const Point> points_;
  double cell_;
  std::unordered_map<Key, std::vector<std::size_t>, KeyHash> buckets_;
  std::int64_t lo_x_ = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi_x_ = std::numeric_limits<std::int64_t>::min();
  std::int64_t lo_y_ = std::numeric_limits<std::int64_t>::max();
  std::int64_t hi_y_ = std::numeric_limits<std::int64_t>::min();
};

double index_cell(std::span<const Point> points) {
  if (points.empty()) return 1.0;
  double min_x = points[0].x, max_x = points[0].x, min_y = points[0].y, max_y = points[0].y;
  for (Point p : points) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const double extent = std::max(max_x - min_x, max_y - min_y);
  const double per_side = std::sqrt(static_cast<double>(points.size()));
  const double cell = extent / std::max(1.0, per_side);
  return cell > 0.0 ? cell : 1.0;
}

// Keeps the smallest point of each grid cell; the result does not depend on
// input order.
std::vector<Point> grid_dedup(std::vector<Point> points, double pitch) {
  auto key = [pitch](Point p) {
    return std::pair{static_cast<std::int64_t>(std::floor(p.x / pitch)),
                     static_cast<std::int64_t>(std::floor(p.y / pitch))};
  };
  std::sort(points.begin(), points.end(), [&](Point a, Point b) {
    auto ka = key(a);
    auto kb = key(b);
    return ka != kb ? ka < kb : a < b;
  });
  std::vector<Point> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i == 0 || key(points[i]) != key(points[i - 1])) out.push_back(points[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AttractorApprox attractor(const MWSystem& sys, double eps, const AttractorOptions& options) {
  if (!(eps > 0.0)) throw std::invalid_argument("attractor: eps must be positive");
  const Graph& g = *sys.graph;
  const double rho = sys.max_ratio();
  const double diam = sys.max_diameter();
  const double pitch = eps / 4.0;
  const double dedup_slack = pitch * std::sqrt(static_cast<double>(sys.dimension));
  const double budget = eps - dedup_slack;

  std::size_t k = 0;
  double cell = diam;
  while (cell > budget) {
    cell *= rho;
    ++k;
    if (k > 10'000) throw ResourceError("attractor: contraction too weak for requested eps");
  }

  const std::size_t seeds_per_vertex = options.seeds == AttractorOptions::Seeds::corners
                                           ? (sys.dimension == 1 ? 2 : 4)
                                           : 1;
  double total = 0.0;
  for (VertexId v : g.vertices()) total += count_paths(g, v, k) * static_cast<double>(seeds_per_vertex);
  if (total > static_cast<double>(options.point_cap)) {
    throw ResourceError("attractor: " + std::to_string(static_cast<long double>(total)) +
                        " points exceed the cap of " + std::to_string(options.point_cap));
  }

  std::vector<std::vector<Point>> level(g.vertex_count());
  for (VertexId v : g.vertices()) {
    if (options.seeds == AttractorOptions::Seeds::corners) {
      level[v.index] = sys.space(v).corners(sys.dimension);
    } else {
      level[v.index] = {sys.space(v).center()};
    }
  }
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<std::vector<Point>> next(g.vertex_count());
    for (VertexId u : g.vertices()) {
      for (EdgeId e : g.edges_into(u)) {
        const Similarity& m = sys.map(e);
        for (Point p : level[g.source(e).index]) next[u.index].push_back(m(p));
      }
    }
    level = std::move(next);
  }

  AttractorApprox out;
  out.iterations = k;
  out.grid_pitch = pitch;
  out.radius = cell + dedup_slack;
  out.points.reserve(level.size());
  for (auto& pts : level) out.points.push_back(grid_dedup(std::move(pts), pitch));
  return out;
}

Point apply_path(const MWSystem& sys, const Path& alpha, Point p) {
  auto edges = alpha.edges();
  for (auto it = edges.rbegin(); it != edges.rend(); ++it) p = sys.map(*it)(p);
  return p;
}

CodePoint code(const MWSystem& sys, const Path& alpha, std::size_t n) {
  if (n < alpha.length()) throw std::invalid_argument("code: depth is shorter than the path");
  const Path full = extend_canonical(*sys.graph, alpha, n - alpha.length());
  const Box& base = sys.space(full.source());
  double scale = 1.0;
  for (EdgeId e : full.edges()) scale *= sys.map(e).ratio();
  return {apply_path(sys, full, base.center()), scale * base.diameter() / 2.0};
}

EquivarianceReport check_equivariance(const MWSystem& sys, std::size_t samples, std::size_t n, double tol,
                                      std::uint64_t seed, const EdgeMapOverride& override_map) {
  const Graph& g = *sys.graph;
  Rng rng(seed);
  EquivarianceReport report;
  for (std::size_t i = 0; i < samples; ++i) {
    const Path alpha = random_path(g, rng, n);
    const CodePoint inner = code(sys, alpha, n);
    for (EdgeId e : g.edges_from(alpha.range())) {
      const Path shifted = concat(Path::edge(g, e), alpha);
      const CodePoint outer = code(sys, shifted, n + 1);
      const Point image = override_map ? override_map(e, inner.point) : sys.map(e)(inner.point);
      const double discrepancy = distance(outer.point, image);
      const double allowed = 2.0 * inner.radius + tol;
      ++report.checks;
      report.max_discrepancy = std::max(report.max_discrepancy, discrepancy);
      report.max_allowed = std::max(report.max_allowed, allowed);
      if (!(discrepancy <= allowed)) {
        ++report.failures;
        report.ok = false;
      }
    }
  }
  return report;
}

SurjectivityReport check_surjectivity(const MWSystem& sys, double eps, const AttractorOptions& options) {
  const Graph& g = *sys.graph;
  const AttractorApprox k = attractor(sys, eps, options);
  SurjectivityReport report;
  report.eps = eps;
  for (VertexId v : g.vertices()) {
    const Box& box = sys.space(v);
    const auto& pts = k.points[v.index];
    NearestIndex index(pts, std::max(2.0 * eps, index_cell(pts)));

    auto axis = [eps](double lo, double hi) {
      std::vector<double> ticks;
      const auto steps = static_cast<std::size_t>(std::floor((hi - lo) / eps));
      for (std::size_t i = 0; i <= steps; ++i) ticks.push_back(lo + static_cast<double>(i) * eps);
      if (ticks.back() < hi) ticks.push_back(hi);
      return ticks;
    };
    const auto xs = axis(box.min.x, box.max.x);
    const auto ys = sys.dimension == 1 ? std::vector<double>{0.0} : axis(box.min.y, box.max.y);

    double gap = 0.0;
    for (double x : xs) {
      for (double y : ys) gap = std::max(gap, index.nearest({x, y}));
    }
    const bool ok = gap <= 2.0 * eps;
    report.vertex_ok.push_back(ok);
    report.max_gap.push_back(gap);
    report.ok = report.ok && ok;
  }
  return report;
}

PerronBracket perron_root(const std::vector<std::vector<double>>& matrix, double tol) {
  const std::size_t n = matrix.size();
  std::vector<double> x(n, 1.0);
  PerronBracket bracket{0.0, std::numeric_limits<double>::infinity()};
  // Power iteration on A + I, which is primitive when A is irreducible.
  for (int iter = 0; iter < 200'000; ++iter) {
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = x[i];
      for (std::size_t j = 0; j < n; ++j) y[i] += matrix[i][j] * x[j];
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double q = y[i] / x[i];
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      norm = std::max(norm, y[i]);
    }
    bracket = {std::max(bracket.lower, lo - 1.0), std::min(bracket.upper, hi - 1.0)};
    if (bracket.upper - bracket.lower <= tol) break;
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
  }
  return bracket;
}

std::vector<std::vector<double>> mauldin_matrix(const MWSystem& sys, double s) {
  const Graph& g = *sys.graph;
  std::vector<std::vector<double>> a(g.vertex_count(), std::vector<double>(g.vertex_count(), 0.0));
  for (EdgeId e : g.edges()) a[g.range(e).index][g.source(e).index] += std::pow(sys.map(e).ratio(), s);
  return a;
}

double dimension(const MWSystem& sys, double tol) {
  if (!sys.graph->strongly_connected()) {
    throw GraphError("dimension: graph is not strongly connected");
  }
  if (!(tol > 0.0)) throw std::invalid_argument("dimension: tol must be positive");
  const double inner_tol = tol / 10.0;
  auto above_one = [&](double s) {
    PerronBracket b = perron_root(mauldin_matrix(sys, s), inner_tol);
    return 0.5 * (b.lower + b.upper) >= 1.0;
  };

  double lo = 0.0;
  double hi = static_cast<double>(sys.dimension) + 1.0;
  // Overlapping systems can have roots beyond the spatial dimension.
  while (above_one(hi)) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw std::runtime_error("dimension: no root below 1e6");
  }
  while (hi - lo > tol / 4.0) {
    const double mid = 0.5 * (lo + hi);
    if (above_one(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double hausdorff_distance(std::span<const Point> a, std::span<const Point> b) {
  if (a.empty() || b.empty()) {
    return a.empty() && b.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  }
  NearestIndex in_a(a, index_cell(a));
  NearestIndex in_b(b, index_cell(b));
  double d = 0.0;
  for (Point p : a) d = std::max(d, in_b.nearest(p));
  for (Point p : b) d = std::max(d, in_a.nearest(p));
  return d;
}

}  // namespace mwg
