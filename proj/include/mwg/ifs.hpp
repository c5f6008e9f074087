#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "mwg/graph.hpp"

namespace mwg {

/// Point in the plane; one-dimensional systems keep y = 0.
struct Point {
  double x = 0.0;
  double y = 0.0;

  friend Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
  friend Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
  friend Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
  auto operator<=>(const Point&) const = default;
};

double distance(Point a, Point b);

/// Axis-aligned compact box.
struct Box {
  Point min;
  Point max;

  double diameter() const { return distance(min, max); }
  Point center() const { return 0.5 * (min + max); }
  /// 2 corners in dimension 1, 4 in dimension 2.
  std::vector<Point> corners(int dimension) const;
  bool contains(Point p, double slack = 0.0) const;
};

/// x -> ratio * R(angle) * F * x + translation, where F reflects y -> -y
/// in the plane and x -> -x on the line when `reflect` is set.
class Similarity {
 public:
  Similarity() = default;
  Similarity(int dimension, double ratio, double angle_degrees, bool reflect, Point translation);

  double ratio() const { return ratio_; }
  double angle_degrees() const { return angle_degrees_; }
  bool reflect() const { return reflect_; }
  Point translation() const { return translation_; }

  Point operator()(Point p) const {
    return {a_ * p.x + b_ * p.y + translation_.x, c_ * p.x + d_ * p.y + translation_.y};
  }

 private:
  double ratio_ = 0.0;
  double angle_degrees_ = 0.0;
  bool reflect_ = false;
  Point translation_;
  double a_ = 0.0, b_ = 0.0, c_ = 0.0, d_ = 0.0;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mauldin-Williams datum: a box T_v per vertex and a similarity phi_e per
/// edge, required to map T_{s(e)} into T_{r(e)} with ratio below 1.
struct MWSystem {
  GraphPtr graph;
  int dimension = 1;
  std::vector<Box> spaces;        // indexed by VertexId
  std::vector<Similarity> maps;   // indexed by EdgeId

  const Box& space(VertexId v) const { return spaces.at(v.index); }
  const Similarity& map(EdgeId e) const { return maps.at(e.index); }
  double max_ratio() const;
  double max_diameter() const;
};

/// Relative slack for corner containment, absorbing rounding in constants
/// such as 2/3.
inline constexpr double kContainmentSlack = 1e-12;

/// ok iff the graph is valid, every ratio lies in (0, 1), and every
/// phi_e(T_{s(e)}) lies in T_{r(e)} (checked on box corners).
ValidationReport validate_system(const MWSystem& sys);

struct AttractorOptions {
  std::size_t point_cap = 4'000'000;
  enum class Seeds { corners, centers } seeds = Seeds::corners;
};

/// Approximation of the invariant list (K_v) with a certified Hausdorff
/// radius: d_H(points[v], K_v) <= radius for every v.
struct AttractorApprox {
  std::vector<std::vector<Point>> points;  // indexed by VertexId, sorted
  double radius = 0.0;
  std::size_t iterations = 0;
  double grid_pitch = 0.0;
};

/// Images of the seed points of T_{s(alpha)} under phi_alpha for every path
/// alpha of length k, merged on a grid of pitch eps/4. k is the least depth
/// with rho_max^k * diam + (grid diagonal) <= eps, so radius <= eps.
/// Throws ResourceError when the point count would exceed the cap.
AttractorApprox attractor(const MWSystem& sys, double eps, const AttractorOptions& options = {});

struct CodePoint {
  Point point;
  double radius = 0.0;
};

/// The coding map at finite depth: the image under phi_{e_1} o ... o phi_{e_n}
/// of the centre of T_{s(e_n)}, where alpha is extended canonically to depth
/// n. Phi of every infinite path with that prefix lies within `radius`.
/// Throws std::invalid_argument when n < |alpha|.
CodePoint code(const MWSystem& sys, const Path& alpha, std::size_t n);

/// phi_alpha(p) = phi_{e_1}(...phi_{e_n}(p)).
Point apply_path(const MWSystem& sys, const Path& alpha, Point p);

struct EquivarianceReport {
  bool ok = true;
  std::size_t checks = 0;
  std::size_t failures = 0;
  double max_discrepancy = 0.0;
  double max_allowed = 0.0;
};

using EdgeMapOverride = std::function<Point(EdgeId, Point)>;

/// For random depth-n paths alpha and every edge e with s(e) = r(alpha):
///   |code(e alpha, n+1) - phi_e(code(alpha, n))| <= 2 * radius + tol.
/// `override_map`, when set, replaces phi_e on the right-hand side.
EquivarianceReport check_equivariance(const MWSystem& sys, std::size_t samples, std::size_t n, double tol,
                                      std::uint64_t seed, const EdgeMapOverride& override_map = {});

struct SurjectivityReport {
  bool ok = true;
  std::vector<bool> vertex_ok;        // indexed by VertexId
  std::vector<double> max_gap;        // largest mesh-point distance to the attractor
  double eps = 0.0;
};

/// Vertex v passes iff every point of a pitch-eps mesh of T_v lies within
/// 2*eps of attractor(sys, eps) at v.
SurjectivityReport check_surjectivity(const MWSystem& sys, double eps, const AttractorOptions& options = {});

/// Collatz-Wielandt bracket of the Perron root of a nonnegative irreducible
/// matrix, tightened by power iteration on A + I until its width is <= tol.
struct PerronBracket {
  double lower = 0.0;
  double upper = 0.0;
};
PerronBracket perron_root(const std::vector<std::vector<double>>& matrix, double tol);

/// A(s)_{uv} = sum over e in E^1_{uv} of ratio(e)^s.
std::vector<std::vector<double>> mauldin_matrix(const MWSystem& sys, double s);

/// The unique s with spectral radius of A(s) equal to 1. Throws
/// GraphError when the graph is not strongly connected.
double dimension(const MWSystem& sys, double tol);

/// Symmetric Hausdorff distance between two finite point sets.
double hausdorff_distance(std::span<const Point> a, std::span<const Point> b);

}  // namespace mwg
