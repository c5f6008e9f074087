#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mwg {

/// Index of a vertex in its graph. Index order equals lexicographic id order.
struct VertexId {
  std::uint32_t index = 0;
  auto operator<=>(const VertexId&) const = default;
};

/// Index of an edge in its graph. Index order equals lexicographic id order.
struct EdgeId {
  std::uint32_t index = 0;
  auto operator<=>(const EdgeId&) const = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeSpec {
  std::string id;
  std::string range;
  std::string source;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;

  void fail(std::string message) {
    ok = false;
    violations.push_back(std::move(message));
  }
};

/// Finite directed graph E = (E^0, E^1, r, s). Immutable once built.
///
/// Ids are opaque strings over [A-Za-z0-9_.], unique across vertices and
/// edges so that expressions can name either without ambiguity.
class Graph {
 public:
  Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::string& name(VertexId v) const { return vertex_names_.at(v.index); }
  const std::string& name(EdgeId e) const { return edges_.at(e.index).id; }

  VertexId range(EdgeId e) const { return edges_[e.index].range; }
  VertexId source(EdgeId e) const { return edges_[e.index].source; }

  std::optional<VertexId> find_vertex(std::string_view id) const;
  std::optional<EdgeId> find_edge(std::string_view id) const;
  /// Throws GraphError on unknown ids.
  VertexId vertex(std::string_view id) const;
  EdgeId edge(std::string_view id) const;

  /// {e : r(e) = v}, ascending id order.
  std::span<const EdgeId> edges_into(VertexId v) const { return into_[v.index]; }
  /// {e : s(e) = v}, ascending id order.
  std::span<const EdgeId> edges_from(VertexId v) const { return from_[v.index]; }

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;

  bool strongly_connected() const;

  /// Cached result of validate(*this).
  bool row_finite_no_sources() const { return valid_; }

 private:
  struct EdgeRecord {
    std::string id;
    VertexId range;
    VertexId source;
  };

  std::vector<std::string> vertex_names_;
  std::vector<EdgeRecord> edges_;
  std::vector<std::vector<EdgeId>> into_;
  std::vector<std::vector<EdgeId>> from_;
  bool valid_ = false;
};

using GraphPtr = std::shared_ptr<const Graph>;

GraphPtr make_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges);

/// ok iff every vertex receives at least one edge.
ValidationReport validate(const Graph& graph);

/// Exactly {e : r(e) = u, s(e) = v}.
std::vector<EdgeId> edges_between(const Graph& graph, VertexId u, VertexId v);
std::vector<EdgeId> edges_between(const Graph& graph, std::string_view u, std::string_view v);

/// Finite path e_1...e_n with s(e_i) = r(e_{i+1}), or a vertex as a path of
/// length 0. Range and source are cached so that path algebra needs no graph.
class Path {
 public:
  Path() = default;
  static Path vertex(VertexId v) { return Path(v, {}, v); }
  static Path edge(const Graph& graph, EdgeId e) { return Path(graph.range(e), {e}, graph.source(e)); }
  /// Throws GraphError on an empty list or a composability failure.
  static Path from_edges(const Graph& graph, std::vector<EdgeId> edges);

  VertexId range() const { return range_; }
  VertexId source() const { return source_; }
  std::size_t length() const { return edges_.size(); }
  std::span<const EdgeId> edges() const { return edges_; }

  /// This path followed by e; throws if s(path) != r(e).
  Path extended(const Graph& graph, EdgeId e) const;

  /// Ordered by range vertex, then edge sequence.
  auto operator<=>(const Path&) const = default;

  friend std::optional<Path> strip_prefix(const Path& path, const Path& prefix);
  friend std::optional<Path> concat_if(const Path& a, const Path& b);

 private:
  Path(VertexId range, std::vector<EdgeId> edges, VertexId source)
      : range_(range), edges_(std::move(edges)), source_(source) {}

  VertexId range_;
  std::vector<EdgeId> edges_;
  VertexId source_;
};

/// Some(rest) iff path = concat(prefix, rest).
std::optional<Path> strip_prefix(const Path& path, const Path& prefix);

/// concat(a, b) when s(a) = r(b), otherwise nullopt.
std::optional<Path> concat_if(const Path& a, const Path& b);

/// Throws GraphError when s(a) != r(b).
Path concat(const Path& a, const Path& b);

/// Appends n edges, each time the smallest-id edge received by the current
/// source. Requires a graph without sources.
Path extend_canonical(const Graph& graph, const Path& path, std::size_t n);

/// Every path of length n with range v, in ascending order.
std::vector<Path> paths_from(const Graph& graph, VertexId v, std::size_t n);

/// Every extension of `path` by exactly n edges, in ascending order.
std::vector<Path> extensions(const Graph& graph, const Path& path, std::size_t n);

/// Number of paths of length n with range v, without enumerating them.
double count_paths(const Graph& graph, VertexId v, std::size_t n);

/// Space separated edge ids, or the vertex id for a length 0 path.
std::string to_string(const Graph& graph, const Path& path);

/// Inverse of to_string; accepts whitespace or commas between ids.
Path parse_path(const Graph& graph, std::string_view text);

}  // namespace mwg
