#include "mwg/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mwg {

namespace {

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
           c == '.';
  });
}

template <typename Id>
std::optional<Id> lookup(const std::vector<std::string>& sorted, std::string_view id) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), id,
                             [](const std::string& a, std::string_view b) { return a < b; });
  if (it == sorted.end() || *it != id) return std::nullopt;
  return Id{static_cast<std::uint32_t>(it - sorted.begin())};
}

}  // namespace

Graph::Graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  std::sort(vertices.begin(), vertices.end());
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) { return a.id < b.id; });

  std::set<std::string_view> seen;
  for (const auto& v : vertices) {
    if (!valid_id(v)) throw GraphError("invalid vertex id '" + v + "'");
    if (!seen.insert(v).second) throw GraphError("duplicate id '" + v + "'");
  }
  for (const auto& e : edges) {
    if (!valid_id(e.id)) throw GraphError("invalid edge id '" + e.id + "'");
    if (!seen.insert(e.id).second) throw GraphError("duplicate id '" + e.id + "'");
  }

  vertex_names_ = std::move(vertices);
  into_.resize(vertex_names_.size());
  from_.resize(vertex_names_.size());
  edges_.reserve(edges.size());
  for (auto& spec : edges) {
    auto r = lookup<VertexId>(vertex_names_, spec.range);
    auto s = lookup<VertexId>(vertex_names_, spec.source);
    if (!r) throw GraphError("edge '" + spec.id + "' has unknown range vertex '" + spec.range + "'");
    if (!s) throw GraphError("edge '" + spec.id + "' has unknown source vertex '" + spec.source + "'");
    EdgeId id{static_cast<std::uint32_t>(edges_.size())};
    into_[r->index].push_back(id);
    from_[s->index].push_back(id);
    edges_.push_back({std::move(spec.id), *r, *s});
  }
  valid_ = validate(*this).ok;
}

GraphPtr make_graph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  return std::make_shared<const Graph>(std::move(vertices), std::move(edges));
}

std::optional<VertexId> Graph::find_vertex(std::string_view id) const {
  return lookup<VertexId>(vertex_names_, id);
}

std::optional<EdgeId> Graph::find_edge(std::string_view id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const EdgeRecord& a, std::string_view b) { return a.id < b; });
  if (it == edges_.end() || it->id != id) return std::nullopt;
  return EdgeId{static_cast<std::uint32_t>(it - edges_.begin())};
}

VertexId Graph::vertex(std::string_view id) const {
  if (auto v = find_vertex(id)) return *v;
  throw GraphError("unknown vertex id '" + std::string(id) + "'");
}

EdgeId Graph::edge(std::string_view id) const {
  if (auto e = find_edge(id)) return *e;
  throw GraphError("unknown edge id '" + std::string(id) + "'");
}

std::vector<VertexId> Graph::vertices() const {
  std::vector<VertexId> out(vertex_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = VertexId{i};
  return out;
}

std::vector<EdgeId> Graph::edges() const {
  std::vector<EdgeId> out(edge_count());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = EdgeId{i};
  return out;
}

bool Graph::strongly_connected() const {
  const std::size_t n = vertex_count();
  if (n == 0) return false;
  auto reach_all = [&](bool forward) {
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      for (EdgeId e : forward ? from_[v] : into_[v]) {
        std::uint32_t w = forward ? edges_[e.index].range.index : edges_[e.index].source.index;
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  };
  return reach_all(true) && reach_all(false);
}

ValidationReport validate(const Graph& graph) {
  ValidationReport report;
  if (graph.vertex_count() == 0) report.fail("graph has no vertices");
  for (VertexId v : graph.vertices()) {
    if (graph.edges_into(v).empty()) report.fail(graph.name(v) + " is a source");
  }
  return report;
}

std::vector<EdgeId> edges_between(const Graph& graph, VertexId u, VertexId v) {
  std::vector<EdgeId> out;
  for (EdgeId e : graph.edges_into(u)) {
    if (graph.source(e) == v) out.push_back(e);
  }
  return out;
}

std::vector<EdgeId> edges_between(const Graph& graph, std::string_view u, std::string_view v) {
  return edges_between(graph, graph.vertex(u), graph.vertex(v));
}

Path Path::from_edges(const Graph& graph, std::vector<EdgeId> edges) {
  if (edges.empty()) throw GraphError("Path::from_edges: empty edge list (use Path::vertex)");
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (graph.source(edges[i]) != graph.range(edges[i + 1])) {
      throw GraphError("edges '" + graph.name(edges[i]) + "' and '" + graph.name(edges[i + 1]) +
                       "' are not composable");
    }
  }
  VertexId r = graph.range(edges.front());
  VertexId s = graph.source(edges.back());
  return Path(r, std::move(edges), s);
}

Path Path::extended(const Graph& graph, EdgeId e) const {
  if (graph.range(e) != source_) {
    throw GraphError("edge '" + graph.name(e) + "' cannot follow a path ending at '" + graph.name(source_) + "'");
  }
  auto edges = edges_;
  edges.push_back(e);
  return Path(range_, std::move(edges), graph.source(e));
}

std::optional<Path> strip_prefix(const Path& path, const Path& prefix) {
  if (path.range_ != prefix.range_ || prefix.edges_.size() > path.edges_.size()) return std::nullopt;
  if (!std::equal(prefix.edges_.begin(), prefix.edges_.end(), path.edges_.begin())) return std::nullopt;
  std::vector<EdgeId> rest(path.edges_.begin() + static_cast<std::ptrdiff_t>(prefix.edges_.size()),
                           path.edges_.end());
  return Path(prefix.source_, std::move(rest), path.source_);
}

std::optional<Path> concat_if(const Path& a, const Path& b) {
  if (a.source_ != b.range_) return std::nullopt;
  if (b.edges_.empty()) return a;
  if (a.edges_.empty()) return b;
  std::vector<EdgeId> edges;
  edges.reserve(a.edges_.size() + b.edges_.size());
  edges.insert(edges.end(), a.edges_.begin(), a.edges_.end());
  edges.insert(edges.end(), b.edges_.begin(), b.edges_.end());
  return Path(a.range_, std::move(edges), b.source_);
}

Path concat(const Path& a, const Path& b) {
  if (auto p = concat_if(a, b)) return *std::move(p);
  throw GraphError("concat: source of the first path differs from range of the second");
}

Path extend_canonical(const Graph& graph, const Path& path, std::size_t n) {
  Path out = path;
  for (std::size_t i = 0; i < n; ++i) {
    auto incoming = graph.edges_into(out.source());
    if (incoming.empty()) {
      throw GraphError("extend_canonical: vertex '" + graph.name(out.source()) + "' receives no edge");
    }
    out = out.extended(graph, incoming.front());
  }
  return out;
}

std::vector<Path> extensions(const Graph& graph, const Path& path, std::size_t n) {
  std::vector<Path> frontier{path};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Path> next;
    for (const auto& p : frontier) {
      for (EdgeId e : graph.edges_into(p.source())) next.push_back(p.extended(graph, e));
    }
    frontier = std::move(next);
  }
  return frontier;
}

std::vector<Path> paths_from(const Graph& graph, VertexId v, std::size_t n) {
  return extensions(graph, Path::vertex(v), n);
}

double count_paths(const Graph& graph, VertexId v, std::size_t n) {
  // ways[w] = number of length-k paths with range w
  std::vector<double> ways(graph.vertex_count(), 1.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> next(graph.vertex_count(), 0.0);
    for (VertexId w : graph.vertices()) {
      for (EdgeId e : graph.edges_into(w)) next[w.index] += ways[graph.source(e).index];
    }
    ways = std::move(next);
  }
  return ways[v.index];
}

std::string to_string(const Graph& graph, const Path& path) {
  if (path.length() == 0) return graph.name(path.range());
  std::string out;
  for (EdgeId e : path.edges()) {
    if (!out.empty()) out += ' ';
    out += graph.name(e);
  }
  return out;
}

Path parse_path(const Graph& graph, std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [](char c) { return c == ' ' || c == '\t' || c == ',' || c == '\n'; };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  if (tokens.empty()) throw GraphError("empty path literal");
  if (tokens.size() == 1) {
    if (auto v = graph.find_vertex(tokens[0])) return Path::vertex(*v);
  }
  std::vector<EdgeId> edges;
  for (auto t : tokens) edges.push_back(graph.edge(t));
  return Path::from_edges(graph, std::move(edges));
}

}  // namespace mwg
