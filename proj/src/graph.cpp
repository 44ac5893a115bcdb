#include "edcol/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "edcol/error.hpp"

namespace edcol {

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : Error(ErrorCode::Parse,
            (line > 0 ? "line " + std::to_string(line) : std::string("end of input")) + ": " +
                to_string(kind) + (detail.empty() ? "" : " (" + detail + ")")),
      kind_(kind),
      line_(line) {}

const char* to_string(ParseErrorKind kind) noexcept {
  switch (kind) {
    case ParseErrorKind::Malformed: return "malformed line";
    case ParseErrorKind::MissingHeader: return "missing header";
    case ParseErrorKind::DuplicateHeader: return "duplicate header";
    case ParseErrorKind::VertexOutOfRange: return "vertex id out of range";
    case ParseErrorKind::DuplicateEdge: return "duplicate edge";
    case ParseErrorKind::SelfLoop: return "self-loop";
    case ParseErrorKind::EdgeCountMismatch: return "header/edge-count mismatch";
  }
  return "parse error";
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative vertex count");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (!contains(e.u) || !contains(e.v))
      throw Error(ErrorCode::InvalidArgument, "edge endpoint out of range");
    if (e.u == e.v) throw Error(ErrorCode::InvalidArgument, "self-loop");
    adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adj_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw Error(ErrorCode::InvalidArgument, "duplicate edge");
  }
  m_ = edges.size();
}

int Graph::max_degree() const noexcept {
  int best = 0;
  for (Vertex v = 1; v <= n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(a.begin(), a.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 1; u <= n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

void Graph::set_label(Vertex v, std::string label) {
  if (!contains(v)) throw Error(ErrorCode::OutOfRange, "label for unknown vertex");
  labels_[v] = std::move(label);
}

std::optional<std::string> Graph::label(Vertex v) const {
  auto it = labels_.find(v);
  if (it == labels_.end()) return std::nullopt;
  return it->second;
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  for (const auto& [v, name] : labels_)
    if (name == label) return v;
  return std::nullopt;
}

bool Graph::operator==(const Graph& other) const {
  return n_ == other.n_ && adj_ == other.adj_;
}

Vertex GraphBuilder::add_vertex(std::string label) {
  ++n_;
  if (!label.empty()) labels_[n_] = std::move(label);
  return n_;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) { edges_.push_back(Edge::of(u, v)); }

std::vector<Vertex> GraphBuilder::add_path(Vertex u, Vertex v, int length, const std::string& label) {
  if (length < 1) throw Error(ErrorCode::InvalidArgument, "path length must be positive");
  std::vector<Vertex> inner;
  Vertex prev = u;
  for (int i = 1; i < length; ++i) {
    Vertex w = add_vertex(label);
    inner.push_back(w);
    add_edge(prev, w);
    prev = w;
  }
  add_edge(prev, v);
  return inner;
}

void GraphBuilder::set_label(Vertex v, std::string label) { labels_[v] = std::move(label); }

Graph GraphBuilder::build() const {
  Graph g(n_, edges_);
  for (const auto& [v, name] : labels_) g.set_label(v, name);
  return g;
}

// -- distances --------------------------------------------------------------

namespace {

void require_vertex(const Graph& g, Vertex v) {
  if (!g.contains(v))
    throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " out of range");
}

}  // namespace

DistanceTable bounded_distances(const Graph& g, Vertex source, int radius) {
  require_vertex(g, source);
  if (radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  DistanceTable t{source, radius,
                  std::vector<int>(static_cast<std::size_t>(g.vertex_count()) + 1, kUnreachable)};
  std::queue<Vertex> q;
  t.dist[static_cast<std::size_t>(source)] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    int du = t.at(u);
    if (du == radius) continue;
    for (Vertex w : g.neighbors(u)) {
      if (t.reached(w)) continue;
      t.dist[static_cast<std::size_t>(w)] = du + 1;
      q.push(w);
    }
  }
  return t;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n) + 1);
  for (Vertex s = 1; s <= n; ++s) d[static_cast<std::size_t>(s)] = bounded_distances(g, s, n).dist;
  return d;
}

std::vector<Vertex> closed_ball(const Graph& g, Vertex v, int radius) {
  DistanceTable t = bounded_distances(g, v, radius);
  std::vector<Vertex> out;
  for (Vertex w = 1; w <= g.vertex_count(); ++w)
    if (t.reached(w)) out.push_back(w);
  return out;
}

std::vector<int> component_ids(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  int next = 0;
  for (Vertex s = 1; s <= n; ++s) {
    if (comp[static_cast<std::size_t>(s)] >= 0) continue;
    std::vector<Vertex> stack{s};
    comp[static_cast<std::size_t>(s)] = next;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (comp[static_cast<std::size_t>(w)] >= 0) continue;
        comp[static_cast<std::size_t>(w)] = next;
        stack.push_back(w);
      }
    }
    ++next;
  }
  comp[0] = 0;
  return comp;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<int> index(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    require_vertex(g, vertices[i]);
    index[static_cast<std::size_t>(vertices[i])] = static_cast<int>(i) + 1;
  }
  std::vector<Edge> edges;
  for (Vertex u : vertices)
    for (Vertex w : g.neighbors(u)) {
      int a = index[static_cast<std::size_t>(u)];
      int b = index[static_cast<std::size_t>(w)];
      if (b != 0 && a < b) edges.push_back({a, b});
    }
  Graph h(static_cast<int>(vertices.size()), edges);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (auto l = g.label(vertices[i])) h.set_label(static_cast<int>(i) + 1, *l);
  return h;
}

}  // namespace edcol
