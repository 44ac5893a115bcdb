#include "edcol/coloring.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "access_core.hpp"
#include "edcol/error.hpp"
#include "text_util.hpp"

namespace edcol {

bool Coloring::complete() const {
  for (std::size_t v = 1; v < colour_.size(); ++v)
    if (colour_[v] <= 0) return false;
  return true;
}

int Coloring::palette_size() const {
  std::set<int> used;
  for (std::size_t v = 1; v < colour_.size(); ++v)
    if (colour_[v] > 0) used.insert(colour_[v]);
  return static_cast<int>(used.size());
}

int Coloring::max_color() const {
  int m = 0;
  for (std::size_t v = 1; v < colour_.size(); ++v) m = std::max(m, colour_[v]);
  return m;
}

ProperCheck verify_proper(const Graph& h, const Coloring& c) {
  if (c.vertex_count() != h.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "colouring has " + std::to_string(c.vertex_count()) +
                                                " vertices, graph has " + std::to_string(h.vertex_count()));
  for (Vertex v = 1; v <= h.vertex_count(); ++v)
    if (c.color(v) <= 0) throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " is uncoloured");
  for (const Edge& e : h.edges())
    if (c.color(e.u) == c.color(e.v)) return {false, e};
  return {};
}

Coloring parse_coloring(std::string_view text) {
  struct Row {
    Vertex v;
    int colour;
    int line;
  };
  std::vector<Row> rows;
  std::vector<std::pair<int, std::string>> legend;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (detail::is_comment(line)) {
      if (!line.starts_with("c s ")) continue;
      std::string_view rest = line.substr(4);
      std::size_t sp = rest.find(' ');
      auto id = detail::parse_int(rest.substr(0, sp));
      if (sp == std::string_view::npos || !id)
        throw ParseError(ParseErrorKind::Malformed, line_no, "expected 'c s <colour> <label>'");
      legend.emplace_back(static_cast<int>(*id), std::string(rest.substr(sp + 1)));
      continue;
    }
    auto tok = detail::split_tokens(line);
    if (!tok || tok->size() != 2) throw ParseError(ParseErrorKind::Malformed, line_no, "expected '<vertex> <colour>'");
    auto v = detail::parse_int((*tok)[0]);
    auto c = detail::parse_int((*tok)[1]);
    if (!v || !c || *c < 1) throw ParseError(ParseErrorKind::Malformed, line_no, "bad vertex or colour");
    rows.push_back({static_cast<Vertex>(*v), static_cast<int>(*c), line_no});
  }
  const int n = static_cast<int>(rows.size());
  Coloring out(n);
  for (const Row& r : rows) {
    if (r.v < 1 || r.v > n) throw ParseError(ParseErrorKind::VertexOutOfRange, r.line, std::to_string(r.v));
    if (out.color(r.v) != 0) throw ParseError(ParseErrorKind::Malformed, r.line, "vertex listed twice");
    out.set(r.v, r.colour);
  }
  for (auto& [id, label] : legend) out.set_legend(id, std::move(label));
  return out;
}

std::string format_coloring(const Coloring& c) {
  std::ostringstream out;
  for (const auto& [id, label] : c.legend()) out << "c s " << id << ' ' << label << '\n';
  for (Vertex v = 1; v <= c.vertex_count(); ++v) out << v << ' ' << c.color(v) << '\n';
  return out.str();
}

Coloring read_coloring_file(const std::string& path) { return parse_coloring(detail::read_file(path)); }

void write_coloring_file(const Coloring& c, const std::string& path) {
  detail::write_file(path, format_coloring(c));
}

// -- constructive colourings ------------------------------------------------

namespace {

void require_parity(int p, bool odd) {
  if (p < 1) throw Error(ErrorCode::InvalidArgument, "p must be positive");
  if ((p % 2 == 1) != odd) throw Error(ErrorCode::InvalidArgument, odd ? "p must be odd" : "p must be even");
}

/// L-least vertex of N^radius[y].
Vertex ball_minimum(const Graph& g, const LinearOrder& order, Vertex y, int radius) {
  Vertex best = y;
  for (Vertex w : closed_ball(g, y, radius))
    if (order.less(w, best)) best = w;
  return best;
}

/// Replaces structured keys by ids 1.. in lexicographic key order.
template <typename Key>
Coloring canonicalise(const std::vector<Key>& keys, std::string (*label)(const Key&)) {
  std::vector<Key> distinct(keys.begin() + 1, keys.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  const int n = static_cast<int>(keys.size()) - 1;
  Coloring out(n);
  for (Vertex v = 1; v <= n; ++v) {
    auto it = std::lower_bound(distinct.begin(), distinct.end(), keys[static_cast<std::size_t>(v)]);
    out.set(v, static_cast<int>(it - distinct.begin()) + 1);
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) out.set_legend(static_cast<int>(i) + 1, label(distinct[i]));
  return out;
}

std::string pair_label(const std::pair<int, int>& key) {
  return "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
}

std::string vector_label(const std::vector<int>& key) {
  std::string s = "[";
  for (std::size_t i = 0; i < key.size(); ++i) s += (i ? "," : "") + std::to_string(key[i]);
  return s + "]";
}

}  // namespace

Coloring greedy_back_coloring(const Graph& g, const LinearOrder& order, AccessKind kind) {
  auto sets = access_sets(g, order, kind);
  Coloring out(g.vertex_count());
  std::vector<char> taken;
  for (Vertex y : order.perm()) {
    const auto& back = sets[static_cast<std::size_t>(y)];
    taken.assign(back.size() + 2, 0);
    for (Vertex x : back) {
      int c = out.color(x);
      if (c < static_cast<int>(taken.size())) taken[static_cast<std::size_t>(c)] = 1;
    }
    int c = 1;
    while (taken[static_cast<std::size_t>(c)]) ++c;
    out.set(y, c);
  }
  return out;
}

Coloring color_exact_distance_odd(const Graph& g, const LinearOrder& order, int p) {
  require_parity(p, true);
  Coloring a = greedy_back_coloring(g, order, {Access::Dist, 2 * p - 1});
  Coloring out(g.vertex_count());
  for (Vertex y = 1; y <= g.vertex_count(); ++y) out.set(y, a.color(ball_minimum(g, order, y, p / 2)));
  return out;
}

Coloring color_exact_distance_even(const Graph& g, const LinearOrder& order, int p) {
  require_parity(p, false);
  const int n = g.vertex_count();
  Coloring a = greedy_back_coloring(g, order, {Access::Dist, 2 * p});
  std::vector<std::pair<int, int>> keys(static_cast<std::size_t>(n) + 1);
  for (Vertex y = 1; y <= n; ++y) {
    Vertex mu = ball_minimum(g, order, y, p / 2);
    int second = 1;
    if (mu != y) {
      DistanceTable near = bounded_distances(g, y, p / 2 - 1);
      auto nb = g.neighbors(mu);
      auto beta = std::find_if(nb.begin(), nb.end(), [&](Vertex w) { return near.reached(w); });
      if (beta == nb.end()) throw Error(ErrorCode::Internal, "no beta for vertex " + std::to_string(y));
      second = static_cast<int>(beta - nb.begin()) + 1;
    }
    keys[static_cast<std::size_t>(y)] = {a.color(mu), second};
  }
  return canonicalise(keys, pair_label);
}

Coloring signature_coloring(const Graph& g, const LinearOrder& order, int p) {
  require_parity(p, true);
  const int n = g.vertex_count();
  const int q = eval_colnum(g, order, {Access::Weak, p});
  Coloring a = greedy_back_coloring(g, order, {Access::Weak, p});

  // reach[y] = (x, d'_y(x)) for x weakly floor(p/2)-accessible from y.
  std::vector<std::vector<std::pair<Vertex, int>>> reach(static_cast<std::size_t>(n) + 1);
  detail::AccessEngine engine(g);
  for (Vertex x = 1; x <= n; ++x)
    for (const auto& [y, d] : engine.head_ball(order.ranks(), x, p / 2))
      reach[static_cast<std::size_t>(y)].emplace_back(x, d);

  std::vector<std::vector<int>> keys(static_cast<std::size_t>(n) + 1);
  for (Vertex y = 1; y <= n; ++y) {
    std::vector<int> b(static_cast<std::size_t>(q), -1);
    for (const auto& [x, d] : reach[static_cast<std::size_t>(y)]) {
      auto& slot = b[static_cast<std::size_t>(a.color(x) - 1)];
      if (slot != -1)
        throw Error(ErrorCode::Internal, "signature of vertex " + std::to_string(y) + " is not well defined");
      slot = d;
    }
    keys[static_cast<std::size_t>(y)] = std::move(b);
  }
  return canonicalise(keys, vector_label);
}

}  // namespace edcol
