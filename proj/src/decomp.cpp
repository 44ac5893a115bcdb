#include "edcol/decomp.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <limits>
#include <set>
#include <sstream>

#include "edcol/error.hpp"
#include "text_util.hpp"

namespace edcol {

std::vector<int> Decomposition::part_of() const {
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < size(); ++i) {
    const auto& part = parts[static_cast<std::size_t>(i)];
    if (part.empty()) throw Error(ErrorCode::InvalidArgument, "part " + std::to_string(i + 1) + " is empty");
    for (Vertex v : part) {
      if (v < 1 || v > n) throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
      auto& o = owner[static_cast<std::size_t>(v)];
      if (o >= 0) throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " in two parts");
      o = i;
    }
  }
  for (Vertex v = 1; v <= n; ++v)
    if (owner[static_cast<std::size_t>(v)] < 0)
      throw Error(ErrorCode::InvalidArgument, "vertex " + std::to_string(v) + " in no part");
  return owner;
}

Decomposition parse_decomposition(std::string_view text) {
  Decomposition d;
  bool header = false;
  std::vector<char> seen;
  int line_no = 0;
  for (std::string_view line : detail::split_lines(text)) {
    ++line_no;
    if (detail::is_comment(line)) continue;
    auto tok = detail::split_tokens(line);
    if (!tok || tok->empty()) throw ParseError(ParseErrorKind::Malformed, line_no, std::string(line));
    const auto& t = *tok;
    if (t[0] == "p") {
      if (header) throw ParseError(ParseErrorKind::DuplicateHeader, line_no, std::string(line));
      if (t.size() != 4 || t[1] != "decomp") throw ParseError(ParseErrorKind::Malformed, line_no, std::string(line));
      long long n = detail::parse_int(t[2]).value_or(-1), l = detail::parse_int(t[3]).value_or(-1);
      if (n < 0 || l < 0 || l > n || n > std::numeric_limits<int>::max() - 1)
        throw ParseError(ParseErrorKind::Malformed, line_no, std::string(line));
      header = true;
      d.n = static_cast<int>(n);
      d.parts.assign(static_cast<std::size_t>(l), {});
      seen.assign(static_cast<std::size_t>(d.n) + 1, 0);
      continue;
    }
    if (t[0] != "h" || t.size() != 3) throw ParseError(ParseErrorKind::Malformed, line_no, std::string(line));
    if (!header) throw ParseError(ParseErrorKind::MissingHeader, line_no, "part line before header");
    auto i = detail::parse_int(t[1]), v = detail::parse_int(t[2]);
    if (!i || !v) throw ParseError(ParseErrorKind::Malformed, line_no, std::string(line));
    if (*i < 1 || *i > d.size()) throw ParseError(ParseErrorKind::Malformed, line_no, "part index out of range");
    if (*v < 1 || *v > d.n) throw ParseError(ParseErrorKind::VertexOutOfRange, line_no, std::string(line));
    if (seen[static_cast<std::size_t>(*v)]) throw ParseError(ParseErrorKind::Malformed, line_no, "vertex listed twice");
    seen[static_cast<std::size_t>(*v)] = 1;
    d.parts[static_cast<std::size_t>(*i - 1)].push_back(static_cast<Vertex>(*v));
  }
  if (!header) throw ParseError(ParseErrorKind::MissingHeader, 0, "no \"p decomp\" line");
  for (auto& part : d.parts) std::sort(part.begin(), part.end());
  try {
    d.part_of();
  } catch (const Error& e) {
    throw ParseError(ParseErrorKind::Malformed, 0, e.what());
  }
  return d;
}

std::string format_decomposition(const Decomposition& d) {
  std::ostringstream out;
  out << "p decomp " << d.n << ' ' << d.size() << '\n';
  for (int i = 0; i < d.size(); ++i) {
    auto part = d.parts[static_cast<std::size_t>(i)];
    std::sort(part.begin(), part.end());
    for (Vertex v : part) out << "h " << i + 1 << ' ' << v << '\n';
  }
  return out.str();
}

Decomposition read_decomposition_file(const std::string& path) {
  return parse_decomposition(detail::read_file(path));
}

void write_decomposition_file(const Decomposition& d, const std::string& path) {
  detail::write_file(path, format_decomposition(d));
}

namespace {

void require_match(const Graph& g, const Decomposition& d) {
  if (d.n != g.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "decomposition is over " + std::to_string(d.n) + " vertices, graph has " +
                                                std::to_string(g.vertex_count()));
}

// Components of g restricted to vertices with alive[v]; id per vertex, -1 if dead.
std::vector<int> components(const Graph& g, const std::vector<char>& alive, int& count) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n) + 1, -1);
  count = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 1; s <= n; ++s) {
    if (!alive[static_cast<std::size_t>(s)] || comp[static_cast<std::size_t>(s)] >= 0) continue;
    comp[static_cast<std::size_t>(s)] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (alive[static_cast<std::size_t>(w)] && comp[static_cast<std::size_t>(w)] < 0) {
          comp[static_cast<std::size_t>(w)] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return comp;
}

bool part_connected(const Graph& g, const std::vector<Vertex>& part) {
  std::vector<char> alive(static_cast<std::size_t>(g.vertex_count()) + 1, 0);
  for (Vertex v : part) alive[static_cast<std::size_t>(v)] = 1;
  int count = 0;
  components(g, alive, count);
  return count == 1;
}

// BFS inside `alive`; dist -1 outside reach.
std::vector<int> bfs(const Graph& g, const std::vector<char>& alive, Vertex src, int radius = -1) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()) + 1, -1);
  std::deque<Vertex> queue{src};
  dist[static_cast<std::size_t>(src)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    int dv = dist[static_cast<std::size_t>(v)];
    if (radius >= 0 && dv == radius) continue;
    for (Vertex w : g.neighbors(v))
      if (alive[static_cast<std::size_t>(w)] && dist[static_cast<std::size_t>(w)] < 0) {
        dist[static_cast<std::size_t>(w)] = dv + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

}  // namespace

DecompositionCheck check_decomposition(const Graph& g, const Decomposition& d, bool strict) {
  require_match(g, d);
  const std::vector<int> owner = d.part_of();
  const int n = g.vertex_count();
  DecompositionCheck out;
  for (int i = 0; i < d.size(); ++i)
    if (!part_connected(g, d.parts[static_cast<std::size_t>(i)])) out.connected = false;

  for (int i = 0; i < d.size(); ++i) {
    const int removed_below = strict ? i + 1 : i;
    std::vector<char> alive(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) alive[static_cast<std::size_t>(v)] = owner[static_cast<std::size_t>(v)] >= removed_below;
    int count = 0;
    std::vector<int> comp = components(g, alive, count);
    std::vector<std::set<int>> touched(static_cast<std::size_t>(count));
    for (Vertex v = 1; v <= n; ++v) {
      int c = comp[static_cast<std::size_t>(v)];
      if (c < 0) continue;
      for (Vertex w : g.neighbors(v)) {
        int j = owner[static_cast<std::size_t>(w)];
        if (comp[static_cast<std::size_t>(w)] != c && j <= i) touched[static_cast<std::size_t>(c)].insert(j);
      }
    }
    int w = 0;
    for (const auto& t : touched) w = std::max(w, static_cast<int>(t.size()));
    out.widths.push_back(w);
    out.width = std::max(out.width, w);
  }
  return out;
}

FlatnessProfile FlatnessProfile::linear(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 1) throw Error(ErrorCode::InvalidArgument, "LINEAR(a,b) needs a >= 0, b >= 1");
  FlatnessProfile f;
  f.linear_ = true;
  f.a_ = a;
  f.b_ = b;
  return f;
}

FlatnessProfile FlatnessProfile::table(std::vector<std::int64_t> values) {
  if (values.empty()) throw Error(ErrorCode::InvalidArgument, "flatness table is empty");
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] < 1) throw Error(ErrorCode::InvalidArgument, "flatness values must be positive");
    if (k > 0 && values[k] < values[k - 1]) throw Error(ErrorCode::InvalidArgument, "flatness profile must be non-decreasing");
  }
  FlatnessProfile f;
  f.linear_ = false;
  f.table_ = std::move(values);
  return f;
}

FlatnessProfile FlatnessProfile::parse(std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "bad flatness profile: " + std::string(text)); };
  auto numbers = [&](std::string_view s) {
    std::vector<std::int64_t> out;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = s.find(',', start);
      auto v = detail::parse_int(s.substr(start, comma == std::string_view::npos ? s.npos : comma - start));
      if (!v) throw bad();
      out.push_back(*v);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return out;
  };
  if (text.starts_with("LINEAR(") && text.ends_with(")")) {
    auto ab = numbers(text.substr(7, text.size() - 8));
    if (ab.size() != 2) throw bad();
    return linear(ab[0], ab[1]);
  }
  return table(numbers(text));
}

std::int64_t FlatnessProfile::at(int k) const {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  if (linear_) return a_ * k + b_;
  if (k >= static_cast<int>(table_.size()))
    throw Error(ErrorCode::InvalidArgument, "flatness profile undefined at k=" + std::to_string(k));
  return table_[static_cast<std::size_t>(k)];
}

int FlatnessProfile::defined_up_to() const noexcept {
  return linear_ ? -1 : static_cast<int>(table_.size()) - 1;
}

std::string FlatnessProfile::describe() const {
  if (linear_) return "LINEAR(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  std::string s;
  for (std::int64_t v : table_) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

FlatCheck check_flat(const Graph& g, const Decomposition& d, const FlatnessProfile& f, int k_max) {
  require_match(g, d);
  if (k_max < 0) throw Error(ErrorCode::InvalidArgument, "k_max must be non-negative");
  if (f.defined_up_to() >= 0 && k_max > f.defined_up_to())
    throw Error(ErrorCode::InvalidArgument, "flatness profile undefined at k=" + std::to_string(k_max));
  const std::vector<int> owner = d.part_of();
  const int n = g.vertex_count();
  FlatCheck out;
  for (int i = 0; i < d.size(); ++i) {
    std::vector<char> alive(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) alive[static_cast<std::size_t>(v)] = owner[static_cast<std::size_t>(v)] >= i;
    for (Vertex v = 1; v <= n; ++v) {
      if (!alive[static_cast<std::size_t>(v)]) continue;
      std::vector<int> dist = bfs(g, alive, v, k_max);
      std::vector<std::int64_t> at(static_cast<std::size_t>(k_max) + 1, 0);
      for (Vertex u : d.parts[static_cast<std::size_t>(i)])
        if (int du = dist[static_cast<std::size_t>(u)]; du >= 0) ++at[static_cast<std::size_t>(du)];
      std::int64_t within = 0;
      for (int k = 0; k <= k_max; ++k) {
        within += at[static_cast<std::size_t>(k)];
        if (within > f.at(k)) {
          out.flat = false;
          out.violation = FlatViolation{i + 1, v, k, within, f.at(k)};
          return out;
        }
      }
    }
  }
  return out;
}

Graph contract(const Graph& g, const Decomposition& d) {
  require_match(g, d);
  const std::vector<int> owner = d.part_of();
  for (int i = 0; i < d.size(); ++i)
    if (!part_connected(g, d.parts[static_cast<std::size_t>(i)]))
      throw Error(ErrorCode::InvalidArgument, "part " + std::to_string(i + 1) + " is not connected");
  std::set<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = owner[static_cast<std::size_t>(e.u)], b = owner[static_cast<std::size_t>(e.v)];
    if (a != b) edges.insert(Edge::of(a + 1, b + 1));
  }
  std::vector<Edge> list(edges.begin(), edges.end());
  return Graph(d.size(), list);
}

LinearOrder flatbound_order(const Graph& g, const Decomposition& d) {
  require_match(g, d);
  d.part_of();
  std::vector<Vertex> perm;
  for (auto part : d.parts) {
    std::sort(part.begin(), part.end());
    perm.insert(perm.end(), part.begin(), part.end());
  }
  return LinearOrder(std::move(perm));
}

Decomposition peel_shortest_paths(const Graph& g, Vertex root) {
  const int n = g.vertex_count();
  Decomposition d;
  d.n = n;
  if (n == 0) return d;
  if (!g.contains(root)) throw Error(ErrorCode::InvalidArgument, "root out of range");
  std::vector<int> owner(static_cast<std::size_t>(n) + 1, -1);
  std::vector<char> alive(static_cast<std::size_t>(n) + 1, 1);
  alive[0] = 0;
  int remaining = n;

  auto touches = [&](Vertex v, int part) {
    for (Vertex w : g.neighbors(v))
      if (owner[static_cast<std::size_t>(w)] == part) return true;
    return false;
  };
  auto path_to = [&](Vertex from, const std::vector<int>& dist, Vertex to) {
    std::vector<Vertex> path{to};
    for (Vertex v = to; v != from;) {
      Vertex prev = 0;
      for (Vertex w : g.neighbors(v))
        if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(v)] - 1 && (prev == 0 || w < prev)) prev = w;
      path.push_back(prev);
      v = prev;
    }
    return path;
  };
  auto farthest = [&](const std::vector<int>& dist) {
    Vertex best = 0;
    for (Vertex v = 1; v <= n; ++v)
      if (dist[static_cast<std::size_t>(v)] >= 0 && (best == 0 || dist[static_cast<std::size_t>(v)] > dist[static_cast<std::size_t>(best)]))
        best = v;
    return best;
  };

  while (remaining > 0) {
    Vertex start = 0;
    for (Vertex v = 1; v <= n && start == 0; ++v)
      if (alive[static_cast<std::size_t>(v)])
        for (Vertex w : g.neighbors(v))
          if (!alive[static_cast<std::size_t>(w)]) {
            start = v;
            break;
          }
    if (start == 0) {
      start = alive[static_cast<std::size_t>(root)] ? root : 0;
      for (Vertex v = 1; v <= n && start == 0; ++v)
        if (alive[static_cast<std::size_t>(v)]) start = v;
    }
    std::vector<int> from_start = bfs(g, alive, start);
    std::set<int> parts_touched;
    for (Vertex v = 1; v <= n; ++v)
      if (from_start[static_cast<std::size_t>(v)] >= 0)
        for (Vertex w : g.neighbors(v))
          if (owner[static_cast<std::size_t>(w)] >= 0) parts_touched.insert(owner[static_cast<std::size_t>(w)]);

    std::vector<Vertex> path;
    if (parts_touched.size() == 2) {
      int a = *parts_touched.begin(), b = *parts_touched.rbegin();
      std::vector<Vertex> junction;
      for (Vertex v = 1; v <= n; ++v)
        if (from_start[static_cast<std::size_t>(v)] >= 0 && touches(v, a) && touches(v, b)) junction.push_back(v);
      if (junction.size() >= 2) {
        int best = -1;
        for (Vertex u : junction) {
          std::vector<int> du = bfs(g, alive, u);
          for (Vertex v : junction)
            if (v > u && du[static_cast<std::size_t>(v)] > best) {
              best = du[static_cast<std::size_t>(v)];
              path = path_to(u, du, v);
            }
        }
      } else if (junction.size() == 1) {
        std::vector<int> du = bfs(g, alive, junction[0]);
        path = path_to(junction[0], du, farthest(du));
      } else {
        std::vector<int> dist(static_cast<std::size_t>(n) + 1, -1);
        std::deque<Vertex> queue;
        for (Vertex v = 1; v <= n; ++v)
          if (from_start[static_cast<std::size_t>(v)] >= 0 && touches(v, a)) {
            dist[static_cast<std::size_t>(v)] = 0;
            queue.push_back(v);
          }
        Vertex hit = 0;
        while (!queue.empty() && hit == 0) {
          Vertex v = queue.front();
          queue.pop_front();
          if (touches(v, b)) {
            hit = v;
            break;
          }
          for (Vertex w : g.neighbors(v))
            if (alive[static_cast<std::size_t>(w)] && dist[static_cast<std::size_t>(w)] < 0) {
              dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
              queue.push_back(w);
            }
        }
        Vertex origin = hit;
        while (dist[static_cast<std::size_t>(origin)] > 0) {
          for (Vertex w : g.neighbors(origin))
            if (dist[static_cast<std::size_t>(w)] == dist[static_cast<std::size_t>(origin)] - 1) {
              origin = w;
              break;
            }
        }
        std::vector<int> du = bfs(g, alive, origin);
        path = path_to(origin, du, hit);
      }
    }
    if (path.empty()) path = path_to(start, from_start, farthest(from_start));

    const int index = d.size();
    for (Vertex v : path) {
      owner[static_cast<std::size_t>(v)] = index;
      alive[static_cast<std::size_t>(v)] = 0;
    }
    remaining -= static_cast<int>(path.size());
    std::sort(path.begin(), path.end());
    d.parts.push_back(std::move(path));
  }
  return d;
}

namespace {

constexpr std::array<std::pair<BoundFormula, const char*>, 8> kFormulaNames{{
    {BoundFormula::PlanarDcol, "planar-dcol"},
    {BoundFormula::GenusDcol, "genus-dcol"},
    {BoundFormula::TreewidthDcol, "treewidth-dcol"},
    {BoundFormula::FlatboundDcol, "flatbound-dcol"},
    {BoundFormula::MinorFreeFlat, "minor-free-flat"},
    {BoundFormula::PlanarWcol, "planar-wcol"},
    {BoundFormula::SignatureCount, "signature-count"},
    {BoundFormula::KiersteadYang, "kierstead-yang"},
}};

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::OutOfRange, "bound overflows 64 bits");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::OutOfRange, "bound overflows 64 bits");
  return r;
}

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

void need(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::InvalidArgument, what);
}

}  // namespace

std::optional<BoundFormula> bound_formula_from_name(std::string_view name) {
  for (const auto& [f, s] : kFormulaNames)
    if (name == s) return f;
  return std::nullopt;
}

const char* bound_formula_name(BoundFormula f) {
  for (const auto& [g, s] : kFormulaNames)
    if (g == f) return s;
  return "?";
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    r = r * (n - i) / (i + 1);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorCode::OutOfRange, "binomial overflows 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t eval_bound_formula(BoundFormula which, const BoundParams& p) {
  auto u = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };
  auto two_k_plus_one = [&] { return checked_add(checked_mul(2, u(p.k)), 1); };
  auto tw_term = [&](std::int64_t t) {
    return checked_add(checked_mul(u(t), binomial(u(p.k / 2 + t), u(t))), 1);
  };
  switch (which) {
    case BoundFormula::PlanarDcol:
      need(p.k >= 1, "planar-dcol needs k >= 1");
      return checked_mul(tw_term(2), two_k_plus_one());
    case BoundFormula::GenusDcol:
      need(p.k >= 1 && p.g >= 0, "genus-dcol needs k >= 1, g >= 0");
      return checked_mul(checked_add(checked_mul(2, u(p.g)), tw_term(2)), two_k_plus_one());
    case BoundFormula::TreewidthDcol:
      need(p.k >= 1 && p.t >= 1, "treewidth-dcol needs k >= 1, t >= 1");
      return tw_term(p.t);
    case BoundFormula::FlatboundDcol:
      need(p.k >= 1 && p.t >= 1 && p.f >= 1, "flatbound-dcol needs k >= 1, t >= 1, f >= 1");
      return checked_mul(tw_term(p.t), u(p.f));
    case BoundFormula::MinorFreeFlat:
      need(p.k >= 0 && p.t >= 4, "minor-free-flat needs k >= 0, t >= 4");
      return checked_mul(u(p.t - 3), two_k_plus_one());
    case BoundFormula::PlanarWcol:
      need(p.k >= 1, "planar-wcol needs k >= 1");
      return checked_mul(binomial(u(p.k) + 2, 2), two_k_plus_one());
    case BoundFormula::SignatureCount:
      need(p.p >= 1 && p.p % 2 == 1 && p.q >= 1, "signature-count needs odd p >= 1, q >= 1");
      return checked_pow(u(p.p / 2 + 2), u(p.q));
    case BoundFormula::KiersteadYang:
      need(p.col >= 1 && p.k >= 1, "kierstead-yang needs col >= 1, k >= 1");
      return checked_pow(u(p.col), u(p.k));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown bound formula");
}

}  // namespace edcol
