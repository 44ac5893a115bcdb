#include "edcol/orderings.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "access_core.hpp"
#include "edcol/error.hpp"
#include "text_util.hpp"

namespace edcol {

LinearOrder::LinearOrder(std::vector<Vertex> perm) : perm_(std::move(perm)) {
  const int n = size();
  rank_.assign(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    Vertex v = perm_[static_cast<std::size_t>(i)];
    if (v < 1 || v > n) throw Error(ErrorCode::InvalidArgument, "order entry out of range");
    auto& r = rank_[static_cast<std::size_t>(v)];
    if (r >= 0) throw Error(ErrorCode::InvalidArgument, "order repeats vertex " + std::to_string(v));
    r = i;
  }
  rank_[0] = 0;
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  return LinearOrder(std::move(perm));
}

LinearOrder parse_order(std::string_view text) {
  auto lines = detail::split_lines(text);
  const int n = static_cast<int>(lines.size());
  std::vector<Vertex> perm;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int line_no = 0;
  for (std::string_view line : lines) {
    ++line_no;
    auto v = detail::parse_int(line);
    if (!v) throw ParseError(ParseErrorKind::Malformed, line_no, "expected a vertex id");
    if (*v < 1 || *v > n) throw ParseError(ParseErrorKind::VertexOutOfRange, line_no, std::string(line));
    if (seen[static_cast<std::size_t>(*v)])
      throw ParseError(ParseErrorKind::Malformed, line_no, "vertex listed twice");
    seen[static_cast<std::size_t>(*v)] = 1;
    perm.push_back(static_cast<Vertex>(*v));
  }
  return LinearOrder(std::move(perm));
}

std::string format_order(const LinearOrder& order) {
  std::ostringstream out;
  for (Vertex v : order.perm()) out << v << '\n';
  return out.str();
}

LinearOrder read_order_file(const std::string& path) { return parse_order(detail::read_file(path)); }

void write_order_file(const LinearOrder& order, const std::string& path) {
  detail::write_file(path, format_order(order));
}

namespace {

void require_order(const Graph& g, const LinearOrder& order) {
  if (order.size() != g.vertex_count())
    throw Error(ErrorCode::InvalidArgument, "order has " + std::to_string(order.size()) +
                                                " vertices, graph has " + std::to_string(g.vertex_count()));
}

}  // namespace

int effective_radius(const Graph& g, AccessKind kind) {
  if (kind.radius == kInfinity) {
    if (kind.access == Access::Dist)
      throw Error(ErrorCode::InvalidArgument, "dcol needs a finite radius");
    return std::max(g.vertex_count(), 1);
  }
  if (kind.radius < 0) throw Error(ErrorCode::InvalidArgument, "negative radius");
  return kind.radius;
}

std::vector<Vertex> access_set(const Graph& g, const LinearOrder& order, AccessKind kind, Vertex y) {
  require_order(g, order);
  if (!g.contains(y)) throw Error(ErrorCode::OutOfRange, "vertex out of range");
  const int r = effective_radius(g, kind);
  detail::AccessEngine engine(g);
  const auto& rank = order.ranks();
  switch (kind.access) {
    case Access::Weak: {
      std::vector<Vertex> out;
      for (Vertex x = 1; x <= g.vertex_count(); ++x) {
        if (!order.less(x, y)) continue;
        const auto& fw = engine.weak_forward(rank, x, r);
        if (std::find(fw.begin(), fw.end(), y) != fw.end()) out.push_back(x);
      }
      return out;
    }
    case Access::Strong: return engine.strong_back(rank, y, r);
    case Access::Dist: return engine.dist_back(rank, y, r);
  }
  return {};
}

std::vector<std::vector<Vertex>> access_sets(const Graph& g, const LinearOrder& order, AccessKind kind) {
  require_order(g, order);
  const int n = g.vertex_count();
  const int r = effective_radius(g, kind);
  const auto& rank = order.ranks();
  detail::AccessEngine engine(g);
  std::vector<std::vector<Vertex>> sets(static_cast<std::size_t>(n) + 1);
  switch (kind.access) {
    case Access::Weak:
      for (Vertex x = 1; x <= n; ++x)
        for (Vertex y : engine.weak_forward(rank, x, r)) sets[static_cast<std::size_t>(y)].push_back(x);
      break;
    case Access::Strong:
      for (Vertex y = 1; y <= n; ++y) sets[static_cast<std::size_t>(y)] = engine.strong_back(rank, y, r);
      break;
    case Access::Dist: {
      if (r < 1) break;
      std::vector<std::vector<std::pair<Vertex, int>>> heads(static_cast<std::size_t>(n) + 1);
      for (Vertex x = 1; x <= n; ++x) heads[static_cast<std::size_t>(x)] = engine.head_ball(rank, x, r / 2);
      for (Vertex y = 1; y <= n; ++y) {
        const auto& tail = engine.tail_costs(rank, y, r);
        for (Vertex x = 1; x <= n; ++x) {
          if (!order.less(x, y)) continue;
          for (const auto& [u, a] : heads[static_cast<std::size_t>(x)]) {
            int t = tail[static_cast<std::size_t>(u)];
            if (t != kUnreachable && a + t <= r) {
              sets[static_cast<std::size_t>(y)].push_back(x);
              break;
            }
          }
        }
      }
      break;
    }
  }
  return sets;
}

int eval_colnum(const Graph& g, const LinearOrder& order, AccessKind kind) {
  std::size_t best = 0;
  for (const auto& s : access_sets(g, order, kind)) best = std::max(best, s.size());
  return 1 + static_cast<int>(best);
}

// -- exact search -----------------------------------------------------------

namespace {

class ColnumSearch {
 public:
  ColnumSearch(const Graph& g, AccessKind kind, Deadline& deadline)
      : g_(g),
        n_(g.vertex_count()),
        kind_(kind),
        radius_(effective_radius(g, kind)),
        deadline_(deadline),
        engine_(g),
        rank_(static_cast<std::size_t>(n_) + 1, n_),
        pending_(static_cast<std::size_t>(n_) + 1, 0),
        prefix_(static_cast<std::size_t>(n_)) {}

  /// Searches for orders with value < `bound`; returns false if interrupted.
  bool run(int bound, ColnumResult& result) {
    best_ = bound;
    result_ = &result;
    return descend(0, 0, 0);
  }

 private:
  // Radius of the Q-type counts kept for unplaced vertices: exact for Weak,
  // a lower bound for Dist (Q at floor(k/2)+1 sits inside D at k).
  int pending_radius() const { return kind_.access == Access::Dist ? radius_ / 2 + 1 : radius_; }

  // `current` is the exact max over placed back-sets, `floor` a lower bound
  // for every completion of the prefix.
  bool descend(int depth, int current, int floor) {
    if (deadline_.expired()) return false;
    if (depth == n_) {
      best_ = current + 1;
      result_->value = best_;
      result_->witness = LinearOrder(prefix_);
      return true;
    }
    for (Vertex v = 1; v <= n_; ++v) {
      if (rank_[static_cast<std::size_t>(v)] != n_) continue;
      rank_[static_cast<std::size_t>(v)] = depth;
      prefix_[static_cast<std::size_t>(depth)] = v;

      // |back-set(v)| is final now that everything before v is placed.
      int own = 0;
      if (kind_.access == Access::Weak) own = pending_[static_cast<std::size_t>(v)];
      else if (kind_.access == Access::Strong) own = static_cast<int>(engine_.strong_back(rank_, v, radius_).size());
      else own = static_cast<int>(engine_.dist_back(rank_, v, radius_).size());
      int level = std::max(current, own);

      // Forward contribution of v to unplaced vertices.
      std::vector<Vertex> touched;
      if (kind_.access == Access::Strong) {
        for (Vertex w : g_.neighbors(v))
          if (rank_[static_cast<std::size_t>(w)] == n_) touched.push_back(w);
      } else {
        touched = engine_.weak_forward(rank_, v, pending_radius());
      }
      int bound = std::max(floor, level);
      for (Vertex w : touched) bound = std::max(bound, ++pending_[static_cast<std::size_t>(w)]);

      bool ok = true;
      if (bound + 1 < best_) ok = descend(depth + 1, level, bound);
      for (Vertex w : touched) --pending_[static_cast<std::size_t>(w)];
      rank_[static_cast<std::size_t>(v)] = n_;
      if (!ok) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  AccessKind kind_;
  int radius_;
  Deadline& deadline_;
  detail::AccessEngine engine_;
  std::vector<int> rank_;
  std::vector<int> pending_;
  std::vector<Vertex> prefix_;
  int best_ = 0;
  ColnumResult* result_ = nullptr;
};

}  // namespace

ColnumResult exact_colnum(const Graph& g, AccessKind kind, Deadline deadline) {
  effective_radius(g, kind);
  ColnumResult result;
  result.value = 0;
  for (OrderStrategy s : {OrderStrategy::Degeneracy, OrderStrategy::BfsRoot, OrderStrategy::TdDfs}) {
    if (g.empty()) break;
    LinearOrder h = heuristic_order(g, s);
    int v = eval_colnum(g, h, kind);
    if (result.value == 0 || v < result.value) {
      result.value = v;
      result.witness = h;
    }
  }
  if (g.empty()) {
    result.value = 1;
    return result;
  }
  ColnumSearch search(g, kind, deadline);
  result.optimal = search.run(result.value + 1, result);
  return result;
}

// -- heuristics -------------------------------------------------------------

LinearOrder heuristic_order(const Graph& g, OrderStrategy strategy, Vertex root) {
  const int n = g.vertex_count();
  if (n == 0) return LinearOrder();
  if (!g.contains(root)) throw Error(ErrorCode::OutOfRange, "root out of range");
  std::vector<Vertex> perm;
  perm.reserve(static_cast<std::size_t>(n));

  switch (strategy) {
    case OrderStrategy::Degeneracy: {
      std::vector<int> deg(static_cast<std::size_t>(n) + 1);
      std::vector<char> gone(static_cast<std::size_t>(n) + 1, 0);
      for (Vertex v = 1; v <= n; ++v) deg[static_cast<std::size_t>(v)] = g.degree(v);
      for (int step = 0; step < n; ++step) {
        Vertex pick = 0;
        for (Vertex v = 1; v <= n; ++v)
          if (!gone[static_cast<std::size_t>(v)] &&
              (pick == 0 || deg[static_cast<std::size_t>(v)] < deg[static_cast<std::size_t>(pick)]))
            pick = v;
        gone[static_cast<std::size_t>(pick)] = 1;
        perm.push_back(pick);
        for (Vertex w : g.neighbors(pick)) --deg[static_cast<std::size_t>(w)];
      }
      std::reverse(perm.begin(), perm.end());
      break;
    }
    case OrderStrategy::BfsRoot: {
      std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
      Vertex start = root;
      while (start != 0) {
        std::vector<Vertex> layer{start};
        seen[static_cast<std::size_t>(start)] = 1;
        while (!layer.empty()) {
          perm.insert(perm.end(), layer.begin(), layer.end());
          std::vector<Vertex> next;
          for (Vertex u : layer)
            for (Vertex w : g.neighbors(u))
              if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                next.push_back(w);
              }
          std::sort(next.begin(), next.end());
          layer = std::move(next);
        }
        start = 0;
        for (Vertex v = 1; v <= n && start == 0; ++v)
          if (!seen[static_cast<std::size_t>(v)]) start = v;
      }
      break;
    }
    case OrderStrategy::TdDfs: {
      std::vector<int> depth(static_cast<std::size_t>(n) + 1, -1);
      auto dfs_from = [&](Vertex s) {
        std::vector<std::pair<Vertex, std::size_t>> stack{{s, 0}};
        depth[static_cast<std::size_t>(s)] = 0;
        while (!stack.empty()) {
          auto& [u, i] = stack.back();
          auto nb = g.neighbors(u);
          if (i == nb.size()) {
            stack.pop_back();
            continue;
          }
          Vertex w = nb[i++];
          if (depth[static_cast<std::size_t>(w)] >= 0) continue;
          depth[static_cast<std::size_t>(w)] = depth[static_cast<std::size_t>(u)] + 1;
          stack.push_back({w, 0});
        }
      };
      dfs_from(root);
      for (Vertex v = 1; v <= n; ++v)
        if (depth[static_cast<std::size_t>(v)] < 0) dfs_from(v);
      for (Vertex v = 1; v <= n; ++v) perm.push_back(v);
      std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) {
        return depth[static_cast<std::size_t>(a)] < depth[static_cast<std::size_t>(b)];
      });
      break;
    }
  }
  return LinearOrder(std::move(perm));
}

std::optional<int> weak_access_distance(const Graph& g, const LinearOrder& order, Vertex y, Vertex x) {
  require_order(g, order);
  if (!g.contains(x) || !g.contains(y)) throw Error(ErrorCode::OutOfRange, "vertex out of range");
  if (x == y) return 0;
  if (!order.less(x, y)) return std::nullopt;
  detail::AccessEngine engine(g);
  const auto& rank = order.ranks();
  // Forward BFS from x: reached in ascending distance, so scan the ball.
  for (const auto& [u, a] : engine.head_ball(rank, x, g.vertex_count()))
    if (u == y) return a;
  return std::nullopt;
}

// -- tree-depth -------------------------------------------------------------

namespace {

class Treedepth {
 public:
  Treedepth(const Graph& g, Deadline& deadline) : deadline_(deadline) {
    const int n = g.vertex_count();
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (Vertex v = 1; v <= n; ++v)
      for (Vertex w : g.neighbors(v)) adj_[static_cast<std::size_t>(v - 1)] |= std::uint64_t{1} << (w - 1);
  }

  int solve(std::uint64_t mask) {
    if (mask == 0) return 0;
    if (std::popcount(mask) == 1) return 1;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    if (deadline_.expired()) throw Error(ErrorCode::Budget, "tree-depth search exceeded its time budget");

    std::uint64_t comp = component_of(mask, std::countr_zero(mask));
    int best = 0;
    if (comp != mask) {
      for (std::uint64_t rest = mask; rest != 0;) {
        std::uint64_t c = component_of(rest, std::countr_zero(rest));
        best = std::max(best, solve(c));
        rest &= ~c;
      }
    } else {
      best = std::popcount(mask);
      for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        best = std::min(best, 1 + solve(mask & ~(std::uint64_t{1} << v)));
      }
    }
    memo_.emplace(mask, best);
    return best;
  }

 private:
  std::uint64_t component_of(std::uint64_t mask, int v) const {
    std::uint64_t comp = std::uint64_t{1} << v;
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      next &= mask & ~comp;
      comp |= next;
      frontier = next;
    }
    return comp;
  }

  Deadline& deadline_;
  std::vector<std::uint64_t> adj_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace

int treedepth_exact(const Graph& g, Deadline deadline) {
  const int n = g.vertex_count();
  if (n > 64) throw Error(ErrorCode::InvalidArgument, "treedepth_exact supports at most 64 vertices");
  Treedepth td(g, deadline);
  std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return td.solve(all);
}

}  // namespace edcol
