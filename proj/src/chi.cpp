#include "edcol/chi.hpp"

#include <algorithm>
#include <numeric>

#include "bitset.hpp"

namespace edcol {

namespace {

using detail::Bits;

std::vector<Bits> adjacency_bits(const Graph& h) {
  const int n = h.vertex_count();
  std::vector<Bits> adj(static_cast<std::size_t>(n), Bits(n));
  for (Vertex v = 1; v <= n; ++v)
    for (Vertex w : h.neighbors(v)) adj[static_cast<std::size_t>(v - 1)].set(w - 1);
  return adj;
}

class CliqueSearch {
 public:
  CliqueSearch(const Graph& h, Deadline& deadline) : n_(h.vertex_count()), adj_(adjacency_bits(h)), deadline_(deadline) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return h.degree(a + 1) > h.degree(b + 1); });
  }

  bool run(CliqueResult& out) {
    Bits all(n_);
    for (int v = 0; v < n_; ++v) all.set(v);
    std::vector<int> cur;
    bool done = expand(cur, all);
    out.value = static_cast<int>(best_.size());
    out.clique.clear();
    for (int v : best_) out.clique.push_back(v + 1);
    std::sort(out.clique.begin(), out.clique.end());
    return done;
  }

 private:
  // Greedy sequential colouring of P in the static order; returns vertices
  // with their colour bound, ascending by colour.
  void colour_sort(const Bits& p, std::vector<int>& verts, std::vector<int>& bound) const {
    verts.clear();
    bound.clear();
    Bits left = p;
    int colour = 0;
    while (left.any()) {
      ++colour;
      Bits avail = left;
      for (int v : order_) {
        if (!avail.test(v)) continue;
        verts.push_back(v);
        bound.push_back(colour);
        left.reset(v);
        avail.reset(v);
        avail.subtract(adj_[static_cast<std::size_t>(v)]);
      }
    }
  }

  bool expand(std::vector<int>& cur, Bits p) {
    if (deadline_.expired()) return false;
    std::vector<int> verts, bound;
    colour_sort(p, verts, bound);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (cur.size() + static_cast<std::size_t>(bound[i]) <= best_.size()) return true;
      int v = verts[i];
      cur.push_back(v);
      Bits next = p;
      next &= adj_[static_cast<std::size_t>(v)];
      if (!next.any()) {
        if (cur.size() > best_.size()) best_ = cur;
      } else if (!expand(cur, next)) {
        cur.pop_back();
        return false;
      }
      cur.pop_back();
      p.reset(v);
    }
    return true;
  }

  int n_;
  std::vector<Bits> adj_;
  Deadline& deadline_;
  std::vector<int> order_;
  std::vector<int> best_;
};

class Dsatur {
 public:
  Dsatur(const Graph& h, Deadline& deadline)
      : h_(h), n_(h.vertex_count()), deadline_(deadline), colour_(static_cast<std::size_t>(n_) + 1, 0),
        sat_(static_cast<std::size_t>(n_) + 1, 0) {}

  /// Greedy DSATUR colouring (no backtracking).
  Coloring greedy(const std::vector<Vertex>& precoloured) {
    reset(n_ + 1);
    int used = 0;
    for (Vertex v : precoloured) assign(v, ++used);
    for (int placed = static_cast<int>(precoloured.size()); placed < n_; ++placed) {
      Vertex v = pick();
      int c = 1;
      while (forbidden(v, c)) ++c;
      assign(v, c);
      used = std::max(used, c);
    }
    return snapshot();
  }

  /// Looks for colourings with fewer than `bound` colours, keeping the clique
  /// precoloured. Returns false when interrupted by the deadline.
  bool improve(const std::vector<Vertex>& clique, int bound, int target, Coloring& best) {
    reset(bound);
    best_ = bound;
    target_ = target;
    best_colouring_ = &best;
    int used = 0;
    for (Vertex v : clique) assign(v, ++used);
    return descend(static_cast<int>(clique.size()), used);
  }

  int best() const { return best_; }

 private:
  void reset(int colours) {
    k_ = colours + 1;
    std::fill(colour_.begin(), colour_.end(), 0);
    std::fill(sat_.begin(), sat_.end(), 0);
    count_.assign(static_cast<std::size_t>(n_ + 1) * static_cast<std::size_t>(k_), 0);
  }

  bool forbidden(Vertex v, int c) const {
    return c < k_ && count_[static_cast<std::size_t>(v) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] != 0;
  }

  void assign(Vertex v, int c) {
    colour_[static_cast<std::size_t>(v)] = c;
    if (c >= k_) return;
    for (Vertex w : h_.neighbors(v))
      if (count_[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)]++ == 0)
        ++sat_[static_cast<std::size_t>(w)];
  }

  void unassign(Vertex v) {
    int c = colour_[static_cast<std::size_t>(v)];
    colour_[static_cast<std::size_t>(v)] = 0;
    for (Vertex w : h_.neighbors(v))
      if (--count_[static_cast<std::size_t>(w) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(c)] == 0)
        --sat_[static_cast<std::size_t>(w)];
  }

  Vertex pick() const {
    Vertex best = 0;
    for (Vertex v = 1; v <= n_; ++v) {
      if (colour_[static_cast<std::size_t>(v)] != 0) continue;
      if (best == 0) {
        best = v;
        continue;
      }
      int sv = sat_[static_cast<std::size_t>(v)], sb = sat_[static_cast<std::size_t>(best)];
      if (sv > sb || (sv == sb && h_.degree(v) > h_.degree(best))) best = v;
    }
    return best;
  }

  Coloring snapshot() const {
    Coloring c(n_);
    for (Vertex v = 1; v <= n_; ++v) c.set(v, colour_[static_cast<std::size_t>(v)]);
    return c;
  }

  bool descend(int placed, int used) {
    if (deadline_.expired()) return false;
    if (placed == n_) {
      best_ = used;
      *best_colouring_ = snapshot();
      return true;
    }
    Vertex v = pick();
    int limit = std::min(used + 1, best_ - 1);
    for (int c = 1; c <= limit; ++c) {
      if (forbidden(v, c)) continue;
      assign(v, c);
      bool ok = descend(placed + 1, std::max(used, c));
      unassign(v);
      if (!ok) return false;
      if (best_ <= target_) return true;
      limit = std::min(used + 1, best_ - 1);
    }
    return true;
  }

  const Graph& h_;
  int n_;
  Deadline& deadline_;
  int k_ = 1;
  std::vector<int> colour_;
  std::vector<int> sat_;
  std::vector<int> count_;
  int best_ = 0;
  int target_ = 0;
  Coloring* best_colouring_ = nullptr;
};

}  // namespace

CliqueResult clique_number(const Graph& h, Deadline deadline) {
  CliqueResult out;
  CliqueSearch search(h, deadline);
  out.optimal = search.run(out);
  return out;
}

ChiResult chromatic_number(const Graph& h, Deadline deadline, int known_lower) {
  ChiResult r;
  const int n = h.vertex_count();
  if (n == 0) {
    r.witness = Coloring(0);
    return r;
  }
  CliqueResult cl = clique_number(h, deadline);
  r.clique = cl.clique;
  r.lower = std::max(cl.value, known_lower);

  Dsatur dsatur(h, deadline);
  r.witness = dsatur.greedy(cl.clique);
  r.upper = r.witness.max_color();

  if (r.lower < r.upper) {
    bool finished = dsatur.improve(cl.clique, r.upper, r.lower, r.witness);
    if (dsatur.best() <= r.lower) finished = true;
    r.upper = r.witness.max_color();
    if (finished) r.lower = r.upper;
  }
  r.status = r.lower == r.upper ? ChiStatus::Exact : ChiStatus::Bounds;
  r.value = r.upper;
  return r;
}

std::optional<int> certified_lower_bound(const Graph& h, const ApexPairCertificate& cert, Deadline deadline) {
  auto all_adjacent = [&](Vertex v, const std::vector<Vertex>& set) {
    if (!h.contains(v)) return false;
    for (Vertex w : set)
      if (!h.contains(w) || !h.adjacent(v, w)) return false;
    return true;
  };
  std::vector<Vertex> both = cert.first;
  both.insert(both.end(), cert.second.begin(), cert.second.end());
  std::vector<Vertex> sorted = both;
  std::sort(sorted.begin(), sorted.end());
  if (cert.first.empty() || cert.second.empty()) return std::nullopt;
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return std::nullopt;
  if (!all_adjacent(cert.apex, both) || !all_adjacent(cert.left, cert.first) ||
      !all_adjacent(cert.right, cert.second) || !h.adjacent(cert.left, cert.right))
    return std::nullopt;

  auto part_bound = [&](const std::vector<Vertex>& part,
                        const std::shared_ptr<ApexPairCertificate>& sub) -> std::optional<int> {
    Graph induced = induced_subgraph(h, part);
    if (sub) return certified_lower_bound(induced, *sub, deadline);
    ChiResult r = chromatic_number(induced, deadline);
    if (r.status != ChiStatus::Exact) return std::nullopt;
    return r.value;
  };
  auto a = part_bound(cert.first, cert.first_part);
  if (!a) return std::nullopt;
  auto b = part_bound(cert.second, cert.second_part);
  if (!b) return std::nullopt;
  return std::min(*a, *b) + 2;
}

}  // namespace edcol
