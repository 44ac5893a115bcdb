#include "access_core.hpp"

#include <algorithm>

namespace edcol::detail {

AccessEngine::AccessEngine(const Graph& g)
    : g_(g),
      dist_(static_cast<std::size_t>(g.vertex_count()) + 1, kUnreachable),
      tail_(static_cast<std::size_t>(g.vertex_count()) + 1, kUnreachable) {
  queue_.reserve(static_cast<std::size_t>(g.vertex_count()) + 1);
}

void AccessEngine::bfs(Vertex src, int radius, const std::vector<int>& rank, int min_rank, bool strict) {
  for (Vertex v : reached_) dist_[static_cast<std::size_t>(v)] = kUnreachable;
  reached_.clear();
  dist_[static_cast<std::size_t>(src)] = 0;
  reached_.push_back(src);
  for (std::size_t head = 0; head < reached_.size(); ++head) {
    Vertex u = reached_[head];
    int du = dist_[static_cast<std::size_t>(u)];
    if (du >= radius) continue;
    for (Vertex w : g_.neighbors(u)) {
      auto& dw = dist_[static_cast<std::size_t>(w)];
      if (dw != kUnreachable) continue;
      int rw = rank[static_cast<std::size_t>(w)];
      if (strict ? rw <= min_rank : rw < min_rank) continue;
      dw = du + 1;
      reached_.push_back(w);
    }
  }
}

const std::vector<Vertex>& AccessEngine::weak_forward(const std::vector<int>& rank, Vertex x, int radius) {
  bfs(x, radius, rank, rank[static_cast<std::size_t>(x)], true);
  queue_.assign(reached_.begin() + 1, reached_.end());
  return queue_;
}

std::vector<Vertex> AccessEngine::strong_back(const std::vector<int>& rank, Vertex y, int radius) {
  std::vector<Vertex> out;
  if (radius < 1) return out;
  const int ry = rank[static_cast<std::size_t>(y)];
  bfs(y, radius - 1, rank, ry, true);
  for (Vertex v : reached_)
    for (Vertex x : g_.neighbors(v))
      if (rank[static_cast<std::size_t>(x)] < ry) out.push_back(x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const std::vector<int>& AccessEngine::tail_costs(const std::vector<int>& rank, Vertex y, int k) {
  bfs(y, k, rank, rank[static_cast<std::size_t>(y)], false);
  const int n = g_.vertex_count();
  for (Vertex u = 1; u <= n; ++u) {
    int best = kUnreachable;
    if (u == y) {
      best = 0;
    } else {
      for (Vertex v : g_.neighbors(u)) {
        int dv = dist_[static_cast<std::size_t>(v)];
        if (dv != kUnreachable && dv + 1 <= k && (best == kUnreachable || dv + 1 < best)) best = dv + 1;
      }
    }
    tail_[static_cast<std::size_t>(u)] = best;
  }
  return tail_;
}

std::vector<std::pair<Vertex, int>> AccessEngine::head_ball(const std::vector<int>& rank, Vertex x, int h) {
  bfs(x, h, rank, rank[static_cast<std::size_t>(x)], false);
  std::vector<std::pair<Vertex, int>> out;
  out.reserve(reached_.size());
  for (Vertex u : reached_) out.emplace_back(u, dist_[static_cast<std::size_t>(u)]);
  return out;
}

std::vector<Vertex> AccessEngine::dist_back(const std::vector<int>& rank, Vertex y, int k) {
  std::vector<Vertex> out;
  if (k < 1) return out;
  const int ry = rank[static_cast<std::size_t>(y)];
  std::vector<int> tail = tail_costs(rank, y, k);
  for (Vertex x = 1; x <= g_.vertex_count(); ++x) {
    if (rank[static_cast<std::size_t>(x)] >= ry) continue;
    for (const auto& [u, a] : head_ball(rank, x, k / 2)) {
      int t = tail[static_cast<std::size_t>(u)];
      if (t != kUnreachable && a + t <= k) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

}  // namespace edcol::detail
