#include "tilinglab/matching.hpp"

#include <limits>
#include <queue>
#include <stdexcept>

namespace tilinglab {

void BipartiteGraph::add_edge(std::uint32_t l, std::uint32_t r) {
  if (l >= adjacency_.size() || r >= right_) throw std::out_of_range("BipartiteGraph::add_edge");
  adjacency_[l].push_back(r);
  ++edges_;
}

namespace {

class HopcroftKarp {
 public:
  HopcroftKarp(const BipartiteGraph& g, const std::vector<bool>* active)
      : g_(g), active_(active), dist_(g.left_count()) {
    m_.left_to_right.assign(g.left_count(), kUnmatched);
    m_.right_to_left.assign(g.right_count(), kUnmatched);
  }

  BipartiteMatching run() {
    while (bfs()) {
      for (std::uint32_t l = 0; l < g_.left_count(); ++l) {
        if (is_active(l) && m_.left_to_right[l] == kUnmatched && dfs(l)) ++m_.size;
      }
    }
    return std::move(m_);
  }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

  bool is_active(std::uint32_t l) const { return active_ == nullptr || (*active_)[l]; }

  bool bfs() {
    std::queue<std::uint32_t> queue;
    for (std::uint32_t l = 0; l < g_.left_count(); ++l) {
      if (is_active(l) && m_.left_to_right[l] == kUnmatched) {
        dist_[l] = 0;
        queue.push(l);
      } else {
        dist_[l] = kInf;
      }
    }
    bool found = false;
    while (!queue.empty()) {
      auto l = queue.front();
      queue.pop();
      for (auto r : g_.neighbors(l)) {
        auto next = m_.right_to_left[r];
        if (next == kUnmatched) {
          found = true;
        } else if (dist_[next] == kInf) {
          dist_[next] = dist_[l] + 1;
          queue.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(std::uint32_t l) {
    for (auto r : g_.neighbors(l)) {
      auto next = m_.right_to_left[r];
      if (next == kUnmatched || (dist_[next] == dist_[l] + 1 && dfs(next))) {
        m_.left_to_right[l] = r;
        m_.right_to_left[r] = l;
        return true;
      }
    }
    dist_[l] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  const std::vector<bool>* active_;
  std::vector<std::uint32_t> dist_;
  BipartiteMatching m_;
};

}  // namespace

BipartiteMatching maximum_matching(const BipartiteGraph& g, const std::vector<bool>* left_active) {
  if (left_active && left_active->size() != g.left_count()) {
    throw std::invalid_argument("maximum_matching: active mask has the wrong size");
  }
  return HopcroftKarp(g, left_active).run();
}

}  // namespace tilinglab
