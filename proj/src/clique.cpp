#include "drg/clique.hpp"

#include <algorithm>

namespace drg {

namespace {

// Greedy sequential coloring of `p`: vertices in color order with the color
// number of each (1-based). Coloring bound: a clique inside the first j
// entries has at most colors[j-1] vertices.
void color_sort(const Graph& g, const VertexSet& p, std::vector<Vertex>& order, std::vector<std::size_t>& colors) {
  order.clear();
  colors.clear();
  VertexSet uncolored = p;
  std::size_t color = 0;
  while (uncolored.any()) {
    ++color;
    VertexSet candidates = uncolored;
    while (candidates.any()) {
      const auto v = static_cast<Vertex>(candidates.first());
      candidates.reset(v);
      candidates -= g.row(v);
      uncolored.reset(v);
      order.push_back(v);
      colors.push_back(color);
    }
  }
}

class CliqueEnumerator {
 public:
  CliqueEnumerator(const Graph& g, std::size_t size, std::uint64_t budget,
                   const std::function<bool(const std::vector<Vertex>&)>& visit)
      : g_(g), size_(size), budget_(budget), visit_(visit) {}

  CliqueSearchStats run() {
    VertexSet all(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) all.set(v);
    if (size_ == 0) {
      visit_({});
    } else {
      expand(all);
    }
    return stats_;
  }

 private:
  bool expand(VertexSet p) {
    if (++stats_.nodes > budget_) {
      stats_.budget_exhausted = true;
      return false;
    }
    std::vector<Vertex> order;
    std::vector<std::size_t> colors;
    color_sort(g_, p, order, colors);
    for (std::size_t j = order.size(); j-- > 0;) {
      if (current_.size() + colors[j] < size_) return true;
      const Vertex v = order[j];
      current_.push_back(v);
      if (current_.size() == size_) {
        auto sorted = current_;
        std::sort(sorted.begin(), sorted.end());
        if (!visit_(sorted)) return false;
      } else if (!expand(p & g_.row(v))) {
        return false;
      }
      current_.pop_back();
      p.reset(v);
    }
    return true;
  }

  const Graph& g_;
  std::size_t size_;
  std::uint64_t budget_;
  const std::function<bool(const std::vector<Vertex>&)>& visit_;
  std::vector<Vertex> current_;
  CliqueSearchStats stats_;
};

class MaxCliqueSearch {
 public:
  MaxCliqueSearch(const Graph& g, std::uint64_t budget, std::size_t stop_at)
      : g_(g), budget_(budget), stop_at_(stop_at) {}

  MaxCliqueResult run() {
    VertexSet all(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v) all.set(v);
    std::vector<Vertex> order;
    std::vector<std::size_t> colors;
    color_sort(g_, all, order, colors);
    res_.upper_bound = colors.empty() ? 0 : colors.back();
    const bool complete = expand(all);
    std::sort(res_.clique.begin(), res_.clique.end());
    if (complete) res_.upper_bound = res_.clique.size();
    return res_;
  }

 private:
  // Returns false when the search was cut short.
  bool expand(VertexSet p) {
    if (++res_.nodes > budget_) return false;
    std::vector<Vertex> order;
    std::vector<std::size_t> colors;
    color_sort(g_, p, order, colors);
    for (std::size_t j = order.size(); j-- > 0;) {
      if (current_.size() + colors[j] <= res_.clique.size()) return true;
      const Vertex v = order[j];
      current_.push_back(v);
      const VertexSet next = p & g_.row(v);
      if (next.none()) {
        if (current_.size() > res_.clique.size()) {
          res_.clique = current_;
          if (stop_at_ && res_.clique.size() >= stop_at_) return false;
        }
      } else if (!expand(next)) {
        return false;
      }
      current_.pop_back();
      p.reset(v);
    }
    return true;
  }

  const Graph& g_;
  std::uint64_t budget_;
  std::size_t stop_at_;
  std::vector<Vertex> current_;
  MaxCliqueResult res_;
};

}  // namespace

CliqueSearchStats for_each_clique(const Graph& g, std::size_t size, std::uint64_t budget,
                                  const std::function<bool(const std::vector<Vertex>&)>& visit) {
  return CliqueEnumerator(g, size, budget, visit).run();
}

MaxCliqueResult max_clique(const Graph& g, std::uint64_t budget, std::size_t stop_at) {
  return MaxCliqueSearch(g, budget, stop_at).run();
}

}  // namespace drg
