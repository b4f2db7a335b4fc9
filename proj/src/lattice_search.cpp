#include "lattice_search.hpp"

#include <algorithm>
#include <queue>

#include "wsbound/errors.hpp"

namespace wsbound::detail {

namespace {

struct QueueEntry {
  Int dist;
  DivisorIndex node;
  std::size_t index;
};

struct QueueLater {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.dist != b.dist) return a.dist > b.dist;
    return a.node > b.node;
  }
};

}  // namespace

std::optional<LatticePath> search_lattice(
    std::size_t n, const std::vector<Int>& horizons, Int width, Int node_budget,
    const std::function<Int(const DivisorIndex&, std::size_t)>& edge_weight) {
  if (width < 0) throw Error("window width must be nonnegative");

  std::optional<LatticePath> best;
  for (std::size_t spine = 0; spine < n; ++spine) {
    std::vector<Int> lo(n, 0), hi(n, width);
    lo[spine] = -1;
    hi[spine] = horizons[spine];

    std::vector<std::size_t> stride(n);
    std::size_t total = 1;
    for (std::size_t j = n; j-- > 0;) {
      stride[j] = total;
      total *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
      if (total > static_cast<std::size_t>(node_budget)) {
        throw CapExceeded("lattice window exceeds the node budget");
      }
    }
    auto index_of = [&](const DivisorIndex& v) {
      std::size_t idx = 0;
      for (std::size_t j = 0; j < n; ++j) {
        idx += static_cast<std::size_t>(v[j] - lo[j]) * stride[j];
      }
      return idx;
    };
    auto is_target = [&](const DivisorIndex& v) {
      Int d = degree(v);
      for (std::size_t j = 0; j < n; ++j) {
        if (d >= horizons[j]) return true;
      }
      return false;
    };

    constexpr Int kInf = Int{1} << 61;
    std::vector<Int> dist(total, kInf);
    std::vector<char> settled(total, 0);
    std::vector<std::size_t> prev_node(total, SIZE_MAX);

    std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueLater> queue;
    DivisorIndex start = lo;
    dist[index_of(start)] = 0;
    queue.push({0, start, index_of(start)});

    std::optional<DivisorIndex> reached;
    Int reached_weight = 0;
    while (!queue.empty()) {
      QueueEntry top = queue.top();
      queue.pop();
      if (settled[top.index]) continue;
      settled[top.index] = 1;
      if (is_target(top.node)) {
        reached = top.node;
        reached_weight = top.dist;
        break;
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (top.node[j] >= hi[j]) continue;
        DivisorIndex next = top.node;
        ++next[j];
        std::size_t next_index = index_of(next);
        if (settled[next_index]) continue;
        Int cand = top.dist + edge_weight(top.node, j);
        if (cand < dist[next_index]) {
          dist[next_index] = cand;
          prev_node[next_index] = top.index;
          queue.push({cand, std::move(next), next_index});
        }
      }
    }
    if (!reached) continue;

    std::vector<DivisorIndex> path;
    std::size_t at = index_of(*reached);
    DivisorIndex node = *reached;
    for (;;) {
      path.push_back(node);
      std::size_t back = prev_node[at];
      if (back == SIZE_MAX) break;
      DivisorIndex prev(n);
      std::size_t rem = back;
      for (std::size_t j = 0; j < n; ++j) {
        prev[j] = lo[j] + static_cast<Int>(rem / stride[j]);
        rem %= stride[j];
      }
      node = std::move(prev);
      at = back;
    }
    std::reverse(path.begin(), path.end());

    // Close the path: its final step must point at a coordinate whose horizon
    // the final degree meets. One extra step in such a direction is free.
    Int reached_degree = degree(path.back());
    std::size_t last_dir = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (path.back()[j] != path[path.size() - 2][j]) last_dir = j;
    }
    if (reached_degree < horizons[last_dir]) {
      std::size_t close_dir = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (reached_degree < horizons[j]) continue;
        if (close_dir == n || horizons[j] < horizons[close_dir]) close_dir = j;
      }
      DivisorIndex extended = path.back();
      ++extended[close_dir];
      path.push_back(std::move(extended));
    }

    if (!best || reached_weight < best->weight) {
      best = LatticePath{std::move(path), reached_weight};
    }
  }
  return best;
}

}  // namespace wsbound::detail
