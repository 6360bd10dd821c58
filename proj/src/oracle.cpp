#include "bicensus/oracle.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace bicensus {

std::vector<std::pair<int, int>> bipartite_edges(int r, int s) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(r) * s);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) edges.emplace_back(i, r + j);
  return edges;
}

std::vector<std::pair<int, int>> complete_edges(int n) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return edges;
}

namespace {

int find_root(int* parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];  // path halving
    v = parent[v];
  }
  return v;
}

bool connected_mask(std::uint64_t mask, const std::vector<std::pair<int, int>>& edges,
                    int vertex_count) {
  if (vertex_count <= 1) return true;
  int parent[64];
  for (int v = 0; v < vertex_count; ++v) parent[v] = v;
  int components = vertex_count;
  std::uint64_t m = mask;
  while (m) {
    int i = __builtin_ctzll(m);
    m &= m - 1;
    int a = find_root(parent, edges[i].first);
    int b = find_root(parent, edges[i].second);
    if (a != b) {
      parent[a] = b;
      if (--components == 1) return true;
    }
  }
  return components == 1;
}

// Counts connected q-subsets among the given edges, split over workers by the
// highest selected edge index; each worker owns private state.
Int count_connected(const std::vector<std::pair<int, int>>& edges, int vertex_count, int q,
                    int threads) {
  int m = static_cast<int>(edges.size());
  if (vertex_count == 0) return 0;  // the empty graph is not counted as a tree
  if (q < 0 || q > m) return 0;
  if (q == 0) return vertex_count == 1 ? 1 : 0;

  auto count_top = [&](int top) -> long {
    // Subsets whose maximum edge index is `top`: bit `top` plus q-1 bits below.
    long hits = 0;
    std::uint64_t high = 1ull << top;
    if (q == 1) return connected_mask(high, edges, vertex_count) ? 1 : 0;
    std::uint64_t sub = (1ull << (q - 1)) - 1;
    std::uint64_t limit = 1ull << top;
    while (sub < limit) {
      if (connected_mask(sub | high, edges, vertex_count)) ++hits;
      std::uint64_t c = sub & -sub;
      std::uint64_t r = sub + c;
      sub = (((r ^ sub) >> 2) / c) | r;
    }
    return hits;
  };

  if (threads <= 1) {
    long total = 0;
    for (int top = q - 1; top < m; ++top) total += count_top(top);
    return Int(total);
  }

  std::vector<long> partial(m, 0);
  std::vector<std::thread> pool;
  std::atomic<int> next(q - 1);
  int workers = std::min(threads, m - q + 1);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        int top = next.fetch_add(1);
        if (top >= m) return;
        partial[top] = count_top(top);
      }
    });
  }
  for (auto& t : pool) t.join();
  long total = 0;
  for (long p : partial) total += p;
  return Int(total);
}

}  // namespace

bool connectivity(std::uint64_t mask, const std::vector<std::pair<int, int>>& edges,
                  int vertex_count) {
  return connected_mask(mask, edges, vertex_count);
}

Int count_bipartite(int r, int s, int q, int threads) {
  if (r < 0 || s < 0) throw std::invalid_argument("count_bipartite: negative size");
  if (r * s > 30) throw std::invalid_argument("count_bipartite: r*s > 30");
  return count_connected(bipartite_edges(r, s), r + s, q, threads);
}

Int count_complete(int n, int q, int threads) {
  if (n < 0) throw std::invalid_argument("count_complete: negative size");
  if (n > 8) throw std::invalid_argument("count_complete: n > 8");
  return count_connected(complete_edges(n), n, q, threads);
}

}  // namespace bicensus
