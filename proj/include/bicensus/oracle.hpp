#ifndef BICENSUS_ORACLE_HPP
#define BICENSUS_ORACLE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "bicensus/rational.hpp"

namespace bicensus {

// Exhaustive ground truth: counts connected spanning subgraphs with a given
// edge count, by walking q-subsets of the host edge list.

// Edge list of K_{r,s}, row-major: edge index i*s+j joins left i and right r+j.
std::vector<std::pair<int, int>> bipartite_edges(int r, int s);
// Edge list of K_n, lexicographic pairs (i,j), i < j.
std::vector<std::pair<int, int>> complete_edges(int n);

// True iff the edges selected by `mask` (over `edges`) connect all
// `vertex_count` vertices.
bool connectivity(std::uint64_t mask, const std::vector<std::pair<int, int>>& edges,
                  int vertex_count);

// q-edge connected spanning subgraphs of K_{r,s}.  Requires r*s <= 30.
Int count_bipartite(int r, int s, int q, int threads = 1);

// q-edge connected spanning subgraphs of K_n.  Requires n <= 8.
Int count_complete(int n, int q, int threads = 1);

}  // namespace bicensus

#endif
