#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lcert/schemes.hpp"

namespace lcert::detail {

SchemePtr make_classic(std::size_t id_bits, std::size_t dist_bits);
SchemePtr make_truncated_classic(std::size_t kept_bits);
SchemePtr make_constant(std::size_t bits);
SchemePtr make_tree();
SchemePtr make_chordal();
SchemePtr make_grid();
SchemePtr make_dense(std::size_t id_bit_length, std::size_t retry_limit, std::uint64_t seed);
SchemePtr make_smallid(std::uint64_t c_id, std::size_t dist_bits, CountingRule rule);

/// BFS tree from `root`; each vertex's parent is its lowest-index neighbour
/// one level closer. parent[root] == root.
struct BfsTree {
  std::vector<std::uint32_t> dist;
  std::vector<Vertex> parent;
};
BfsTree bfs_tree(const Graph& g, Vertex root);

/// Every certificate of the view read as an unsigned integer.
std::vector<std::uint64_t> integer_labels(const View& view);

}  // namespace lcert::detail
