#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lcert/graph.hpp"

namespace lcert {

Graph gen_path(std::size_t n);
Graph gen_cycle(std::size_t n);
Graph gen_complete(std::size_t n);
Graph gen_star(std::size_t leaves);

struct GridGraph {
  Graph graph;
  GridCoords coords;
};

/// k x q grid, row-major numbering.
GridGraph gen_grid(std::size_t rows, std::size_t cols);

/// A tree whose nodes are cliques. Node 0 is the root; `parent[i] < i` for
/// every other node, so the shape is always a valid rooted tree.
struct CliqueTreeShape {
  std::vector<std::size_t> clique_sizes;
  std::vector<std::size_t> parent;  // parent[0] is ignored
};

/// Glues each child clique onto one vertex of its parent clique. The shared
/// vertex is drawn from `seed`. Output is chordal and connected.
Graph gen_tree_of_cliques(const CliqueTreeShape& shape, std::uint64_t seed);
/// Random shape whose glued graph has exactly `n` vertices.
CliqueTreeShape random_clique_tree_shape(std::size_t n, std::size_t max_clique, std::uint64_t seed);

/// Uniform random labelled tree (Pruefer code).
Graph gen_random_tree(std::size_t n, std::uint64_t seed);
/// G(n, p) conditioned to be connected by adding a random spanning tree.
Graph gen_random_connected(std::size_t n, double p, std::uint64_t seed);
/// G(n, p) topped up until every vertex has degree >= min_degree.
Graph gen_dense_random(std::size_t n, double p, std::size_t min_degree, std::uint64_t seed);
/// Random chordal graph built by repeatedly adding a vertex adjacent to a
/// random clique of the current graph (so insertion order reversed is a
/// perfect elimination ordering).
Graph gen_random_chordal(std::size_t n, std::size_t max_clique, std::uint64_t seed);

/// Lower-bound yes-instance G(a, b): arms a[1..k] and b[1..l], a clique on the
/// remaining identifiers of both sets, the bridge {a[1], b[1]} and the two
/// edges tying the arm ends into the clique. Vertices 0..|a|-1 carry a in
/// increasing order, the next |b| vertices carry b. The selected vertex is
/// a[|a|], a clique vertex.
struct LBInstance {
  Instance instance;
  std::vector<Vertex> a_path;  // a[1..k]
  std::vector<Vertex> b_path;  // b[1..l]
  std::size_t radius = 0;

  Vertex a1() const { return a_path.front(); }
  Vertex b1() const { return b_path.front(); }
};

LBInstance gen_lb_instance(std::span<const Identifier> a, std::span<const Identifier> b,
                           std::size_t radius, std::size_t k, std::size_t l);

/// Two lower-bound instances joined into one: the bridges {a_x[1], b_x[1]}
/// and {a_y[1], b_y[1]} are replaced by {b_x[1], a_y[1]} and {b_y[1], a_x[1]}.
/// Vertices of y are shifted by |x|.
struct SplicedInstance {
  Instance instance;
  std::array<Vertex, 4> splice_points{};  // a_x[1], b_x[1], a_y[1], b_y[1]
  std::size_t offset = 0;                 // first vertex of y
};

SplicedInstance connect_pair(const LBInstance& x, const LBInstance& y);

}  // namespace lcert
