#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lcert {

using Vertex = std::uint32_t;
using Identifier = std::uint64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::uint32_t kUnreachable = ~std::uint32_t{0};

/// Undirected simple connected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate edges (in either
  /// orientation) collapse; self-loops, out-of-range endpoints and
  /// disconnected inputs throw std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const;
  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// A graph with AMOS input labels and an optional identifier assignment.
/// Anonymous instances carry no identifiers.
struct Instance {
  Graph graph;
  std::vector<std::uint8_t> selected;
  std::optional<std::vector<Identifier>> ids;

  static Instance unlabeled(Graph g);
  /// Checks label/identifier sizes and that identifiers are distinct and positive.
  void validate() const;

  std::size_t size() const { return graph.vertex_count(); }
  bool anonymous() const { return !ids.has_value(); }
  bool is_selected(Vertex v) const { return selected[v] != 0; }
  std::size_t selected_count() const;
  /// At most one selected vertex.
  bool is_amos() const { return selected_count() <= 1; }
  std::optional<Vertex> first_selected() const;
};

struct GridCoords {
  std::size_t rows = 0;
  std::size_t cols = 0;

  std::pair<std::size_t, std::size_t> of(Vertex v) const { return {v / cols, v % cols}; }
  Vertex at(std::size_t row, std::size_t col) const {
    return static_cast<Vertex>(row * cols + col);
  }
};

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source);
std::uint32_t eccentricity(const Graph& g, Vertex v);
std::uint32_t diameter(const Graph& g);
/// Lexicographic BFS followed by a perfect-elimination-ordering check.
bool is_chordal(const Graph& g);
bool is_bipartite(const Graph& g);
/// Inserts one new vertex in the middle of every edge. New vertices follow
/// the originals, in the order of Graph::edges().
Graph subdivide(const Graph& g);

/// 64-bit FNV-1a over n, edges, labels and identifiers, as 16 hex digits.
std::string instance_digest(const Instance& inst);

}  // namespace lcert
