#include "lcert/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <list>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace lcert {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range for n=" + std::to_string(n));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t twice_edges = 0;
  for (auto& list : g.adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    twice_edges += list.size();
  }
  g.edge_count_ = twice_edges / 2;
  if (n > 0) {
    const auto dist = bfs_distances(g, 0);
    if (std::find(dist.begin(), dist.end(), kUnreachable) != dist.end()) {
      throw std::invalid_argument("graph is not connected");
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Instance Instance::unlabeled(Graph g) {
  Instance inst;
  inst.selected.assign(g.vertex_count(), 0);
  inst.graph = std::move(g);
  return inst;
}

void Instance::validate() const {
  const std::size_t n = graph.vertex_count();
  if (selected.size() != n) throw std::invalid_argument("selected labels do not match vertex count");
  if (!ids) return;
  if (ids->size() != n) throw std::invalid_argument("identifiers do not match vertex count");
  std::unordered_set<Identifier> seen;
  for (Identifier id : *ids) {
    if (id == 0) throw std::invalid_argument("identifiers must be positive");
    if (!seen.insert(id).second) {
      throw std::invalid_argument("duplicate identifier " + std::to_string(id));
    }
  }
}

std::size_t Instance::selected_count() const {
  return static_cast<std::size_t>(std::count_if(selected.begin(), selected.end(),
                                                [](std::uint8_t s) { return s != 0; }));
}

std::optional<Vertex> Instance::first_selected() const {
  for (Vertex v = 0; v < selected.size(); ++v) {
    if (selected[v]) return v;
  }
  return std::nullopt;
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::uint32_t eccentricity(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

std::uint32_t diameter(const Graph& g) {
  std::uint32_t best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

namespace {

// Lexicographic BFS by partition refinement. Returns the visit order.
std::vector<Vertex> lex_bfs(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::list<std::vector<Vertex>> classes;
  if (n == 0) return {};
  classes.emplace_back();
  for (Vertex v = 0; v < n; ++v) classes.back().push_back(v);

  std::vector<std::uint8_t> visited(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  while (!classes.empty()) {
    auto& first = classes.front();
    const Vertex v = first.front();
    first.erase(first.begin());
    if (first.empty()) classes.pop_front();
    visited[v] = 1;
    order.push_back(v);

    // Split every class into (neighbors of v) before (the rest).
    for (auto it = classes.begin(); it != classes.end();) {
      std::vector<Vertex> hit;
      std::vector<Vertex> miss;
      for (Vertex u : *it) (g.has_edge(v, u) ? hit : miss).push_back(u);
      if (!hit.empty() && !miss.empty()) {
        *it = std::move(miss);
        classes.insert(it, std::move(hit));
        ++it;
      } else {
        ++it;
      }
    }
  }
  return order;
}

}  // namespace

bool is_chordal(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const auto order = lex_bfs(g);
  // The reverse of a LexBFS order is a perfect elimination ordering iff g is
  // chordal. position[v] = index of v in the LexBFS visit order.
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  for (Vertex v : order) {
    // Earlier-visited neighbors of v must form a clique; it suffices that the
    // latest of them is adjacent to all the others.
    std::optional<Vertex> parent;
    for (Vertex u : g.neighbors(v)) {
      if (position[u] < position[v] && (!parent || position[u] > position[*parent])) parent = u;
    }
    if (!parent) continue;
    for (Vertex u : g.neighbors(v)) {
      if (u != *parent && position[u] < position[v] && !g.has_edge(*parent, u)) return false;
    }
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  const auto dist = bfs_distances(g, 0);
  for (const auto& [u, v] : g.edges()) {
    if ((dist[u] & 1U) == (dist[v] & 1U)) return false;
  }
  return true;
}

Graph subdivide(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<Edge> out;
  Vertex next = static_cast<Vertex>(n);
  for (auto [u, v] : g.edges()) {
    out.emplace_back(u, next);
    out.emplace_back(next, v);
    ++next;
  }
  return Graph::from_edges(next, out);
}

std::string instance_digest(const Instance& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 0x100000001b3ULL;
    }
  };
  mix(inst.size());
  for (const auto& [u, v] : inst.graph.edges()) {
    mix(u);
    mix(v);
  }
  for (auto s : inst.selected) mix(s);
  mix(inst.ids ? 1 : 0);
  if (inst.ids) {
    for (auto id : *inst.ids) mix(id);
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lcert
