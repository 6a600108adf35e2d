#include "lcert/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace lcert {

namespace {

std::vector<Edge> random_tree_edges(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  // Pruefer decoding.
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = pick(rng);
  std::vector<std::size_t> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  Vertex u = 0;
  while (degree[u] != 1) ++u;
  Vertex v = u + 1;
  while (degree[v] != 1) ++v;
  edges.emplace_back(u, v);
  return edges;
}

}  // namespace

Graph gen_path(std::size_t n) {
  if (n == 0) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::from_edges(n, edges);
}

Graph gen_complete(std::size_t n) {
  if (n == 0) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph gen_star(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

GridGraph gen_grid(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw std::invalid_argument("grid dimensions must be positive, got " + std::to_string(rows) +
                                "x" + std::to_string(cols));
  }
  GridCoords coords{rows, cols};
  std::vector<Edge> edges;
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(coords.at(r, c), coords.at(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(coords.at(r, c), coords.at(r + 1, c));
    }
  }
  return {Graph::from_edges(rows * cols, edges), coords};
}

Graph gen_tree_of_cliques(const CliqueTreeShape& shape, std::uint64_t seed) {
  const std::size_t nodes = shape.clique_sizes.size();
  if (nodes == 0) throw std::invalid_argument("clique tree shape is empty");
  if (shape.parent.size() != nodes) throw std::invalid_argument("clique tree parent list size mismatch");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Vertex>> members(nodes);
  std::vector<Edge> edges;
  Vertex next = 0;
  auto make_clique = [&](std::vector<Vertex>& clique, std::size_t fresh) {
    for (std::size_t i = 0; i < fresh; ++i) {
      for (Vertex u : clique) edges.emplace_back(u, next);
      clique.push_back(next++);
    }
  };
  for (std::size_t node = 0; node < nodes; ++node) {
    const std::size_t size = shape.clique_sizes[node];
    if (size == 0) throw std::invalid_argument("clique sizes must be at least 1");
    if (node == 0) {
      make_clique(members[0], size);
      continue;
    }
    const std::size_t parent = shape.parent[node];
    if (parent >= node) throw std::invalid_argument("clique tree parent must precede its child");
    const auto& host = members[parent];
    std::uniform_int_distribution<std::size_t> pick(0, host.size() - 1);
    members[node].push_back(host[pick(rng)]);
    make_clique(members[node], size - 1);
  }
  return Graph::from_edges(next, edges);
}

CliqueTreeShape random_clique_tree_shape(std::size_t n, std::size_t max_clique, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("shape needs at least one vertex");
  if (max_clique < 2 && n > 1) throw std::invalid_argument("max_clique must be at least 2");
  std::mt19937_64 rng(seed);
  CliqueTreeShape shape;
  std::size_t remaining = n;
  while (remaining > 0) {
    const bool root = shape.clique_sizes.empty();
    // A child clique contributes size-1 new vertices.
    const std::size_t cap = std::min(max_clique, root ? remaining : remaining + 1);
    const std::size_t lo = root ? 1 : 2;
    std::uniform_int_distribution<std::size_t> size_dist(lo, std::max(lo, cap));
    const std::size_t size = std::min(size_dist(rng), cap);
    std::size_t parent = 0;
    if (!root) {
      std::uniform_int_distribution<std::size_t> parent_dist(0, shape.clique_sizes.size() - 1);
      parent = parent_dist(rng);
    }
    shape.clique_sizes.push_back(size);
    shape.parent.push_back(parent);
    remaining -= root ? size : size - 1;
  }
  return shape;
}

Graph gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("tree needs at least one vertex");
  std::mt19937_64 rng(seed);
  return Graph::from_edges(n, random_tree_edges(n, rng));
}

Graph gen_random_connected(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  std::mt19937_64 rng(seed);
  auto edges = random_tree_edges(n, rng);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_dense_random(std::size_t n, double p, std::size_t min_degree, std::uint64_t seed) {
  if (min_degree >= n) {
    throw std::invalid_argument("min degree " + std::to_string(min_degree) + " impossible on " +
                                std::to_string(n) + " vertices");
  }
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  std::vector<std::size_t> degree(n, 0);
  auto add = [&](Vertex u, Vertex v) {
    if (u == v || adj[u][v]) return;
    adj[u][v] = adj[v][u] = 1;
    ++degree[u];
    ++degree[v];
  };
  for (auto [u, v] : random_tree_edges(n, rng)) add(u, v);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) add(u, v);
    }
  }
  std::vector<Vertex> others(n);
  for (Vertex u = 0; u < n; ++u) {
    if (degree[u] >= min_degree) continue;
    std::iota(others.begin(), others.end(), Vertex{0});
    std::shuffle(others.begin(), others.end(), rng);
    for (Vertex v : others) {
      if (degree[u] >= min_degree) break;
      add(u, v);
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adj[u][v]) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph gen_random_chordal(std::size_t n, std::size_t max_clique, std::uint64_t seed) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  if (max_clique < 2 && n > 1) throw std::invalid_argument("max_clique must be at least 2");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<std::uint8_t>> adj(n, std::vector<std::uint8_t>(n, 0));
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    std::uniform_int_distribution<std::size_t> size_dist(1, max_clique - 1);
    const std::size_t target = size_dist(rng);
    std::vector<Vertex> clique{pick(rng)};
    std::vector<Vertex> candidates;
    for (Vertex w = 0; w < v; ++w) {
      if (adj[clique[0]][w]) candidates.push_back(w);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng);
    for (Vertex w : candidates) {
      if (clique.size() >= target) break;
      if (std::all_of(clique.begin(), clique.end(), [&](Vertex c) { return adj[c][w] != 0; })) {
        clique.push_back(w);
      }
    }
    for (Vertex c : clique) {
      adj[c][v] = adj[v][c] = 1;
      edges.emplace_back(c, v);
    }
  }
  return Graph::from_edges(n, edges);
}

LBInstance gen_lb_instance(std::span<const Identifier> a, std::span<const Identifier> b,
                           std::size_t radius, std::size_t k, std::size_t l) {
  const std::size_t n_a = a.size();
  const std::size_t n_b = b.size();
  if (k < 2 * radius + 1 || l < 2 * radius + 1) {
    throw std::invalid_argument("arm lengths must be at least 2r+1");
  }
  if (n_a < k + 1 || n_b < l + 1) {
    throw std::invalid_argument("identifier sets too small: |a|=" + std::to_string(n_a) +
                                " needs >= " + std::to_string(k + 1) + ", |b|=" +
                                std::to_string(n_b) + " needs >= " + std::to_string(l + 1));
  }
  std::vector<Identifier> sorted_a(a.begin(), a.end());
  std::vector<Identifier> sorted_b(b.begin(), b.end());
  std::sort(sorted_a.begin(), sorted_a.end());
  std::sort(sorted_b.begin(), sorted_b.end());

  // a[i] (1-based) is vertex i-1; b[i] is vertex n_a + i - 1.
  auto va = [](std::size_t i) { return static_cast<Vertex>(i - 1); };
  auto vb = [n_a](std::size_t i) { return static_cast<Vertex>(n_a + i - 1); };

  std::vector<Edge> edges;
  for (std::size_t i = 1; i < k; ++i) edges.emplace_back(va(i), va(i + 1));
  for (std::size_t i = 1; i < l; ++i) edges.emplace_back(vb(i), vb(i + 1));
  std::vector<Vertex> clique;
  for (std::size_t i = k + 1; i <= n_a; ++i) clique.push_back(va(i));
  for (std::size_t i = l + 1; i <= n_b; ++i) clique.push_back(vb(i));
  for (std::size_t x = 0; x < clique.size(); ++x) {
    for (std::size_t y = x + 1; y < clique.size(); ++y) edges.emplace_back(clique[x], clique[y]);
  }
  edges.emplace_back(va(1), vb(1));
  edges.emplace_back(va(k), va(k + 1));
  edges.emplace_back(vb(l), vb(l + 1));

  LBInstance out;
  out.radius = radius;
  out.instance = Instance::unlabeled(Graph::from_edges(n_a + n_b, edges));
  std::vector<Identifier> ids(sorted_a);
  ids.insert(ids.end(), sorted_b.begin(), sorted_b.end());
  out.instance.ids = std::move(ids);
  out.instance.selected[va(n_a)] = 1;
  out.instance.validate();
  for (std::size_t i = 1; i <= k; ++i) out.a_path.push_back(va(i));
  for (std::size_t i = 1; i <= l; ++i) out.b_path.push_back(vb(i));
  return out;
}

SplicedInstance connect_pair(const LBInstance& x, const LBInstance& y) {
  const auto offset = static_cast<Vertex>(x.instance.size());
  const Vertex ax = x.a1();
  const Vertex bx = x.b1();
  const Vertex ay = y.a1() + offset;
  const Vertex by = y.b1() + offset;

  std::vector<Edge> edges;
  for (auto e : x.instance.graph.edges()) {
    if (e == Edge{std::min(ax, bx), std::max(ax, bx)}) continue;
    edges.push_back(e);
  }
  const Edge removed_y{std::min(ay, by), std::max(ay, by)};
  for (auto [u, v] : y.instance.graph.edges()) {
    Edge shifted{u + offset, v + offset};
    if (shifted == removed_y) continue;
    edges.push_back(shifted);
  }
  edges.emplace_back(bx, ay);
  edges.emplace_back(by, ax);

  SplicedInstance out;
  out.offset = offset;
  out.splice_points = {ax, bx, ay, by};
  out.instance = Instance::unlabeled(Graph::from_edges(offset + y.instance.size(), edges));
  for (Vertex v = 0; v < x.instance.size(); ++v) out.instance.selected[v] = x.instance.selected[v];
  for (Vertex v = 0; v < y.instance.size(); ++v) out.instance.selected[v + offset] = y.instance.selected[v];
  if (x.instance.ids && y.instance.ids) {
    std::vector<Identifier> ids(*x.instance.ids);
    ids.insert(ids.end(), y.instance.ids->begin(), y.instance.ids->end());
    out.instance.ids = std::move(ids);
  } else if (x.instance.ids || y.instance.ids) {
    throw std::invalid_argument("cannot splice an anonymous instance with an identified one");
  }
  out.instance.validate();
  return out;
}

}  // namespace lcert
