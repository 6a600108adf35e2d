// Anonymous schemes whose certificate is the distance to the selected vertex
// (or that distance modulo three on trees).

#include <memory>
#include <string>

#include "internal.hpp"

namespace lcert::detail {
namespace {

Vertex amos_source(const Instance& inst, std::string_view scheme) {
  const std::size_t count = inst.selected_count();
  if (count > 1) {
    throw ProverError(std::string(scheme) + " prover needs at most one selected vertex, instance has " +
                      std::to_string(count));
  }
  return inst.first_selected().value_or(0);
}

class TreeScheme final : public Scheme {
 public:
  std::string name() const override { return "tree"; }
  std::size_t radius() const override { return 1; }
  bool anonymous() const override { return true; }
  std::size_t size_bound(const SizeContext&) const override { return 2; }

  Assignment prove(const Instance& inst) const override {
    const auto dist = bfs_distances(inst.graph, amos_source(inst, "tree"));
    Assignment p(inst.size());
    for (Vertex v = 0; v < inst.size(); ++v) p[v] = Certificate::from_uint(dist[v] % 3, 2);
    return p;
  }

  // Each edge is oriented from the endpoint labelled c+1 to the one labelled
  // c (mod 3). Selected vertices are sinks; a non-selected vertex has at most
  // one outgoing edge. On a tree that leaves room for exactly one sink.
  Decision verify(const View& view) const override {
    const auto label = integer_labels(view);
    const std::uint64_t c = label[0];
    if (c > 2) return Decision::reject("malformed");
    const std::uint64_t up = (c + 1) % 3;
    const std::uint64_t down = (c + 2) % 3;
    std::size_t down_count = 0;
    for (auto u : view.neighbors(0)) {
      if (label[u] > 2) return Decision::reject("malformed-neighbor");
      if (label[u] == down) {
        ++down_count;
      } else if (label[u] != up) {
        return Decision::reject("equal-neighbor");
      }
    }
    if (view.is_selected(0) && down_count != 0) return Decision::reject("selected-not-sink");
    if (down_count > 1) return Decision::reject("two-parents");
    return Decision::ok();
  }
};

class ChordalScheme final : public Scheme {
 public:
  std::string name() const override { return "chordal"; }
  std::size_t radius() const override { return 2; }
  bool anonymous() const override { return true; }
  std::size_t size_bound(const SizeContext& ctx) const override { return bits_for(ctx.diameter); }

  Assignment prove(const Instance& inst) const override {
    const auto dist = bfs_distances(inst.graph, amos_source(inst, "chordal"));
    Assignment p(inst.size());
    for (Vertex v = 0; v < inst.size(); ++v) p[v] = Certificate::minimal(dist[v]);
    return p;
  }

  Decision verify(const View& view) const override {
    const auto P = integer_labels(view);
    const std::uint64_t own = P[0];
    const auto nbrs = view.neighbors(0);
    if (view.is_selected(0) && own != 0) return Decision::reject("selected-nonzero");
    if (own == 0) {
      for (auto y : nbrs) {
        if (P[y] != 1) return Decision::reject("zero-neighbor");
      }
      return Decision::ok();
    }

    // R1
    bool has_lower = false;
    for (auto u : nbrs) {
      if (P[u] < own) has_lower = true;
      const std::uint64_t gap = P[u] > own ? P[u] - own : own - P[u];
      if (gap > 1) return Decision::reject("R1");
    }
    if (!has_lower) return Decision::reject("R1");

    // R2
    std::vector<std::uint32_t> lower;
    std::vector<std::uint32_t> level;
    for (auto u : nbrs) {
      if (P[u] == own - 1) lower.push_back(u);
      if (P[u] == own) level.push_back(u);
    }
    for (std::size_t i = 0; i < lower.size(); ++i) {
      for (std::size_t j = i + 1; j < lower.size(); ++j) {
        if (!view.adjacent(lower[i], lower[j])) return Decision::reject("R2");
      }
    }

    // R3
    for (auto y : level) {
      bool y_sees_far_lower = false;
      for (auto z : view.neighbors(y)) {
        if (z != 0 && P[z] == own - 1 && !view.adjacent(0, z)) {
          y_sees_far_lower = true;
          break;
        }
      }
      if (!y_sees_far_lower) continue;
      for (auto u : lower) {
        if (!view.adjacent(u, y)) return Decision::reject("R3");
      }
    }
    return Decision::ok();
  }
};

class GridScheme final : public Scheme {
 public:
  std::string name() const override { return "grid"; }
  std::size_t radius() const override { return 1; }
  bool anonymous() const override { return true; }
  std::size_t size_bound(const SizeContext& ctx) const override { return bits_for(ctx.diameter); }

  Assignment prove(const Instance& inst) const override {
    const auto dist = bfs_distances(inst.graph, amos_source(inst, "grid"));
    Assignment p(inst.size());
    for (Vertex v = 0; v < inst.size(); ++v) p[v] = Certificate::minimal(dist[v]);
    return p;
  }

  Decision verify(const View& view) const override {
    const auto P = integer_labels(view);
    const std::uint64_t k = P[0];
    const auto nbrs = view.neighbors(0);
    if (view.is_selected(0) && k != 0) return Decision::reject("1-selected-nonzero");
    if (k == 0) {
      for (auto y : nbrs) {
        if (P[y] != 1) return Decision::reject("2-zero-neighbor");
      }
    }
    std::size_t zeros = 0;
    for (std::size_t w = 0; w < view.size(); ++w) zeros += P[w] == 0 ? 1 : 0;
    if (zeros >= 2) return Decision::reject("3-two-zeros");
    std::size_t lower = 0;
    for (auto y : nbrs) {
      const bool below = k > 0 && P[y] == k - 1;
      if (!below && P[y] != k + 1) return Decision::reject("4-neighbor-gap");
      lower += below ? 1 : 0;
    }
    if (k > 0 && lower == 0) return Decision::reject("5-no-lower");
    if (lower > 2) return Decision::reject("6-three-lower");
    return Decision::ok();
  }
};

}  // namespace

SchemePtr make_tree() { return std::make_shared<TreeScheme>(); }
SchemePtr make_chordal() { return std::make_shared<ChordalScheme>(); }
SchemePtr make_grid() { return std::make_shared<GridScheme>(); }

}  // namespace lcert::detail
