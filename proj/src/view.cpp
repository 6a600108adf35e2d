#include "lcert/view.hpp"

#include <functional>
#include <stdexcept>

namespace lcert {

Ball extract_ball(const Instance& inst, Vertex center, std::size_t radius) {
  const Graph& g = inst.graph;
  if (center >= g.vertex_count()) throw std::out_of_range("ball centre out of range");

  // Global-to-local index, reset to kAbsent for the members before returning.
  constexpr std::uint32_t kAbsent = UINT32_MAX;
  thread_local std::vector<std::uint32_t> local;
  if (local.size() < g.vertex_count()) local.resize(g.vertex_count(), kAbsent);

  Ball out;
  out.members.push_back(center);
  out.view.distance.push_back(0);
  local[center] = 0;
  for (std::size_t head = 0; head < out.members.size(); ++head) {
    const std::uint32_t d = out.view.distance[head];
    if (d == radius) continue;
    for (Vertex w : g.neighbors(out.members[head])) {
      if (local[w] == kAbsent) {
        local[w] = static_cast<std::uint32_t>(out.members.size());
        out.members.push_back(w);
        out.view.distance.push_back(d + 1);
      }
    }
  }

  const std::size_t size = out.members.size();
  out.view.adjacency.resize(size);
  out.view.selected.resize(size);
  // Scanning i in increasing order and appending i to each neighbour's list
  // leaves every list sorted; adjacency is symmetric.
  for (std::uint32_t i = 0; i < size; ++i) out.view.adjacency[i].reserve(g.degree(out.members[i]));
  for (std::uint32_t i = 0; i < size; ++i) {
    const Vertex v = out.members[i];
    out.view.selected[i] = inst.selected[v];
    for (Vertex w : g.neighbors(v)) {
      if (local[w] != kAbsent) out.view.adjacency[local[w]].push_back(i);
    }
  }
  for (Vertex v : out.members) local[v] = kAbsent;
  if (inst.ids) {
    std::vector<Identifier> ids(size);
    for (std::size_t i = 0; i < size; ++i) ids[i] = (*inst.ids)[out.members[i]];
    out.view.ids = std::move(ids);
  }
  return out;
}

View ball(const Instance& inst, Vertex center, std::size_t radius, const Assignment& certs) {
  if (certs.size() != inst.size()) throw std::invalid_argument("assignment does not cover the instance");
  Ball b = extract_ball(inst, center, radius);
  b.view.certs.reserve(b.members.size());
  for (Vertex v : b.members) b.view.certs.push_back(certs[v]);
  return std::move(b.view);
}

bool views_isomorphic(const View& a, const View& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return false;
  if (a.ids.has_value() != b.ids.has_value()) return false;

  auto compatible = [&](std::uint32_t x, std::uint32_t y) {
    if (a.distance[x] != b.distance[y] || a.adjacency[x].size() != b.adjacency[y].size()) return false;
    if (a.selected[x] != b.selected[y]) return false;
    if (a.certs.size() == n && b.certs.size() == n && a.certs[x] != b.certs[y]) return false;
    if (a.ids && (*a.ids)[x] != (*b.ids)[y]) return false;
    return true;
  };

  std::vector<std::int64_t> map(n, -1);
  std::vector<std::uint8_t> used(n, 0);
  // Local indices of `a` are placed in BFS order.
  std::function<bool(std::uint32_t)> extend = [&](std::uint32_t x) -> bool {
    if (x == n) return true;
    for (std::uint32_t y = 0; y < n; ++y) {
      if (used[y] || !compatible(x, y)) continue;
      bool ok = true;
      for (std::uint32_t nx : a.adjacency[x]) {
        if (nx < x && !b.adjacent(y, static_cast<std::uint32_t>(map[nx]))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      for (std::uint32_t px = 0; px < x && ok; ++px) {
        if (!a.adjacent(x, px) && b.adjacent(y, static_cast<std::uint32_t>(map[px]))) ok = false;
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      if (extend(x + 1)) return true;
      used[y] = 0;
      map[x] = -1;
    }
    return false;
  };
  if (n == 0) return true;
  if (!compatible(0, 0)) return false;
  map[0] = 0;
  used[0] = 1;
  return extend(1);
}

}  // namespace lcert
