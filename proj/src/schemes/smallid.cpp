// Spanning tree rooted at the minimum identifier, with a per-vertex count of
// selected vertices in its subtree. The count is one bit, so the root sees
// at most one selected vertex in total.

#include <algorithm>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace lcert {

std::string_view to_string(CountingRule rule) {
  switch (rule) {
    case CountingRule::as_written:
      return "as-written";
    case CountingRule::children_only:
      return "children-only";
    case CountingRule::min_id_parent:
      return "min-id-parent";
  }
  return "?";
}

CountingRule parse_counting_rule(std::string_view text) {
  for (auto rule : {CountingRule::as_written, CountingRule::children_only, CountingRule::min_id_parent}) {
    if (text == to_string(rule)) return rule;
  }
  throw std::invalid_argument("unknown counting rule '" + std::string(text) + "'");
}

Certificate SmallIdCert::encode(std::size_t id_bits, std::size_t dist_bits) const {
  return BitWriter{}.put(id, id_bits).put(d, dist_bits).put(s, 1).finish();
}

std::optional<SmallIdCert> SmallIdCert::decode(const Certificate& c, std::size_t id_bits, std::size_t dist_bits) {
  if (c.size() != id_bits + dist_bits + 1) return std::nullopt;
  BitReader in(c);
  SmallIdCert out;
  out.id = *in.take(id_bits);
  out.d = *in.take(dist_bits);
  out.s = *in.take(1);
  return out;
}

namespace detail {
namespace {

class SmallIdScheme final : public Scheme {
 public:
  SmallIdScheme(std::uint64_t c_id, std::size_t dist_bits, CountingRule rule)
      : id_bits_(bits_for(c_id)), dist_bits_(dist_bits), rule_(rule) {
    if (c_id == 0) throw std::invalid_argument("smallid scheme needs c_id >= 1");
  }

  std::string name() const override { return "smallid"; }
  std::size_t radius() const override { return rule_ == CountingRule::min_id_parent ? 2 : 1; }
  bool anonymous() const override { return false; }
  std::size_t size_bound(const SizeContext&) const override { return id_bits_ + dist_bits_ + 1; }

  Assignment prove(const Instance& inst) const override {
    if (!inst.ids) throw ProverError("smallid scheme needs identifiers");
    if (inst.selected_count() > 1) throw ProverError("smallid prover needs at most one selected vertex");
    const auto& ids = *inst.ids;
    const Graph& g = inst.graph;
    Vertex root = 0;
    for (Vertex v = 1; v < inst.size(); ++v) {
      if (ids[v] < ids[root]) root = v;
    }
    if ((ids[root] >> id_bits_) != 0) {
      throw ProverError("minimum identifier " + std::to_string(ids[root]) + " exceeds the identifier field");
    }
    const auto dist = bfs_distances(g, root);

    // Implied parent: the lower neighbour with the smallest identifier.
    std::vector<Vertex> parent(inst.size(), root);
    for (Vertex v = 0; v < inst.size(); ++v) {
      Identifier best = std::numeric_limits<Identifier>::max();
      for (Vertex u : g.neighbors(v)) {
        if (dist[u] + 1 == dist[v] && ids[u] < best) {
          best = ids[u];
          parent[v] = u;
        }
      }
    }
    std::vector<Vertex> order(inst.size());
    for (Vertex v = 0; v < inst.size(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] > dist[b]; });
    std::vector<std::uint64_t> count(inst.size(), 0);
    for (Vertex v : order) {
      count[v] += inst.is_selected(v) ? 1 : 0;
      if (v != root) count[parent[v]] += count[v];
    }

    Assignment p(inst.size());
    for (Vertex v = 0; v < inst.size(); ++v) {
      p[v] = SmallIdCert{ids[root], dist[v], count[v]}.encode(id_bits_, dist_bits_);
    }
    return p;
  }

  Decision verify(const View& view) const override {
    if (!view.ids) return Decision::reject("needs-identifiers");
    const auto& ids = *view.ids;
    // Certificates at distance 2 are read only by the min-id-parent rule.
    std::vector<std::optional<SmallIdCert>> c(view.size());
    for (std::uint32_t i = 0; i < view.size(); ++i) {
      c[i] = SmallIdCert::decode(view.certs[i], id_bits_, dist_bits_);
      if (!c[i] && view.distance[i] <= 1) return Decision::reject(i == 0 ? "malformed" : "malformed-neighbor");
    }
    const SmallIdCert& own = *c[0];
    const auto nbrs = view.neighbors(0);
    for (auto u : nbrs) {
      if (c[u]->id != own.id) return Decision::reject("root-mismatch");
    }
    if (own.d == 0 && ids[0] != own.id) return Decision::reject("false-root");
    if (ids[0] == own.id && own.d != 0) return Decision::reject("root-distance");

    std::size_t lower = 0;
    for (auto u : nbrs) {
      if (own.d > 0 && c[u]->d == own.d - 1) {
        ++lower;
      } else if (c[u]->d != own.d && c[u]->d != own.d + 1) {
        return Decision::reject("layer-gap");
      }
    }
    if (own.d > 0) {
      if (lower == 0) return Decision::reject("no-parent");
      if (lower > 1 && rule_ != CountingRule::min_id_parent) return Decision::reject("parent-not-unique");
    }

    std::uint64_t sum = 0;
    for (auto w : nbrs) {
      const SmallIdCert& cw = *c[w];
      switch (rule_) {
        case CountingRule::as_written:
          if (cw.d >= own.d) sum += cw.s;
          break;
        case CountingRule::children_only:
          if (cw.d == own.d + 1) sum += cw.s;
          break;
        case CountingRule::min_id_parent:
          if (cw.d == own.d + 1 && implied_parent(view, c, w) == 0) sum += cw.s;
          break;
      }
    }
    if (view.is_selected(0)) sum += 1;
    if (own.s != sum) return Decision::reject(view.is_selected(0) ? "selected-count" : "count");
    return Decision::ok();
  }

 private:
  // Lower neighbour of w with the smallest identifier. Every neighbour of a
  // distance-1 vertex lies in the radius-2 view.
  static std::uint32_t implied_parent(const View& view, const std::vector<std::optional<SmallIdCert>>& c,
                                      std::uint32_t w) {
    const auto& ids = *view.ids;
    std::uint32_t best = 0;
    bool found = false;
    for (auto x : view.neighbors(w)) {
      if (!c[x] || c[x]->d + 1 != c[w]->d) continue;
      if (!found || ids[x] < ids[best]) {
        best = x;
        found = true;
      }
    }
    return best;
  }

  std::size_t id_bits_;
  std::size_t dist_bits_;
  CountingRule rule_;
};

}  // namespace

SchemePtr make_smallid(std::uint64_t c_id, std::size_t dist_bits, CountingRule rule) {
  return std::make_shared<SmallIdScheme>(c_id, dist_bits, rule);
}

}  // namespace detail
}  // namespace lcert
