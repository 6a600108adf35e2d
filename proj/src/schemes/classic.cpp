// Spanning-tree leader certification: leader identifier, parent identifier
// and tree distance at every vertex. Also the truncated strawman used by
// the lower-bound pipeline.

#include <memory>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace lcert {

Certificate ClassicCert::encode(std::size_t id_bits, std::size_t dist_bits) const {
  return BitWriter{}.put(leader_id, id_bits).put(parent_id.value_or(0), id_bits).put(dist, dist_bits).finish();
}

std::optional<ClassicCert> ClassicCert::decode(const Certificate& c, std::size_t id_bits, std::size_t dist_bits) {
  if (c.size() != 2 * id_bits + dist_bits) return std::nullopt;
  BitReader in(c);
  ClassicCert out;
  out.leader_id = *in.take(id_bits);
  if (const auto parent = *in.take(id_bits); parent != 0) out.parent_id = parent;
  out.dist = *in.take(dist_bits);
  return out;
}

namespace detail {

BfsTree bfs_tree(const Graph& g, Vertex root) {
  BfsTree t;
  t.dist = bfs_distances(g, root);
  t.parent.assign(g.vertex_count(), root);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (v == root) continue;
    for (Vertex u : g.neighbors(v)) {
      if (t.dist[u] + 1 == t.dist[v]) {
        t.parent[v] = u;
        break;
      }
    }
  }
  return t;
}

std::vector<std::uint64_t> integer_labels(const View& view) {
  std::vector<std::uint64_t> out(view.size());
  for (std::size_t i = 0; i < view.size(); ++i) out[i] = view.certs[i].value();
  return out;
}

namespace {

Vertex unique_leader(const Instance& inst, std::string_view scheme) {
  if (!inst.ids) throw ProverError(std::string(scheme) + " scheme needs identifiers");
  if (inst.selected_count() != 1) {
    throw ProverError(std::string(scheme) + " scheme certifies a unique leader; instance has " +
                      std::to_string(inst.selected_count()) + " selected vertices");
  }
  return *inst.first_selected();
}

class ClassicScheme final : public Scheme {
 public:
  ClassicScheme(std::size_t id_bits, std::size_t dist_bits) : id_bits_(id_bits), dist_bits_(dist_bits) {}

  std::string name() const override { return "classic"; }
  std::size_t radius() const override { return 1; }
  bool anonymous() const override { return false; }
  std::size_t size_bound(const SizeContext&) const override { return 2 * id_bits_ + dist_bits_; }

  Assignment prove(const Instance& inst) const override {
    const Vertex leader = unique_leader(inst, "classic");
    const auto& ids = *inst.ids;
    const BfsTree tree = bfs_tree(inst.graph, leader);
    Assignment p(inst.size());
    for (Vertex v = 0; v < inst.size(); ++v) {
      ClassicCert c{ids[leader], std::nullopt, tree.dist[v]};
      if (v != leader) c.parent_id = ids[tree.parent[v]];
      p[v] = c.encode(id_bits_, dist_bits_);
    }
    return p;
  }

  Decision verify(const View& view) const override {
    if (!view.ids) return Decision::reject("needs-identifiers");
    const auto& ids = *view.ids;
    const auto own = ClassicCert::decode(view.certs[0], id_bits_, dist_bits_);
    if (!own) return Decision::reject("malformed");
    for (auto u : view.neighbors(0)) {
      const auto c = ClassicCert::decode(view.certs[u], id_bits_, dist_bits_);
      if (!c) return Decision::reject("malformed-neighbor");
      if (c->leader_id != own->leader_id) return Decision::reject("leader-mismatch");
    }
    if (view.is_selected(0)) {
      if (ids[0] != own->leader_id || own->parent_id || own->dist != 0) return Decision::reject("leader-claim");
      return Decision::ok();
    }
    if (!own->parent_id) return Decision::reject("missing-parent");
    for (auto u : view.neighbors(0)) {
      if (ids[u] != *own->parent_id) continue;
      const auto c = ClassicCert::decode(view.certs[u], id_bits_, dist_bits_);
      if (c->dist + 1 == own->dist) return Decision::ok();
    }
    return Decision::reject("parent");
  }

 private:
  std::size_t id_bits_;
  std::size_t dist_bits_;
};

// Classic certificate with every field reduced modulo 2^kept_bits, plus a
// one-bit "has parent" flag. Complete on every graph with a unique leader;
// deliberately unsound.
class TruncatedClassicScheme final : public Scheme {
 public:
  explicit TruncatedClassicScheme(std::size_t kept_bits) : kept_(kept_bits), mask_((1ULL << kept_bits) - 1) {
    if (kept_bits == 0 || kept_bits > 20) throw std::invalid_argument("truncation must keep 1..20 bits");
  }

  std::string name() const override { return "truncated"; }
  std::size_t radius() const override { return 1; }
  bool anonymous() const override { return false; }
  std::size_t size_bound(const SizeContext&) const override { return 3 * kept_ + 1; }

  Assignment prove(const Instance& inst) const override {
    const Vertex leader = unique_leader(inst, "truncated");
    const auto& ids = *inst.ids;
    const BfsTree tree = bfs_tree(inst.graph, leader);
    Assignment p(inst.size());
    for (Vertex v = 0; v < inst.size(); ++v) {
      const bool has_parent = v != leader;
      p[v] = encode({ids[leader] & mask_, has_parent, has_parent ? ids[tree.parent[v]] & mask_ : 0,
                     tree.dist[v] & mask_});
    }
    return p;
  }

  Decision verify(const View& view) const override {
    if (!view.ids) return Decision::reject("needs-identifiers");
    const auto& ids = *view.ids;
    std::vector<Fields> f(view.size());
    for (std::uint32_t i = 0; i < view.size(); ++i) {
      const auto parsed = decode(view.certs[i]);
      if (!parsed) return Decision::reject(i == 0 ? "malformed" : "malformed-neighbor");
      f[i] = *parsed;
    }
    for (auto u : view.neighbors(0)) {
      if (f[u].leader != f[0].leader) return Decision::reject("leader-mismatch");
    }
    if (view.is_selected(0)) {
      if ((ids[0] & mask_) != f[0].leader || f[0].has_parent || f[0].dist != 0) {
        return Decision::reject("leader-claim");
      }
      return Decision::ok();
    }
    if (!f[0].has_parent) return Decision::reject("missing-parent");
    for (auto u : view.neighbors(0)) {
      if ((ids[u] & mask_) == f[0].parent && ((f[u].dist + 1) & mask_) == f[0].dist) return Decision::ok();
    }
    return Decision::reject("parent");
  }

 private:
  struct Fields {
    std::uint64_t leader = 0;
    bool has_parent = false;
    std::uint64_t parent = 0;
    std::uint64_t dist = 0;
  };

  Certificate encode(const Fields& f) const {
    return BitWriter{}.put(f.leader, kept_).put(f.has_parent ? 1 : 0, 1).put(f.parent, kept_).put(f.dist, kept_).finish();
  }
  std::optional<Fields> decode(const Certificate& c) const {
    if (c.size() != 3 * kept_ + 1) return std::nullopt;
    BitReader in(c);
    Fields f;
    f.leader = *in.take(kept_);
    f.has_parent = *in.take(1) != 0;
    f.parent = *in.take(kept_);
    f.dist = *in.take(kept_);
    return f;
  }

  std::size_t kept_;
  std::uint64_t mask_;
};

// Every vertex gets the same all-zero certificate; the verifier only checks
// that its ball agrees. Complete on everything, sound on nothing.
class ConstantScheme final : public Scheme {
 public:
  explicit ConstantScheme(std::size_t bits) : cert_(Certificate::from_uint(0, bits)) {}

  std::string name() const override { return "constant"; }
  std::size_t radius() const override { return 1; }
  bool anonymous() const override { return true; }
  std::size_t size_bound(const SizeContext&) const override { return cert_.size(); }
  Assignment prove(const Instance& inst) const override { return Assignment(inst.size(), cert_); }
  Decision verify(const View& view) const override {
    for (const auto& c : view.certs) {
      if (c != cert_) return Decision::reject("not-constant");
    }
    return Decision::ok();
  }

 private:
  Certificate cert_;
};

}  // namespace

SchemePtr make_classic(std::size_t id_bits, std::size_t dist_bits) {
  return std::make_shared<ClassicScheme>(id_bits, dist_bits);
}
SchemePtr make_truncated_classic(std::size_t kept_bits) {
  return std::make_shared<TruncatedClassicScheme>(kept_bits);
}
SchemePtr make_constant(std::size_t bits) { return std::make_shared<ConstantScheme>(bits); }

}  // namespace detail
}  // namespace lcert
