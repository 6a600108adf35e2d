// Leader identifier split into (position, bit) pairs, one pair per vertex.
// A vertex rebuilds the identifier from its closed neighbourhood and checks
// that every neighbour rebuilt the same one.

#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "internal.hpp"

namespace lcert {

std::size_t DenseCert::position_bits(std::size_t id_bit_length) { return bits_for(id_bit_length - 1); }

Certificate DenseCert::encode(std::size_t id_bit_length) const {
  return BitWriter{}.put(position, position_bits(id_bit_length)).put(bit ? 1 : 0, 1).finish();
}

CoverageResult dense_assign_positions(const Graph& g, std::size_t id_bit_length, std::size_t retry_limit,
                                      std::uint64_t seed) {
  CoverageResult out;
  out.positions.resize(g.vertex_count());
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(id_bit_length - 1));
  while (out.attempts < retry_limit) {
    ++out.attempts;
    for (auto& p : out.positions) p = pick(rng);
    if (coverage_misses(g, out.positions, id_bit_length) == 0) {
      out.success = true;
      break;
    }
  }
  return out;
}

std::size_t coverage_misses(const Graph& g, std::span<const std::uint32_t> positions, std::size_t id_bit_length) {
  std::size_t misses = 0;
  std::vector<std::uint8_t> seen(id_bit_length);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t covered = 0;
    auto mark = [&](Vertex u) {
      if (!seen[positions[u]]) {
        seen[positions[u]] = 1;
        ++covered;
      }
    };
    mark(v);
    for (Vertex u : g.neighbors(v)) mark(u);
    misses += id_bit_length - covered;
  }
  return misses;
}

namespace detail {
namespace {

class DenseScheme final : public Scheme {
 public:
  DenseScheme(std::size_t id_bit_length, std::size_t retry_limit, std::uint64_t seed)
      : bits_(id_bit_length), retry_limit_(retry_limit), seed_(seed), pos_bits_(DenseCert::position_bits(id_bit_length)) {
    if (id_bit_length == 0 || id_bit_length > 63) throw std::invalid_argument("dense scheme needs 1..63 identifier bits");
  }

  std::string name() const override { return "dense"; }
  std::size_t radius() const override { return 2; }
  bool anonymous() const override { return false; }
  std::size_t size_bound(const SizeContext&) const override { return pos_bits_ + 1; }

  std::vector<Certificate> alphabet(std::size_t bits) const override {
    auto out = Scheme::alphabet(bits);
    if (bits > 0) out.insert(out.begin(), DenseCert::marker());
    return out;
  }

  Assignment prove(const Instance& inst) const override {
    if (!inst.ids) throw ProverError("dense scheme needs identifiers");
    const std::size_t count = inst.selected_count();
    if (count > 1) throw ProverError("dense prover needs at most one selected vertex");
    if (count == 0) return Assignment(inst.size(), DenseCert::marker());
    const std::uint64_t payload = dense_payload((*inst.ids)[*inst.first_selected()]);
    if (bits_ < 64 && (payload >> bits_) != 0) {
      throw ProverError("leader identifier does not fit in " + std::to_string(bits_) + " bits");
    }
    const auto cover = dense_assign_positions(inst.graph, bits_, retry_limit_, seed_);
    if (!cover.success) {
      throw ProverError("position coverage failed after " + std::to_string(cover.attempts) + " draws");
    }
    Assignment p(inst.size());
    for (Vertex v = 0; v < inst.size(); ++v) {
      const std::uint32_t i = cover.positions[v];
      p[v] = DenseCert{i, ((payload >> i) & 1U) != 0}.encode(bits_);
    }
    return p;
  }

  Decision verify(const View& view) const override {
    if (!view.ids) return Decision::reject("needs-identifiers");
    const std::size_t n = view.size();
    std::vector<Code> code(n);
    for (std::size_t i = 0; i < n; ++i) {
      code[i] = parse(view.certs[i]);
      if (code[i].kind == Kind::malformed && view.distance[i] <= 1) {
        return Decision::reject(i == 0 ? "malformed" : "malformed-neighbor");
      }
    }
    const auto nbrs = view.neighbors(0);
    if (code[0].kind == Kind::marker) {
      if (view.is_selected(0)) return Decision::reject("selected-under-marker");
      for (auto u : nbrs) {
        if (code[u].kind != Kind::marker) return Decision::reject("marker-mix");
      }
      return Decision::ok();
    }
    for (auto u : nbrs) {
      if (code[u].kind == Kind::marker) return Decision::reject("marker-mix");
    }
    const auto own = rebuild(view, code, 0);
    if (!own) return Decision::reject("incomplete-identifier");
    for (auto u : nbrs) {
      const auto theirs = rebuild(view, code, u);
      if (!theirs || *theirs != *own) return Decision::reject("identifier-mismatch");
    }
    const bool mine = dense_payload((*view.ids)[0]) == *own;
    if (view.is_selected(0) && !mine) return Decision::reject("selected-not-leader");
    if (!view.is_selected(0) && mine) return Decision::reject("leader-not-selected");
    return Decision::ok();
  }

 private:
  enum class Kind : std::uint8_t { pair, marker, malformed };
  struct Code {
    Kind kind = Kind::malformed;
    std::uint32_t position = 0;
    bool bit = false;
  };

  Code parse(const Certificate& c) const {
    if (c.empty()) return {Kind::marker};
    if (c.size() != pos_bits_ + 1) return {};
    BitReader in(c);
    const auto pos = *in.take(pos_bits_);
    if (pos >= bits_) return {};
    return {Kind::pair, static_cast<std::uint32_t>(pos), *in.take(1) != 0};
  }

  // Identifier rebuilt from the closed neighbourhood of local vertex x.
  std::optional<std::uint64_t> rebuild(const View& view, const std::vector<Code>& code, std::uint32_t x) const {
    std::uint64_t value = 0;
    std::uint64_t seen = 0;
    auto take = [&](std::uint32_t w) {
      const Code& c = code[w];
      if (c.kind != Kind::pair) return c.kind == Kind::marker;
      const std::uint64_t flag = 1ULL << c.position;
      const std::uint64_t bit = c.bit ? flag : 0;
      if ((seen & flag) && (value & flag) != bit) return false;
      seen |= flag;
      value |= bit;
      return true;
    };
    if (!take(x)) return std::nullopt;
    for (auto w : view.neighbors(x)) {
      if (!take(w)) return std::nullopt;
    }
    const std::uint64_t full = bits_ == 64 ? ~0ULL : (1ULL << bits_) - 1;
    if (seen != full) return std::nullopt;
    return value;
  }

  std::size_t bits_;
  std::size_t retry_limit_;
  std::uint64_t seed_;
  std::size_t pos_bits_;
};

}  // namespace

SchemePtr make_dense(std::size_t id_bit_length, std::size_t retry_limit, std::uint64_t seed) {
  return std::make_shared<DenseScheme>(id_bit_length, retry_limit, seed);
}

}  // namespace detail
}  // namespace lcert
