#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "lcert/certification.hpp"
#include "lcert/generators.hpp"
#include "lcert/schemes.hpp"
#include "lcert/soundness.hpp"

using namespace lcert;

namespace {

std::vector<Identifier> sequential(std::size_t n) {
  std::vector<Identifier> ids(n);
  std::iota(ids.begin(), ids.end(), Identifier{1});
  return ids;
}

Instance labeled(Graph g, std::initializer_list<Vertex> selected, std::optional<std::vector<Identifier>> ids = {}) {
  Instance inst = Instance::unlabeled(std::move(g));
  for (Vertex v : selected) inst.selected[v] = 1;
  inst.ids = std::move(ids);
  return inst;
}

Assignment integers(std::initializer_list<std::uint64_t> values, std::size_t width) {
  Assignment p;
  for (auto v : values) p.push_back(Certificate::from_uint(v, width));
  return p;
}

SchemePtr fitted(SchemeConfig cfg, const Instance& inst) { return make_scheme(fit_config(std::move(cfg), inst)); }

SchemePtr named(const std::string& name) {
  SchemeConfig cfg;
  cfg.name = name;
  return make_scheme(cfg);
}

std::size_t rejecting(const Verdict& v) {
  std::size_t out = 0;
  for (auto a : v.accepts) out += a ? 0 : 1;
  return out;
}

}  // namespace

// ---- classic ----

TEST(ClassicTest, StarWithSelectedCentre) {
  const Instance inst = labeled(gen_star(4), {0}, sequential(5));
  SchemeConfig cfg;
  cfg.name = "classic";
  EXPECT_TRUE(check_completeness(*fitted(cfg, inst), inst));
}

TEST(ClassicTest, HonestHalvesDisagreeAtBoundary) {
  const Instance inst = labeled(gen_path(4), {0, 3}, sequential(4));
  SchemeConfig cfg;
  cfg.name = "classic";
  const auto scheme = fitted(cfg, inst);
  const std::size_t ib = *fit_config(cfg, inst).id_bits;
  const std::size_t db = *fit_config(cfg, inst).dist_bits;
  const Assignment p{ClassicCert{1, std::nullopt, 0}.encode(ib, db), ClassicCert{1, 1, 1}.encode(ib, db),
                     ClassicCert{4, 4, 1}.encode(ib, db), ClassicCert{4, std::nullopt, 0}.encode(ib, db)};
  const Verdict v = run_verifier(*scheme, inst, p);
  EXPECT_FALSE(v.global);
  EXPECT_TRUE(v.accepts[0]);
  EXPECT_EQ(v.reasons[1], "leader-mismatch");
  EXPECT_EQ(v.reasons[2], "leader-mismatch");
  EXPECT_TRUE(v.accepts[3]);
}

TEST(ClassicTest, FalseRootClaimRejected) {
  const Instance inst = labeled(gen_path(3), {0}, sequential(3));
  SchemeConfig cfg;
  cfg.name = "classic";
  cfg = fit_config(cfg, inst);
  const auto scheme = make_scheme(cfg);
  Assignment p = scheme->prove(inst);
  p[2] = ClassicCert{1, std::nullopt, 0}.encode(*cfg.id_bits, *cfg.dist_bits);
  const Verdict v = run_verifier(*scheme, inst, p);
  EXPECT_FALSE(v.accepts[2]);
  EXPECT_EQ(v.reasons[2], "missing-parent");
}

TEST(ClassicTest, CertRoundTripAndProverErrors) {
  const ClassicCert c{5, 3, 2};
  const auto back = ClassicCert::decode(c.encode(3, 2), 3, 2);
  ASSERT_TRUE(back);
  EXPECT_EQ(back->leader_id, 5u);
  EXPECT_EQ(back->parent_id, 3u);
  EXPECT_EQ(back->dist, 2u);
  EXPECT_FALSE(ClassicCert::decode(c.encode(3, 2), 3, 3));
  const Instance none = labeled(gen_path(3), {}, sequential(3));
  SchemeConfig cfg;
  cfg.name = "classic";
  EXPECT_THROW(fitted(cfg, none)->prove(none), ProverError);
}

TEST(ClassicTest, SizeBoundOnPath) {
  const Instance inst = labeled(gen_path(8), {3}, sequential(8));
  SchemeConfig cfg;
  cfg.name = "classic";
  const Assignment p = fitted(cfg, inst)->prove(inst);
  // Two identifier fields of ceil(log2(9)) bits and ceil(log2(8)) distance bits.
  EXPECT_LE(max_cert_bits(p), 2 * 4 + 3u);
}

// ---- tree ----

TEST(TreeTest, PathWithSelectedEndpoint) {
  const Instance inst = labeled(gen_path(4), {0});
  const auto scheme = named("tree");
  EXPECT_TRUE(run_verifier(*scheme, inst, integers({0, 1, 2, 0}, 2)).global);
  EXPECT_EQ(scheme->prove(inst), integers({0, 1, 2, 0}, 2));
}

TEST(TreeTest, TwoSelectedEndpointsNeverAccepted) {
  const Instance inst = labeled(gen_path(3), {0, 2});
  const auto scheme = named("tree");
  for (std::uint64_t code = 0; code < 64; ++code) {
    const Assignment p = integers({code & 3, (code >> 2) & 3, (code >> 4) & 3}, 2);
    EXPECT_FALSE(run_verifier(*scheme, inst, p).global) << code;
  }
}

TEST(TreeTest, SingleVertex) {
  const Instance inst = labeled(gen_path(1), {0});
  EXPECT_TRUE(run_verifier(*named("tree"), inst, integers({0}, 2)).global);
}

TEST(TreeTest, OrientationRules) {
  const auto scheme = named("tree");
  // Centre of a star labelled 1 with two leaves labelled 0: two parents.
  const Instance star = labeled(gen_star(2), {});
  const Verdict v = run_verifier(*scheme, star, integers({1, 0, 0}, 2));
  EXPECT_EQ(v.reasons[0], "two-parents");
  const Instance sel = labeled(gen_path(2), {1});
  EXPECT_EQ(run_verifier(*scheme, sel, integers({0, 1}, 2)).reasons[1], "selected-not-sink");
  EXPECT_EQ(run_verifier(*scheme, sel, integers({1, 1}, 2)).reasons[1], "equal-neighbor");
  EXPECT_EQ(run_verifier(*scheme, sel, integers({1, 3}, 2)).reasons[1], "malformed");
}

// ---- chordal ----

TEST(ChordalSchemeTest, TreesOfCliquesAccepted) {
  const auto scheme = named("chordal");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance inst = labeled(gen_tree_of_cliques(random_clique_tree_shape(2 + seed % 13, 5, seed), seed), {});
    inst.selected[seed % inst.size()] = 1;
    EXPECT_TRUE(check_completeness(*scheme, inst)) << seed;
  }
}

TEST(ChordalSchemeTest, RuleTwoFigure) {
  // Square s-a-v-b: v sees two non-adjacent neighbours one level down.
  const Instance inst = labeled(gen_cycle(4), {0});
  const Verdict v = run_verifier(*named("chordal"), inst, integers({0, 1, 2, 1}, 2));
  EXPECT_FALSE(v.global);
  EXPECT_EQ(v.reasons[2], "R2");
}

TEST(ChordalSchemeTest, RuleThreeFigure) {
  // Pentagon s, u, v, y, z: v and y share a level, u and z sit below, no chords.
  const Instance inst = labeled(gen_cycle(5), {0});
  const Verdict v = run_verifier(*named("chordal"), inst, integers({0, 1, 2, 2, 1}, 2));
  EXPECT_FALSE(v.global);
  EXPECT_EQ(v.reasons[2], "R3");
  EXPECT_EQ(v.reasons[3], "R3");
}

TEST(ChordalSchemeTest, BasicRejections) {
  const auto scheme = named("chordal");
  const Instance inst = labeled(gen_path(3), {1});
  EXPECT_EQ(run_verifier(*scheme, inst, integers({1, 1, 1}, 2)).reasons[1], "selected-nonzero");
  EXPECT_EQ(run_verifier(*scheme, inst, integers({2, 0, 1}, 2)).reasons[1], "zero-neighbor");
  EXPECT_EQ(run_verifier(*scheme, inst, integers({3, 0, 1}, 2)).reasons[0], "R1");
  // No lower neighbour.
  const Instance free = labeled(gen_path(2), {});
  EXPECT_EQ(run_verifier(*scheme, free, integers({1, 1}, 1)).reasons[0], "R1");
}

// ---- grid ----

TEST(GridSchemeTest, TrueDistancesAccepted) {
  const GridGraph g = gen_grid(2, 3);
  const Instance inst = labeled(g.graph, {0});
  Assignment p;
  for (auto d : bfs_distances(g.graph, 0)) p.push_back(Certificate::minimal(d));
  EXPECT_TRUE(run_verifier(*named("grid"), inst, p).global);
}

TEST(GridSchemeTest, OffAxisShortcutFigure) {
  const GridGraph g = gen_grid(3, 3);
  const Instance inst = labeled(g.graph, {g.coords.at(0, 0)});
  Assignment p;
  for (auto d : bfs_distances(g.graph, 0)) p.push_back(Certificate::from_uint(d, 3));
  p[g.coords.at(2, 2)] = Certificate::from_uint(2, 3);
  const Verdict v = run_verifier(*named("grid"), inst, p);
  EXPECT_FALSE(v.accepts[g.coords.at(1, 2)]);
  EXPECT_EQ(v.reasons[g.coords.at(1, 2)], "6-three-lower");
  EXPECT_EQ(v.reasons[g.coords.at(2, 1)], "6-three-lower");
}

TEST(GridSchemeTest, OnAxisShortcutFigure) {
  const GridGraph g = gen_grid(2, 4);
  const Instance inst = labeled(g.graph, {g.coords.at(0, 0)});
  Assignment p;
  for (auto d : bfs_distances(g.graph, 0)) p.push_back(Certificate::from_uint(d, 3));
  p[g.coords.at(0, 3)] = Certificate::from_uint(1, 3);
  p[g.coords.at(1, 3)] = Certificate::from_uint(2, 3);
  const Verdict v = run_verifier(*named("grid"), inst, p);
  EXPECT_FALSE(v.accepts[g.coords.at(1, 2)]);
  EXPECT_EQ(v.reasons[g.coords.at(1, 2)], "6-three-lower");
}

TEST(GridSchemeTest, ConditionThreeSeesTwoZeros) {
  const Instance inst = labeled(gen_grid(1, 3).graph, {});
  const Verdict v = run_verifier(*named("grid"), inst, integers({0, 1, 0}, 2));
  EXPECT_EQ(v.reasons[1], "3-two-zeros");
}

// Changing one honest distance to any other value is always caught.
TEST(MonotoneRejectionTest, ChordalAndGrid) {
  std::vector<Instance> chordal;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = labeled(gen_random_chordal(2 + seed % 7, 4, seed), {});
    inst.selected[seed % inst.size()] = 1;
    chordal.push_back(std::move(inst));
  }
  std::vector<Instance> grids;
  for (std::size_t rows = 1; rows <= 2; ++rows) {
    for (std::size_t cols = 1; rows * cols <= 8; ++cols) {
      for (Vertex s = 0; s < rows * cols; ++s) grids.push_back(labeled(gen_grid(rows, cols).graph, {s}));
    }
  }
  const auto check = [](const Scheme& scheme, const Instance& inst) {
    const std::size_t width = scheme.size_bound(SizeContext::of(inst));
    const Assignment honest = scheme.prove(inst);
    for (Vertex v = 0; v < inst.size(); ++v) {
      for (std::uint64_t value = 0; value < (1ULL << width); ++value) {
        if (value == honest[v].value()) continue;
        Assignment p = honest;
        p[v] = Certificate::from_uint(value, width);
        EXPECT_GT(rejecting(run_verifier(scheme, inst, p)), 0u) << scheme.name() << " v=" << v << " value=" << value;
      }
    }
  };
  for (const auto& inst : chordal) check(*named("chordal"), inst);
  for (const auto& inst : grids) check(*named("grid"), inst);
}

// ---- dense ----

TEST(DenseTest, FourBitIdentifierOnK5) {
  // Leader payload 0b1011, so its identifier is 12.
  const Instance inst = labeled(gen_complete(5), {4}, std::vector<Identifier>{1, 2, 3, 4, 12});
  SchemeConfig cfg;
  cfg.name = "dense";
  cfg.id_bit_length = 4;
  const auto scheme = make_scheme(cfg);
  const std::vector<std::uint32_t> positions{0, 1, 2, 3, 0};
  EXPECT_EQ(coverage_misses(inst.graph, positions, 4), 0u);
  Assignment p;
  for (auto i : positions) p.push_back(DenseCert{i, ((11U >> i) & 1U) != 0}.encode(4));
  EXPECT_EQ(max_cert_bits(p), 3u);
  EXPECT_TRUE(run_verifier(*scheme, inst, p).global);

  // Same certificates, wrong vertex selected.
  const Instance wrong = labeled(gen_complete(5), {0}, std::vector<Identifier>{1, 2, 3, 4, 12});
  const Verdict v = run_verifier(*scheme, wrong, p);
  EXPECT_EQ(v.reasons[0], "selected-not-leader");
  EXPECT_EQ(v.reasons[4], "leader-not-selected");
}

TEST(DenseTest, SingleVertexOneBit) {
  SchemeConfig cfg;
  cfg.name = "dense";
  cfg.id_bit_length = 1;
  const auto scheme = make_scheme(cfg);
  for (Identifier id : {1, 2}) {
    const Instance inst = labeled(gen_path(1), {0}, std::vector<Identifier>{id});
    const Assignment p = scheme->prove(inst);
    EXPECT_EQ(p[0], (DenseCert{0, id == 2}.encode(1)));
    EXPECT_TRUE(run_verifier(*scheme, inst, p).global);
  }
  const Instance big = labeled(gen_path(1), {0}, std::vector<Identifier>{3});
  EXPECT_THROW(scheme->prove(big), ProverError);
}

TEST(DenseTest, MarkerCase) {
  SchemeConfig cfg;
  cfg.name = "dense";
  cfg.id_bit_length = 4;
  const auto scheme = make_scheme(cfg);
  const Instance none = labeled(gen_complete(4), {}, sequential(4));
  const Assignment p = scheme->prove(none);
  for (const auto& c : p) EXPECT_EQ(c, DenseCert::marker());
  EXPECT_TRUE(run_verifier(*scheme, none, p).global);

  const Instance one = labeled(gen_complete(4), {2}, sequential(4));
  EXPECT_EQ(run_verifier(*scheme, one, p).reasons[2], "selected-under-marker");
  Assignment mixed = p;
  mixed[1] = DenseCert{0, false}.encode(4);
  const Verdict v = run_verifier(*scheme, none, mixed);
  EXPECT_EQ(v.reasons[0], "marker-mix");
  EXPECT_EQ(v.reasons[1], "marker-mix");
}

TEST(DenseTest, MissingOrConflictingPositions) {
  SchemeConfig cfg;
  cfg.name = "dense";
  cfg.id_bit_length = 4;
  const auto scheme = make_scheme(cfg);
  const Instance inst = labeled(gen_complete(4), {0}, sequential(4));
  Assignment p;
  for (std::uint32_t i : {0, 1, 2, 2}) p.push_back(DenseCert{i, false}.encode(4));
  EXPECT_EQ(run_verifier(*scheme, inst, p).reasons[0], "incomplete-identifier");
  p.clear();
  for (std::uint32_t i : {0, 1, 2, 3}) p.push_back(DenseCert{i, false}.encode(4));
  EXPECT_TRUE(run_verifier(*scheme, inst, p).global);
  p.push_back(DenseCert{3, true}.encode(4));
  const Instance k5 = labeled(gen_complete(5), {0}, sequential(5));
  EXPECT_EQ(run_verifier(*scheme, k5, p).reasons[0], "incomplete-identifier");
}

TEST(DenseTest, CoverageFailureIsProverError) {
  SchemeConfig cfg;
  cfg.name = "dense";
  cfg.id_bit_length = 16;
  cfg.retry_limit = 5;
  const Instance path = labeled(gen_path(20), {3}, sequential(20));
  EXPECT_THROW(make_scheme(cfg)->prove(path), ProverError);
  const CoverageResult r = dense_assign_positions(path.graph, 16, 5, 1);
  EXPECT_FALSE(r.success);
  EXPECT_EQ(r.attempts, 5u);
}

TEST(DenseTest, ExhaustiveOnK4) {
  SchemeConfig cfg;
  cfg.name = "dense";
  cfg.id_bit_length = 2;
  const auto scheme = make_scheme(cfg);
  Instance inst = labeled(gen_complete(4), {0, 1}, sequential(4));
  const auto space = SearchSpace::for_scheme(*scheme, inst, DenseCert::position_bits(2) + 1);
  EXPECT_EQ(space.alphabets[0].size(), 5u);
  const auto report = exhaustive_soundness(*scheme, inst, space);
  EXPECT_FALSE(report.found());
  EXPECT_EQ(report.tested, 625u);
}

// ---- smallid ----

TEST(SmallIdTest, PathWithSelectedMiddle) {
  const Instance inst = labeled(gen_path(3), {1}, std::vector<Identifier>{1, 5, 9});
  for (auto rule : {CountingRule::as_written, CountingRule::children_only, CountingRule::min_id_parent}) {
    SchemeConfig cfg;
    cfg.name = "smallid";
    cfg.counting = rule;
    cfg = fit_config(cfg, inst);
    const auto scheme = make_scheme(cfg);
    const Assignment p = scheme->prove(inst);
    const std::size_t ib = bits_for(cfg.c_id);
    EXPECT_EQ(p[0], (SmallIdCert{1, 0, 1}.encode(ib, *cfg.dist_bits)));
    EXPECT_EQ(p[1], (SmallIdCert{1, 1, 1}.encode(ib, *cfg.dist_bits)));
    EXPECT_EQ(p[2], (SmallIdCert{1, 2, 0}.encode(ib, *cfg.dist_bits)));
    EXPECT_TRUE(run_verifier(*scheme, inst, p).global) << to_string(rule);
  }
}

TEST(SmallIdTest, NothingSelected) {
  const Instance inst = labeled(gen_random_connected(9, 0.3, 4), {}, sequential(9));
  for (auto rule : {CountingRule::as_written, CountingRule::children_only, CountingRule::min_id_parent}) {
    SchemeConfig cfg;
    cfg.name = "smallid";
    cfg.counting = rule;
    cfg = fit_config(cfg, inst);
    const Assignment p = make_scheme(cfg)->prove(inst);
    for (const auto& c : p) EXPECT_EQ(SmallIdCert::decode(c, bits_for(cfg.c_id), *cfg.dist_bits)->s, 0u);
  }
}

TEST(SmallIdTest, TwoSelectedOnTriangleNeverAccepted) {
  const Instance inst = labeled(gen_complete(3), {0, 1}, sequential(3));
  SchemeConfig cfg;
  cfg.name = "smallid";
  cfg.c_id = 1;
  cfg.counting = CountingRule::children_only;
  cfg = fit_config(cfg, inst);
  const auto scheme = make_scheme(cfg);
  const std::size_t bits = scheme->size_bound(SizeContext::of(inst));
  EXPECT_EQ(bits, 3u);
  const auto report = exhaustive_soundness(*scheme, inst, SearchSpace::for_scheme(*scheme, inst, bits));
  EXPECT_FALSE(report.found());
  EXPECT_EQ(report.tested, 512u);
}

TEST(SmallIdTest, MinIdParentAcceptsEveryLayering) {
  // A square rooted at 1: the far vertex has two lower neighbours.
  const Instance inst = labeled(gen_cycle(4), {2}, std::vector<Identifier>{1, 2, 3, 4});
  SchemeConfig cfg;
  cfg.name = "smallid";
  cfg.counting = CountingRule::min_id_parent;
  EXPECT_TRUE(check_completeness(*fitted(cfg, inst), inst));
  cfg.counting = CountingRule::children_only;
  EXPECT_FALSE(check_completeness(*fitted(cfg, inst), inst));
}

TEST(SmallIdTest, RadiusDependsOnRule) {
  SchemeConfig cfg;
  cfg.name = "smallid";
  cfg.dist_bits = 2;
  cfg.counting = CountingRule::children_only;
  EXPECT_EQ(make_scheme(cfg)->radius(), 1u);
  cfg.counting = CountingRule::as_written;
  EXPECT_EQ(make_scheme(cfg)->radius(), 1u);
  cfg.counting = CountingRule::min_id_parent;
  EXPECT_EQ(make_scheme(cfg)->radius(), 2u);
}

TEST(SmallIdTest, LargeMinimumIdentifierIsOutsidePromise) {
  const Instance inst = labeled(gen_path(3), {0}, std::vector<Identifier>{9, 10, 11});
  SchemeConfig cfg;
  cfg.name = "smallid";
  cfg.c_id = 4;
  EXPECT_THROW(fitted(cfg, inst)->prove(inst), ProverError);
}

// ---- strawmen and registry ----

TEST(StrawmanTest, ConstantAcceptsTwoLeaders) {
  const Instance inst = labeled(gen_path(5), {0, 4}, sequential(5));
  const auto scheme = named("constant");
  EXPECT_TRUE(check_completeness(*scheme, inst));
  Assignment p = scheme->prove(inst);
  p[2] = Certificate::from_string("01");
  EXPECT_EQ(rejecting(run_verifier(*scheme, inst, p)), 3u);
}

TEST(StrawmanTest, TruncatedIsComplete) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const std::size_t n = 2 + seed % 12;
    const Instance inst = labeled(gen_random_connected(n, 0.2, seed), {static_cast<Vertex>(seed % n)}, sequential(n));
    const auto scheme = named("truncated");
    EXPECT_TRUE(check_completeness(*scheme, inst));
    EXPECT_EQ(max_cert_bits(scheme->prove(inst)), 4u);
  }
}

TEST(RegistryTest, EveryNameBuildsAfterFitting) {
  const Instance inst = labeled(gen_path(4), {0}, sequential(4));
  for (const auto& name : scheme_names()) {
    SchemeConfig cfg;
    cfg.name = name;
    const auto scheme = fitted(cfg, inst);
    EXPECT_EQ(scheme->name(), name);
    EXPECT_GE(scheme->radius(), 1u);
  }
  SchemeConfig bad;
  bad.name = "nope";
  EXPECT_THROW(make_scheme(bad), std::invalid_argument);
  SchemeConfig unfitted;
  unfitted.name = "classic";
  EXPECT_THROW(make_scheme(unfitted), std::invalid_argument);
  unfitted.name = "smallid";
  EXPECT_THROW(make_scheme(unfitted), std::invalid_argument);
}

TEST(RegistryTest, AnonymityFlags) {
  for (const std::string name : {"tree", "chordal", "grid", "constant"}) EXPECT_TRUE(named(name)->anonymous());
  for (const std::string name : {"dense", "truncated"}) EXPECT_FALSE(named(name)->anonymous());
}

TEST(RegistryTest, CountingRuleNames) {
  for (auto rule : {CountingRule::as_written, CountingRule::children_only, CountingRule::min_id_parent}) {
    EXPECT_EQ(parse_counting_rule(to_string(rule)), rule);
  }
  EXPECT_THROW(parse_counting_rule("sideways"), std::invalid_argument);
}

TEST(SizeBoundTest, ProversRespectStatedBounds) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 12;
    Instance inst = labeled(gen_random_chordal(n, 4, rng()), {}, sequential(n));
    inst.selected[rng() % n] = 1;
    const std::size_t d = diameter(inst.graph);
    const std::size_t dist_width = bits_for(d);
    EXPECT_LE(max_cert_bits(named("chordal")->prove(inst)), dist_width);
    SchemeConfig cfg;
    cfg.name = "smallid";
    cfg.c_id = 1;
    EXPECT_LE(max_cert_bits(fitted(cfg, inst)->prove(inst)), 1 + dist_width + 1);
  }
  for (std::size_t rows = 1; rows <= 4; ++rows) {
    for (std::size_t cols = 1; cols <= 5; ++cols) {
      const Instance inst = labeled(gen_grid(rows, cols).graph, {static_cast<Vertex>(rows * cols - 1)});
      EXPECT_LE(max_cert_bits(named("grid")->prove(inst)), bits_for(rows + cols - 2));
    }
  }
}
