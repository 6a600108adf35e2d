#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "lcert/lowerbound.hpp"
#include "lcert/parallel.hpp"
#include "oracles.hpp"

using namespace lcert;

namespace {

SchemePtr strawman(const std::string& name, std::size_t bits = 1) {
  SchemeConfig cfg;
  cfg.name = name;
  cfg.truncate_bits = bits;
  cfg.constant_bits = bits;
  return make_scheme(cfg);
}

SchemePtr classic_for(const FamilyParams& params) {
  SchemeConfig cfg;
  cfg.name = "classic";
  return make_scheme(fit_config_to_family(cfg, make_partition(params), params));
}

std::vector<std::vector<int>> random_table(std::size_t n, int colours, std::mt19937_64& rng) {
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (auto& row : t) {
    for (auto& c : row) c = static_cast<int>(rng() % static_cast<std::uint64_t>(colours));
  }
  return t;
}

}  // namespace

TEST(PartitionTest, FourByFourCoversSixteen) {
  const IdPartition p = make_partition(4, 5);
  EXPECT_EQ(p.n_a, 2u);
  EXPECT_EQ(p.n_b, 2u);
  EXPECT_EQ(p.universe, 16u);
  std::set<Identifier> all;
  for (const auto& s : p.a) {
    EXPECT_EQ(s.size(), 2u);
    EXPECT_LT(s[0], s[1]);
    all.insert(s.begin(), s.end());
  }
  for (const auto& s : p.b) {
    EXPECT_EQ(s.size(), 2u);
    EXPECT_LT(s[0], s[1]);
    all.insert(s.begin(), s.end());
  }
  EXPECT_EQ(all.size(), 16u);
  EXPECT_EQ(*all.begin(), 1u);
  EXPECT_EQ(*all.rbegin(), 16u);
}

TEST(PartitionTest, MinimumSizesEnlargeUniverse) {
  const IdPartition p = make_partition(FamilyParams{8, 1, 0, 0, 3});
  EXPECT_EQ(p.n_a, 5u);
  EXPECT_EQ(p.n_b, 5u);
  EXPECT_EQ(p.universe, 80u);
  std::set<Identifier> all;
  for (const auto& s : p.a) all.insert(s.begin(), s.end());
  for (const auto& s : p.b) all.insert(s.begin(), s.end());
  EXPECT_EQ(all.size(), 80u);
  EXPECT_THROW(make_partition(1, 0), std::invalid_argument);
}

TEST(FamilyTest, MembersFollowTheirIdentifierSets) {
  const FamilyParams params{5, 1, 3, 4, 2};
  const IdPartition part = make_partition(params);
  const auto family = build_family(part, params);
  ASSERT_EQ(family.size(), 25u);
  const std::size_t k = params.resolved().k;
  const std::size_t l = params.resolved().l;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      const LBInstance& g = family[i * 5 + j];
      const auto& ids = *g.instance.ids;
      ASSERT_EQ(g.a_path.size(), k);
      ASSERT_EQ(g.b_path.size(), l);
      for (std::size_t t = 0; t < k; ++t) EXPECT_EQ(ids[g.a_path[t]], part.a[i][t]);
      for (std::size_t t = 0; t < l; ++t) EXPECT_EQ(ids[g.b_path[t]], part.b[j][t]);
      EXPECT_EQ(g.instance.selected_count(), 1u);
      EXPECT_LE(diameter(g.instance.graph), k + l + 3);
      EXPECT_EQ(diameter(g.instance.graph), oracle::diameter(g.instance.graph));
    }
  }
}

TEST(WindowColorTest, ConstantStrawmanGivesOneColour) {
  const FamilyParams params{4, 1, 0, 0, 1};
  const IdPartition part = make_partition(params);
  const ColorTable t = build_color_table(*strawman("constant"), part, params);
  EXPECT_EQ(t.distinct(), 1u);
  EXPECT_EQ(t.largest_class(), 16u);
  ASSERT_EQ(t.palette.size(), 1u);
  // 2(2r+1) entries for r = 1.
  EXPECT_EQ(t.palette[0].entries.size(), 6u);
  EXPECT_EQ(t.palette[0].bits(), 12u);
}

TEST(WindowColorTest, ClassicColoursCarryIdentifiers) {
  const FamilyParams params{4, 1, 0, 0, 1};
  const IdPartition part = make_partition(params);
  const auto scheme = classic_for(params);
  const ColorTable t = build_color_table(*scheme, part, params);
  EXPECT_EQ(t.distinct(), 16u);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const LBInstance g = family_member(part, i, j, params);
      EXPECT_EQ(t.palette[t.at(i, j)], window_color(*scheme, g));
    }
  }
  // Palette order is first appearance in row-major order.
  for (std::size_t c = 0; c < 16; ++c) EXPECT_EQ(t.cells[c], c);
}

TEST(ColorTableTest, ParallelMatchesSerial) {
  const FamilyParams params{6, 1, 0, 0, 4};
  const IdPartition part = make_partition(params);
  for (const auto& scheme : {strawman("truncated"), classic_for(params), strawman("constant", 2)}) {
    const ColorTable ref = serial::build_color_table(*scheme, part, params);
    for (std::size_t workers : {1, 3}) {
      set_worker_count(workers);
      const ColorTable par = build_color_table(*scheme, part, params);
      EXPECT_EQ(par.cells, ref.cells);
      EXPECT_EQ(par.palette, ref.palette);
    }
  }
  set_worker_count(0);
}

TEST(ColorTableTest, ProverFailurePropagates) {
  const FamilyParams params{4, 2, 0, 0, 1};
  SchemeConfig cfg;
  cfg.name = "dense";
  cfg.id_bit_length = 16;
  cfg.retry_limit = 2;
  EXPECT_THROW(build_color_table(*make_scheme(cfg), make_partition(params), params), ProverError);
}

TEST(C4Test, SmallTables) {
  const auto all_equal = find_monochromatic_c4(oracle::table_from({{0, 0}, {0, 0}}));
  ASSERT_TRUE(all_equal);
  EXPECT_EQ(*all_equal, (std::array<std::size_t, 4>{0, 0, 1, 1}));
  EXPECT_FALSE(find_monochromatic_c4(oracle::table_from({{0, 1}, {2, 3}})));
  // Three equal corners are not enough.
  EXPECT_FALSE(find_monochromatic_c4(oracle::table_from({{0, 0}, {0, 1}})));
  const auto hit = find_monochromatic_c4(oracle::table_from({{1, 0, 0}, {3, 4, 5}, {6, 0, 0}}));
  ASSERT_TRUE(hit);
  EXPECT_EQ(*hit, (std::array<std::size_t, 4>{0, 1, 2, 2}));
}

TEST(C4Test, MatchesQuadrupleOracle) {
  std::mt19937_64 rng(19);
  std::size_t found = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + rng() % 11;
    const int colours = 1 + static_cast<int>(rng() % 12);
    const auto raw = random_table(n, colours, rng);
    const ColorTable t = oracle::table_from(raw);
    const auto hit = find_monochromatic_c4(t);
    ASSERT_EQ(hit.has_value(), oracle::monochromatic_c4_exists(raw)) << "trial " << trial;
    if (!hit) continue;
    ++found;
    const auto [i, j, ip, jp] = *hit;
    EXPECT_LT(i, ip);
    EXPECT_LT(j, jp);
    const int c = raw[i][j];
    EXPECT_EQ(raw[i][jp], c);
    EXPECT_EQ(raw[ip][j], c);
    EXPECT_EQ(raw[ip][jp], c);
  }
  EXPECT_GT(found, 50u);
  EXPECT_LT(found, 350u);
}

// A colour class larger than the Kovari-Sos-Turan bound z(n; 2) must contain a C4.
TEST(C4Test, LargeColourClassForcesC4) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const auto raw = random_table(n, 1 + static_cast<int>(rng() % 3), rng);
    const ColorTable t = oracle::table_from(raw);
    const double z = 0.5 * static_cast<double>(n) * (1.0 + std::sqrt(4.0 * static_cast<double>(n) - 3.0));
    if (static_cast<double>(t.largest_class()) > z) EXPECT_TRUE(find_monochromatic_c4(t));
  }
}

TEST(FoolingDemoTest, ConstantStrawmanIsFooled) {
  const FoolingReport r = fooling_demo(*strawman("constant"), FamilyParams{4, 1, 0, 0, 1});
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(r.fooled());
  ASSERT_TRUE(r.spliced);
  EXPECT_EQ(r.spliced->instance.selected_count(), 2u);
  EXPECT_EQ(r.window_mismatches, 0u);
  EXPECT_EQ(r.window_checked, r.spliced->instance.size());
  EXPECT_EQ(r.distinct_colors, 1u);
}

TEST(FoolingDemoTest, TruncatedClassicIsFooled) {
  const FoolingReport r = fooling_demo(*strawman("truncated"), FamilyParams{8, 1, 0, 0, 1});
  ASSERT_TRUE(r.found());
  EXPECT_TRUE(r.fooled());
  EXPECT_EQ(r.window_mismatches, 0u);
  const auto [i, j, ip, jp] = *r.c4;
  EXPECT_LT(i, ip);
  EXPECT_LT(j, jp);
  // The splice must really be a no-instance on the same vertex count.
  EXPECT_EQ(r.spliced->instance.size(), 2 * family_member(r.partition, 0, 0, r.params).instance.size());
}

TEST(FoolingDemoTest, ClassicSchemeHasNoMonochromaticC4) {
  for (std::size_t n : {4, 8, 12}) {
    const FamilyParams params{n, 1, 0, 0, 1};
    const FoolingReport r = fooling_demo(*classic_for(params), params);
    EXPECT_FALSE(r.found()) << n;
    EXPECT_EQ(r.distinct_colors, n * n);
    EXPECT_FALSE(r.spliced);
  }
}

TEST(FoolingDemoTest, RadiusBelowVerifierRadiusRejected) {
  SchemeConfig cfg;
  cfg.name = "chordal";
  EXPECT_THROW(fooling_demo(*make_scheme(cfg), FamilyParams{4, 1, 0, 0, 1}), std::invalid_argument);
}
