#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcert/certification.hpp"
#include "lcert/generators.hpp"
#include "lcert/schemes.hpp"

namespace lcert {

/// Family size n, verifier radius r, arm lengths k and l (0 = 2r+2) and the
/// partition seed.
struct FamilyParams {
  std::size_t n = 4;
  std::size_t r = 1;
  std::size_t k = 0;
  std::size_t l = 0;
  std::uint64_t seed = 1;

  /// Copy with k and l defaulted.
  FamilyParams resolved() const;
};

/// Disjoint identifier sets a_1..a_n and b_1..b_n drawn from [1, universe],
/// each sorted increasingly.
struct IdPartition {
  std::size_t n = 0;
  std::size_t n_a = 0;
  std::size_t n_b = 0;
  Identifier universe = 0;
  std::vector<std::vector<Identifier>> a;
  std::vector<std::vector<Identifier>> b;
};

/// n_a = max(floor(n/2), min_a) and n_b = max(n - floor(n/2), min_b). The universe
/// is n^2, enlarged to n * (n_a + n_b) when the minimum sizes demand it.
IdPartition make_partition(std::size_t n, std::uint64_t seed, std::size_t min_a = 0, std::size_t min_b = 0);
/// Partition sized for the arm lengths of `params`.
IdPartition make_partition(const FamilyParams& params);

/// G(a_i, b_j).
LBInstance family_member(const IdPartition& part, std::size_t i, std::size_t j, const FamilyParams& params);
/// All n^2 members, row-major in (i, j).
std::vector<LBInstance> build_family(const IdPartition& part, const FamilyParams& params);

/// Unset widths fitted to the whole family: identifiers up to the universe,
/// distances up to the family diameter.
SchemeConfig fit_config_to_family(SchemeConfig cfg, const IdPartition& part, const FamilyParams& params);

/// (certificate, selected) at a[2r+1], ..., a[1], b[1], ..., b[2r+1].
struct WindowColor {
  std::vector<std::pair<Certificate, std::uint8_t>> entries;

  /// Total bits of the tuple, one label bit per entry.
  std::size_t bits() const;
  friend bool operator==(const WindowColor&, const WindowColor&) = default;
  friend auto operator<=>(const WindowColor&, const WindowColor&) = default;
};

WindowColor window_color(const LBInstance& g, const Assignment& certs);
/// Runs the prover. ProverError propagates.
WindowColor window_color(const Scheme& scheme, const LBInstance& g);

/// n x n table of interned colours; palette[cell] is the colour.
struct ColorTable {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> cells;  // row-major
  std::vector<WindowColor> palette;

  std::uint32_t at(std::size_t i, std::size_t j) const { return cells[i * cols + j]; }
  std::size_t distinct() const;
  /// Size of the most frequent colour class.
  std::size_t largest_class() const;
};

/// Colours of every family member, computed in parallel. Palette indices
/// follow first appearance in row-major order.
ColorTable build_color_table(const Scheme& scheme, const IdPartition& part, const FamilyParams& params);

namespace serial {
ColorTable build_color_table(const Scheme& scheme, const IdPartition& part, const FamilyParams& params);
}  // namespace serial

/// (i, j, i', j') with i < i', j < j' and all four cells equal, or nothing.
/// Rows are scanned in order; the first row i' to repeat a same-coloured
/// column pair of an earlier row i wins.
std::optional<std::array<std::size_t, 4>> find_monochromatic_c4(const ColorTable& t);

struct FoolingReport {
  FamilyParams params;  // resolved
  IdPartition partition;
  std::uint32_t family_diameter = 0;
  std::size_t color_bits = 0;
  std::size_t distinct_colors = 0;
  std::size_t largest_class = 0;
  std::optional<std::array<std::size_t, 4>> c4;

  // Present when a C4 was found.
  std::optional<SplicedInstance> spliced;
  Assignment spliced_certs;
  std::optional<Verdict> verdict;
  /// Vertices of the spliced instance whose radius-r ball (family r) matched
  /// no ball of the four yes-instances it was stitched from.
  std::size_t window_mismatches = 0;
  std::size_t window_checked = 0;

  bool found() const { return c4.has_value(); }
  bool fooled() const { return verdict && verdict->global; }
};

/// Partition, family, colour table, C4 search and, on a hit, the splice of
/// G(a_i, b_j) with G(a_i', b_j') under inherited certificates followed by
/// the verifier and the window-consistency check. Requires r >= the scheme
/// radius.
FoolingReport fooling_demo(const Scheme& scheme, const FamilyParams& params);

}  // namespace lcert
