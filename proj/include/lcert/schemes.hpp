#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcert/certification.hpp"

namespace lcert {

/// How the small-identifier scheme sums subtree selection counts.
enum class CountingRule {
  /// Over every neighbour w with d_w >= d_v, exactly as the rule is usually
  /// stated. Double-counts same-level neighbours.
  as_written,
  /// Over neighbours with d_w = d_v + 1; requires a unique lower neighbour.
  children_only,
  /// Over neighbours w with d_w = d_v + 1 whose minimum-identifier lower
  /// neighbour is v. Needs radius 2 but accepts every BFS layering.
  min_id_parent,
};

std::string_view to_string(CountingRule rule);
CountingRule parse_counting_rule(std::string_view text);

/// Parameters of every scheme in the registry. Unset widths are fitted to an
/// instance by fit_config().
struct SchemeConfig {
  std::string name = "chordal";
  // classic, truncated
  std::optional<std::size_t> id_bits;
  // classic, smallid
  std::optional<std::size_t> dist_bits;
  // dense
  std::size_t id_bit_length = 16;
  std::size_t retry_limit = 100;
  std::uint64_t seed = 1;
  // smallid
  std::uint64_t c_id = 4;
  CountingRule counting = CountingRule::min_id_parent;
  // truncated: bits kept per field; constant: certificate length
  std::size_t truncate_bits = 1;
  std::size_t constant_bits = 2;
};

/// Fills unset field widths from the instance (identifier range, diameter).
SchemeConfig fit_config(SchemeConfig cfg, const Instance& inst);
/// Throws std::invalid_argument for unknown names or unfitted widths.
SchemePtr make_scheme(const SchemeConfig& cfg);
/// Names accepted by make_scheme().
std::vector<std::string> scheme_names();

// Certificate layouts, exposed so tests and tools can build adversarial
// assignments field by field.

struct ClassicCert {
  Identifier leader_id = 0;
  std::optional<Identifier> parent_id;
  std::uint64_t dist = 0;

  Certificate encode(std::size_t id_bits, std::size_t dist_bits) const;
  static std::optional<ClassicCert> decode(const Certificate& c, std::size_t id_bits, std::size_t dist_bits);
};

struct DenseCert {
  std::uint32_t position = 0;
  bool bit = false;

  /// Position field width for identifiers of `id_bit_length` bits.
  static std::size_t position_bits(std::size_t id_bit_length);
  Certificate encode(std::size_t id_bit_length) const;
  /// The reserved no-leader codeword (the empty string).
  static Certificate marker() { return {}; }
};

struct SmallIdCert {
  Identifier id = 0;
  std::uint64_t d = 0;
  std::uint64_t s = 0;

  Certificate encode(std::size_t id_bits, std::size_t dist_bits) const;
  static std::optional<SmallIdCert> decode(const Certificate& c, std::size_t id_bits, std::size_t dist_bits);
};

/// Identifier value carried by the dense scheme's bit string: id - 1, so that
/// B bits cover identifiers 1..2^B.
inline std::uint64_t dense_payload(Identifier id) { return id - 1; }

/// One draw-and-retry run of the dense scheme's position assignment.
struct CoverageResult {
  std::vector<std::uint32_t> positions;
  std::size_t attempts = 0;
  bool success = false;
};

/// Assigns each vertex a uniform position in [0, B), redrawing everything
/// until every closed neighbourhood contains all B positions or
/// `retry_limit` draws have failed.
CoverageResult dense_assign_positions(const Graph& g, std::size_t id_bit_length, std::size_t retry_limit,
                                      std::uint64_t seed);
/// Number of (vertex, position) pairs missing from the closed neighbourhood.
std::size_t coverage_misses(const Graph& g, std::span<const std::uint32_t> positions, std::size_t id_bit_length);

}  // namespace lcert
