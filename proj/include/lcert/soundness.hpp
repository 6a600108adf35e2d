#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcert/certification.hpp"

namespace lcert {

/// Per-vertex candidate certificates an adversary may place.
struct SearchSpace {
  static constexpr std::uint64_t kDefaultCap = 1'000'000'000;

  std::vector<std::vector<Certificate>> alphabets;
  std::uint64_t cap = kDefaultCap;

  static SearchSpace uniform(std::size_t n, const std::vector<Certificate>& alphabet,
                             std::uint64_t cap = kDefaultCap);
  /// scheme.alphabet(bits) at every vertex.
  static SearchSpace for_scheme(const Scheme& scheme, const Instance& inst, std::size_t bits,
                                std::uint64_t cap = kDefaultCap);

  /// Product of alphabet sizes, as a long double so oversized spaces can
  /// still be reported.
  long double cardinality() const;
};

/// Thrown when an exhaustive search would exceed the space cap.
class SearchRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SearchMode { exhaustive, randomized };
std::string_view to_string(SearchMode mode);

struct SoundnessReport {
  std::string digest;
  long double cardinality = 0;
  SearchMode mode = SearchMode::exhaustive;
  std::optional<Assignment> fooling;
  /// Exhaustive: assignments ruled out or tested up to and including the
  /// witness (equals the cardinality when there is none). Randomized:
  /// samples drawn up to and including the hit.
  std::uint64_t tested = 0;
  std::uint64_t evaluations = 0;  // verifier calls
  std::uint64_t seed = 0;         // randomized only
  double elapsed_seconds = 0;

  bool found() const { return fooling.has_value(); }
};

/// Depth-first search over the product space with prefix pruning: vertices
/// are placed in ball-completion order and every ball is checked the moment
/// its last member is fixed. The witness, if any, is the lexicographically
/// smallest in that order. Workers split the space into disjoint prefix
/// chunks; the result does not depend on the worker count.
SoundnessReport exhaustive_soundness(const Scheme& scheme, const Instance& inst, const SearchSpace& space);

/// Independent uniform samples. Sample i is drawn from a stream keyed by
/// (seed, i / block), so the first hit does not depend on the worker count.
SoundnessReport randomized_soundness(const Scheme& scheme, const Instance& inst, const SearchSpace& space,
                                     std::uint64_t samples, std::uint64_t seed);

namespace serial {
SoundnessReport exhaustive_soundness(const Scheme& scheme, const Instance& inst, const SearchSpace& space);
SoundnessReport randomized_soundness(const Scheme& scheme, const Instance& inst, const SearchSpace& space,
                                     std::uint64_t samples, std::uint64_t seed);
}  // namespace serial

/// Vertex placement order used by the exhaustive search.
std::vector<Vertex> completion_order(const LocalEvaluator& eval);

enum class GraphClass { chordal, grid, tree, connected };
std::string_view to_string(GraphClass cls);
GraphClass parse_graph_class(std::string_view text);

/// Every connected graph of the class on 2..n_max vertices, one per
/// isomorphism class, times every placement of exactly two selected
/// vertices. Instances are anonymous. For grids, `max_side` (if nonzero)
/// bounds both dimensions.
std::vector<Instance> enumerate_no_instances(GraphClass cls, std::size_t n_max, std::size_t max_side = 0);

/// Isomorphism classes only, with nothing selected.
std::vector<Graph> enumerate_graphs(GraphClass cls, std::size_t n_max, std::size_t max_side = 0);

/// Canonical adjacency code: equal iff the graphs are isomorphic. Intended
/// for n <= 10.
std::vector<std::uint8_t> canonical_code(const Graph& g);

/// Copy of `inst` with identifiers 1..n in vertex order.
Instance with_sequential_ids(Instance inst);

}  // namespace lcert
