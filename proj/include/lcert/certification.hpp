#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcert/certificate.hpp"
#include "lcert/graph.hpp"
#include "lcert/view.hpp"

namespace lcert {

/// Outcome of one local verification. `rule` names the check that fired.
struct Decision {
  bool accept = true;
  std::string_view rule;

  static constexpr Decision ok() { return {}; }
  static constexpr Decision reject(std::string_view why) { return {false, why}; }
};

/// Instance parameters a size bound may depend on.
struct SizeContext {
  std::size_t n = 0;
  std::uint32_t diameter = 0;

  static SizeContext of(const Instance& inst) { return {inst.size(), lcert::diameter(inst.graph)}; }
};

/// Raised when a prover cannot produce an assignment: the instance is outside
/// the scheme's promise, or a randomized prover ran out of retries.
class ProverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proof-labeling scheme: a prover and an r-local verifier. Implementations
/// are immutable and safe to share across threads.
class Scheme {
 public:
  virtual ~Scheme() = default;

  virtual std::string name() const = 0;
  virtual std::size_t radius() const = 0;
  /// True when the verifier never reads identifiers.
  virtual bool anonymous() const = 0;
  virtual std::size_t size_bound(const SizeContext& ctx) const = 0;
  virtual Assignment prove(const Instance& inst) const = 0;
  virtual Decision verify(const View& view) const = 0;

  /// Canonical adversarial alphabet for certificates of at most `bits` bits.
  /// Every other bit string of that length is either rejected at its owner
  /// or read identically to a member. Default: integers 0..2^bits-1 written
  /// on exactly `bits` bits.
  virtual std::vector<Certificate> alphabet(std::size_t bits) const;
};

using SchemePtr = std::shared_ptr<const Scheme>;

inline constexpr std::string_view kOversizeRule = "size-bound";

struct Verdict {
  std::vector<std::uint8_t> accepts;
  std::vector<std::string_view> reasons;  // empty view for accepting vertices
  bool global = true;
};

/// Per-instance precomputation of every ball, reused across many
/// assignments. Not thread-safe; copy one per worker.
class LocalEvaluator {
 public:
  LocalEvaluator(const Scheme& scheme, const Instance& inst);
  LocalEvaluator(const Scheme& scheme, const Instance& inst, const SizeContext& ctx);

  std::size_t size() const { return balls_.size(); }
  std::size_t bound() const { return bound_; }
  std::span<const Vertex> members(Vertex v) const { return balls_[v].members; }
  Decision evaluate(Vertex v, std::span<const Certificate> certs);

 private:
  const Scheme* scheme_;
  std::size_t bound_;
  std::vector<Ball> balls_;
};

/// Verdict at every vertex, evaluated in parallel.
Verdict run_verifier(const Scheme& scheme, const Instance& inst, const Assignment& p);
/// Stops at the first rejecting vertex.
bool accepts_all(const Scheme& scheme, const Instance& inst, const Assignment& p);
/// Runs the prover and the verifier. ProverError propagates.
bool check_completeness(const Scheme& scheme, const Instance& inst);

namespace serial {
/// Reference single-threaded evaluation; same result as lcert::run_verifier.
Verdict run_verifier(const Scheme& scheme, const Instance& inst, const Assignment& p);
}  // namespace serial

}  // namespace lcert
