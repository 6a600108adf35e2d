#include "lcert/certification.hpp"

#include <stdexcept>

namespace lcert {

std::vector<Certificate> Scheme::alphabet(std::size_t bits) const {
  if (bits > 20) throw std::length_error("alphabet of " + std::to_string(bits) + "-bit strings is too large");
  std::vector<Certificate> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << bits); ++v) out.push_back(Certificate::from_uint(v, bits));
  return out;
}

namespace {

Decision evaluate_fresh(const Scheme& scheme, const Instance& inst, Vertex v, const Assignment& p,
                        std::size_t bound) {
  if (p[v].size() > bound) return Decision::reject(kOversizeRule);
  return scheme.verify(ball(inst, v, scheme.radius(), p));
}

void check_assignment(const Instance& inst, const Assignment& p) {
  if (p.size() != inst.size()) {
    throw std::invalid_argument("assignment has " + std::to_string(p.size()) + " certificates for " +
                                std::to_string(inst.size()) + " vertices");
  }
}

Verdict finish(std::vector<Decision> decisions) {
  Verdict out;
  out.accepts.resize(decisions.size());
  out.reasons.resize(decisions.size());
  for (std::size_t v = 0; v < decisions.size(); ++v) {
    out.accepts[v] = decisions[v].accept ? 1 : 0;
    out.reasons[v] = decisions[v].rule;
    out.global = out.global && decisions[v].accept;
  }
  return out;
}

}  // namespace

LocalEvaluator::LocalEvaluator(const Scheme& scheme, const Instance& inst)
    : LocalEvaluator(scheme, inst, SizeContext::of(inst)) {}

LocalEvaluator::LocalEvaluator(const Scheme& scheme, const Instance& inst, const SizeContext& ctx)
    : scheme_(&scheme), bound_(scheme.size_bound(ctx)) {
  balls_.reserve(inst.size());
  for (Vertex v = 0; v < inst.size(); ++v) {
    balls_.push_back(extract_ball(inst, v, scheme.radius()));
    balls_.back().view.certs.resize(balls_.back().members.size());
  }
}

Decision LocalEvaluator::evaluate(Vertex v, std::span<const Certificate> certs) {
  if (certs[v].size() > bound_) return Decision::reject(kOversizeRule);
  Ball& b = balls_[v];
  for (std::size_t i = 0; i < b.members.size(); ++i) b.view.certs[i] = certs[b.members[i]];
  return scheme_->verify(b.view);
}

Verdict run_verifier(const Scheme& scheme, const Instance& inst, const Assignment& p) {
  check_assignment(inst, p);
  const std::size_t bound = scheme.size_bound(SizeContext::of(inst));
  const auto n = static_cast<std::int64_t>(inst.size());
  std::vector<Decision> decisions(inst.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t v = 0; v < n; ++v) {
    decisions[v] = evaluate_fresh(scheme, inst, static_cast<Vertex>(v), p, bound);
  }
  return finish(std::move(decisions));
}

namespace serial {

Verdict run_verifier(const Scheme& scheme, const Instance& inst, const Assignment& p) {
  check_assignment(inst, p);
  const std::size_t bound = scheme.size_bound(SizeContext::of(inst));
  std::vector<Decision> decisions(inst.size());
  for (Vertex v = 0; v < inst.size(); ++v) decisions[v] = evaluate_fresh(scheme, inst, v, p, bound);
  return finish(std::move(decisions));
}

}  // namespace serial

bool accepts_all(const Scheme& scheme, const Instance& inst, const Assignment& p) {
  check_assignment(inst, p);
  const std::size_t bound = scheme.size_bound(SizeContext::of(inst));
  for (Vertex v = 0; v < inst.size(); ++v) {
    if (!evaluate_fresh(scheme, inst, v, p, bound).accept) return false;
  }
  return true;
}

bool check_completeness(const Scheme& scheme, const Instance& inst) {
  const Assignment p = scheme.prove(inst);
  return run_verifier(scheme, inst, p).global;
}

}  // namespace lcert
