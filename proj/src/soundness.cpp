#include "lcert/soundness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <tuple>

#include "lcert/generators.hpp"

namespace lcert {

SearchSpace SearchSpace::uniform(std::size_t n, const std::vector<Certificate>& alphabet, std::uint64_t cap) {
  return {std::vector<std::vector<Certificate>>(n, alphabet), cap};
}

SearchSpace SearchSpace::for_scheme(const Scheme& scheme, const Instance& inst, std::size_t bits,
                                    std::uint64_t cap) {
  return uniform(inst.size(), scheme.alphabet(bits), cap);
}

long double SearchSpace::cardinality() const {
  long double out = 1;
  for (const auto& a : alphabets) out *= static_cast<long double>(a.size());
  return out;
}

std::string_view to_string(SearchMode mode) {
  return mode == SearchMode::exhaustive ? "exhaustive" : "randomized";
}

std::vector<Vertex> completion_order(const LocalEvaluator& eval) {
  const std::size_t n = eval.size();
  std::vector<std::size_t> remaining(n);
  for (Vertex w = 0; w < n; ++w) remaining[w] = eval.members(w).size();
  std::vector<std::uint8_t> placed(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  // Balls are symmetric: v lies in ball(w) iff w lies in ball(v).
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::tuple<std::size_t, std::size_t, std::size_t> best_key{};
    bool have = false;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::size_t completes = 0;
      std::size_t touches = 0;
      for (Vertex w : eval.members(v)) {
        completes += remaining[w] == 1 ? 1 : 0;
        touches += remaining[w] < eval.members(w).size() ? 1 : 0;
      }
      const std::tuple key{completes, touches, n - eval.members(v).size()};
      if (!have || key > best_key) {
        best = v;
        best_key = key;
        have = true;
      }
    }
    placed[best] = 1;
    order.push_back(best);
    for (Vertex w : eval.members(best)) --remaining[w];
  }
  return order;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_space(const Instance& inst, const SearchSpace& space) {
  if (space.alphabets.size() != inst.size()) {
    throw std::invalid_argument("search space covers " + std::to_string(space.alphabets.size()) +
                                " vertices, instance has " + std::to_string(inst.size()));
  }
}

// Placement order, the balls to check after each placement, and the
// mixed-radix weight of each position.
struct Plan {
  std::vector<Vertex> order;
  std::vector<std::vector<Vertex>> checks;
  std::vector<std::uint64_t> radix;
  std::vector<std::uint64_t> weight;
  std::uint64_t cardinality = 0;
};

Plan make_plan(const LocalEvaluator& eval, const SearchSpace& space) {
  Plan plan;
  const std::size_t n = eval.size();
  plan.order = completion_order(eval);
  std::vector<std::size_t> pos(n);
  for (std::size_t t = 0; t < n; ++t) pos[plan.order[t]] = t;
  plan.checks.resize(n);
  for (Vertex w = 0; w < n; ++w) {
    std::size_t last = 0;
    for (Vertex u : eval.members(w)) last = std::max(last, pos[u]);
    plan.checks[last].push_back(w);
  }
  plan.radix.resize(n);
  plan.weight.resize(n);
  std::uint64_t w = 1;
  for (std::size_t t = n; t-- > 0;) {
    plan.radix[t] = space.alphabets[plan.order[t]].size();
    plan.weight[t] = w;
    w *= plan.radix[t];
  }
  plan.cardinality = w;
  return plan;
}

SoundnessReport start_report(const Instance& inst, const SearchSpace& space, SearchMode mode) {
  SoundnessReport r;
  r.digest = instance_digest(inst);
  r.cardinality = space.cardinality();
  r.mode = mode;
  return r;
}

void refuse_if_oversized(const SearchSpace& space) {
  if (space.cardinality() > static_cast<long double>(space.cap)) {
    throw SearchRefused("search space of " + std::to_string(static_cast<double>(space.cardinality())) +
                        " assignments exceeds the cap of " + std::to_string(space.cap));
  }
}

// Depth-first search below a fixed prefix. Returns true on a fooling
// assignment, left in `digits` and `certs`.
class Searcher {
 public:
  Searcher(LocalEvaluator eval, const Plan& plan, const SearchSpace& space)
      : eval_(std::move(eval)), plan_(plan), space_(space), certs_(eval_.size()), digits_(eval_.size(), 0) {}

  // Places digit d at depth t and checks every ball completed by it.
  bool place(std::size_t t, std::uint64_t d) {
    const Vertex v = plan_.order[t];
    digits_[t] = d;
    certs_[v] = space_.alphabets[v][d];
    for (Vertex w : plan_.checks[t]) {
      ++evaluations_;
      if (!eval_.evaluate(w, certs_).accept) return false;
    }
    return true;
  }

  // `abort` is polled between placements; a true return abandons the search.
  template <class Abort>
  bool descend(std::size_t t, const Abort& abort) {
    if (t == plan_.order.size()) return true;
    for (std::uint64_t d = 0; d < plan_.radix[t]; ++d) {
      if ((++nodes_ & 0xFFF) == 0 && abort()) return false;
      if (place(t, d) && descend(t + 1, abort)) return true;
    }
    return false;
  }

  std::uint64_t rank() const {
    std::uint64_t r = 0;
    for (std::size_t t = 0; t < digits_.size(); ++t) r += digits_[t] * plan_.weight[t];
    return r;
  }

  const Assignment& certs() const { return certs_; }
  std::uint64_t evaluations() const { return evaluations_; }

 private:
  LocalEvaluator eval_;
  const Plan& plan_;
  const SearchSpace& space_;
  Assignment certs_;
  std::vector<std::uint64_t> digits_;
  std::uint64_t evaluations_ = 0;
  std::uint64_t nodes_ = 0;
};

constexpr std::uint64_t kChunkTarget = 4096;
constexpr std::uint64_t kSampleBlock = 1024;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct BlockResult {
  std::optional<std::uint64_t> hit;  // index within the block
  Assignment witness;
  std::uint64_t evaluations = 0;
};

BlockResult sample_block(LocalEvaluator& eval, const SearchSpace& space, std::uint64_t seed, std::uint64_t block,
                         std::uint64_t count) {
  BlockResult out;
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64(block)));
  const std::size_t n = eval.size();
  Assignment certs(n);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      const auto& a = space.alphabets[v];
      certs[v] = a[std::uniform_int_distribution<std::size_t>(0, a.size() - 1)(rng)];
    }
    bool all = true;
    for (Vertex v = 0; v < n && all; ++v) {
      ++out.evaluations;
      all = eval.evaluate(v, certs).accept;
    }
    if (all) {
      out.hit = i;
      out.witness = certs;
      return out;
    }
  }
  return out;
}

bool space_empty(const SearchSpace& space) {
  return std::any_of(space.alphabets.begin(), space.alphabets.end(), [](const auto& a) { return a.empty(); });
}

}  // namespace

SoundnessReport exhaustive_soundness(const Scheme& scheme, const Instance& inst, const SearchSpace& space) {
  const auto start = Clock::now();
  check_space(inst, space);
  refuse_if_oversized(space);
  SoundnessReport report = start_report(inst, space, SearchMode::exhaustive);
  if (space_empty(space) || inst.size() == 0) return report;

  const LocalEvaluator eval(scheme, inst);
  const Plan plan = make_plan(eval, space);
  const std::size_t n = inst.size();

  // Chunks are the prefixes of the first `depth` positions, in lexicographic order.
  std::size_t depth = 0;
  std::uint64_t chunks = 1;
  while (depth < n && chunks < kChunkTarget) chunks *= plan.radix[depth++];

  struct ChunkResult {
    bool found = false;
    std::uint64_t rank = 0;
    Assignment witness;
    std::uint64_t evaluations = 0;
  };
  std::vector<ChunkResult> results(chunks);
  std::atomic<std::uint64_t> first_hit{std::numeric_limits<std::uint64_t>::max()};
  const auto total = static_cast<std::int64_t>(chunks);

#pragma omp parallel
  {
    Searcher searcher(eval, plan, space);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t ci = 0; ci < total; ++ci) {
      const auto c = static_cast<std::uint64_t>(ci);
      if (c > first_hit.load(std::memory_order_relaxed)) continue;
      const std::uint64_t before = searcher.evaluations();
      std::uint64_t rest = c;
      std::uint64_t chunk_weight = chunks;
      bool alive = true;
      for (std::size_t t = 0; t < depth && alive; ++t) {
        chunk_weight /= plan.radix[t];
        alive = searcher.place(t, rest / chunk_weight);
        rest %= chunk_weight;
      }
      const auto abort = [&] { return first_hit.load(std::memory_order_relaxed) < c; };
      ChunkResult& out = results[c];
      if (alive && searcher.descend(depth, abort)) {
        out.found = true;
        out.rank = searcher.rank();
        out.witness = searcher.certs();
        std::uint64_t seen = first_hit.load();
        while (c < seen && !first_hit.compare_exchange_weak(seen, c)) {
        }
      }
      out.evaluations = searcher.evaluations() - before;
    }
  }

  const std::uint64_t hit = first_hit.load();
  for (std::uint64_t c = 0; c < chunks && c <= hit; ++c) report.evaluations += results[c].evaluations;
  if (hit < chunks) {
    report.fooling = std::move(results[hit].witness);
    report.tested = results[hit].rank + 1;
  } else {
    report.tested = plan.cardinality;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SoundnessReport randomized_soundness(const Scheme& scheme, const Instance& inst, const SearchSpace& space,
                                     std::uint64_t samples, std::uint64_t seed) {
  const auto start = Clock::now();
  check_space(inst, space);
  SoundnessReport report = start_report(inst, space, SearchMode::randomized);
  report.seed = seed;
  if (space_empty(space) || samples == 0) return report;

  const LocalEvaluator eval(scheme, inst);
  const std::uint64_t blocks = (samples + kSampleBlock - 1) / kSampleBlock;
  std::vector<BlockResult> results(blocks);
  std::atomic<std::uint64_t> first_hit{std::numeric_limits<std::uint64_t>::max()};
  const auto total = static_cast<std::int64_t>(blocks);

#pragma omp parallel
  {
    LocalEvaluator local = eval;
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t bi = 0; bi < total; ++bi) {
      const auto b = static_cast<std::uint64_t>(bi);
      if (b > first_hit.load(std::memory_order_relaxed)) continue;
      const std::uint64_t count = std::min(kSampleBlock, samples - b * kSampleBlock);
      results[b] = sample_block(local, space, seed, b, count);
      if (results[b].hit) {
        std::uint64_t seen = first_hit.load();
        while (b < seen && !first_hit.compare_exchange_weak(seen, b)) {
        }
      }
    }
  }

  const std::uint64_t hit = first_hit.load();
  for (std::uint64_t b = 0; b < blocks && b <= hit; ++b) report.evaluations += results[b].evaluations;
  if (hit < blocks) {
    report.fooling = std::move(results[hit].witness);
    report.tested = hit * kSampleBlock + *results[hit].hit + 1;
  } else {
    report.tested = samples;
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

namespace serial {

SoundnessReport exhaustive_soundness(const Scheme& scheme, const Instance& inst, const SearchSpace& space) {
  const auto start = Clock::now();
  check_space(inst, space);
  refuse_if_oversized(space);
  SoundnessReport report = start_report(inst, space, SearchMode::exhaustive);
  if (space_empty(space) || inst.size() == 0) return report;

  const LocalEvaluator eval(scheme, inst);
  const Plan plan = make_plan(eval, space);
  Searcher searcher(eval, plan, space);
  if (searcher.descend(0, [] { return false; })) {
    report.fooling = searcher.certs();
    report.tested = searcher.rank() + 1;
  } else {
    report.tested = plan.cardinality;
  }
  report.evaluations = searcher.evaluations();
  report.elapsed_seconds = seconds_since(start);
  return report;
}

SoundnessReport randomized_soundness(const Scheme& scheme, const Instance& inst, const SearchSpace& space,
                                     std::uint64_t samples, std::uint64_t seed) {
  const auto start = Clock::now();
  check_space(inst, space);
  SoundnessReport report = start_report(inst, space, SearchMode::randomized);
  report.seed = seed;
  if (space_empty(space) || samples == 0) return report;

  LocalEvaluator eval(scheme, inst);
  report.tested = samples;
  for (std::uint64_t b = 0; b * kSampleBlock < samples; ++b) {
    const std::uint64_t count = std::min(kSampleBlock, samples - b * kSampleBlock);
    BlockResult r = sample_block(eval, space, seed, b, count);
    report.evaluations += r.evaluations;
    if (r.hit) {
      report.fooling = std::move(r.witness);
      report.tested = b * kSampleBlock + *r.hit + 1;
      break;
    }
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

}  // namespace serial

// ---------------------------------------------------------------------------
// Enumeration of small graphs up to isomorphism

std::string_view to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::chordal:
      return "chordal";
    case GraphClass::grid:
      return "grid";
    case GraphClass::tree:
      return "tree";
    case GraphClass::connected:
      return "connected";
  }
  return "?";
}

GraphClass parse_graph_class(std::string_view text) {
  for (auto c : {GraphClass::chordal, GraphClass::grid, GraphClass::tree, GraphClass::connected}) {
    if (text == to_string(c)) return c;
  }
  throw std::invalid_argument("unknown graph class '" + std::string(text) + "'");
}

std::vector<std::uint8_t> canonical_code(const Graph& g) {
  const std::size_t n = g.vertex_count();
  // Orderings are restricted to non-increasing degree, an invariant order,
  // and the code is the lexicographic maximum over all of them.
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(perm[j]) == g.degree(perm[i])) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  std::vector<std::uint8_t> best;
  std::vector<std::uint8_t> code;
  code.reserve(n * (n - 1) / 2 + 1);
  while (true) {
    code.assign(1, static_cast<std::uint8_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) code.push_back(g.has_edge(perm[i], perm[j]) ? 1 : 0);
    }
    if (code > best) best = code;
    std::size_t c = classes.size();
    while (c > 0) {
      --c;
      if (std::next_permutation(perm.begin() + classes[c].first, perm.begin() + classes[c].second)) break;
      if (c == 0) return best;
    }
    if (classes.empty()) return best;
  }
}

namespace {

class IsoSet {
 public:
  bool insert(const Graph& g) { return seen_.insert(canonical_code(g)).second; }

 private:
  std::set<std::vector<std::uint8_t>> seen_;
};

Graph with_new_vertex(const Graph& g, const std::vector<Vertex>& attach) {
  auto edges = g.edges();
  const auto v = static_cast<Vertex>(g.vertex_count());
  for (Vertex u : attach) edges.emplace_back(u, v);
  return Graph::from_edges(g.vertex_count() + 1, edges);
}

std::vector<Graph> grow_chordal(const std::vector<Graph>& prev) {
  std::vector<Graph> out;
  IsoSet seen;
  for (const Graph& g : prev) {
    const std::size_t n = g.vertex_count();
    // A new simplicial vertex may attach to any nonempty clique.
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      std::vector<Vertex> members;
      for (Vertex v = 0; v < n; ++v) {
        if (mask & (1U << v)) members.push_back(v);
      }
      bool clique = true;
      for (std::size_t i = 0; i < members.size() && clique; ++i) {
        for (std::size_t j = i + 1; j < members.size() && clique; ++j) clique = g.has_edge(members[i], members[j]);
      }
      if (!clique) continue;
      Graph h = with_new_vertex(g, members);
      if (seen.insert(h)) out.push_back(std::move(h));
    }
  }
  return out;
}

std::vector<Graph> grow_trees(const std::vector<Graph>& prev) {
  std::vector<Graph> out;
  IsoSet seen;
  for (const Graph& g : prev) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      Graph h = with_new_vertex(g, {v});
      if (seen.insert(h)) out.push_back(std::move(h));
    }
  }
  return out;
}

std::vector<Graph> all_connected(std::size_t n) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  if (pairs.size() > 28) throw std::invalid_argument("connected-graph enumeration is limited to n <= 8");
  std::vector<Graph> out;
  IsoSet seen;
  for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
    if (static_cast<std::size_t>(std::popcount(mask)) + 1 < n) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1ULL << i)) edges.push_back(pairs[i]);
    }
    std::vector<std::uint8_t> reached(n, 0);
    std::vector<Vertex> stack{0};
    reached[0] = 1;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (const auto& [a, b] : edges) {
        const Vertex y = a == x ? b : (b == x ? a : x);
        if (y != x && !reached[y]) {
          reached[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (std::count(reached.begin(), reached.end(), 1) != static_cast<std::ptrdiff_t>(n)) continue;
    Graph g = Graph::from_edges(n, edges);
    if (seen.insert(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> enumerate_graphs(GraphClass cls, std::size_t n_max, std::size_t max_side) {
  std::vector<Graph> out;
  switch (cls) {
    case GraphClass::grid:
      for (std::size_t k = 1; k * k <= n_max; ++k) {
        for (std::size_t q = k; k * q <= n_max; ++q) {
          if (k * q < 2) continue;
          if (max_side != 0 && q > max_side) break;
          out.push_back(gen_grid(k, q).graph);
        }
      }
      return out;
    case GraphClass::chordal:
    case GraphClass::tree: {
      if (n_max < 2) return out;
      std::vector<Graph> level{gen_path(2)};
      for (std::size_t n = 2; n <= n_max; ++n) {
        out.insert(out.end(), level.begin(), level.end());
        if (n < n_max) level = cls == GraphClass::tree ? grow_trees(level) : grow_chordal(level);
      }
      return out;
    }
    case GraphClass::connected:
      for (std::size_t n = 2; n <= n_max; ++n) {
        auto level = all_connected(n);
        out.insert(out.end(), level.begin(), level.end());
      }
      return out;
  }
  return out;
}

std::vector<Instance> enumerate_no_instances(GraphClass cls, std::size_t n_max, std::size_t max_side) {
  std::vector<Instance> out;
  for (const Graph& g : enumerate_graphs(cls, n_max, max_side)) {
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        Instance inst = Instance::unlabeled(g);
        inst.selected[u] = 1;
        inst.selected[v] = 1;
        out.push_back(std::move(inst));
      }
    }
  }
  return out;
}

Instance with_sequential_ids(Instance inst) {
  std::vector<Identifier> ids(inst.size());
  std::iota(ids.begin(), ids.end(), Identifier{1});
  inst.ids = std::move(ids);
  return inst;
}

}  // namespace lcert
