// lcert: generate instances, run schemes, search for fooling assignments and
// run the lower-bound splice pipeline. Every subcommand prints one JSON
// document. Exit codes: 0 success or accept, 1 reject or property
// violation, 2 usage error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcert/certification.hpp"
#include "lcert/generators.hpp"
#include "lcert/json_io.hpp"
#include "lcert/lowerbound.hpp"
#include "lcert/parallel.hpp"
#include "lcert/schemes.hpp"
#include "lcert/soundness.hpp"
#include "lcert/version.hpp"

namespace {

using namespace lcert;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::size_t workers = 0;
  bool timing = false;
  std::string output = "-";
};

struct SchemeArgs {
  SchemeConfig cfg;
  std::string counting = "min-id-parent";
  std::optional<std::size_t> id_bits;
  std::optional<std::size_t> dist_bits;

  void add(CLI::App& app) {
    app.add_option("--scheme", cfg.name, "Scheme name")->check(CLI::IsMember(scheme_names()));
    app.add_option("--id-bits", id_bits, "Identifier field width (classic, truncated)");
    app.add_option("--dist-bits", dist_bits, "Distance field width (classic, smallid)");
    app.add_option("--B", cfg.id_bit_length, "Identifier bit length (dense)");
    app.add_option("--retry", cfg.retry_limit, "Coverage retries (dense)");
    app.add_option("--scheme-seed", cfg.seed, "Prover seed (dense)");
    app.add_option("--c-id", cfg.c_id, "Minimum-identifier bound (smallid)");
    app.add_option("--counting", counting, "Counting rule (smallid)")
        ->check(CLI::IsMember({"as-written", "children-only", "min-id-parent"}));
    app.add_option("--truncate-bits", cfg.truncate_bits, "Bits kept per field (truncated)");
    app.add_option("--constant-bits", cfg.constant_bits, "Certificate length (constant)");
  }

  SchemeConfig config() const {
    SchemeConfig out = cfg;
    out.counting = parse_counting_rule(counting);
    out.id_bits = id_bits;
    out.dist_bits = dist_bits;
    return out;
  }
};

Json config_json(const SchemeConfig& c) {
  Json out;
  out["scheme"] = c.name;
  out["id_bits"] = c.id_bits ? Json(*c.id_bits) : Json(nullptr);
  out["dist_bits"] = c.dist_bits ? Json(*c.dist_bits) : Json(nullptr);
  out["B"] = c.id_bit_length;
  out["retry"] = c.retry_limit;
  out["scheme_seed"] = c.seed;
  out["c_id"] = c.c_id;
  out["counting"] = std::string(to_string(c.counting));
  out["truncate_bits"] = c.truncate_bits;
  out["constant_bits"] = c.constant_bits;
  return out;
}

Json header(std::string_view command) {
  return {{"tool", "lcert"}, {"version", std::string(kVersion)}, {"command", std::string(command)}};
}

void emit(const Json& doc, const Common& common) {
  const std::string text = doc.dump(2) + "\n";
  if (common.output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(common.output);
  if (!out) throw UsageError("cannot write " + common.output);
  out << text;
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string cls = "path";
  std::size_t n = 6;
  std::size_t rows = 2;
  std::size_t cols = 3;
  std::size_t max_clique = 4;
  double p = 0.3;
  std::size_t min_degree = 0;
  std::size_t r = 1;
  std::size_t k = 0;
  std::size_t l = 0;
  std::uint64_t seed = 1;
  std::vector<Vertex> select;
  std::string ids = "none";
};

int cmd_generate(const GenerateArgs& a, const Common& common) {
  if (a.cls == "lb") {
    const FamilyParams f{a.n, a.r, a.k, a.l, a.seed};
    const IdPartition part = make_partition(f);
    emit(lb_instance_to_json(family_member(part, 0, 0, f)), common);
    return kOk;
  }
  Graph g;
  if (a.cls == "path") {
    g = gen_path(a.n);
  } else if (a.cls == "cycle") {
    g = gen_cycle(a.n);
  } else if (a.cls == "complete") {
    g = gen_complete(a.n);
  } else if (a.cls == "star") {
    g = gen_star(a.n);
  } else if (a.cls == "grid") {
    g = gen_grid(a.rows, a.cols).graph;
  } else if (a.cls == "chordal") {
    g = gen_tree_of_cliques(random_clique_tree_shape(a.n, a.max_clique, a.seed), a.seed);
  } else if (a.cls == "tree") {
    g = gen_random_tree(a.n, a.seed);
  } else if (a.cls == "random") {
    g = gen_random_connected(a.n, a.p, a.seed);
  } else if (a.cls == "dense") {
    g = gen_dense_random(a.n, a.p, a.min_degree, a.seed);
  } else {
    throw UsageError("unknown class '" + a.cls + "'");
  }
  Instance inst = Instance::unlabeled(std::move(g));
  for (Vertex v : a.select) {
    if (v >= inst.size()) throw UsageError("selected vertex " + std::to_string(v) + " out of range");
    inst.selected[v] = 1;
  }
  if (a.ids == "seq") {
    inst = with_sequential_ids(std::move(inst));
  } else if (a.ids == "random") {
    inst = with_sequential_ids(std::move(inst));
    std::mt19937_64 rng(a.seed ^ 0x5eed);
    std::shuffle(inst.ids->begin(), inst.ids->end(), rng);
  }
  emit(instance_to_json(inst), common);
  return kOk;
}

// --- certify ----------------------------------------------------------------

int cmd_certify(const SchemeArgs& s, const std::string& instance_path, const std::string& certs_path,
                const Common& common) {
  const Instance inst = instance_from_json(read_json(instance_path));
  const SchemeConfig cfg = fit_config(s.config(), inst);
  const SchemePtr scheme = make_scheme(cfg);
  Json doc = header("certify");
  doc["config"] = config_json(cfg);
  doc["digest"] = instance_digest(inst);
  doc["bound"] = scheme->size_bound(SizeContext::of(inst));

  Assignment p;
  if (!certs_path.empty()) {
    p = assignment_from_json(read_json(certs_path));
    if (p.size() != inst.size()) throw UsageError("assignment size does not match the instance");
    doc["source"] = "supplied";
  } else {
    try {
      p = scheme->prove(inst);
    } catch (const ProverError& e) {
      doc["source"] = "prover";
      doc["prover_error"] = e.what();
      emit(doc, common);
      return kViolation;
    }
    doc["source"] = "prover";
  }
  const Verdict v = run_verifier(*scheme, inst, p);
  doc["max_bits"] = max_cert_bits(p);
  doc["certs"] = assignment_to_json(p)["certs"];
  doc["verdict"] = verdict_to_json(v);
  emit(doc, common);
  return v.global ? kOk : kViolation;
}

// Widths do not affect anonymity, so any fitted instance will do.
bool needs_identifiers(const SchemeConfig& cfg) {
  return !make_scheme(fit_config(cfg, with_sequential_ids(Instance::unlabeled(gen_path(2)))))->anonymous();
}

// --- soundness --------------------------------------------------------------

struct SoundnessArgs {
  std::string cls = "chordal";
  std::size_t n_max = 5;
  std::size_t max_side = 0;
  std::string instance_path;
  std::string bits = "auto";
  std::uint64_t samples = 0;
  std::uint64_t seed = 1;
  std::uint64_t cap = SearchSpace::kDefaultCap;
  bool ids = false;
  bool all_reports = false;
};

int cmd_soundness(const SchemeArgs& s, const SoundnessArgs& a, const Common& common) {
  std::vector<Instance> instances;
  if (!a.instance_path.empty()) {
    instances.push_back(instance_from_json(read_json(a.instance_path)));
  } else {
    instances = enumerate_no_instances(parse_graph_class(a.cls), a.n_max, a.max_side);
  }
  const SchemeConfig base = s.config();
  const bool want_ids = a.ids || needs_identifiers(base);

  Json doc = header("soundness");
  doc["config"] = config_json(base);
  doc["class"] = a.instance_path.empty() ? Json(a.cls) : Json(nullptr);
  doc["n_max"] = a.n_max;
  doc["max_side"] = a.max_side;
  doc["bits"] = a.bits;
  doc["mode"] = a.samples > 0 ? "randomized" : "exhaustive";
  doc["samples"] = a.samples;
  doc["seed"] = a.seed;
  doc["cap"] = a.cap;

  const auto start = std::chrono::steady_clock::now();
  std::size_t fooled = 0;
  std::uint64_t tested = 0;
  Json reports = Json::array();
  for (Instance inst : instances) {
    if (want_ids && !inst.ids) inst = with_sequential_ids(std::move(inst));
    const SchemeConfig cfg = fit_config(base, inst);
    const SchemePtr scheme = make_scheme(cfg);
    const std::size_t bits =
        a.bits == "auto" ? scheme->size_bound(SizeContext::of(inst)) : static_cast<std::size_t>(std::stoul(a.bits));
    const SearchSpace space = SearchSpace::for_scheme(*scheme, inst, bits, a.cap);
    const SoundnessReport r = a.samples > 0 ? randomized_soundness(*scheme, inst, space, a.samples, a.seed)
                                            : exhaustive_soundness(*scheme, inst, space);
    tested += r.tested;
    if (r.found()) ++fooled;
    if (r.found() || a.all_reports) {
      Json entry = report_to_json(r);
      entry["bits"] = bits;
      entry["instance"] = instance_to_json(inst);
      if (common.timing) entry["elapsed_seconds"] = r.elapsed_seconds;
      reports.push_back(std::move(entry));
    }
  }
  doc["instances"] = instances.size();
  doc["tested"] = tested;
  doc["fooled"] = fooled;
  doc["reports"] = std::move(reports);
  if (common.timing) {
    doc["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  emit(doc, common);
  return fooled == 0 ? kOk : kViolation;
}

// --- fooling ----------------------------------------------------------------

int cmd_fooling(const SchemeArgs& s, const FamilyParams& f, const Common& common) {
  const FamilyParams resolved = f.resolved();
  const SchemeConfig cfg = fit_config_to_family(s.config(), make_partition(resolved), resolved);
  const SchemePtr scheme = make_scheme(cfg);
  const auto start = std::chrono::steady_clock::now();
  const FoolingReport r = fooling_demo(*scheme, resolved);
  Json doc = header("fooling");
  doc["config"] = config_json(cfg);
  doc["report"] = report_to_json(r);
  if (common.timing) {
    doc["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  emit(doc, common);
  // A C4 on a family the scheme is complete on must fool the verifier.
  if (r.found() && (!r.fooled() || r.window_mismatches != 0)) return kViolation;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local certification schemes for at-most-one-selected, their soundness oracle and lower-bound pipeline"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  // Common options may follow the subcommand too.
  app.fallthrough();
  Common common;
  app.add_option("--workers", common.workers, "OpenMP workers (0 = machine default)");
  app.add_flag("--timing", common.timing, "Include elapsed times in reports");
  app.add_option("-o,--output", common.output, "Output file ('-' for stdout)");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit an instance as JSON");
  generate->add_option("--class", gen.cls, "path|cycle|complete|star|grid|chordal|tree|random|dense|lb");
  generate->add_option("--n", gen.n, "Vertex count (family size for lb)");
  generate->add_option("--rows", gen.rows);
  generate->add_option("--cols", gen.cols);
  generate->add_option("--max-clique", gen.max_clique);
  generate->add_option("--p", gen.p, "Edge probability (random, dense)");
  generate->add_option("--min-degree", gen.min_degree, "Minimum degree (dense)");
  generate->add_option("--r", gen.r, "Radius (lb)");
  generate->add_option("--k", gen.k, "Arm a length (lb, 0 = 2r+2)");
  generate->add_option("--l", gen.l, "Arm b length (lb, 0 = 2r+2)");
  generate->add_option("--seed", gen.seed);
  generate->add_option("--select", gen.select, "Vertices to mark selected");
  generate->add_option("--ids", gen.ids, "none|seq|random")->check(CLI::IsMember({"none", "seq", "random"}));

  SchemeArgs certify_scheme;
  std::string instance_path;
  std::string certs_path;
  auto* certify = app.add_subcommand("certify", "Run a scheme on an instance");
  certify_scheme.add(*certify);
  certify->add_option("--instance", instance_path, "Instance JSON ('-' for stdin)")->required();
  certify->add_option("--certs", certs_path, "Assignment JSON; omit to run the prover");

  SchemeArgs sound_scheme;
  SoundnessArgs sound;
  auto* soundness = app.add_subcommand("soundness", "Search for fooling assignments on no-instances");
  sound_scheme.add(*soundness);
  soundness->add_option("--class", sound.cls, "chordal|grid|tree|connected");
  soundness->add_option("--n-max", sound.n_max);
  soundness->add_option("--max-side", sound.max_side, "Largest grid side (0 = unbounded)");
  soundness->add_option("--instance", sound.instance_path, "Single instance instead of a class sweep");
  soundness->add_option("--bits", sound.bits, "Certificate bits, or 'auto' for the size bound");
  soundness->add_option("--samples", sound.samples, "Random samples per instance (0 = exhaustive)");
  soundness->add_option("--seed", sound.seed);
  soundness->add_option("--cap", sound.cap, "Largest exhaustive space");
  soundness->add_flag("--ids", sound.ids, "Attach identifiers 1..n");
  soundness->add_flag("--all-reports", sound.all_reports, "Report every instance, not only fooled ones");

  SchemeArgs fool_scheme;
  fool_scheme.cfg.name = "constant";
  FamilyParams fam;
  auto* fooling = app.add_subcommand("fooling", "Lower-bound splice pipeline");
  fool_scheme.add(*fooling);
  fooling->add_option("--n", fam.n, "Family size");
  fooling->add_option("--r", fam.r, "Radius");
  fooling->add_option("--k", fam.k, "Arm a length (0 = 2r+2)");
  fooling->add_option("--l", fam.l, "Arm b length (0 = 2r+2)");
  fooling->add_option("--seed", fam.seed, "Partition seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    set_worker_count(common.workers);
    if (*generate) return cmd_generate(gen, common);
    if (*certify) return cmd_certify(certify_scheme, instance_path, certs_path, common);
    if (*soundness) return cmd_soundness(sound_scheme, sound, common);
    if (*fooling) return cmd_fooling(fool_scheme, fam, common);
  } catch (const UsageError& e) {
    std::cerr << "lcert: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lcert: " << e.what() << "\n";
    return kUsage;
  } catch (const SearchRefused& e) {
    std::cerr << "lcert: " << e.what() << "\n";
    return kUsage;
  } catch (const ProverError& e) {
    std::cerr << "lcert: prover failed: " << e.what() << "\n";
    return kViolation;
  } catch (const std::exception& e) {
    std::cerr << "lcert: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
