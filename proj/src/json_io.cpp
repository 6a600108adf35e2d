#include "lcert/json_io.hpp"

#include <stdexcept>
#include <string>

namespace lcert {

Json instance_to_json(const Instance& inst) {
  Json out;
  out["n"] = inst.size();
  Json edges = Json::array();
  for (const auto& [u, v] : inst.graph.edges()) edges.push_back({u, v});
  out["edges"] = std::move(edges);
  Json selected = Json::array();
  for (auto s : inst.selected) selected.push_back(s != 0);
  out["selected"] = std::move(selected);
  out["ids"] = inst.ids ? Json(*inst.ids) : Json(nullptr);
  return out;
}

Instance instance_from_json(const Json& j) {
  try {
    const auto n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair");
      edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    Instance inst = Instance::unlabeled(Graph::from_edges(n, edges));
    if (j.contains("selected")) {
      const auto& sel = j.at("selected");
      if (sel.size() != n) throw std::invalid_argument("selected has wrong length");
      for (std::size_t v = 0; v < n; ++v) inst.selected[v] = sel[v].get<bool>() ? 1 : 0;
    }
    if (j.contains("ids") && !j.at("ids").is_null()) inst.ids = j.at("ids").get<std::vector<Identifier>>();
    inst.validate();
    return inst;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad instance JSON: ") + e.what());
  }
}

Json lb_instance_to_json(const LBInstance& g) {
  Json out = instance_to_json(g.instance);
  out["lb"] = {{"r", g.radius}, {"a_path", g.a_path}, {"b_path", g.b_path}};
  return out;
}

Json assignment_to_json(const Assignment& p) {
  Json certs = Json::array();
  for (const auto& c : p) certs.push_back(c.to_string());
  return {{"certs", std::move(certs)}};
}

Assignment assignment_from_json(const Json& j) {
  try {
    Assignment out;
    for (const auto& c : j.at("certs")) out.push_back(Certificate::from_string(c.get<std::string>()));
    return out;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(std::string("bad assignment JSON: ") + e.what());
  }
}

Json verdict_to_json(const Verdict& v) {
  Json accepts = Json::array();
  Json reasons = Json::array();
  for (std::size_t i = 0; i < v.accepts.size(); ++i) {
    accepts.push_back(v.accepts[i] != 0);
    reasons.push_back(v.reasons[i].empty() ? Json(nullptr) : Json(std::string(v.reasons[i])));
  }
  return {{"accepts", std::move(accepts)}, {"global", v.global}, {"reasons", std::move(reasons)}};
}

Json report_to_json(const SoundnessReport& r) {
  Json out;
  out["digest"] = r.digest;
  out["mode"] = std::string(to_string(r.mode));
  out["cardinality"] = static_cast<double>(r.cardinality);
  out["found"] = r.found();
  out["fooling"] = r.fooling ? assignment_to_json(*r.fooling)["certs"] : Json(nullptr);
  out["tested"] = r.tested;
  out["evaluations"] = r.evaluations;
  if (r.mode == SearchMode::randomized) out["seed"] = r.seed;
  return out;
}

Json report_to_json(const FoolingReport& r) {
  Json out;
  out["n"] = r.params.n;
  out["r"] = r.params.r;
  out["k"] = r.params.k;
  out["l"] = r.params.l;
  out["seed"] = r.params.seed;
  out["n_a"] = r.partition.n_a;
  out["n_b"] = r.partition.n_b;
  out["universe"] = r.partition.universe;
  out["family_diameter"] = r.family_diameter;
  out["color_bits"] = r.color_bits;
  out["distinct_colors"] = r.distinct_colors;
  out["largest_class"] = r.largest_class;
  out["found"] = r.found();
  if (r.c4) {
    const auto& [i, j, ip, jp] = *r.c4;
    out["c4"] = {i, j, ip, jp};
  } else {
    out["c4"] = nullptr;
  }
  if (r.spliced) {
    out["accepted"] = r.fooled();
    out["window_checked"] = r.window_checked;
    out["window_mismatches"] = r.window_mismatches;
    out["splice_points"] = r.spliced->splice_points;
    out["spliced"] = instance_to_json(r.spliced->instance);
    out["certs"] = assignment_to_json(r.spliced_certs)["certs"];
    out["verdict"] = verdict_to_json(*r.verdict);
  }
  return out;
}

}  // namespace lcert
