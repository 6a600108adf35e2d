#pragma once

#include <json.hpp>

#include "lcert/certification.hpp"
#include "lcert/generators.hpp"
#include "lcert/lowerbound.hpp"
#include "lcert/soundness.hpp"

namespace lcert {

/// Keys keep insertion order so emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

/// {"n", "edges": [[u, v], ...], "selected": [bool, ...], "ids": [...] | null}
Json instance_to_json(const Instance& inst);
/// Throws std::invalid_argument on malformed input.
Instance instance_from_json(const Json& j);
/// Instance JSON plus "lb": {"r", "a_path", "b_path"}.
Json lb_instance_to_json(const LBInstance& g);

/// {"certs": ["0101", ...]}
Json assignment_to_json(const Assignment& p);
Assignment assignment_from_json(const Json& j);

/// {"accepts": [...], "global": bool, "reasons": [string | null, ...]}
Json verdict_to_json(const Verdict& v);

Json report_to_json(const SoundnessReport& r);
Json report_to_json(const FoolingReport& r);

}  // namespace lcert
