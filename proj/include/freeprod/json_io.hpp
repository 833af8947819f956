#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "freeprod/classify.hpp"
#include "freeprod/dudley.hpp"
#include "freeprod/group.hpp"
#include "freeprod/oracle.hpp"
#include "freeprod/word.hpp"

namespace freeprod {

using Json = nlohmann::ordered_json;

// Group spec files:
//
//   {"factors": [{"kind": "cyclic", "order": 3},
//                {"kind": "table", "size": 2, "mul": [0, 1, 1, 0], "identity": 0}],
//    "generators": {"x": [0, 1], "y": [1, 1]}}
//
// Order 0 is the infinite cyclic group. Structural problems in the JSON are
// reported as SpecError, like failed group axioms.
GroupSpec spec_from_json(const Json& j);
GroupSpec load_spec(const std::filesystem::path& path);

Json letter_to_json(const Letter& a);
Json witness_to_json(const GroupSpec& spec, const ScSquaredWitness& w);

// One classification record: reduced form, length, type, cyclic
// decomposition, membership flags and the S^c*S^c witness form, if any.
Json classification_record(const GroupSpec& spec, const Word& u);

Json report_to_json(const GroupSpec& spec, const LemmaReport& r);
Json report_to_json(const SimReport& r);

// {"error": {"kind": kind, "message": message}}
Json error_json(const std::string& kind, const std::string& message);

}  // namespace freeprod
