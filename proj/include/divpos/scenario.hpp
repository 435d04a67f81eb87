#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "divpos/kernels.hpp"
#include "divpos/oracle.hpp"

namespace divpos::scenario {

using Json = nlohmann::ordered_json;

enum class Kind { classify, hn, frobsplit, cone, rationalize, counterexample };

const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(std::string_view name);

struct Scenario {
  std::string id;
  Kind kind = Kind::classify;
  Json payload;
};

enum class FileFormat { json, toml };

// Parse and schema-validate a scenario batch. Every scenario must match
// `expected_kind` when given (scenarios may then omit their own "kind").
// Schema violations name the scenario id and the JSON pointer path.
std::vector<Scenario> parse_scenarios(std::string_view text, FileFormat format,
                                      std::optional<Kind> expected_kind = std::nullopt);

// Reads the file and dispatches on extension (.toml) or a leading '{'.
std::vector<Scenario> parse_scenarios_file(const std::string& path,
                                           std::optional<Kind> expected_kind = std::nullopt);

// Canonical re-emission of a parsed scenario (parse . emit is idempotent).
Json scenario_to_json(const Scenario& s);

struct Outcome {
  std::string id;
  Kind kind = Kind::classify;
  bool ok = false;
  Json body;  // result on success, {"code","message"} on error
};

// Evaluate one scenario; domain errors surface as exceptions.
Json evaluate(const Scenario& s);

// Evaluate a batch; scenarios are independent and may run in parallel, the
// output order always matches the input order and one failure never
// disturbs the others.
std::vector<Outcome> evaluate_batch(const std::vector<Scenario>& scenarios, kernels::Exec exec);

enum class ReportFormat { text, json };

// Deterministic, byte-stable rendering of a batch result.
std::string render_report(const std::vector<Outcome>& outcomes, ReportFormat format);

bool all_ok(const std::vector<Outcome>& outcomes);

// Shared payload decoders (also used by the CLI and tests).
Curve parse_curve(const Json& j, const std::string& path);
DivClass parse_div_class(const Json& j, const std::string& path);
HNProfile parse_bundle_profile(const Json& j, const std::string& path);

}  // namespace divpos::scenario
