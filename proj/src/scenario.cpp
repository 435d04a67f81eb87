#include "divpos/scenario.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "divpos/ns_cone.hpp"
#include "divpos/rationalize.hpp"
#include "divpos/toml_lite.hpp"

namespace divpos::scenario {

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& msg) {
  fail(ErrorCode::SchemaError, path + ": " + msg);
}

const Json& member(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_fail(path + "/" + key, "missing");
  return *it;
}

const Json* optional_member(const Json& obj, const std::string& path, const char* key) {
  if (!obj.is_object()) schema_fail(path, "expected an object");
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

long long int_value(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_fail(path, "expected an integer");
  return j.get<long long>();
}

bool bool_value(const Json& j, const std::string& path) {
  if (!j.is_boolean()) schema_fail(path, "expected a boolean");
  return j.get<bool>();
}

std::string string_value(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

Rational rational_value(const Json& j, const std::string& path) {
  const std::string text = string_value(j, path);
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
}

FieldElem elem_value(const Json& j, const std::string& path) {
  const std::string text = string_value(j, path);
  try {
    return FieldElem::parse(text);
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
}

}  // namespace

Curve parse_curve(const Json& j, const std::string& path) {
  Curve c;
  c.genus = static_cast<int>(int_value(member(j, path, "genus"), path + "/genus"));
  c.characteristic = Int(int_value(member(j, path, "char"), path + "/char"));
  if (const Json* f = optional_member(j, path, "over_fpbar")) {
    c.over_fpbar = bool_value(*f, path + "/over_fpbar");
  } else {
    c.over_fpbar = c.characteristic > 0;
  }
  try {
    c.validate();
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
  return c;
}

DivClass parse_div_class(const Json& j, const std::string& path) {
  return DivClass{elem_value(member(j, path, "theta"), path + "/theta"),
                  elem_value(member(j, path, "fiber"), path + "/fiber")};
}

namespace {

SplitBundle parse_split(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_fail(path, "expected a nonempty array of integer degrees");
  std::vector<Int> degrees;
  for (std::size_t i = 0; i < j.size(); ++i) {
    degrees.emplace_back(int_value(j[i], path + "/" + std::to_string(i)));
  }
  return SplitBundle(std::move(degrees));
}

HNProfile parse_hn(const Json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_fail(path, "expected a nonempty array of [rank, degree] pairs");
  std::vector<HNPiece> pieces;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ppath = path + "/" + std::to_string(i);
    const Json& pair = j[i];
    if (!pair.is_array() || pair.size() != 2) schema_fail(ppath, "expected [rank, degree]");
    HNPiece piece;
    piece.rank = static_cast<int>(int_value(pair[0], ppath + "/0"));
    piece.degree = rational_value(pair[1], ppath + "/1");
    pieces.push_back(std::move(piece));
  }
  try {
    return HNProfile(std::move(pieces));
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
}

NSLattice parse_lattice(const Json& j, const std::string& path) {
  NSLattice lat;
  lat.rho = static_cast<int>(int_value(member(j, path, "rho"), path + "/rho"));
  lat.anchor_square = Int(int_value(member(j, path, "anchor_square"), path + "/anchor_square"));
  const Json& negatives = member(j, path, "negatives");
  if (!negatives.is_array()) schema_fail(path + "/negatives", "expected an array");
  lat.negatives.clear();
  for (std::size_t i = 0; i < negatives.size(); ++i) {
    lat.negatives.emplace_back(int_value(negatives[i], path + "/negatives/" + std::to_string(i)));
  }
  try {
    lat.validate();
  } catch (const Error& e) {
    schema_fail(path, e.what());
  }
  return lat;
}

NSClass parse_ns_class(const Json& j, const std::string& path) {
  const Json& coords = member(j, path, "coords");
  if (!coords.is_array() || coords.empty()) schema_fail(path + "/coords", "expected a nonempty array");
  NSClass cls;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    cls.coords.push_back(elem_value(coords[i], path + "/coords/" + std::to_string(i)));
  }
  return cls;
}

EffectivityInstance parse_instance(const Json& j, const std::string& path) {
  EffectivityInstance inst;
  const Json& dp = member(j, path, "d_prime");
  if (!dp.is_array() || dp.empty()) schema_fail(path + "/d_prime", "expected a nonempty array");
  for (std::size_t i = 0; i < dp.size(); ++i) {
    inst.d_prime.push_back(rational_value(dp[i], path + "/d_prime/" + std::to_string(i)));
  }
  const Json& principals = member(j, path, "principals");
  if (!principals.is_array()) schema_fail(path + "/principals", "expected an array");
  for (std::size_t pi = 0; pi < principals.size(); ++pi) {
    const std::string ppath = path + "/principals/" + std::to_string(pi);
    const Json& row = principals[pi];
    if (!row.is_array()) schema_fail(ppath, "expected an array");
    std::vector<Rational> vec;
    for (std::size_t i = 0; i < row.size(); ++i) {
      vec.push_back(rational_value(row[i], ppath + "/" + std::to_string(i)));
    }
    inst.principals.push_back(std::move(vec));
  }
  const Json& coeffs = member(j, path, "coeffs");
  if (!coeffs.is_array()) schema_fail(path + "/coeffs", "expected an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    inst.coeffs.push_back(elem_value(coeffs[i], path + "/coeffs/" + std::to_string(i)));
  }
  return inst;
}

// {"bundle":{"split":[...]}} or {"bundle":{"hn":[[r,"d"],...]}}
struct BundleInput {
  std::optional<SplitBundle> split;
  HNProfile profile;
};

BundleInput parse_bundle(const Json& j, const std::string& path) {
  const Json& b = member(j, path, "bundle");
  const std::string bpath = path + "/bundle";
  const Json* split = optional_member(b, bpath, "split");
  const Json* hn = optional_member(b, bpath, "hn");
  if ((split != nullptr) == (hn != nullptr)) {
    schema_fail(bpath, "exactly one of \"split\" and \"hn\" required");
  }
  if (split != nullptr) {
    SplitBundle sb = parse_split(*split, bpath + "/split");
    return BundleInput{sb, hn_profile(sb)};
  }
  return BundleInput{std::nullopt, parse_hn(*hn, bpath + "/hn")};
}

// Schema check at parse time: decode everything, compute nothing.
void validate_payload(const Scenario& s, const std::string& path) {
  switch (s.kind) {
    case Kind::classify:
      parse_curve(member(s.payload, path, "base"), path + "/base");
      parse_bundle(s.payload, path);
      parse_div_class(member(s.payload, path, "divisor"), path + "/divisor");
      break;
    case Kind::hn:
      parse_bundle(s.payload, path);
      break;
    case Kind::frobsplit:
      parse_curve(member(s.payload, path, "base"), path + "/base");
      parse_bundle(s.payload, path);
      break;
    case Kind::cone: {
      const NSLattice lat = parse_lattice(member(s.payload, path, "lattice"), path + "/lattice");
      (void)lat;
      parse_ns_class(member(s.payload, path, "class"), path + "/class");
      if (const Json* other = optional_member(s.payload, path, "pair_with")) {
        parse_ns_class(*other, path + "/pair_with");
      }
      break;
    }
    case Kind::rationalize:
      parse_instance(s.payload, path);
      break;
    case Kind::counterexample:
      parse_lattice(member(s.payload, path, "lattice"), path + "/lattice");
      rational_value(member(s.payload, path, "t"), path + "/t");
      break;
  }
}

}  // namespace

HNProfile parse_bundle_profile(const Json& j, const std::string& path) {
  return parse_bundle(j, path).profile;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::classify: return "classify";
    case Kind::hn: return "hn";
    case Kind::frobsplit: return "frobsplit";
    case Kind::cone: return "cone";
    case Kind::rationalize: return "rationalize";
    case Kind::counterexample: return "counterexample";
  }
  return "?";
}

std::optional<Kind> kind_from_name(std::string_view name) {
  for (Kind k : {Kind::classify, Kind::hn, Kind::frobsplit, Kind::cone, Kind::rationalize,
                 Kind::counterexample}) {
    if (name == kind_name(k)) return k;
  }
  return std::nullopt;
}

std::vector<Scenario> parse_scenarios(std::string_view text, FileFormat format,
                                      std::optional<Kind> expected_kind) {
  Json doc;
  if (format == FileFormat::toml) {
    doc = toml_lite::parse(text);
  } else {
    try {
      doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      fail(ErrorCode::ParseError, std::string("json: ") + e.what());
    }
  }
  const Json& list = member(doc, "", "scenarios");
  if (!list.is_array() || list.empty()) schema_fail("/scenarios", "expected a nonempty array");

  std::vector<Scenario> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string path = "/scenarios/" + std::to_string(i);
    const Json& entry = list[i];
    Scenario s;
    s.id = string_value(member(entry, path, "id"), path + "/id");
    if (const Json* kind = optional_member(entry, path, "kind")) {
      const std::string name = string_value(*kind, path + "/kind");
      auto parsed = kind_from_name(name);
      if (!parsed) schema_fail(path + "/kind", "unknown kind \"" + name + "\"");
      if (expected_kind && *parsed != *expected_kind) {
        schema_fail(path + "/kind", std::string("expected \"") + kind_name(*expected_kind) + "\"");
      }
      s.kind = *parsed;
    } else if (expected_kind) {
      s.kind = *expected_kind;
    } else {
      schema_fail(path + "/kind", "missing");
    }
    s.payload = member(entry, path, "payload");
    if (!s.payload.is_object()) schema_fail(path + "/payload", "expected an object");
    // Validate now so schema problems abort the batch up front; results are
    // recomputed at evaluation time.
    validate_payload(s, path + "/payload");
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Scenario> parse_scenarios_file(const std::string& path,
                                           std::optional<Kind> expected_kind) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  FileFormat format = FileFormat::json;
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".toml") {
    format = FileFormat::toml;
  } else {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '{') format = FileFormat::toml;
  }
  return parse_scenarios(text, format, expected_kind);
}

Json scenario_to_json(const Scenario& s) {
  Json out = Json::object();
  out["id"] = s.id;
  out["kind"] = kind_name(s.kind);
  out["payload"] = s.payload;
  return out;
}

namespace {

Json witness_json(const EffectivityWitness& w) {
  Json out = Json::object();
  out["xi"] = emit_rational(w.xi_degree);
  out["b"] = w.b_degree.str();
  out["slot"] = w.section_slot;
  if (w.m <= Int(std::numeric_limits<long long>::max())) {
    out["m"] = static_cast<long long>(w.m);
  } else {
    out["m"] = w.m.str();
  }
  return out;
}

Json classify_result(const Scenario& s) {
  const std::string path = "/payload";
  const Curve curve = parse_curve(member(s.payload, path, "base"), path + "/base");
  const BundleInput bundle = parse_bundle(s.payload, path);
  const DivClass d = parse_div_class(member(s.payload, path, "divisor"), path + "/divisor");
  const PositivityReport report = bundle.split ? classify(d, *bundle.split, curve)
                                               : classify(d, bundle.profile, curve);
  Json out = Json::object();
  out["nef"] = report.nef;
  out["pseff"] = report.pseudoeffective;
  out["big"] = report.big;
  out["ample"] = report.ample;
  if (report.q_effective.has_value()) {
    out["q_effective"] = *report.q_effective;
  } else if (report.undecided == QEffUndecided::irrational_input) {
    out["r_effectivity"] = "not decided here";
  }
  if (report.witness) out["witness"] = witness_json(*report.witness);
  Json thresholds = Json::object();
  thresholds["mu_max"] = emit_rational(report.mu_max_threshold);
  thresholds["mu_min"] = emit_rational(report.mu_min_threshold);
  out["thresholds"] = std::move(thresholds);
  return out;
}

Json hn_result(const Scenario& s) {
  const std::string path = "/payload";
  const HNProfile profile = parse_bundle(s.payload, path).profile;
  Json pieces = Json::array();
  for (const HNPiece& p : profile.pieces()) {
    pieces.push_back(Json::array({p.rank, emit_rational(p.degree)}));
  }
  Json out = Json::object();
  out["pieces"] = std::move(pieces);
  out["mu_max"] = emit_rational(mu_max(profile));
  out["mu_min"] = emit_rational(mu_min(profile));
  return out;
}

Json frobsplit_result(const Scenario& s) {
  const std::string path = "/payload";
  const Curve curve = parse_curve(member(s.payload, path, "base"), path + "/base");
  const HNProfile profile = parse_bundle(s.payload, path).profile;
  Json out = Json::object();
  out["m"] = splitting_frobenius_power(profile, curve);
  return out;
}

Json cone_result(const Scenario& s) {
  const std::string path = "/payload";
  const NSLattice lat = parse_lattice(member(s.payload, path, "lattice"), path + "/lattice");
  const NSClass cls = parse_ns_class(member(s.payload, path, "class"), path + "/class");
  const FieldElem self = pairing(lat, cls, cls);
  NSClass e1;
  e1.coords.assign(static_cast<std::size_t>(lat.rho), FieldElem(0));
  e1.coords[0] = FieldElem(1);
  const FieldElem anchor = pairing(lat, cls, e1);
  const bool nef = nef_membership(lat, cls);
  Json out = Json::object();
  out["nef"] = nef;
  out["self_pairing"] = self.str();
  out["anchor_pairing"] = anchor.str();
  out["boundary"] = nef && self.is_zero();
  if (!cls.is_zero()) out["ray_rational"] = ray_is_rational(cls);
  if (const Json* other = optional_member(s.payload, path, "pair_with")) {
    out["pairing"] = pairing(lat, cls, parse_ns_class(*other, path + "/pair_with")).str();
  }
  return out;
}

Json rationalize_result(const Scenario& s) {
  const std::string path = "/payload";
  const EffectivityInstance inst = parse_instance(s.payload, path);
  const std::vector<std::size_t> forced = zero_row_forcing(inst);
  const std::vector<Rational> a_prime = rationalize(inst);
  Json out = Json::object();
  Json values = Json::array();
  for (const Rational& a : a_prime) values.push_back(emit_rational(a));
  out["a_prime"] = std::move(values);
  Json slots = Json::array();
  for (std::size_t slot : forced) slots.push_back(slot);
  out["forced_slots"] = std::move(slots);
  out["reverified"] = true;  // rationalize re-verifies exactly before returning
  return out;
}

Json counterexample_result(const Scenario& s) {
  const std::string path = "/payload";
  const NSLattice lat = parse_lattice(member(s.payload, path, "lattice"), path + "/lattice");
  const Rational t = rational_value(member(s.payload, path, "t"), path + "/t");
  const Counterexample ce = build_counterexample(lat, t);
  Json out = Json::object();
  Json coords = Json::array();
  for (const FieldElem& c : ce.cls.coords) coords.push_back(c.str());
  Json cls = Json::object();
  cls["coords"] = std::move(coords);
  out["class"] = std::move(cls);
  out["radicand"] = static_cast<long long>(ce.radicand);
  Json cert = Json::object();
  cert["nef"] = ce.certificate.nef;
  cert["boundary"] = ce.certificate.boundary;
  cert["ray_rational"] = ce.certificate.ray_rational;
  out["certificate"] = std::move(cert);
  return out;
}

}  // namespace

Json evaluate(const Scenario& s) {
  switch (s.kind) {
    case Kind::classify: return classify_result(s);
    case Kind::hn: return hn_result(s);
    case Kind::frobsplit: return frobsplit_result(s);
    case Kind::cone: return cone_result(s);
    case Kind::rationalize: return rationalize_result(s);
    case Kind::counterexample: return counterexample_result(s);
  }
  fail(ErrorCode::Internal, "unhandled scenario kind");
}

std::vector<Outcome> evaluate_batch(const std::vector<Scenario>& scenarios, kernels::Exec exec) {
  std::vector<Outcome> outcomes(scenarios.size());
  const auto run_one = [&](std::size_t i) {
    Outcome& out = outcomes[i];
    out.id = scenarios[i].id;
    out.kind = scenarios[i].kind;
    try {
      out.body = evaluate(scenarios[i]);
      out.ok = true;
    } catch (const Error& e) {
      out.ok = false;
      out.body = Json::object();
      out.body["code"] = error_code_name(e.code());
      out.body["message"] = e.what();
    }
  };
  const long long n = static_cast<long long>(scenarios.size());
  if (exec == kernels::Exec::openmp) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  } else {
    for (long long i = 0; i < n; ++i) run_one(static_cast<std::size_t>(i));
  }
  return outcomes;
}

namespace {

std::string text_line(const Outcome& o) {
  std::string line = "[" + o.id + "] " + kind_name(o.kind) + ": ";
  if (!o.ok) {
    line += "ERROR " + o.body.at("code").get<std::string>() + ": " +
            o.body.at("message").get<std::string>();
    return line;
  }
  bool first = true;
  for (const auto& [key, value] : o.body.items()) {
    if (!first) line += " ";
    first = false;
    line += key + "=";
    if (value.is_string()) {
      line += value.get<std::string>();
    } else {
      line += value.dump();
    }
  }
  return line;
}

}  // namespace

std::string render_report(const std::vector<Outcome>& outcomes, ReportFormat format) {
  if (format == ReportFormat::text) {
    std::string out;
    for (const Outcome& o : outcomes) {
      out += text_line(o);
      out += '\n';
    }
    return out;
  }
  Json reports = Json::array();
  for (const Outcome& o : outcomes) {
    Json entry = Json::object();
    entry["id"] = o.id;
    entry["kind"] = kind_name(o.kind);
    entry["ok"] = o.ok;
    entry[o.ok ? "result" : "error"] = o.body;
    reports.push_back(std::move(entry));
  }
  Json doc = Json::object();
  doc["reports"] = std::move(reports);
  return doc.dump(2) + "\n";
}

bool all_ok(const std::vector<Outcome>& outcomes) {
  for (const Outcome& o : outcomes) {
    if (!o.ok) return false;
  }
  return true;
}

}  // namespace divpos::scenario
