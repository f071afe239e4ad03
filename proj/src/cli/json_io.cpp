#include "hensel/cli/json_io.hpp"

#include <algorithm>

#include "hensel/cli/parser.hpp"

namespace hensel::cli {

namespace {

[[noreturn]] void schema_error(const std::string& detail) { throw Error(ErrorCode::SchemaError, detail); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing member '") + key + "'");
  return j.at(key);
}

long as_long(const json& j, const std::string& what) {
  if (!j.is_number_integer()) schema_error(what + " must be an integer");
  return j.get<long>();
}

std::string as_string(const json& j, const std::string& what) {
  if (!j.is_string()) schema_error(what + " must be a string");
  return j.get<std::string>();
}

std::vector<std::string> string_list(const json& j, const std::string& what) {
  if (!j.is_array()) schema_error(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, what + " entry"));
  return out;
}

mpq_class parse_rational(const std::string& text, const std::string& what) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) schema_error(what + ": bad rational '" + text + "'");
  q.canonicalize();
  if (q.get_den() == 0) schema_error(what + ": zero denominator");
  return q;
}

template <class Fn>
auto tagged(const std::string& input, Fn&& fn) {
  try {
    return fn();
  } catch (const SyntaxError& e) {
    throw InputSyntaxError(e, input);
  }
}

const std::vector<std::string> kCommands{"lift", "solve", "verify", "etale", "traceform", "val"};
const std::vector<std::string> kModes{"hensel", "herve", "hensel-newton", "refine"};

bool one_of(const std::string& s, const std::vector<std::string>& list) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

}  // namespace

Field field_from_json(const json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  const std::string type = as_string(member(j, "type"), "field.type");
  if (type == "p-adic") return Field::padic(as_long(member(j, "p"), "field.p"));
  if (type != "t-adic") schema_error("field.type must be \"p-adic\" or \"t-adic\"");
  if (!j.contains("base")) return Field::tadic(BaseField::rationals());
  const json& base = j.at("base");
  if (base.is_string() && base.get<std::string>() == "Q") return Field::tadic(BaseField::rationals());
  if (base.is_object() && base.contains("F_p")) {
    return Field::tadic(BaseField::prime_field(as_long(base.at("F_p"), "field.base.F_p")));
  }
  schema_error("field.base must be \"Q\" or {\"F_p\": p}");
}

json field_to_json(const Field& f) {
  if (f.is_padic()) return {{"type", "p-adic"}, {"p", f.prime()}};
  if (f.constants().is_rationals()) return {{"type", "t-adic"}, {"base", "Q"}};
  return {{"type", "t-adic"}, {"base", {{"F_p", f.constants().characteristic()}}}};
}

Job job_from_json(const json& doc, const std::optional<std::string>& command) {
  if (!doc.is_object()) schema_error("job must be a JSON object");
  const json& j = doc.contains("job") ? doc.at("job") : doc;
  if (!j.is_object()) schema_error("job must be a JSON object");
  Job job;
  if (command) {
    job.command = *command;
  } else if (j.contains("command")) {
    job.command = as_string(j.at("command"), "command");
  } else if (doc.contains("command")) {
    job.command = as_string(doc.at("command"), "command");
  } else {
    schema_error("no command given");
  }
  if (!one_of(job.command, kCommands)) schema_error("unknown command '" + job.command + "'");
  job.field = field_from_json(member(j, "field"));
  if (j.contains("variables")) job.variables = string_list(j.at("variables"), "variables");
  if (j.contains("system")) job.system = string_list(j.at("system"), "system");
  if (j.contains("point")) job.point = string_list(j.at("point"), "point");
  if (j.contains("elements")) job.elements = string_list(j.at("elements"), "elements");
  if (j.contains("precision")) {
    job.precision = as_long(j.at("precision"), "precision");
    if (*job.precision < 1) schema_error("precision must be at least 1");
  }
  if (j.contains("mode")) {
    job.mode = as_string(j.at("mode"), "mode");
    if (!one_of(*job.mode, kModes)) schema_error("unknown mode '" + *job.mode + "'");
  }
  check_variables(job.variables, job.field);

  const bool needs_system = job.command != "val";
  if (needs_system) {
    if (job.system.empty()) schema_error("system must be nonempty");
    if (job.variables.empty()) schema_error("variables must be nonempty");
  }
  if (job.command == "lift") {
    if (job.variables.size() != 1 || job.system.size() != 1) schema_error("lift takes one variable and one polynomial");
    if (!job.mode) job.mode = "hensel";
    const bool needs_point = *job.mode == "hensel" || *job.mode == "refine";
    if (needs_point && job.point.size() != 1) schema_error("mode '" + *job.mode + "' needs a one-entry point");
  } else if (job.command == "traceform") {
    if (job.variables.size() != 1 || job.system.size() != 1) schema_error("traceform takes one variable and one polynomial");
  } else if (job.command == "val") {
    if (job.elements.empty()) schema_error("val needs a nonempty elements list");
  } else {
    if (job.system.size() != job.variables.size()) schema_error("system length must equal variables length");
    if (job.point.size() != job.variables.size()) schema_error("point length must equal variables length");
  }
  const bool needs_precision = job.command != "traceform";
  if (needs_precision && !job.precision) schema_error("precision is required");
  return job;
}

json job_to_json(const Job& job) {
  json j{{"command", job.command}, {"field", field_to_json(job.field)}};
  if (!job.variables.empty()) j["variables"] = job.variables;
  if (!job.system.empty()) j["system"] = job.system;
  if (!job.point.empty()) j["point"] = job.point;
  if (!job.elements.empty()) j["elements"] = job.elements;
  if (job.precision) j["precision"] = *job.precision;
  if (job.mode) j["mode"] = *job.mode;
  return j;
}

std::vector<MultiPoly<Element>> parse_system(const Job& job) {
  std::vector<MultiPoly<Element>> out;
  for (std::size_t i = 0; i < job.system.size(); ++i) {
    out.push_back(tagged("system[" + std::to_string(i) + "]",
                         [&] { return parse_poly(job.system[i], job.variables, job.field); }));
  }
  return out;
}

std::vector<Element> parse_point(const Job& job) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < job.point.size(); ++i) {
    out.push_back(tagged("point[" + std::to_string(i) + "]", [&] { return parse_element(job.point[i], job.field); }));
  }
  return out;
}

NewtonSystem build_system(const Job& job) { return NewtonSystem{job.field, parse_system(job), parse_point(job)}; }

json digits_to_json(const Truncated& x) {
  json out = json::array();
  for (const auto& d : x.digits()) {
    if (x.field().is_padic()) {
      out.push_back(d.get_num().get_si());
    } else {
      out.push_back(BaseField::format(d));
    }
  }
  return out;
}

Truncated digits_from_json(const json& j, const Field& field, long precision) {
  if (!j.is_array()) schema_error("digit list must be an array");
  if (static_cast<long>(j.size()) != precision) {
    schema_error("digit list has " + std::to_string(j.size()) + " entries, expected " + std::to_string(precision));
  }
  std::vector<mpq_class> digits;
  for (const auto& d : j) {
    if (field.is_padic()) {
      const long v = as_long(d, "digit");
      if (v < 0 || v >= field.prime()) schema_error("digit " + std::to_string(v) + " out of range");
      digits.emplace_back(v);
    } else {
      const mpq_class q = parse_rational(as_string(d, "coefficient"), "coefficient");
      if (!field.constants().is_rationals() && (q.get_den() != 1 || q < 0 || q >= field.constants().characteristic())) {
        schema_error("coefficient '" + d.get<std::string>() + "' is not a canonical residue");
      }
      digits.push_back(q);
    }
  }
  return Truncated::from_digits(field, precision, digits);
}

json truncated_to_json(const Truncated& x) {
  if (x.field().is_padic()) return {{"residue", x.integer_residue().get_str()}, {"digits", digits_to_json(x)}};
  return {{"coefficients", digits_to_json(x)}};
}

Truncated truncated_from_json(const json& j, const Field& field, long precision) {
  const Truncated x = digits_from_json(member(j, field.is_padic() ? "digits" : "coefficients"), field, precision);
  if (field.is_padic() && j.contains("residue") && as_string(j.at("residue"), "residue") != x.integer_residue().get_str()) {
    schema_error("residue does not match digits");
  }
  return x;
}

json certificate_to_json(const LiftCertificate& cert) {
  json steps = json::array();
  for (const auto& s : cert.steps) {
    json point = json::array();
    for (const auto& x : s.point) point.push_back(digits_to_json(x));
    json inverse = json::array();
    for (std::size_t r = 0; r < s.inverse.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < s.inverse.cols(); ++c) row.push_back(digits_to_json(s.inverse(r, c)));
      inverse.push_back(row);
    }
    steps.push_back({{"step", s.index}, {"point", point}, {"inverse", inverse}});
  }
  return {{"precision", cert.precision}, {"steps", steps}};
}

LiftCertificate certificate_from_json(const json& j, const Field& field, std::size_t dimension) {
  LiftCertificate cert;
  cert.precision = as_long(member(j, "precision"), "certificate.precision");
  if (cert.precision < 1) schema_error("certificate.precision must be at least 1");
  const json& steps = member(j, "steps");
  if (!steps.is_array()) schema_error("certificate.steps must be an array");
  const Truncated zero = Truncated::from_digits(field, cert.precision, {});
  for (const auto& s : steps) {
    CertificateStep step{as_long(member(s, "step"), "step index"), {}, Matrix<Truncated>(dimension, dimension, zero)};
    const json& point = member(s, "point");
    if (!point.is_array() || point.size() != dimension) schema_error("step point has the wrong length");
    for (const auto& x : point) step.point.push_back(digits_from_json(x, field, cert.precision));
    const json& inverse = member(s, "inverse");
    if (!inverse.is_array() || inverse.size() != dimension) schema_error("step inverse has the wrong shape");
    for (std::size_t r = 0; r < dimension; ++r) {
      if (!inverse[r].is_array() || inverse[r].size() != dimension) schema_error("step inverse has the wrong shape");
      for (std::size_t c = 0; c < dimension; ++c) {
        step.inverse(r, c) = digits_from_json(inverse[r][c], field, cert.precision);
      }
    }
    cert.steps.push_back(std::move(step));
  }
  return cert;
}

json valuation_to_json(const ExtValuation& v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

}  // namespace hensel::cli
