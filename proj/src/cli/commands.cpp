#include "hensel/cli/commands.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "hensel/cli/parser.hpp"
#include "hensel/etale.hpp"
#include "hensel/hensel.hpp"
#include "hensel/linalg.hpp"

namespace hensel::cli {

namespace {

json base_document(const Job& job) {
  return {{"schema_version", kSchemaVersion}, {"command", job.command}, {"job", job_to_json(job)}};
}

json truncated_list(const std::vector<Truncated>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(truncated_to_json(x));
  return out;
}

json element_list(const std::vector<Element>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(x.to_string());
  return out;
}

ExactPoly univariate(const Job& job) { return parse_system(job).front().to_uni(); }

RunResult run_lift(const Job& job) {
  const ExactPoly f = univariate(job);
  const long n = *job.precision;
  json doc = base_document(job);
  doc["mode"] = *job.mode;
  if (*job.mode == "hensel") {
    const NewtonResult r = hensel_lift_certified(HenselCode{f, parse_point(job).front()}, n);
    doc["root"] = truncated_to_json(r.zero.front());
    doc["certificate"] = certificate_to_json(r.certificate);
  } else if (*job.mode == "herve") {
    doc["root"] = truncated_to_json(herve_lift(f, n));
  } else if (*job.mode == "hensel-newton") {
    doc["root"] = truncated_to_json(hensel_newton(f, n));
  } else {
    doc["root"] = truncated_to_json(refine_root(f, parse_point(job).front(), n));
  }
  return {doc, kExitOk};
}

RunResult run_solve(const Job& job) {
  const NewtonResult r = newton_solve(build_system(job), *job.precision);
  json doc = base_document(job);
  doc["zero"] = truncated_list(r.zero);
  doc["certificate"] = certificate_to_json(r.certificate);
  return {doc, kExitOk};
}

std::vector<Truncated> claimed_zero(const json& input, const Field& field, long precision) {
  std::vector<Truncated> out;
  if (input.contains("zero")) {
    if (!input.at("zero").is_array()) throw Error(ErrorCode::SchemaError, "zero must be an array");
    for (const auto& x : input.at("zero")) out.push_back(truncated_from_json(x, field, precision));
  } else if (input.contains("root")) {
    out.push_back(truncated_from_json(input.at("root"), field, precision));
  }
  return out;
}

RunResult run_verify(const Job& job, const json& input) {
  if (!input.contains("certificate")) throw Error(ErrorCode::SchemaError, "verify needs a certificate");
  const NewtonSystem system = build_system(job);
  const LiftCertificate cert = certificate_from_json(input.at("certificate"), job.field, system.size());
  CertificateCheck check = verify_certificate(system, cert);
  const std::vector<Truncated> zero = claimed_zero(input, job.field, cert.precision);
  if (check.valid && !zero.empty()) {
    const std::vector<Truncated> expected =
        cert.steps.empty() ? truncate_point(system.point, cert.precision) : cert.steps.back().point;
    if (zero != expected) {
      check.valid = false;
      check.family = "zero";
      check.detail = "claimed zero differs from the final certified point";
    }
  }
  json doc = base_document(job);
  doc["valid"] = check.valid;
  doc["precision"] = cert.precision;
  if (!check.valid) {
    doc["failed_step"] = check.failed_step ? json(*check.failed_step) : json(nullptr);
    doc["family"] = check.family;
    doc["detail"] = check.detail;
  }
  return {doc, check.valid ? kExitOk : kExitFailure};
}

std::string fresh_name(const std::vector<std::string>& vars) {
  std::string name = "eta";
  while (std::find(vars.begin(), vars.end(), name) != vars.end()) name += "_";
  return name;
}

RunResult run_etale(const Job& job) {
  const NewtonSystem system = build_system(job);
  const SeparabilityReport r = certify_separable_system(system, *job.precision);
  const EtaleAugmentation aug = etale_augment(translate_to_origin(system));
  std::vector<std::string> names = job.variables;
  names.push_back(fresh_name(job.variables));

  json doc = base_document(job);
  doc["zero"] = truncated_list(r.zero);
  doc["jacobian_at_zero"] = truncated_to_json(r.jacobian_at_zero);
  doc["jacobian_unit"] = r.jacobian_unit;
  doc["eta"] = truncated_to_json(r.eta);
  doc["augmented_variable"] = names.back();
  doc["augmented_equation"] = print_poly(aug.augmented.polys.back(), names);
  doc["augmented_equation_vanishes"] = r.augmented_equation_vanishes;
  doc["augmented_jacobian"] = truncated_to_json(r.augmented_jacobian);
  doc["augmented_jacobian_unit"] = r.augmented_jacobian_unit;
  doc["certified"] = r.certified;
  doc["notes"] = r.notes;
  return {doc, r.certified ? kExitOk : kExitFailure};
}

RunResult run_traceform(const Job& job) {
  const ExactPoly f = univariate(job);
  const TraceFormData t = trace_matrix(f);
  const Element d = det(t.trace_matrix);
  const Element disc = discriminant(f);
  json matrix = json::array();
  for (std::size_t i = 0; i < t.trace_matrix.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.trace_matrix.cols(); ++j) row.push_back(t.trace_matrix(i, j).to_string());
    matrix.push_back(row);
  }
  json doc = base_document(job);
  doc["power_sums"] = element_list(t.power_sums);
  doc["trace_matrix"] = matrix;
  doc["determinant"] = d.to_string();
  doc["discriminant"] = disc.to_string();
  doc["agree"] = d == disc;
  doc["strictly_etale"] = !d.is_zero();
  doc["separable"] = separable(f);
  return {doc, d == disc ? kExitOk : kExitFailure};
}

RunResult run_val(const Job& job) {
  const long n = *job.precision;
  json results = json::array();
  for (std::size_t i = 0; i < job.elements.size(); ++i) {
    const std::string input = "elements[" + std::to_string(i) + "]";
    Element x = Element::integer(job.field, 0);
    try {
      x = parse_element(job.elements[i], job.field);
    } catch (const SyntaxError& e) {
      throw InputSyntaxError(e, input);
    }
    const bool in_v = x.in_valuation_ring();
    results.push_back({{"value", x.to_string()},
                       {"valuation", valuation_to_json(x.valuation())},
                       {"in_v", in_v},
                       {"in_m", x.in_maximal_ideal()},
                       {"unit", x.is_unit()},
                       {"residue", in_v ? json(x.residue().to_string()) : json(nullptr)},
                       {"truncation", in_v ? truncated_to_json(x.truncate(n)) : json(nullptr)}});
  }
  json doc = base_document(job);
  doc["results"] = results;
  return {doc, kExitOk};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::SyntaxError:
    case ErrorCode::UnknownVariable:
    case ErrorCode::SchemaError:
    case ErrorCode::InvalidField:
      return kExitUsage;
    default:
      return kExitFailure;
  }
}

std::string command_hint(const json& doc, const std::optional<std::string>& command) {
  if (command) return *command;
  for (const json* j : {&doc, doc.is_object() && doc.contains("job") ? &doc.at("job") : &doc}) {
    if (j->is_object() && j->contains("command") && j->at("command").is_string()) {
      return j->at("command").get<std::string>();
    }
  }
  return "unknown";
}

}  // namespace

json error_document(const std::string& command, const std::string& code, const std::string& detail) {
  return {{"schema_version", kSchemaVersion}, {"command", command}, {"error", code}, {"detail", detail}};
}

RunResult run_job(const json& doc, const std::optional<std::string>& command) {
  const std::string name = command_hint(doc, command);
  try {
    const Job job = job_from_json(doc, command);
    if (job.command == "lift") return run_lift(job);
    if (job.command == "solve") return run_solve(job);
    if (job.command == "verify") return run_verify(job, doc);
    if (job.command == "etale") return run_etale(job);
    if (job.command == "traceform") return run_traceform(job);
    return run_val(job);
  } catch (const SyntaxError& e) {
    json out = error_document(name, std::string(error_code_name(e.code())), e.what());
    json position{{"line", e.line()}, {"column", e.column()}, {"expected", e.expected()}};
    if (const auto* tagged = dynamic_cast<const InputSyntaxError*>(&e)) position["input"] = tagged->input();
    out["position"] = position;
    return {out, kExitUsage};
  } catch (const Error& e) {
    return {error_document(name, std::string(error_code_name(e.code())), e.what()), exit_code_for(e.code())};
  } catch (const json::exception& e) {
    return {error_document(name, "SCHEMA_ERROR", e.what()), kExitUsage};
  } catch (const std::exception& e) {
    return {error_document(name, "INTERNAL_ERROR", e.what()), kExitFailure};
  }
}

RunResult run_text(std::string_view text, const std::optional<std::string>& command) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    return {error_document(command.value_or("unknown"), "SCHEMA_ERROR", e.what()), kExitUsage};
  }
  return run_job(doc, command);
}

RunResult run_batch(const json& docs, unsigned threads, const std::optional<std::string>& command) {
  if (!docs.is_array()) {
    return {error_document("batch", "SCHEMA_ERROR", "batch input must be a JSON array"), kExitUsage};
  }
  std::vector<RunResult> results(docs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < docs.size(); i = next++) results[i] = run_job(docs[i], command);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(docs.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < count; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  json out{{"schema_version", kSchemaVersion}, {"command", "batch"}, {"results", json::array()}};
  int code = kExitOk;
  for (auto& r : results) {
    out["results"].push_back(std::move(r.document));
    code = std::max(code, r.exit_code);
  }
  return {out, code};
}

std::string render(const json& document) { return document.dump(2, ' ', false, json::error_handler_t::replace) + "\n"; }

}  // namespace hensel::cli
