#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "hensel/error.hpp"
#include "hensel/etale.hpp"
#include "hensel/newton.hpp"

namespace hensel::cli {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

/// A syntax error located in one named input string, e.g. "system[1]".
class InputSyntaxError : public SyntaxError {
 public:
  InputSyntaxError(const SyntaxError& e, std::string input)
      : SyntaxError(e.line(), e.column(), e.expected(), e.what()), input_(std::move(input)) {}
  const std::string& input() const noexcept { return input_; }

 private:
  std::string input_;
};

/// Parsed and checked job specification.
struct Job {
  std::string command;
  Field field = Field::padic(2);
  std::vector<std::string> variables;
  std::vector<std::string> system;
  std::vector<std::string> point;
  std::optional<long> precision;
  std::optional<std::string> mode;
  std::vector<std::string> elements;
};

/// {"type": "p-adic", "p": 7} or {"type": "t-adic", "base": "Q" | {"F_p": 5}}.
Field field_from_json(const json& j);
json field_to_json(const Field& f);

/// Reads a job from either a jobspec or an earlier output document (whose
/// "job" member is used). `command` overrides the document's "command".
Job job_from_json(const json& doc, const std::optional<std::string>& command);

/// The normalized job echoed in every output document.
json job_to_json(const Job& job);

/// Parsed polynomials and point; syntax errors are tagged with the input name.
NewtonSystem build_system(const Job& job);
std::vector<MultiPoly<Element>> parse_system(const Job& job);
std::vector<Element> parse_point(const Job& job);

/// p-adic: base-p digits as integers; t-adic: coefficients as strings.
json digits_to_json(const Truncated& x);
Truncated digits_from_json(const json& j, const Field& field, long precision);

/// p-adic: {"residue": "2166", "digits": [3, 1, 2, 6]};
/// t-adic: {"coefficients": ["1", "1/2", "-1/8"]}.
json truncated_to_json(const Truncated& x);
Truncated truncated_from_json(const json& j, const Field& field, long precision);

/// {"precision": N, "steps": [{"step": m, "point": [...], "inverse": [[...]]}]}.
json certificate_to_json(const LiftCertificate& cert);
LiftCertificate certificate_from_json(const json& j, const Field& field, std::size_t dimension);

json valuation_to_json(const ExtValuation& v);

}  // namespace hensel::cli
