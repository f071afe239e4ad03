#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gen.hpp"
#include "hensel/cli/commands.hpp"
#include "hensel/cli/json_io.hpp"
#include "hensel/cli/parser.hpp"
#include "hensel/error.hpp"
#include "process.hpp"

using namespace hensel;
using cli::json;

namespace {

const Field Z7 = Field::padic(7);

using Poly = MultiPoly<Element>;

Element e(const Field& f, long v) { return Element::integer(f, v); }

Poly var(std::size_t n, std::size_t i, const Field& f) { return Poly::variable(n, i, e(f, 0)); }
Poly cst(std::size_t n, long c, const Field& f) { return Poly::constant(n, e(f, c)); }

json sqrt2_job() {
  return {{"command", "solve"},
          {"field", {{"type", "p-adic"}, {"p", 7}}},
          {"variables", {"x"}},
          {"system", {"x^2 - 2"}},
          {"point", {"3"}},
          {"precision", 4}};
}

using Proc = proc::Result;

Proc run_cli(const std::string& args, const std::string& stdin_file = "") {
  return proc::run_tool(HENSEL_CLI_PATH, args, stdin_file);
}

std::string write_temp(const std::string& name, const std::string& text) {
  return proc::write_temp("hensel_test_cli_" + name, text);
}

std::vector<std::filesystem::path> job_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(HENSEL_JOBS_DIR)) {
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Random expression text over `vars` following the grammar, with random spacing.
std::string random_expr(gen::Rng& rng, const std::vector<std::string>& vars, int depth);

std::string sp(gen::Rng& rng) { return gen::uniform(rng, 0, 3) == 0 ? " " : ""; }

std::string random_base(gen::Rng& rng, const std::vector<std::string>& vars, int depth) {
  const long pick = gen::uniform(rng, 0, depth > 0 ? 4 : 1);
  if (pick == 0) return std::to_string(gen::uniform(rng, 0, 30));
  if (pick == 1) return vars[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<long>(vars.size()) - 1))];
  if (pick == 2) return "-" + sp(rng) + random_base(rng, vars, depth - 1);
  return "(" + sp(rng) + random_expr(rng, vars, depth - 1) + sp(rng) + ")";
}

std::string random_factor(gen::Rng& rng, const std::vector<std::string>& vars, int depth) {
  std::string b = random_base(rng, vars, depth);
  const long max_exp = b.front() == '(' ? 2 : 4;
  if (gen::uniform(rng, 0, 3) == 0) b += sp(rng) + "^" + sp(rng) + std::to_string(gen::uniform(rng, 0, max_exp));
  return b;
}

std::string random_term(gen::Rng& rng, const std::vector<std::string>& vars, int depth) {
  std::string t = random_factor(rng, vars, depth);
  for (long k = gen::uniform(rng, 0, 2); k > 0; --k) t += sp(rng) + "*" + sp(rng) + random_factor(rng, vars, depth);
  return t;
}

std::string random_expr(gen::Rng& rng, const std::vector<std::string>& vars, int depth) {
  std::string x = random_term(rng, vars, depth);
  for (long k = gen::uniform(rng, 0, 3); k > 0; --k) {
    x += sp(rng) + (gen::uniform(rng, 0, 1) ? "+" : "-") + sp(rng) + random_term(rng, vars, depth);
  }
  return x;
}

}  // namespace

TEST_CASE("parse_poly examples") {
  const Field Q = Field::padic(2);
  CHECK(cli::parse_poly("x^2 - 2", {"x"}, Q) == var(1, 0, Q) * var(1, 0, Q) - cst(1, 2, Q));
  const Poly x1 = var(2, 0, Q), x2 = var(2, 1, Q);
  CHECK(cli::parse_poly("x1*x2 + x2^2", {"x1", "x2"}, Q) == x1 * x2 + x2 * x2);
  CHECK(cli::parse_poly("-x^2", {"x"}, Q) == var(1, 0, Q) * var(1, 0, Q));
  CHECK(cli::parse_poly("0 - x^2", {"x"}, Q) == -(var(1, 0, Q) * var(1, 0, Q)));
  CHECK(cli::parse_poly("(x + 1)^3", {"x"}, Q) ==
        cli::parse_poly("x^3 + 3*x^2 + 3*x + 1", {"x"}, Q));

  const Field Qt = Field::tadic();
  CHECK(cli::parse_poly("x - t^2", {"x"}, Qt).constant_term() == -Element::uniformizer(Qt).pow(2));
}

TEST_CASE("parse_poly errors carry positions") {
  try {
    cli::parse_poly("x^-1", {"x"}, Z7);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& err) {
    CHECK(err.code() == ErrorCode::SyntaxError);
    CHECK(err.line() == 1);
    CHECK(err.column() == 3);
    CHECK(!err.expected().empty());
  }
  try {
    cli::parse_poly("x^2 +\n 2x", {"x"}, Z7);
    FAIL("expected a syntax error");
  } catch (const SyntaxError& err) {
    CHECK(err.line() == 2);
    CHECK(err.column() == 3);
  }
  CHECK_THROWS_AS(cli::parse_poly("", {"x"}, Z7), SyntaxError);
  CHECK_THROWS_AS(cli::parse_poly("(x + 1", {"x"}, Z7), SyntaxError);
  CHECK_THROWS_AS(cli::parse_poly("x / 2", {"x"}, Z7), SyntaxError);
  try {
    cli::parse_poly("x + y", {"x"}, Z7);
    FAIL("expected an unknown variable");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::UnknownVariable);
  }
  CHECK_THROWS_AS(cli::check_variables({"x", "t"}, Field::tadic()), Error);
  CHECK_THROWS_AS(cli::check_variables({"x", "x"}, Z7), Error);
  CHECK_NOTHROW(cli::check_variables({"x", "t"}, Z7));
}

TEST_CASE("property: print and parse round trip") {
  gen::Rng rng(71);
  const std::vector<std::string> vars{"x", "y1", "z"};
  int checked = 0;
  for (const Field& f : gen::fields()) {
    for (int i = 0; i < 125; ++i) {
      const std::string text = random_expr(rng, vars, 2);
      const Poly p = cli::parse_poly(text, vars, f);
      const std::string printed = cli::print_poly(p, vars);
      CAPTURE(text);
      CAPTURE(printed);
      const Poly q = cli::parse_poly(printed, vars, f);
      CHECK(q == p);
      CHECK(cli::print_poly(q, vars) == printed);
      ++checked;
    }
  }
  CHECK(checked == 500);
}

TEST_CASE("field descriptors") {
  CHECK(cli::field_from_json(json{{"type", "p-adic"}, {"p", 7}}) == Z7);
  CHECK(cli::field_from_json(json{{"type", "t-adic"}, {"base", "Q"}}) == Field::tadic());
  const Field F5t = Field::tadic(BaseField::prime_field(5));
  CHECK(cli::field_from_json(json{{"type", "t-adic"}, {"base", {{"F_p", 5}}}}) == F5t);
  CHECK(cli::field_from_json(json("t-adic:F_5")) == F5t);
  for (const Field& f : gen::fields()) CHECK(cli::field_from_json(cli::field_to_json(f)) == f);
  CHECK_THROWS_AS(cli::field_from_json(json{{"type", "p-adic"}, {"p", 9}}), Error);
  CHECK_THROWS_AS(cli::field_from_json(json{{"type", "q-adic"}}), Error);
}

TEST_CASE("truncated JSON") {
  const Truncated x = Truncated::from_integer(Z7, 4, 2166);
  const json j = cli::truncated_to_json(x);
  CHECK(j["residue"] == "2166");
  CHECK(j["digits"] == json{3, 1, 2, 6});
  CHECK(cli::truncated_from_json(j, Z7, 4) == x);
  CHECK_THROWS_AS(cli::truncated_from_json(json{{"digits", {3, 1, 2, 7}}}, Z7, 4), Error);
  CHECK_THROWS_AS(cli::truncated_from_json(json{{"digits", {3, 1, 2}}}, Z7, 4), Error);
  CHECK_THROWS_AS(cli::truncated_from_json(json{{"residue", "1"}, {"digits", {3, 1, 2, 6}}}, Z7, 4), Error);

  const Field Qt = Field::tadic();
  const Truncated s = Truncated::from_digits(Qt, 3, {mpq_class(1), mpq_class(1, 2), mpq_class(-1, 8)});
  const json js = cli::truncated_to_json(s);
  CHECK(js["coefficients"] == json{"1", "1/2", "-1/8"});
  CHECK(cli::truncated_from_json(js, Qt, 3) == s);

  gen::Rng rng(72);
  for (const Field& f : gen::fields()) {
    for (int i = 0; i < 40; ++i) {
      const Truncated r = gen::integral(rng, f).truncate(6);
      CHECK(cli::truncated_from_json(cli::truncated_to_json(r), f, 6) == r);
    }
  }
}

TEST_CASE("certificate JSON round trip") {
  gen::Rng rng(73);
  for (const Field& f : gen::fields()) {
    for (int i = 0; i < 4; ++i) {
      const std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
      const NewtonSystem s = gen::newton_system(rng, f, n, 2);
      const NewtonResult r = newton_solve(s, 9);
      const json j = cli::certificate_to_json(r.certificate);
      const LiftCertificate back = cli::certificate_from_json(j, f, n);
      CHECK(back.precision == r.certificate.precision);
      REQUIRE(back.steps.size() == r.certificate.steps.size());
      for (std::size_t k = 0; k < back.steps.size(); ++k) {
        CHECK(back.steps[k].index == r.certificate.steps[k].index);
        CHECK(back.steps[k].point == r.certificate.steps[k].point);
        CHECK(back.steps[k].inverse == r.certificate.steps[k].inverse);
      }
      CHECK(cli::certificate_to_json(back) == j);
      CHECK(verify_certificate(s, back).valid);
    }
  }
}

TEST_CASE("run: solve example and verify round trip") {
  const cli::RunResult solved = cli::run_job(sqrt2_job());
  REQUIRE(solved.exit_code == 0);
  CHECK(solved.document["zero"][0]["residue"] == "2166");
  CHECK(solved.document["zero"][0]["digits"] == json{3, 1, 2, 6});
  CHECK(solved.document["schema_version"] == "1");

  const std::string text = cli::render(solved.document);
  const cli::RunResult verified = cli::run_text(text, "verify");
  CHECK(verified.exit_code == 0);
  CHECK(verified.document["valid"] == true);

  json tampered = solved.document;
  auto& digit = tampered["certificate"]["steps"][1]["point"][0][1];
  digit = (digit.get<int>() + 1) % 7;
  const cli::RunResult bad = cli::run_job(tampered, "verify");
  CHECK(bad.exit_code == 1);
  CHECK(bad.document["valid"] == false);
  CHECK(bad.document["failed_step"].is_number_integer());

  json wrong_zero = solved.document;
  wrong_zero["zero"][0] = cli::truncated_to_json(Truncated::from_integer(Z7, 4, 2167));
  const cli::RunResult zr = cli::run_job(wrong_zero, "verify");
  CHECK(zr.exit_code == 1);
  CHECK(zr.document["family"] == "zero");
}

TEST_CASE("run: error documents and exit codes") {
  json crit{{"command", "lift"},       {"mode", "hensel-newton"},   {"field", {{"type", "p-adic"}, {"p", 7}}},
            {"variables", {"x"}},      {"system", {"7*x + 98"}},    {"precision", 3}};
  cli::RunResult r = cli::run_job(crit);
  CHECK(r.exit_code == 1);
  CHECK(r.document["error"] == "CRITERION_FAILED");

  json syntax = sqrt2_job();
  syntax["system"] = {"x^-1"};
  r = cli::run_job(syntax);
  CHECK(r.exit_code == 2);
  CHECK(r.document["error"] == "SYNTAX_ERROR");
  CHECK(r.document["position"]["line"] == 1);
  CHECK(r.document["position"]["column"] == 3);
  CHECK(r.document["position"]["input"] == "system[0]");

  json unknown = sqrt2_job();
  unknown["system"] = {"x^2 - y"};
  CHECK(cli::run_job(unknown).exit_code == 2);

  json no_precision = sqrt2_job();
  no_precision.erase("precision");
  r = cli::run_job(no_precision);
  CHECK(r.exit_code == 2);
  CHECK(r.document["error"] == "SCHEMA_ERROR");

  json composite = sqrt2_job();
  composite["field"]["p"] = 9;
  CHECK(cli::run_job(composite).exit_code == 2);

  json not_newton = sqrt2_job();
  not_newton["point"] = {"1"};
  r = cli::run_job(not_newton);
  CHECK(r.exit_code == 1);
  CHECK(r.document["error"] == "VALIDATION_FAILED");

  CHECK(cli::run_text("{ not json").exit_code == 2);
  CHECK(cli::run_job(sqrt2_job(), "frobnicate").exit_code == 2);
  CHECK(cli::run_batch(json::object(), 2).exit_code == 2);
}

TEST_CASE("run: lift modes, etale, traceform and val") {
  json lift{{"command", "lift"},  {"field", {{"type", "p-adic"}, {"p", 7}}}, {"variables", {"x"}},
            {"system", {"x^2 - 2"}}, {"point", {"10"}},                        {"precision", 4}};
  for (const char* mode : {"hensel", "refine"}) {
    lift["mode"] = mode;
    const cli::RunResult r = cli::run_job(lift);
    CHECK(r.exit_code == 0);
    CHECK(r.document["root"]["residue"] == "2166");
  }
  json etale = sqrt2_job();
  etale["command"] = "etale";
  cli::RunResult r = cli::run_job(etale);
  CHECK(r.exit_code == 0);
  CHECK(r.document["certified"] == true);
  CHECK(r.document["zero"][0]["residue"] == "2166");

  json trace{{"command", "traceform"}, {"field", {{"type", "p-adic"}, {"p", 3}}}, {"variables", {"x"}},
             {"system", {"x^2 - 2"}}};
  r = cli::run_job(trace);
  CHECK(r.exit_code == 0);
  CHECK(r.document["determinant"] == "8");
  CHECK(r.document["discriminant"] == "8");
  CHECK(r.document["agree"] == true);

  json val{{"command", "val"}, {"field", {{"type", "p-adic"}, {"p", 7}}}, {"elements", {"98/3", "1/49", "0"}},
           {"precision", 2}};
  r = cli::run_job(val);
  REQUIRE(r.exit_code == 0);
  CHECK(r.document["results"][0]["valuation"] == 2);
  CHECK(r.document["results"][0]["truncation"]["residue"] == "0");
  CHECK(r.document["results"][1]["valuation"] == -2);
  CHECK(r.document["results"][1]["in_v"] == false);
  CHECK(r.document["results"][2]["valuation"] == "inf");
}

TEST_CASE("determinism across runs and thread counts") {
  json docs = json::array();
  for (const auto& path : job_files()) docs.push_back(json::parse(std::ifstream(path)));
  REQUIRE(docs.size() >= 6);
  const std::string one = cli::render(cli::run_batch(docs, 1).document);
  CHECK(cli::render(cli::run_batch(docs, 4).document) == one);
  CHECK(cli::render(cli::run_batch(docs, 16).document) == one);
  const json parsed = json::parse(one);
  for (std::size_t i = 0; i < docs.size(); ++i) {
    CHECK(cli::render(parsed["results"][i]) == cli::render(cli::run_job(docs[i]).document));
  }
}

TEST_CASE("executable: jobs, round trip and exit codes") {
  for (const auto& path : job_files()) {
    CAPTURE(path.string());
    const Proc first = run_cli("--job \"" + path.string() + "\"");
    CHECK(first.exit_code == 0);
    const Proc second = run_cli("--job \"" + path.string() + "\"");
    CHECK(second.out == first.out);
    CHECK(json::parse(first.out)["schema_version"] == "1");
    if (json::parse(first.out).contains("certificate")) {
      const std::string saved = write_temp("solved.json", first.out);
      const Proc verified = run_cli("verify --job \"" + saved + "\"");
      CHECK(verified.exit_code == 0);
      CHECK(json::parse(verified.out)["valid"] == true);
      CHECK(run_cli("verify", saved).out == verified.out);
    }
  }

  const Proc flags = run_cli("solve --field p-adic:7 --vars x --system \"x^2 - 2\" --point 3 -N 4");
  CHECK(flags.exit_code == 0);
  CHECK(json::parse(flags.out)["zero"][0]["residue"] == "2166");

  const Proc syntax = run_cli("solve --field p-adic:7 --vars x --system \"x^-1\" --point 3 -N 4");
  CHECK(syntax.exit_code == 2);
  CHECK(json::parse(syntax.out)["position"]["column"] == 3);

  CHECK(run_cli("solve --field p-adic:9 --vars x --system x --point 0 -N 4").exit_code == 2);
  CHECK(run_cli("lift --mode hensel-newton --field p-adic:7 --vars x --system \"7*x + 98\" -N 3").exit_code == 1);
  CHECK(run_cli("--bogus-flag").exit_code == 2);
  CHECK(run_cli("solve", write_temp("garbage.json", "[1, 2")).exit_code == 2);

  const std::string out_path = (std::filesystem::temp_directory_path() / "hensel_test_cli_out.json").string();
  std::filesystem::remove(out_path);
  const Proc to_file = run_cli("solve --field p-adic:7 --vars x --system \"x^2 - 2\" --point 3 -N 4 --output \"" +
                               out_path + "\"");
  CHECK(to_file.exit_code == 0);
  CHECK(to_file.out.empty());
  std::stringstream written;
  written << std::ifstream(out_path).rdbuf();
  CHECK(written.str() == flags.out);

  json batch = json::array();
  for (const auto& path : job_files()) batch.push_back(json::parse(std::ifstream(path)));
  const std::string batch_file = write_temp("batch.json", batch.dump());
  const Proc b1 = run_cli("--batch \"" + batch_file + "\" --threads 1");
  const Proc b8 = run_cli("--batch \"" + batch_file + "\" --threads 8");
  CHECK(b1.exit_code == 0);
  CHECK(b1.out == b8.out);
}
