#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "hensel/cli/commands.hpp"

namespace {

using hensel::cli::json;
using hensel::cli::RunResult;

std::string read_source(const std::string& path) {
  if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int emit(const RunResult& result, const std::string& output) {
  const std::string text = hensel::cli::render(result.document);
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) {
      std::cerr << "hensel-cli: cannot write '" << output << "'\n";
      return hensel::cli::kExitFailure;
    }
    out << text;
  }
  if (result.document.contains("error")) {
    std::cerr << "hensel-cli: " << result.document["error"].get<std::string>() << ": "
              << result.document["detail"].get<std::string>() << "\n";
  }
  return result.exit_code;
}

RunResult usage_error(const std::string& command, const std::string& detail) {
  return {hensel::cli::error_document(command, "SCHEMA_ERROR", detail), hensel::cli::kExitUsage};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hensel lifting: lift, solve, verify, etale, traceform, val"};
  std::string command;
  std::string field, job_path, batch_path, output, mode;
  std::vector<std::string> vars, system, point, elements;
  long precision = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());

  app.add_option("command", command, "lift | solve | verify | etale | traceform | val");
  app.add_option("--field", field, "p-adic:P, t-adic:Q or t-adic:F_P");
  app.add_option("--vars", vars, "variable names")->delimiter(',');
  app.add_option("--system", system, "polynomial (repeat once per equation)");
  app.add_option("--point", point, "point coordinates")->delimiter(',');
  app.add_option("--elements", elements, "elements for val")->delimiter(',');
  app.add_option("-N,--precision", precision, "absolute precision N");
  app.add_option("--mode", mode, "lift mode: hensel | herve | hensel-newton | refine");
  app.add_option("--job", job_path, "jobspec or earlier output document ('-' for stdin)");
  app.add_option("--batch", batch_path, "JSON array of jobs ('-' for stdin)");
  app.add_option("--threads", threads, "batch worker threads");
  app.add_option("--output", output, "write the result here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit(usage_error(command.empty() ? "unknown" : command, e.what()), output);
  }

  const std::optional<std::string> cmd = command.empty() ? std::nullopt : std::optional<std::string>(command);
  try {
    if (!batch_path.empty()) {
      json docs;
      try {
        docs = json::parse(read_source(batch_path));
      } catch (const json::parse_error& e) {
        return emit(usage_error("batch", e.what()), output);
      }
      return emit(hensel::cli::run_batch(docs, threads, cmd), output);
    }

    const bool has_flags = !field.empty() || !vars.empty() || !system.empty() || !point.empty() ||
                           !elements.empty() || precision != 0 || !mode.empty();
    json doc = json::object();
    if (!job_path.empty() || !has_flags) {
      try {
        doc = json::parse(read_source(job_path.empty() ? "-" : job_path));
      } catch (const json::parse_error& e) {
        return emit(usage_error(cmd.value_or("unknown"), e.what()), output);
      }
    }
    if (has_flags) {
      if (!doc.is_object()) return emit(usage_error(cmd.value_or("unknown"), "job must be a JSON object"), output);
      json& job = doc.contains("job") ? doc["job"] : doc;
      if (!field.empty()) job["field"] = field;
      if (!vars.empty()) job["variables"] = vars;
      if (!system.empty()) job["system"] = system;
      if (!point.empty()) job["point"] = point;
      if (!elements.empty()) job["elements"] = elements;
      if (precision != 0) job["precision"] = precision;
      if (!mode.empty()) job["mode"] = mode;
    }
    return emit(hensel::cli::run_job(doc, cmd), output);
  } catch (const std::exception& e) {
    return emit(usage_error(cmd.value_or("unknown"), e.what()), output);
  }
}
