// Command-line front end for the wetzel construction pipeline. Talks to the
// shared library exclusively through the C API in wetzel.h; file handling
// and flag parsing live here, all mathematics lives behind the API.
//
// Verbs:
//   run        execute stages, write the certificate artifact, summarize
//   verify     re-check an artifact from its embedded quantities alone
//   separate   find a separating point for a stored family
//   enumerate  dump a prefix of the node enumeration
//
// Configuration precedence for `run`: config file > flags > defaults.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "wetzel.h"

namespace {

using Json = nlohmann::ordered_json;

struct StringDeleter {
  void operator()(char* s) const { wz_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct RunDeleter {
  void operator()(wz_run* r) const { wz_run_free(r); }
};
using RunHandle = std::unique_ptr<wz_run, RunDeleter>;

[[noreturn]] void die(const std::string& message, int code = 2) {
  std::cerr << "wetzel: " << message << "\n";
  std::exit(code);
}

void die_status(const char* what, wz_status status) {
  die(std::string(what) + ": " + wz_status_name(status) + " (" +
          wz_last_error() + ")",
      status == WZ_ERR_PARSE || status == WZ_ERR_ARGUMENT ? 2 : 1);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) die("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  fs::path tmp = fs::path(path);
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) die("cannot write '" + tmp.string() + "'");
    out << bytes;
    if (!out.flush()) die("short write to '" + tmp.string() + "'");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) die("cannot move '" + tmp.string() + "' to '" + path + "'");
}

Json parse_json_file(const std::string& path, const char* what) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    die(std::string("malformed ") + what + " '" + path + "': " + e.what());
  }
}

RunHandle parse_artifact(const std::string& path) {
  wz_run* raw = nullptr;
  if (wz_status s = wz_run_parse(read_file(path).c_str(), &raw); s != WZ_OK)
    die_status("parsing artifact", s);
  return RunHandle(raw);
}

int cmd_run(const Json& config) {
  wz_run* raw = nullptr;
  if (wz_status s = wz_run_stages(config.dump().c_str(), &raw); s != WZ_OK)
    die_status("run", s);
  RunHandle run(raw);

  char* json_out = nullptr;
  if (wz_status s = wz_run_to_json(run.get(), &json_out); s != WZ_OK)
    die_status("serializing artifact", s);
  ApiString artifact(json_out);

  // the effective output path lives in the artifact's materialized config
  std::string output = Json::parse(artifact.get())
                           .at("config").at("output").get<std::string>();
  write_file_atomic(output, artifact.get());

  char* text = nullptr;
  if (wz_status s = wz_run_summary(run.get(), &text); s != WZ_OK)
    die_status("summarizing run", s);
  ApiString summary(text);
  std::cout << summary.get() << "artifact: " << output << "\n";
  return wz_run_all_pass(run.get()) ? 0 : 1;
}

int cmd_verify(const std::string& path) {
  RunHandle run = parse_artifact(path);
  char* text = nullptr;
  wz_status s = wz_run_verify(run.get(), &text);
  ApiString report(text);
  if (report) std::cout << report.get();
  if (s == WZ_OK) return 0;
  if (s == WZ_ERR_VERIFY) return 1;
  die_status("verify", s);
  return 1;
}

int cmd_separate(const std::string& path, uint64_t search_size,
                 const std::string& output) {
  RunHandle run = parse_artifact(path);
  char* report_raw = nullptr;
  wz_status s = wz_run_separate(run.get(), search_size, &report_raw);
  if (s != WZ_OK && s != WZ_ERR_SEARCH) die_status("separate", s);
  ApiString report(report_raw);
  if (!output.empty()) write_file_atomic(output, report.get());
  Json j = Json::parse(report.get());
  if (s == WZ_OK)
    std::cout << "separating point found after "
              << j.at("scanned").get<uint64_t>() << " candidate(s)\n";
  else
    std::cout << "no separating point among "
              << j.at("scanned").get<uint64_t>() << " candidate(s)\n";
  if (!output.empty()) std::cout << "report: " << output << "\n";
  return s == WZ_OK ? 0 : 1;
}

int cmd_enumerate(uint64_t start, uint64_t count, const std::string& output) {
  char* json_raw = nullptr;
  if (wz_status s = wz_enumerate(start, count, &json_raw); s != WZ_OK)
    die_status("enumerate", s);
  ApiString json(json_raw);
  write_file_atomic(output, json.get());
  std::cout << "enumerated " << count << " point(s) starting at " << start
            << "\n"
            << "artifact: " << output << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-stage interpolation construction over exact "
               "Gaussian-rational arithmetic, with machine-checkable "
               "certificates"};
  app.require_subcommand(1);

  // --- run ---------------------------------------------------------------
  auto* run = app.add_subcommand("run", "execute stages and emit certificates");
  uint64_t stages = 0, search_size = 0;
  std::string enumeration, policy, output, verify_list;
  std::string config_path, enum_file, policy_file;
  auto* stages_opt = run->add_option("--stages", stages, "stage count");
  auto* enum_opt = run->add_option("--enumeration", enumeration,
                                   "node source: zigzag-D or file");
  auto* enum_file_opt = run->add_option(
      "--enum-file", enum_file, "JSON array of points for --enumeration file");
  auto* policy_opt = run->add_option(
      "--policy", policy,
      "offset-half, offset-quarter-fallback or custom-file");
  auto* policy_file_opt = run->add_option(
      "--policy-file", policy_file,
      "JSON {\"primary\": rat, \"fallback\": rat} for --policy custom-file");
  auto* output_opt = run->add_option("--output", output, "artifact path");
  auto* verify_opt = run->add_option(
      "--verify", verify_list,
      "comma list of certificate families (coeff_bounds,in_d,diagonal,"
      "injectivity,tail,census,separation)");
  auto* search_opt =
      run->add_option("--search-size", search_size, "separating-point search size");
  run->add_option("--config", config_path,
                  "JSON config file; overrides any flags");

  // --- verify ------------------------------------------------------------
  auto* verify = app.add_subcommand("verify", "re-check a stored artifact");
  std::string verify_path;
  verify->add_option("artifact", verify_path, "artifact JSON path")
      ->required();

  // --- separate ----------------------------------------------------------
  auto* separate =
      app.add_subcommand("separate", "find a separating point for a family");
  std::string separate_path, separate_output;
  uint64_t separate_size = 0;
  separate->add_option("artifact", separate_path, "artifact JSON path")
      ->required();
  separate->add_option("--search-size", separate_size,
                       "candidate count (0: use the artifact's configured size)");
  separate->add_option("--output", separate_output, "report JSON path");

  // --- enumerate ---------------------------------------------------------
  auto* enumerate =
      app.add_subcommand("enumerate", "dump a prefix of the node enumeration");
  uint64_t enum_start = 0, enum_count = 64;
  std::string enum_output = "wetzel-zeta.json";
  enumerate->add_option("--start", enum_start, "first index");
  enumerate->add_option("--count", enum_count, "number of points");
  enumerate->add_option("--output", enum_output, "output JSON path");

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    Json config = Json::object();
    if (stages_opt->count()) config["stages"] = stages;
    if (enum_opt->count()) config["enumeration"] = enumeration;
    if (enum_file_opt->count())
      config["enumeration_points"] =
          parse_json_file(enum_file, "enumeration file");
    if (policy_opt->count()) config["policy"] = policy;
    if (policy_file_opt->count())
      config["policy_offsets"] = parse_json_file(policy_file, "policy file");
    if (output_opt->count()) config["output"] = output;
    if (verify_opt->count()) {
      Json flags = Json::array();
      std::stringstream ss(verify_list);
      std::string flag;
      while (std::getline(ss, flag, ','))
        if (!flag.empty()) flags.push_back(flag);
      config["verify"] = flags;
    }
    if (search_opt->count()) config["separating_search_size"] = search_size;
    if (!config_path.empty()) {
      Json overrides = parse_json_file(config_path, "config file");
      if (!overrides.is_object()) die("config file must hold a JSON object");
      for (const auto& item : overrides.items())
        config[item.key()] = item.value();
    }
    return cmd_run(config);
  }
  if (verify->parsed()) return cmd_verify(verify_path);
  if (separate->parsed())
    return cmd_separate(separate_path, separate_size, separate_output);
  if (enumerate->parsed())
    return cmd_enumerate(enum_start, enum_count, enum_output);
  return 2;
}
