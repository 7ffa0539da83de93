#include "wetzel.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "wetzel/pipeline.hpp"

struct wz_run {
  wetzel::RunArtifact artifact;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wz_status fail(wz_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Translates the library's exception vocabulary into status codes.
template <typename Fn>
wz_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const wetzel::ParseError& e) {
    return fail(WZ_ERR_PARSE, e.what());
  } catch (const wetzel::DomainError& e) {
    return fail(WZ_ERR_DOMAIN, e.what());
  } catch (const wetzel::SearchExhausted& e) {
    return fail(WZ_ERR_SEARCH, e.what());
  } catch (const wetzel::CertificateFailure& e) {
    return fail(WZ_ERR_VERIFY, e.what());
  } catch (const std::exception& e) {
    return fail(WZ_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(WZ_ERR_INTERNAL, "unknown error");
  }
}

wz_status out_string(const std::string& s, char** out) {
  char* dup = dup_string(s);
  if (!dup) return fail(WZ_ERR_INTERNAL, "out of memory");
  *out = dup;
  return WZ_OK;
}

}  // namespace

extern "C" {

uint32_t wz_api_version(void) { return 1; }

const char* wz_status_name(wz_status status) {
  switch (status) {
    case WZ_OK: return "ok";
    case WZ_ERR_ARGUMENT: return "invalid argument";
    case WZ_ERR_PARSE: return "parse error";
    case WZ_ERR_DOMAIN: return "domain error";
    case WZ_ERR_VERIFY: return "verification failed";
    case WZ_ERR_SEARCH: return "search exhausted";
    case WZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* wz_last_error(void) { return g_last_error.c_str(); }

wz_status wz_run_stages(const char* config_json, wz_run** out_run) {
  if (!config_json || !out_run)
    return fail(WZ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    wetzel::Json j;
    try {
      j = wetzel::Json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      throw wetzel::ParseError(std::string("malformed config JSON: ") +
                               e.what());
    }
    wetzel::RunConfig config = wetzel::config_from_json(j);
    auto run = std::make_unique<wz_run>();
    run->artifact = wetzel::run_stages(config);
    *out_run = run.release();
    return WZ_OK;
  });
}

wz_status wz_run_parse(const char* artifact_json, wz_run** out_run) {
  if (!artifact_json || !out_run)
    return fail(WZ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto run = std::make_unique<wz_run>();
    run->artifact = wetzel::artifact_from_string(artifact_json);
    *out_run = run.release();
    return WZ_OK;
  });
}

wz_status wz_run_to_json(const wz_run* run, char** out_json) {
  if (!run || !out_json) return fail(WZ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    return out_string(wetzel::artifact_to_string(run->artifact), out_json);
  });
}

wz_status wz_run_verify(const wz_run* run, char** out_report) {
  if (!run) return fail(WZ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    wetzel::VerifyReport report = wetzel::verify_artifact(run->artifact);
    std::string text = wetzel::verify_summary(report);
    if (out_report) {
      if (wz_status s = out_string(text, out_report); s != WZ_OK) return s;
    }
    if (!report.pass) return fail(WZ_ERR_VERIFY, text);
    return WZ_OK;
  });
}

wz_status wz_run_separate(const wz_run* run, uint64_t search_size,
                          char** out_report_json) {
  if (!run || !out_report_json)
    return fail(WZ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    uint64_t size = search_size ? search_size
                                : run->artifact.config.separating_search_size;
    wetzel::SeparationReport report = wetzel::find_separation(
        run->artifact.family(), run->artifact.config, size);
    std::string text = wetzel::separation_to_json(report).dump(2) + "\n";
    if (wz_status s = out_string(text, out_report_json); s != WZ_OK) return s;
    if (!report.pass)
      return fail(WZ_ERR_SEARCH, "no separating point in search space");
    return WZ_OK;
  });
}

wz_status wz_run_summary(const wz_run* run, char** out_text) {
  if (!run || !out_text) return fail(WZ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    return out_string(wetzel::run_summary(run->artifact), out_text);
  });
}

uint64_t wz_run_stage_count(const wz_run* run) {
  return run ? run->artifact.stages.size() : 0;
}

int wz_run_all_pass(const wz_run* run) {
  return run && run->artifact.all_pass ? 1 : 0;
}

void wz_run_free(wz_run* run) { delete run; }

wz_status wz_enumerate(uint64_t start, uint64_t count, char** out_json) {
  if (!out_json) return fail(WZ_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<wetzel::QC> points = wetzel::zeta_prefix(count, start);
    return out_string(wetzel::qc_list_to_json(points).dump(2) + "\n",
                      out_json);
  });
}

void wz_string_free(char* str) { std::free(str); }

}  // extern "C"
