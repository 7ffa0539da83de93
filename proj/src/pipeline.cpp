#include "wetzel/pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace wetzel {

namespace {

constexpr const char* kSchema = "wetzel-run/1";

std::vector<QC> enumeration_source(const RunConfig& c, std::uint64_t count) {
  if (c.enumeration == "zigzag-D") return zeta_prefix(count);
  if (c.enumeration_points.size() < count)
    throw DomainError("enumeration file provides " +
                      std::to_string(c.enumeration_points.size()) +
                      " points, need " + std::to_string(count));
  return {c.enumeration_points.begin(),
          c.enumeration_points.begin() + static_cast<std::ptrdiff_t>(count)};
}

std::uint64_t tail_terms_for(std::uint64_t stage, const QC& z) {
  // smallest admissible N is floor(norm_ub(z)) + 1, which gives
  // N + 1 > 1 + norm_ub(z); prefer the stage index when it is larger
  Int least = norm_ub(z).floor() + 1;
  if (!least.fits_ulong_p())
    throw DomainError("tail sample point too large");
  return std::max<std::uint64_t>(stage, least.get_ui());
}

TailSample make_tail_sample(std::uint64_t stage, const QC& z) {
  TailSample s;
  s.z = z;
  s.terms = tail_terms_for(stage, z);
  s.bound = tail_bound(s.terms, z);
  s.partial = exp_partial_sum(Rat(1) + norm_ub(z), s.terms, 3 * s.terms);
  s.pass = s.bound >= s.partial;
  return s;
}

}  // namespace

std::vector<std::string> RunConfig::default_verify_flags() {
  return {"coeff_bounds", "in_d", "diagonal", "injectivity", "tail"};
}

const std::vector<std::string>& RunConfig::known_verify_flags() {
  static const std::vector<std::string> flags = {
      "coeff_bounds", "in_d", "diagonal", "injectivity",
      "tail",         "census", "separation"};
  return flags;
}

bool RunConfig::wants(std::string_view flag) const {
  return std::find(verify_flags.begin(), verify_flags.end(), flag) !=
         verify_flags.end();
}

SelectionPolicy RunConfig::selection_policy() const {
  if (policy == "offset-half") return SelectionPolicy::offset_half();
  if (policy == "offset-quarter-fallback")
    return SelectionPolicy::offset_quarter_fallback();
  if (policy == "custom-file") {
    if (!policy_offsets)
      throw DomainError("policy custom-file requires explicit offsets");
    return *policy_offsets;
  }
  throw DomainError("unknown selection policy '" + policy + "'");
}

void RunConfig::validate() const {
  if (separating_search_size < 1)
    throw DomainError("separating search size must be >= 1");
  if (enumeration != "zigzag-D" && enumeration != "file")
    throw DomainError("unknown enumeration '" + enumeration + "'");
  if (enumeration == "file") {
    // any injective sequence is acceptable; PointSeq rejects duplicates
    (void)PointSeq(enumeration_points);
  }
  selection_policy().validate();
  const auto& known = known_verify_flags();
  for (const std::string& f : verify_flags) {
    if (std::find(known.begin(), known.end(), f) == known.end())
      throw DomainError("unknown verify flag '" + f + "'");
    if (std::count(verify_flags.begin(), verify_flags.end(), f) != 1)
      throw DomainError("duplicate verify flag '" + f + "'");
  }
}

FamilyRecord RunArtifact::family() const {
  FamilyRecord fam;
  fam.zeta_prefix = PointSeq(zeta_prefix);
  for (const StageCertificate& s : stages) {
    fam.members.push_back(s.member);
    fam.provenance.push_back(s.stage);
  }
  return fam;
}

Rat exp_partial_sum(const Rat& x, std::uint64_t from, std::uint64_t to) {
  Rat term = x.pow(from) / Rat(factorial(from));
  Rat sum(0);
  for (std::uint64_t i = from; i <= to; ++i) {
    sum += term;
    term *= x / Rat(Int(i) + 1);
  }
  return sum;
}

RunArtifact run_stages(const RunConfig& config) {
  config.validate();
  RunArtifact art;
  art.config = config;
  const std::uint64_t n_points = config.stages > 0 ? config.stages - 1 : 0;
  art.zeta_prefix = enumeration_source(config, n_points);
  const SelectionPolicy policy = config.selection_policy();

  FamilyRecord family;
  family.zeta_prefix = PointSeq(art.zeta_prefix);

  for (std::uint64_t k = 0; k < config.stages; ++k) {
    StageCertificate cert;
    cert.stage = k;

    PointSeq w(std::vector<QC>(art.zeta_prefix.begin(),
                               art.zeta_prefix.begin() +
                                   static_cast<std::ptrdiff_t>(k)));
    for (std::size_t n = 0; n < k; ++n)
      cert.forbidden.push_back(family.members[n].eval(w[n]));

    cert.series = erdos_step(w, cert.forbidden, policy);
    for (std::size_t n = 0; n < k; ++n)
      cert.values.push_back(eval_h(cert.series, k, w[n]));
    cert.member = to_monomial(cert.series);

    family.members.push_back(cert.member);
    family.provenance.push_back(k);

    auto record = [&cert](bool ok, const char* inequality) {
      if (!ok) {
        cert.pass = false;
        throw CertificateFailure(std::string("stage ") +
                                 std::to_string(cert.stage) + ": " +
                                 inequality + " violated");
      }
    };
    if (config.wants("coeff_bounds")) {
      cert.bounds = verify_coeff_bounds(cert.series);
      record(cert.bounds->pass,
             "coefficient bound norm_sq(eps_n)*(n!*q_ub(n))^2 < 1");
    }
    if (config.wants("in_d")) {
      cert.in_d = check_inD(family);
      record(*cert.in_d, "membership h(w_n) in D");
    }
    if (config.wants("diagonal")) {
      cert.diagonal = check_diagonal(cert.series, cert.forbidden);
      record(*cert.diagonal, "diagonalization h(w_n) != g_n(w_n)");
    }
    if (config.wants("injectivity")) {
      cert.injectivity = family.pairwise_distinct();
      record(*cert.injectivity, "family injectivity");
    }
    if (config.wants("tail")) {
      cert.tail = std::vector<TailSample>();
      if (k >= 1) {
        cert.tail->push_back(make_tail_sample(k, w[k - 1]));
        record(cert.tail->back().pass, "tail bound >= partial remainder");
      }
    }
    art.stages.push_back(std::move(cert));
  }

  if (config.wants("separation")) {
    art.separation =
        find_separation(family, config, config.separating_search_size);
    if (!art.separation->pass) art.all_pass = false;
  }
  if (config.wants("census")) {
    art.census = std::vector<CensusEntry>();
    for (std::size_t a = 0; a < family.zeta_prefix.size(); ++a) {
      CensusReport rep = wetzel_value_census(family, family.zeta_prefix[a]);
      art.census->push_back({static_cast<std::uint64_t>(a),
                             family.zeta_prefix[a], rep.le_count,
                             rep.gt_count, rep.gt_in_d});
    }
  }
  return art;
}

SeparationReport find_separation(const FamilyRecord& family,
                                 const RunConfig& config,
                                 std::uint64_t search_size) {
  SeparationReport rep;
  rep.search_size = search_size;
  std::vector<QC> candidates;
  if (config.enumeration == "zigzag-D") {
    candidates = zeta_prefix(search_size);
  } else {
    candidates = config.enumeration_points;
    if (candidates.size() > search_size) candidates.resize(search_size);
  }
  try {
    QC z0 = find_separating_point(family, candidates);
    rep.point = z0;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (candidates[i] == z0) { rep.scanned = i + 1; break; }
    for (const Poly& f : family.members) rep.values.push_back(f.eval(z0));
    rep.pass = true;
  } catch (const SearchExhausted&) {
    rep.scanned = candidates.size();
    rep.pass = false;
  }
  return rep;
}

// --------------------------------------------------------------------------
// Independent verification from embedded quantities.
// --------------------------------------------------------------------------

VerifyReport verify_artifact(const RunArtifact& art) {
  VerifyReport rep;
  auto check = [&rep](bool ok, const std::string& what) {
    ++rep.checks;
    if (!ok) {
      rep.pass = false;
      rep.failures.push_back(what);
    }
  };

  try {
    art.config.validate();
  } catch (const std::exception& e) {
    check(false, std::string("config: ") + e.what());
    return rep;
  }

  const std::uint64_t n_points =
      art.config.stages > 0 ? art.config.stages - 1 : 0;
  check(art.zeta_prefix.size() == n_points, "enumeration prefix length");
  try {
    check(art.zeta_prefix == enumeration_source(art.config, n_points),
          "enumeration prefix does not match the configured source");
  } catch (const std::exception& e) {
    check(false, std::string("enumeration: ") + e.what());
  }
  check(art.stages.size() == art.config.stages, "stage count");

  FamilyRecord family;
  if (art.zeta_prefix.size() == n_points)
    family.zeta_prefix = PointSeq(art.zeta_prefix);

  bool stages_pass = true;
  for (std::size_t k = 0; k < art.stages.size(); ++k) {
    const StageCertificate& cert = art.stages[k];
    const std::string at = "stage " + std::to_string(k) + ": ";
    check(cert.stage == k, at + "stage index");
    check(cert.series.length() == k, at + "series length");
    check(cert.series.points.size() == k, at + "node count");
    bool nodes_ok = cert.series.points.size() == k &&
                    art.zeta_prefix.size() >= (k == 0 ? 0 : k);
    for (std::size_t n = 0; nodes_ok && n < k; ++n)
      nodes_ok = cert.series.points[n] == art.zeta_prefix[n];
    check(nodes_ok, at + "nodes equal the enumeration prefix");
    if (!nodes_ok) return rep;

    check(cert.values.size() == k, at + "value count");
    check(cert.forbidden.size() == k, at + "forbidden count");
    if (cert.values.size() != k || cert.forbidden.size() != k) return rep;

    for (std::size_t n = 0; n < k; ++n) {
      check(eval_h(cert.series, k, cert.series.points[n]) == cert.values[n],
            at + "embedded value " + std::to_string(n) +
                " recomputes from the coefficients");
      check(cert.forbidden[n] ==
                art.stages[n].member.eval(cert.series.points[n]),
            at + "forbidden value " + std::to_string(n) +
                " equals the prior member's value");
    }
    check(cert.member == to_monomial(cert.series),
          at + "monomial member recomputes from the series");

    family.members.push_back(cert.member);
    family.provenance.push_back(cert.stage);

    bool expected_pass = true;
    check(cert.bounds.has_value() == art.config.wants("coeff_bounds"),
          at + "coeff_bounds presence matches the config");
    if (cert.bounds) {
      CoeffBoundsReport fresh = verify_coeff_bounds(cert.series);
      check(fresh.lhs == cert.bounds->lhs,
            at + "embedded bound quantities recompute exactly");
      check(fresh.pass == cert.bounds->pass, at + "coeff_bounds verdict");
      check(cert.bounds->pass,
            at + "coefficient bound norm_sq(eps_n)*(n!*q_ub(n))^2 < 1");
      expected_pass = expected_pass && cert.bounds->pass;
    }
    check(cert.in_d.has_value() == art.config.wants("in_d"),
          at + "in_d presence matches the config");
    if (cert.in_d) {
      check(*cert.in_d == check_inD(family), at + "in_d verdict");
      check(*cert.in_d, at + "membership h(w_n) in D");
      expected_pass = expected_pass && *cert.in_d;
    }
    check(cert.diagonal.has_value() == art.config.wants("diagonal"),
          at + "diagonal presence matches the config");
    if (cert.diagonal) {
      check(*cert.diagonal == check_diagonal(cert.series, cert.forbidden),
            at + "diagonal verdict");
      check(*cert.diagonal, at + "diagonalization h(w_n) != g_n(w_n)");
      expected_pass = expected_pass && *cert.diagonal;
    }
    check(cert.injectivity.has_value() == art.config.wants("injectivity"),
          at + "injectivity presence matches the config");
    if (cert.injectivity) {
      check(*cert.injectivity == family.pairwise_distinct(),
            at + "injectivity verdict");
      check(*cert.injectivity, at + "family injectivity");
      expected_pass = expected_pass && *cert.injectivity;
    }
    check(cert.tail.has_value() == art.config.wants("tail"),
          at + "tail presence matches the config");
    if (cert.tail) {
      check(cert.tail->size() == (k >= 1 ? 1u : 0u), at + "tail sample count");
      for (const TailSample& s : *cert.tail) {
        try {
          check(s.bound == tail_bound(s.terms, s.z),
                at + "embedded tail bound recomputes exactly");
          check(s.partial ==
                    exp_partial_sum(Rat(1) + norm_ub(s.z), s.terms,
                                    3 * s.terms),
                at + "embedded partial remainder recomputes exactly");
        } catch (const DomainError& e) {
          check(false, at + "tail sample: " + e.what());
        }
        check(s.pass == (s.bound >= s.partial), at + "tail verdict");
        check(s.pass, at + "tail bound >= partial remainder");
        expected_pass = expected_pass && s.pass;
      }
    }
    check(cert.pass == expected_pass, at + "stage verdict consistency");
    stages_pass = stages_pass && cert.pass;
  }

  check(art.separation.has_value() == art.config.wants("separation"),
        "separation presence matches the config");
  bool separation_pass = true;
  if (art.separation) {
    const SeparationReport& sep = *art.separation;
    separation_pass = sep.pass;
    check(sep.search_size == art.config.separating_search_size,
          "separation search size");
    SeparationReport fresh = find_separation(family, art.config,
                                             sep.search_size);
    check(fresh.pass == sep.pass, "separation verdict");
    if (sep.pass) {
      check(fresh.point == sep.point, "separating point recomputes");
      check(fresh.scanned == sep.scanned, "separation scan count");
      check(fresh.values == sep.values, "separation values recompute");
    }
    check(sep.pass, "separating point exists in the search space");
  }

  check(art.census.has_value() == art.config.wants("census"),
        "census presence matches the config");
  if (art.census) {
    check(art.census->size() == family.zeta_prefix.size(), "census size");
    for (const CensusEntry& e : *art.census) {
      const std::string at = "census alpha=" + std::to_string(e.alpha) + ": ";
      bool in_range = e.alpha < family.zeta_prefix.size();
      check(in_range, at + "alpha within the prefix");
      if (!in_range) continue;
      check(family.zeta_prefix[e.alpha] == e.z, at + "census point");
      CensusReport fresh = wetzel_value_census(family, e.z);
      check(fresh.le_count == e.le_count && fresh.gt_count == e.gt_count &&
                fresh.gt_in_d == e.gt_in_d,
            at + "census counts recompute");
    }
  }

  check(art.all_pass == (stages_pass && separation_pass),
        "artifact verdict consistency");
  return rep;
}

// --------------------------------------------------------------------------
// JSON codecs.
// --------------------------------------------------------------------------

Json config_to_json(const RunConfig& c) {
  Json j;
  j["stages"] = c.stages;
  j["enumeration"] = c.enumeration;
  if (c.enumeration == "file")
    j["enumeration_points"] = qc_list_to_json(c.enumeration_points);
  j["policy"] = c.policy;
  if (c.policy == "custom-file" && c.policy_offsets)
    j["policy_offsets"] = Json{{"primary", rat_to_json(c.policy_offsets->primary)},
                               {"fallback", rat_to_json(c.policy_offsets->fallback)}};
  j["output"] = c.output;
  j["verify"] = c.verify_flags;
  j["separating_search_size"] = c.separating_search_size;
  return j;
}

namespace {

// Applies the keys present in j on top of base; unknown keys are rejected.
// Used both for full config decoding and for partial config-file overrides.
void apply_config_json(RunConfig& base, const Json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    const Json& v = item.value();
    if (key == "stages") base.stages = require_uint(v, "stages");
    else if (key == "enumeration") base.enumeration = require_string(v, "enumeration");
    else if (key == "enumeration_points") base.enumeration_points = qc_list_from_json(v);
    else if (key == "policy") base.policy = require_string(v, "policy");
    else if (key == "policy_offsets") {
      require_exact_keys(v, {"primary", "fallback"});
      base.policy_offsets = SelectionPolicy{rat_from_json(v.at("primary")),
                                            rat_from_json(v.at("fallback"))};
    } else if (key == "output") base.output = require_string(v, "output");
    else if (key == "verify") {
      std::vector<std::string> flags;
      for (const Json& f : require_array(v, "verify"))
        flags.push_back(require_string(f, "verify flag"));
      base.verify_flags = std::move(flags);
    } else if (key == "separating_search_size") {
      base.separating_search_size = require_uint(v, "separating_search_size");
    } else {
      throw ParseError("unexpected config key '" + key + "'");
    }
  }
  try {
    base.validate();
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid config: ") + e.what());
  }
}

Json bounds_to_json(const CoeffBoundsReport& b) {
  Json lhs = Json::array();
  for (const Rat& r : b.lhs) lhs.push_back(rat_to_json(r));
  return Json{{"pass", b.pass}, {"lhs", lhs}};
}

CoeffBoundsReport bounds_from_json(const Json& j) {
  require_exact_keys(j, {"pass", "lhs"});
  CoeffBoundsReport b;
  b.pass = require_bool(j.at("pass"), "pass");
  for (const Json& r : require_array(j.at("lhs"), "lhs"))
    b.lhs.push_back(rat_from_json(r));
  return b;
}

Json tail_to_json(const std::vector<TailSample>& samples) {
  Json arr = Json::array();
  for (const TailSample& s : samples)
    arr.push_back(Json{{"z", qc_to_json(s.z)},
                       {"terms", s.terms},
                       {"bound", rat_to_json(s.bound)},
                       {"partial_sum", rat_to_json(s.partial)},
                       {"pass", s.pass}});
  return arr;
}

std::vector<TailSample> tail_from_json(const Json& j) {
  std::vector<TailSample> out;
  for (const Json& item : require_array(j, "tail samples")) {
    require_exact_keys(item, {"z", "terms", "bound", "partial_sum", "pass"});
    TailSample s;
    s.z = qc_from_json(item.at("z"));
    s.terms = require_uint(item.at("terms"), "terms");
    s.bound = rat_from_json(item.at("bound"));
    s.partial = rat_from_json(item.at("partial_sum"));
    s.pass = require_bool(item.at("pass"), "pass");
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

RunConfig config_from_json(const Json& j) {
  RunConfig c;
  apply_config_json(c, j);
  return c;
}

Json stage_to_json(const StageCertificate& s) {
  Json j;
  j["stage"] = s.stage;
  j["points"] = qc_list_to_json(s.series.points.points());
  j["coeffs"] = qc_list_to_json(s.series.coeffs);
  j["values"] = qc_list_to_json(s.values);
  j["forbidden"] = qc_list_to_json(s.forbidden);
  j["member"] = poly_to_json(s.member);
  Json checks;
  if (s.bounds) checks["coeff_bounds"] = bounds_to_json(*s.bounds);
  if (s.in_d) checks["in_d"] = Json{{"pass", *s.in_d}};
  if (s.diagonal) checks["diagonal"] = Json{{"pass", *s.diagonal}};
  if (s.injectivity) checks["injectivity"] = Json{{"pass", *s.injectivity}};
  if (s.tail) checks["tail"] = Json{{"pass", std::all_of(
                                         s.tail->begin(), s.tail->end(),
                                         [](const TailSample& t) { return t.pass; })},
                                    {"samples", tail_to_json(*s.tail)}};
  j["checks"] = std::move(checks);
  j["pass"] = s.pass;
  return j;
}

StageCertificate stage_from_json(const Json& j) {
  require_exact_keys(j, {"stage", "points", "coeffs", "values", "forbidden",
                         "member", "checks", "pass"});
  StageCertificate s;
  s.stage = require_uint(j.at("stage"), "stage");
  try {
    s.series = NewtonSeries(PointSeq(qc_list_from_json(j.at("points"))),
                            qc_list_from_json(j.at("coeffs")));
  } catch (const DomainError& e) {
    throw ParseError(std::string("invalid stage series: ") + e.what());
  }
  s.values = qc_list_from_json(j.at("values"));
  s.forbidden = qc_list_from_json(j.at("forbidden"));
  s.member = poly_from_json(j.at("member"));
  const Json& checks = j.at("checks");
  if (!checks.is_object()) throw ParseError("checks must be an object");
  for (const auto& item : checks.items()) {
    const std::string& key = item.key();
    const Json& v = item.value();
    if (key == "coeff_bounds") s.bounds = bounds_from_json(v);
    else if (key == "in_d") {
      require_exact_keys(v, {"pass"});
      s.in_d = require_bool(v.at("pass"), "pass");
    } else if (key == "diagonal") {
      require_exact_keys(v, {"pass"});
      s.diagonal = require_bool(v.at("pass"), "pass");
    } else if (key == "injectivity") {
      require_exact_keys(v, {"pass"});
      s.injectivity = require_bool(v.at("pass"), "pass");
    } else if (key == "tail") {
      require_exact_keys(v, {"pass", "samples"});
      s.tail = tail_from_json(v.at("samples"));
      bool claimed = require_bool(v.at("pass"), "pass");
      bool actual = std::all_of(s.tail->begin(), s.tail->end(),
                                [](const TailSample& t) { return t.pass; });
      if (claimed != actual)
        throw ParseError("tail verdict disagrees with its samples");
    } else {
      throw ParseError("unexpected check '" + key + "'");
    }
  }
  s.pass = require_bool(j.at("pass"), "pass");
  return s;
}

Json separation_to_json(const SeparationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["point"] = r.point ? qc_to_json(*r.point) : Json(nullptr);
  j["values"] = qc_list_to_json(r.values);
  j["scanned"] = r.scanned;
  j["search_size"] = r.search_size;
  return j;
}

SeparationReport separation_from_json(const Json& j) {
  require_exact_keys(j, {"pass", "point", "values", "scanned", "search_size"});
  SeparationReport r;
  r.pass = require_bool(j.at("pass"), "pass");
  if (!j.at("point").is_null()) r.point = qc_from_json(j.at("point"));
  if (r.pass && !r.point)
    throw ParseError("passing separation report without a point");
  r.values = qc_list_from_json(j.at("values"));
  r.scanned = require_uint(j.at("scanned"), "scanned");
  r.search_size = require_uint(j.at("search_size"), "search_size");
  return r;
}

Json artifact_to_json(const RunArtifact& a) {
  Json j;
  j["schema"] = kSchema;
  j["config"] = config_to_json(a.config);
  j["zeta_prefix"] = qc_list_to_json(a.zeta_prefix);
  Json stages = Json::array();
  for (const StageCertificate& s : a.stages) stages.push_back(stage_to_json(s));
  j["stages"] = std::move(stages);
  if (a.separation) j["separation"] = separation_to_json(*a.separation);
  if (a.census) {
    Json census = Json::array();
    for (const CensusEntry& e : *a.census)
      census.push_back(Json{{"alpha", e.alpha},
                            {"z", qc_to_json(e.z)},
                            {"le_count", e.le_count},
                            {"gt_count", e.gt_count},
                            {"gt_in_d", e.gt_in_d}});
    j["census"] = std::move(census);
  }
  j["all_pass"] = a.all_pass;
  return j;
}

RunArtifact artifact_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("artifact must be a JSON object");
  if (require_string(require_key(j, "schema"), "schema") != kSchema)
    throw ParseError("unknown artifact schema");
  for (const auto& item : j.items()) {
    static const char* known[] = {"schema", "config", "zeta_prefix", "stages",
                                  "separation", "census", "all_pass"};
    if (std::find_if(std::begin(known), std::end(known),
                     [&](const char* k) { return item.key() == k; }) ==
        std::end(known))
      throw ParseError("unexpected artifact key '" + item.key() + "'");
  }
  RunArtifact a;
  a.config = config_from_json(require_key(j, "config"));
  a.zeta_prefix = qc_list_from_json(require_key(j, "zeta_prefix"));
  for (const Json& s : require_array(require_key(j, "stages"), "stages"))
    a.stages.push_back(stage_from_json(s));
  if (j.contains("separation"))
    a.separation = separation_from_json(j.at("separation"));
  if (j.contains("census")) {
    a.census = std::vector<CensusEntry>();
    for (const Json& e : require_array(j.at("census"), "census")) {
      require_exact_keys(e, {"alpha", "z", "le_count", "gt_count", "gt_in_d"});
      a.census->push_back({require_uint(e.at("alpha"), "alpha"),
                           qc_from_json(e.at("z")),
                           require_uint(e.at("le_count"), "le_count"),
                           require_uint(e.at("gt_count"), "gt_count"),
                           require_bool(e.at("gt_in_d"), "gt_in_d")});
    }
  }
  a.all_pass = require_bool(require_key(j, "all_pass"), "all_pass");
  return a;
}

std::string artifact_to_string(const RunArtifact& a) {
  return artifact_to_json(a).dump(2) + "\n";
}

RunArtifact artifact_from_string(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return artifact_from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file_atomic(const std::string& path, const std::string& bytes) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write '" + tmp.string() + "'");
    out << bytes;
    if (!out.flush()) throw ParseError("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, target);
}

std::string run_summary(const RunArtifact& a) {
  std::ostringstream out;
  out << "run: " << a.config.stages << " stages, enumeration "
      << a.config.enumeration << ", policy " << a.config.policy << "\n";
  for (const StageCertificate& s : a.stages) {
    out << "stage " << s.stage << ": " << (s.pass ? "pass" : "FAIL") << " [";
    bool first = true;
    auto item = [&](const char* name, bool ok) {
      out << (first ? "" : " ") << name << (ok ? "" : "!");
      first = false;
    };
    if (s.bounds) item("coeff_bounds", s.bounds->pass);
    if (s.in_d) item("in_d", *s.in_d);
    if (s.diagonal) item("diagonal", *s.diagonal);
    if (s.injectivity) item("injectivity", *s.injectivity);
    if (s.tail)
      item("tail", std::all_of(s.tail->begin(), s.tail->end(),
                               [](const TailSample& t) { return t.pass; }));
    out << "]\n";
  }
  if (a.separation) {
    out << "separation: ";
    if (a.separation->pass)
      out << "z0 = " << a.separation->point->str() << " after "
          << a.separation->scanned << " candidate(s)\n";
    else
      out << "exhausted " << a.separation->scanned << " candidate(s)\n";
  }
  if (a.census) out << "census: " << a.census->size() << " entries\n";
  out << (a.all_pass ? "result: all certificates pass"
                     : "result: CERTIFICATE FAILURE")
      << "\n";
  return out.str();
}

std::string verify_summary(const VerifyReport& r) {
  std::ostringstream out;
  out << "verify: " << r.checks << " checks, "
      << (r.pass ? "all pass" : std::to_string(r.failures.size()) + " failed")
      << "\n";
  for (const std::string& f : r.failures) out << "  FAIL " << f << "\n";
  return out.str();
}

}  // namespace wetzel
