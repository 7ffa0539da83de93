// =============================================================================
// Acceptance suite. One line per criterion, nonzero exit on any failure.
//
//   1. construction soundness for N in {1, 2, 8, 32}: values in D,
//      diagonalization, exact coefficient bound at every index
//   2. partial-sum stability for the N = 8 run
//   3. tail certification: bound dominates exact partial remainders and
//      decreases in N
//   4. squared product-norm inequality over random unit-disk pairs
//   5. separating point for the N = 8 family + agreement degree bounds
//   6. set kernel: eps-recursion fixpoint (exhaustive, rank <= 4),
//      von Neumann cardinality, CNF ordinal laws vs naive rewriter
//   7. determinism, emit/load round trip, standalone verify via the CLI
//
// argv[1]: path to the CLI binary (used by criterion 7).
// =============================================================================

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>

#include "oracles.hpp"
#include "wetzel/pipeline.hpp"

using namespace wetzel;

namespace {

int g_failures = 0;

void report(int criterion, const char* what, bool pass) {
  std::printf("criterion %d [%s]: %s\n", criterion, pass ? "PASS" : "FAIL",
              what);
  if (!pass) ++g_failures;
}

RunConfig config_for(std::uint64_t stages) {
  RunConfig c;
  c.stages = stages;
  return c;
}

// ---------------------------------------------------------------- 1 --------
bool construction_soundness(const RunArtifact& art) {
  FamilyRecord family;
  family.zeta_prefix = PointSeq(art.zeta_prefix);
  for (const StageCertificate& cert : art.stages) {
    family.members.push_back(cert.member);
    family.provenance.push_back(cert.stage);
    // recompute every claim of criterion 1 directly, exact comparisons only
    CoeffBoundsReport bounds = verify_coeff_bounds(cert.series);
    if (!bounds.pass) return false;
    for (const Rat& lhs : bounds.lhs)
      if (!(lhs < Rat(1))) return false;
    if (!check_diagonal(cert.series, cert.forbidden)) return false;
    if (!check_inD(family)) return false;
    for (std::size_t n = 0; n < cert.values.size(); ++n) {
      if (cert.values[n] == cert.forbidden[n]) return false;
      if (eval_h(cert.series, cert.series.length(), cert.series.points[n]) !=
          cert.values[n])
        return false;
    }
    if (!cert.pass) return false;
  }
  return art.all_pass;
}

// ---------------------------------------------------------------- 2 --------
bool partial_sum_stability(const RunArtifact& art8) {
  for (const StageCertificate& cert : art8.stages) {
    const NewtonSeries& s = cert.series;
    for (std::size_t n = 0; n < s.length(); ++n) {
      QC settled = eval_h(s, n + 1, s.points[n]);
      for (std::size_t m = n + 1; m <= s.length(); ++m)
        if (eval_h(s, m, s.points[n]) != settled) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- 3 --------
bool tail_certification() {
  const QC zs[] = {QC(0), QC(1), QC(Rat(1), Rat(1))};
  const std::uint64_t ns[] = {5, 10, 20};
  for (const QC& z : zs) {
    Rat x = Rat(1) + norm_ub(z);
    Rat previous;
    bool first = true;
    for (std::uint64_t n : ns) {
      if (!(Rat(Int(n + 1)) > x)) return false;  // sample admissibility
      Rat bound = tail_bound(n, z);
      // independent oracle: term-by-term exact remainder
      if (!(bound >= oracle::exp_sum_direct(x, n, 3 * n))) return false;
      if (!first && !(bound < previous)) return false;  // monotone decrease
      previous = bound;
      first = false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- 4 --------
bool product_norm_inequality() {
  PointSeq w(zeta_prefix(8));
  std::mt19937_64 rng(71);
  auto small = [&rng](long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng);
  };
  for (int trial = 0; trial < 50; ++trial) {
    QC z(Rat(Int(small(-12, 12)), Int(small(1, 6))),
         Rat(Int(small(-12, 12)), Int(small(1, 6))));
    QC offset(Rat(Int(small(-4, 4)), Int(8)), Rat(Int(small(-4, 4)), Int(8)));
    QC z_prime = z + offset;
    if (!(norm_sq(z_prime - z) <= Rat(1))) return false;
    for (std::size_t n = 0; n <= 8; ++n)
      if (!norm_p_certificate(n, z, z_prime, w)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- 5 --------
bool separating_point(const RunArtifact& art8) {
  FamilyRecord family = art8.family();
  if (family.members.size() != 8) return false;

  std::vector<QC> candidates = zeta_prefix(256);
  QC z0 = find_separating_point(family, candidates);
  for (std::size_t i = 0; i < family.members.size(); ++i)
    for (std::size_t j = i + 1; j < family.members.size(); ++j)
      if (family.members[i].eval(z0) == family.members[j].eval(z0))
        return false;

  // sampled pairs: grid agreement counts never exceed the degree bound
  std::vector<QC> grid;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      grid.emplace_back(Rat(Int(a), Int(2)), Rat(Int(b), Int(2)));
  std::mt19937_64 rng(72);
  std::uniform_int_distribution<std::size_t> pick(0, family.members.size() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) { --trial; continue; }
    const Poly& f = family.members[i];
    const Poly& g = family.members[j];
    std::size_t hits = 0;
    for (const QC& z : grid)
      if (is_agreement_point(f, g, z)) ++hits;
    if (hits > agreement_count_bound(f, g)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- 6 --------
bool set_kernel() {
  using std::size_t;
  const TransrecFunctional<size_t> rank_fn =
      [](const std::function<size_t(const HFSet&)>& f, const HFSet& a) {
        size_t r = 0;
        for (const HFSet& m : a.elts()) r = std::max(r, f(m) + 1);
        return r;
      };
  const TransrecFunctional<size_t> card_sum_fn =
      [](const std::function<size_t(const HFSet&)>& f, const HFSet& a) {
        size_t s = a.card();
        for (const HFSet& m : a.elts()) s += f(m);
        return s;
      };
  const TransrecFunctional<int> const_fn =
      [](const std::function<int(const HFSet&)>&, const HFSet&) { return 7; };

  // exhaustive over all 65536 sets of rank <= 4, three functionals
  for (const HFSet& a : oracle::universe_of_rank_le(4)) {
    if (!oracle::fixpoint_holds(rank_fn, a)) return false;
    if (!oracle::fixpoint_holds(card_sum_fn, a)) return false;
    if (!oracle::fixpoint_holds(const_fn, a)) return false;
  }

  for (size_t n = 0; n <= 64; ++n)
    if (finite_ordinal(n).card() != n) return false;

  // CNF laws on 10^3 random triples below omega^omega, coefficients <= 9,
  // cross-checked against the naive dense rewriter
  std::mt19937_64 rng(73);
  auto random_naive = [&rng]() {
    oracle::NaiveOrd a;
    std::size_t deg = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    a.coeffs.resize(deg + 1);
    for (auto& c : a.coeffs)
      c = std::uniform_int_distribution<std::uint64_t>(0, 9)(rng);
    return a;
  };
  for (int i = 0; i < 1000; ++i) {
    oracle::NaiveOrd na = random_naive(), nb = random_naive(),
                     nc = random_naive();
    OrdCNF a = oracle::to_cnf(na), b = oracle::to_cnf(nb),
           c = oracle::to_cnf(nc);
    if (!(oracle::from_cnf(a + b) == oracle::naive_add(na, nb))) return false;
    if (!(oracle::from_cnf(a * b) == oracle::naive_mul(na, nb))) return false;
    if (!((a + b) + c == a + (b + c))) return false;
    if (!((a * b) * c == a * (b * c))) return false;
    if (!(a * (b + c) == a * b + a * c)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- 7 --------
std::string shell_quote(const std::string& s) { return "'" + s + "'"; }

int run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = shell_quote(cli) + " " + args + " > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return rc;
}

bool determinism_and_roundtrip(const char* cli_path,
                               const std::vector<const RunArtifact*>& runs) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "wetzel-acceptance";
  fs::create_directories(dir);

  // two CLI runs with an identical config produce byte-identical artifacts
  std::string out = (dir / "out.json").string();
  std::string cli(cli_path);
  if (run_cli(cli, "run --stages 8 --output " + shell_quote(out)) != 0)
    return false;
  std::string first = read_file(out);
  if (run_cli(cli, "run --stages 8 --output " + shell_quote(out)) != 0)
    return false;
  if (read_file(out) != first) return false;

  // emit/load round trip is the identity on all criterion-1 artifacts, and
  // the standalone verify subcommand re-validates each emitted file
  int idx = 0;
  for (const RunArtifact* art : runs) {
    std::string path =
        (dir / ("art" + std::to_string(idx++) + ".json")).string();
    std::string bytes = artifact_to_string(*art);
    write_file_atomic(path, bytes);
    RunArtifact loaded = artifact_from_string(read_file(path));
    if (artifact_to_string(loaded) != bytes) return false;
    if (run_cli(cli, "verify " + shell_quote(path)) != 0) return false;
  }

  // the CLI-emitted artifact verifies standalone as well
  if (run_cli(cli, "verify " + shell_quote(out)) != 0) return false;

  // a tampered artifact must fail the standalone verifier
  std::string broken = first;
  auto pos = broken.find("\"all_pass\": true");
  if (pos == std::string::npos) return false;
  broken.replace(pos, 16, "\"all_pass\": false");
  std::string bad = (dir / "bad.json").string();
  write_file_atomic(bad, broken);
  if (run_cli(cli, "verify " + shell_quote(bad)) == 0) return false;

  fs::remove_all(dir);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;

  RunArtifact art1 = run_stages(config_for(1));
  RunArtifact art2 = run_stages(config_for(2));
  RunArtifact art8 = run_stages(config_for(8));
  RunArtifact art32 = run_stages(config_for(32));

  bool c1 = construction_soundness(art1) && construction_soundness(art2) &&
            construction_soundness(art8) && construction_soundness(art32);
  report(1, "construction soundness, N in {1, 2, 8, 32}", c1);

  report(2, "partial-sum stability for the N = 8 run",
         partial_sum_stability(art8));

  report(3, "tail bound dominates exact remainders, decreasing in N",
         tail_certification());

  report(4, "product-norm inequality on 50 random unit-disk pairs",
         product_norm_inequality());

  bool c5 = false;
  try {
    c5 = separating_point(art8);
  } catch (const std::exception&) {
    c5 = false;
  }
  report(5, "separating point and agreement degree bounds", c5);

  report(6, "set kernel: fixpoint, cardinality, CNF ordinal laws",
         set_kernel());

  bool c7 = false;
  if (cli) {
    try {
      c7 = determinism_and_roundtrip(
          cli, {&art1, &art2, &art8, &art32});
    } catch (const std::exception&) {
      c7 = false;
    }
  }
  report(7, "determinism, round trip, standalone verify (CLI)", c7);

  if (g_failures == 0)
    std::printf("acceptance: all criteria pass\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
