#include <doctest.h>

#include "generators.hpp"
#include "wetzel/analysis.hpp"

using wetzel::FamilyRecord;
using wetzel::Int;
using wetzel::NewtonSeries;
using wetzel::PointSeq;
using wetzel::Poly;
using wetzel::QC;
using wetzel::Rat;

namespace {

const Rat kHalf(Int(1), Int(2));

Poly poly(std::vector<QC> coeffs) { return Poly::from_coeffs(std::move(coeffs)); }

const Poly kZ = poly({QC(0), QC(1)});
const Poly kZSquared = poly({QC(0), QC(0), QC(1)});
const Poly kTwoZ = poly({QC(0), QC(2)});
const Poly kZPlusOne = poly({QC(1), QC(1)});

FamilyRecord family_of(std::vector<Poly> members, std::vector<QC> prefix = {}) {
  FamilyRecord f;
  f.members = std::move(members);
  for (std::size_t i = 0; i < f.members.size(); ++i) f.provenance.push_back(i);
  f.zeta_prefix = PointSeq(std::move(prefix));
  return f;
}

}  // namespace

TEST_CASE("agreement count bound is the degree of the difference") {
  CHECK(agreement_count_bound(kZSquared, kZ) == 2);
  CHECK(agreement_count_bound(kZPlusOne, kZ) == 0);  // never agree
  CHECK(agreement_count_bound(kTwoZ, kZ) == 1);
  CHECK_THROWS_AS(agreement_count_bound(kZ, kZ), wetzel::DomainError);
}

TEST_CASE("agreement points") {
  CHECK(is_agreement_point(kZSquared, kZ, QC(1)));
  CHECK(!is_agreement_point(kZSquared, kZ, QC(2)));
  CHECK(is_agreement_point(kZ, kZ, QC(17)));
  CHECK(is_agreement_point(kZSquared, kZ, QC(0)));
}

TEST_CASE("grid agreement never exceeds the degree bound") {
  gen::Rng rng(61);
  std::vector<QC> grid;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      grid.emplace_back(Rat(Int(a), Int(2)), Rat(Int(b), Int(2)));

  for (int trial = 0; trial < 40; ++trial) {
    std::vector<QC> ca, cb;
    for (int i = 0; i <= 4; ++i) ca.push_back(gen::rand_qc(rng, 4));
    for (int i = 0; i <= 4; ++i) cb.push_back(gen::rand_qc(rng, 4));
    Poly f = poly(ca), g = poly(cb);
    if (f == g) continue;
    std::size_t hits = 0;
    for (const QC& z : grid)
      if (is_agreement_point(f, g, z)) ++hits;
    CHECK(hits <= agreement_count_bound(f, g));
  }
}

TEST_CASE("separating point: pinned searches") {
  FamilyRecord two = family_of({kZ, kTwoZ});
  std::vector<QC> cands = {QC(0), QC(1)};
  CHECK(find_separating_point(two, cands) == QC(1));  // they agree only at 0

  FamilyRecord solo = family_of({kZ});
  std::vector<QC> zero = {QC(0)};
  CHECK(find_separating_point(solo, zero) == QC(0));  // vacuous

  FamilyRecord disjoint = family_of({kZ, kZPlusOne});
  CHECK(find_separating_point(disjoint, zero) == QC(0));

  CHECK_THROWS_AS(find_separating_point(two, zero), wetzel::SearchExhausted);

  FamilyRecord dup = family_of({kZ, kZ});
  CHECK_THROWS_AS(find_separating_point(dup, cands), wetzel::DomainError);
}

TEST_CASE("separating point values are pairwise distinct") {
  gen::Rng rng(62);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Poly> members;
    for (int i = 0; i < 5; ++i) {
      std::vector<QC> c;
      for (int k = 0; k <= 3; ++k) c.push_back(gen::rand_qc(rng, 3));
      Poly p = poly(c);
      bool fresh = true;
      for (const Poly& q : members)
        if (q == p) { fresh = false; break; }
      if (fresh) members.push_back(p);
    }
    FamilyRecord fam = family_of(std::move(members));
    std::vector<QC> cands;
    for (int i = 0; i < 50; ++i)
      cands.emplace_back(Rat(Int(i), Int(1)), Rat(0));
    QC z0 = find_separating_point(fam, cands);
    for (std::size_t i = 0; i < fam.members.size(); ++i)
      for (std::size_t j = i + 1; j < fam.members.size(); ++j)
        CHECK(fam.members[i].eval(z0) != fam.members[j].eval(z0));
  }
}

TEST_CASE("check_inD") {
  // the two-stage worked example: h(z) = 1/2 + z/2 built over nodes [0, 1]
  Poly h = poly({QC(kHalf, Rat(0)), QC(kHalf, Rat(0))});
  FamilyRecord fam;
  fam.members = {h};
  fam.provenance = {2};
  fam.zeta_prefix = PointSeq({QC(0), QC(1)});
  CHECK(check_inD(fam));  // h(0) = 1/2, h(1) = 1, both in D

  // constant i at stage 1 with zeta_0 = 0: f(0) = i, still in D
  FamilyRecord fam2;
  fam2.members = {poly({QC(Rat(0), Rat(1))})};
  fam2.provenance = {1};
  fam2.zeta_prefix = PointSeq({QC(0)});
  CHECK(check_inD(fam2));

  CHECK(check_inD(family_of({})));  // vacuous
}

TEST_CASE("check_diagonal") {
  PointSeq w({QC(0), QC(1)});
  NewtonSeries s(w, {QC(kHalf, Rat(0)), QC(kHalf, Rat(0))});
  // values [1/2, 1] against forbidden [1, 0]
  std::vector<QC> forb = {QC(1), QC(0)};
  CHECK(check_diagonal(s, forb));

  std::vector<QC> collide = {QC(kHalf, Rat(0)), QC(7)};  // equal at n = 0
  CHECK(!check_diagonal(s, collide));

  NewtonSeries empty(PointSeq(std::vector<QC>{}), {});
  CHECK(check_diagonal(empty, std::vector<QC>{}));  // vacuous

  std::vector<QC> short_list = {QC(1)};
  CHECK_THROWS_AS(check_diagonal(s, short_list), wetzel::DomainError);
}

TEST_CASE("value census") {
  Poly member0 = poly({});                        // stage 0: zero function
  Poly member1 = poly({QC(kHalf, Rat(0))});       // stage 1: constant 1/2
  FamilyRecord fam;
  fam.members = {member0, member1};
  fam.provenance = {0, 1};
  fam.zeta_prefix = PointSeq({QC(0)});

  wetzel::CensusReport at0 = wetzel_value_census(fam, QC(0));
  REQUIRE(at0.alpha.has_value());
  CHECK(*at0.alpha == 0);
  CHECK(at0.le_count == 1);  // stage 0 member
  CHECK(at0.gt_count == 1);  // stage 1 member, value in D
  CHECK(at0.gt_in_d);

  // alpha = last index: second part empty
  FamilyRecord solo = family_of({kZ}, {QC(0)});
  wetzel::CensusReport last = wetzel_value_census(solo, QC(0));
  CHECK(last.le_count == 1);
  CHECK(last.gt_count == 0);

  // z outside the prefix: whole family reported as one part
  wetzel::CensusReport off = wetzel_value_census(fam, QC(5));
  CHECK(!off.alpha.has_value());
  CHECK(off.le_count == 0);
  CHECK(off.gt_count == 2);
}

TEST_CASE("family distinctness equals pairwise nonzero differences") {
  gen::Rng rng(63);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Poly> members;
    for (int i = 0; i < 4; ++i) {
      std::vector<QC> c;
      for (int k = 0; k <= 2; ++k) c.push_back(gen::rand_qc(rng, 2));
      members.push_back(poly(c));
    }
    FamilyRecord fam = family_of(members);
    bool nonzero_diffs = true;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        nonzero_diffs = nonzero_diffs && !(members[i] - members[j]).is_zero();
    CHECK(fam.pairwise_distinct() == nonzero_diffs);
  }
}
