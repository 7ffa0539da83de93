#include <doctest.h>

#include "generators.hpp"
#include "wetzel/qc.hpp"

using wetzel::Int;
using wetzel::QC;
using wetzel::Rat;

namespace {
const Rat kHalf(Int(1), Int(2));
}

TEST_CASE("field arithmetic on D") {
  QC one_plus_i(Rat(1), Rat(1));
  QC one_minus_i(Rat(1), Rat(-1));
  CHECK(one_plus_i * one_minus_i == QC(2));  // (1+i)(1-i) = 1 - i^2

  CHECK(QC(kHalf, Rat(0)) + QC(kHalf, Rat(0)) == QC(1));
  CHECK(one_plus_i / QC(2) == QC(kHalf, kHalf));
  CHECK_THROWS_AS(one_plus_i / QC(0), wetzel::DomainError);
}

TEST_CASE("norm surrogates on pinned values") {
  QC z(Rat(3), Rat(4));
  CHECK(norm_sq(z) == Rat(25));  // true norm 5
  CHECK(norm_ub(z) == Rat(7));
  CHECK(norm_lb(z) == Rat(4));

  CHECK(norm_sq(QC(0)) == Rat(0));
  CHECK(norm_lb(QC(0)) == Rat(0));
  CHECK(norm_ub(QC(-2)) == Rat(2));
  CHECK(norm_lb(QC(Rat(0), Rat(-5))) == Rat(5));

  CHECK(norm_sq(QC(kHalf, kHalf)) == kHalf);
  CHECK(norm_ub(QC(Rat(1), Rat(1))) == Rat(2));  // true norm sqrt(2)
}

TEST_CASE("norm envelope: lb^2 <= norm_sq <= ub^2, lb = 0 iff zero") {
  gen::Rng rng(21);
  for (int i = 0; i < 300; ++i) {
    QC z = gen::rand_qc(rng);
    Rat lb = norm_lb(z), ub = norm_ub(z), sq = norm_sq(z);
    CHECK(lb * lb <= sq);
    CHECK(sq <= ub * ub);
    CHECK((lb == Rat(0)) == z.is_zero());
  }
}

TEST_CASE("ub is exact exactly on the axes") {
  CHECK(norm_ub(QC(Rat(-3), Rat(0))) * norm_ub(QC(Rat(-3), Rat(0))) ==
        norm_sq(QC(Rat(-3), Rat(0))));
  CHECK(norm_ub(QC(Rat(0), Rat(7))) * norm_ub(QC(Rat(0), Rat(7))) ==
        norm_sq(QC(Rat(0), Rat(7))));
  QC off_axis(Rat(1), Rat(1));
  CHECK(norm_ub(off_axis) * norm_ub(off_axis) > norm_sq(off_axis));
}

TEST_CASE("field laws on random Gaussian rationals") {
  gen::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    QC a = gen::rand_qc(rng), b = gen::rand_qc(rng), c = gen::rand_qc(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
  }
  for (int i = 0; i < 100; ++i) {
    QC a = gen::rand_nonzero_qc(rng);
    CHECK(a / a == QC(1));
    CHECK(a * (QC(1) / a) == QC(1));
  }
}
