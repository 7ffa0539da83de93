#include <doctest.h>

#include "generators.hpp"
#include "wetzel/rational.hpp"

using wetzel::Int;
using wetzel::Rat;

TEST_CASE("construction canonicalizes") {
  CHECK(Rat(Int(2), Int(4)) == Rat(Int(1), Int(2)));
  CHECK(Rat(Int(1), Int(-2)) == Rat(Int(-1), Int(2)));
  CHECK(Rat(Int(0), Int(7)) == Rat(0));
  CHECK(Rat(Int(-6), Int(-4)) == Rat(Int(3), Int(2)));
  CHECK(Rat(Int(2), Int(4)).num() == 1);
  CHECK(Rat(Int(2), Int(4)).den() == 2);
}

TEST_CASE("canonicalization is idempotent") {
  gen::Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rat r = gen::rand_rat(rng, 1000);
    CHECK(Rat(r.num(), r.den()) == r);
    CHECK(r.den() > 0);
    CHECK(gcd(abs(r.num()), r.den()) == 1);
  }
}

TEST_CASE("zero denominator is a domain error") {
  CHECK_THROWS_AS(Rat(Int(1), Int(0)), wetzel::DomainError);
}

TEST_CASE("strict wire-format parsing") {
  Rat half = Rat::parse_canonical("1", "2");
  CHECK(half == Rat(Int(1), Int(2)));
  CHECK(Rat::parse_canonical("-3", "7") == Rat(Int(-3), Int(7)));
  CHECK(Rat::parse_canonical("0", "1") == Rat(0));

  CHECK_THROWS_AS(Rat::parse_canonical("1", "0"), wetzel::ParseError);
  CHECK_THROWS_AS(Rat::parse_canonical("2", "4"), wetzel::ParseError);
  CHECK_THROWS_AS(Rat::parse_canonical("1", "-2"), wetzel::ParseError);
  CHECK_THROWS_AS(Rat::parse_canonical("007", "1"), wetzel::ParseError);
  CHECK_THROWS_AS(Rat::parse_canonical("-0", "1"), wetzel::ParseError);
  CHECK_THROWS_AS(Rat::parse_canonical("1.5", "1"), wetzel::ParseError);
  CHECK_THROWS_AS(Rat::parse_canonical("", "1"), wetzel::ParseError);
  CHECK_THROWS_AS(Rat::parse_canonical("0x1", "1"), wetzel::ParseError);
}

TEST_CASE("arithmetic") {
  Rat half(Int(1), Int(2));
  CHECK(half + half == Rat(1));
  CHECK(Rat(1) - half == half);
  CHECK(half * half == Rat(Int(1), Int(4)));
  CHECK(Rat(Int(3), Int(4)) / Rat(Int(3), Int(2)) == half);
  CHECK(-half == Rat(Int(-1), Int(2)));
  CHECK_THROWS_AS(Rat(1) / Rat(0), wetzel::DomainError);
}

TEST_CASE("field laws on random values") {
  gen::Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    Rat a = gen::rand_rat(rng), b = gen::rand_rat(rng), c = gen::rand_rat(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a / a == Rat(1));
  }
}

TEST_CASE("ordering, floor, pow") {
  CHECK(Rat(Int(1), Int(3)) < Rat(Int(1), Int(2)));
  CHECK(Rat(Int(-1), Int(2)) < Rat(0));
  CHECK(Rat(Int(7), Int(2)).floor() == 3);
  CHECK(Rat(Int(-7), Int(2)).floor() == -4);
  CHECK(Rat(Int(2), Int(3)).pow(3) == Rat(Int(8), Int(27)));
  CHECK(Rat(5).pow(0) == Rat(1));
  CHECK(wetzel::factorial(0) == 1);
  CHECK(wetzel::factorial(5) == 120);
  CHECK(wetzel::factorial(10) == 3628800);
}
