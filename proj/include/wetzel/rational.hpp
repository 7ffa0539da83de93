#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "wetzel/errors.hpp"

namespace wetzel {

using Int = mpz_class;

// Exact rational number in canonical form: denominator > 0 and
// gcd(|numerator|, denominator) = 1. Canonicalization happens at
// construction, so equality is structural.
class Rat {
 public:
  Rat() : q_(0) {}
  Rat(long n) : q_(n) {}  // implicit: integers embed into Q
  explicit Rat(const Int& n) : q_(n) {}
  Rat(const Int& num, const Int& den);

  // Strict decoder for the JSON wire form {"num": ..., "den": ...}.
  // Rejects (rather than normalizes) den <= 0, unreduced fractions and
  // malformed decimal strings.
  static Rat parse_canonical(const std::string& num, const std::string& den);

  Int num() const { return q_.get_num(); }
  Int den() const { return q_.get_den(); }
  std::string num_str() const { return q_.get_num().get_str(); }
  std::string den_str() const { return q_.get_den().get_str(); }

  bool is_zero() const { return sgn(q_) == 0; }
  int sign() const { return sgn(q_); }

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;  // throws DomainError on o == 0
  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

  bool operator==(const Rat& o) const { return cmp(q_, o.q_) == 0; }
  std::strong_ordering operator<=>(const Rat& o) const {
    int c = cmp(q_, o.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rat abs() const;
  Int floor() const;
  Rat pow(std::uint64_t e) const;

  std::string str() const { return q_.get_str(); }  // "num/den" or "num"

 private:
  mpq_class q_;  // GMP keeps this canonical after explicit canonicalization
};

Rat abs(const Rat& a);
Rat max(const Rat& a, const Rat& b);

// n! as an exact integer.
Int factorial(std::uint64_t n);

}  // namespace wetzel
