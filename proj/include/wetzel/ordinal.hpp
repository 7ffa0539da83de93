#pragma once

#include <compare>
#include <string>
#include <vector>

#include "wetzel/rational.hpp"

namespace wetzel {

// Ordinal below epsilon_0 in Cantor normal form:
//
//   omega^e1 * c1 + omega^e2 * c2 + ... + omega^ek * ck
//
// with e1 > e2 > ... > ek (themselves OrdCNF) and integer coefficients
// ci >= 1. The empty term list is 0. Addition and multiplication are the
// standard non-commutative ordinal operations; comparison is the total CNF
// order (lexicographic on the term sequence).
class OrdCNF {
 public:
  struct Term;

  OrdCNF() = default;  // zero

  static OrdCNF from_natural(const Int& n);       // n as omega^0 * n
  static OrdCNF omega();                          // omega^1 * 1
  static OrdCNF omega_pow(const OrdCNF& e);       // omega^e
  // Strict constructor: terms must already be CNF (exponents strictly
  // decreasing, coefficients >= 1); throws DomainError otherwise.
  static OrdCNF make(std::vector<Term> terms);
  // Normalizes an arbitrary term list, read as a left-to-right ordinal sum.
  // Zero coefficients are dropped. Idempotent on valid CNF.
  static OrdCNF sum_of(const std::vector<Term>& raw);

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool operator==(const OrdCNF& o) const { return compare(*this, o) == 0; }
  std::strong_ordering operator<=>(const OrdCNF& o) const {
    int c = compare(*this, o);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  OrdCNF operator+(const OrdCNF& o) const;
  OrdCNF operator*(const OrdCNF& o) const;

  static int compare(const OrdCNF& a, const OrdCNF& b);

  std::string str() const;  // "w^2*3+w+5" notation, for diagnostics

 private:
  std::vector<Term> terms_;
};

struct OrdCNF::Term {
  OrdCNF exp;
  Int coef;
};

}  // namespace wetzel
