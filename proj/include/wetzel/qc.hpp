#pragma once

#include <string>

#include "wetzel/rational.hpp"

namespace wetzel {

// Gaussian rational: a complex number with exact rational real and imaginary
// parts. These are the elements of D = {p + iq : p, q in Q}, which is dense
// in C. Equality is component-wise and exact.
//
// |z| is irrational in general, so it never materializes here. Comparisons
// against |z| go through one of three exact rational surrogates:
//
//   norm_sq(z) = re^2 + im^2          (= |z|^2 exactly)
//   norm_ub(z) = |re| + |im|          (>= |z|, triangle inequality)
//   norm_lb(z) = max(|re|, |im|)      (<= |z|)
//
// so that norm_lb(z)^2 <= norm_sq(z) <= norm_ub(z)^2 for every z, and
// norm_lb(z) = 0 iff z = 0.
struct QC {
  Rat re;
  Rat im;

  QC() = default;
  QC(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  QC(long r) : re(r) {}  // implicit: integers embed into D

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  QC operator-() const { return {-re, -im}; }
  QC operator+(const QC& o) const { return {re + o.re, im + o.im}; }
  QC operator-(const QC& o) const { return {re - o.re, im - o.im}; }
  QC operator*(const QC& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  QC operator/(const QC& o) const;  // throws DomainError on o == 0
  QC& operator+=(const QC& o) { re += o.re; im += o.im; return *this; }
  QC& operator-=(const QC& o) { re -= o.re; im -= o.im; return *this; }
  QC& operator*=(const QC& o) { *this = *this * o; return *this; }

  bool operator==(const QC& o) const { return re == o.re && im == o.im; }

  std::string str() const;
};

Rat norm_sq(const QC& a);
Rat norm_ub(const QC& a);
Rat norm_lb(const QC& a);

// Total order for canonical containers; lexicographic on (re, im).
// Not a magnitude order.
std::strong_ordering lex_cmp(const QC& a, const QC& b);

}  // namespace wetzel
