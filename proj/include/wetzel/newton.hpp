#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wetzel/qc.hpp"

namespace wetzel {

// ---------------------------------------------------------------------------
// Newton-basis machinery for the Erdos step.
//
// Given pairwise distinct nodes w_0, w_1, ... the Newton basis polynomials
// are p_n(z) = prod_{i<n} (z - w_i); term n vanishes at all earlier nodes.
// A series sum eps_i * p_i(z) is built one coefficient at a time so that its
// value at w_n lands in D (automatic here: the arithmetic is exact Gaussian
// rational), differs from a forbidden value g_n(w_n), stays inside a ball of
// radius |p_n(w_n)| / (n! * q(n)) around the previous partial sum, and obeys
//
//   |eps_n| < 1 / (n! * q(n)),    q(n) = prod_{i<n} (1 + |w_i|).
//
// q(n) and |p_n(w_n)| are irrational in general, so the certified versions
// use the rational envelope q_ub >= q (via norm_ub) and norm_lb <= |.|:
// shrinking the ball and tightening the bound preserves every inequality
// a fortiori, with only exact rational comparisons.
// ---------------------------------------------------------------------------

// Finite node sequence; pairwise distinct so that p_n(w_n) != 0.
class PointSeq {
 public:
  PointSeq() = default;
  explicit PointSeq(std::vector<QC> pts);  // throws DomainError on duplicates

  const std::vector<QC>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  const QC& operator[](std::size_t i) const { return pts_[i]; }
  bool operator==(const PointSeq& o) const { return pts_ == o.pts_; }

 private:
  std::vector<QC> pts_;
};

// Newton-basis series prefix: nodes plus coefficients eps_0..eps_{N-1}.
struct NewtonSeries {
  PointSeq points;
  std::vector<QC> coeffs;

  NewtonSeries() = default;
  NewtonSeries(PointSeq pts, std::vector<QC> eps);  // checks |coeffs| <= |points|

  std::size_t length() const { return coeffs.size(); }
};

// Polynomial in monomial form; coefficient of z^k at index k, trailing
// coefficient nonzero unless the zero polynomial (empty list).
class Poly {
 public:
  Poly() = default;  // zero
  static Poly from_coeffs(std::vector<QC> monomial);  // trims trailing zeros

  bool is_zero() const { return coeffs_.empty(); }
  std::size_t degree() const;  // throws DomainError on the zero polynomial
  const std::vector<QC>& coeffs() const { return coeffs_; }

  QC eval(const QC& z) const;  // Horner

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }

 private:
  std::vector<QC> coeffs_;
};

// p_n(z) = prod_{i<n} (z - w_i); 1 for n = 0. Requires n <= w.size().
QC eval_p(std::size_t n, const QC& z, const PointSeq& w);

// Rational upper envelope of q(n): prod_{i<n} (1 + norm_ub(w_i)); 1 for n=0.
Rat q_ub(std::size_t n, const PointSeq& w);

// Partial sum sum_{i<n} eps_i * p_i(z). Requires n <= s.length().
QC eval_h(const NewtonSeries& s, std::size_t n, const QC& z);

// Certified lower bound on the step-n ball radius:
// norm_lb(p_n(w_n)) / (n! * q_ub(n)). Strictly positive (nodes distinct).
// Requires n < points and n <= coeffs (coefficients 0..n-1 defined).
Rat ball_radius_lb(std::size_t n, const NewtonSeries& s);

// Deterministic stand-in for "pick any element of D inside the ball and not
// equal to the forbidden value": a real offset of primary * radius from the
// center, falling back to fallback * radius on collision. Any pair of
// distinct fractions in (0,1) is admissible.
struct SelectionPolicy {
  Rat primary;
  Rat fallback;

  static SelectionPolicy offset_half();              // 1/2, then 1/4
  static SelectionPolicy offset_quarter_fallback();  // 1/4, then 1/8
  void validate() const;  // 0 < primary, fallback < 1, primary != fallback
  bool operator==(const SelectionPolicy& o) const = default;
};

// Picks a Gaussian rational with norm_sq(result - center) < radius_lb^2 and
// result != forbidden. Requires radius_lb > 0; never fails (the two
// candidate offsets cannot both collide).
QC dd_select(const QC& center, const Rat& radius_lb, const QC& forbidden,
             const SelectionPolicy& policy);

// The Erdos step: given N pairwise distinct nodes and the N values to avoid
// (forbidden[n] = g_n(w_n)), chooses eps_0..eps_{N-1} sequentially so that
// for every n the partial-sum value at w_n is Gaussian rational, differs
// from forbidden[n], and the coefficient bound surrogate
// norm_sq(eps_n) * (n! * q_ub(n))^2 < 1 holds. Deterministic given policy.
NewtonSeries erdos_step(const PointSeq& w, std::span<const QC> forbidden,
                        const SelectionPolicy& policy);

// Per-index record of the coefficient-bound check.
struct CoeffBoundsReport {
  bool pass = true;
  std::vector<Rat> lhs;  // norm_sq(eps_n) * (n! * q_ub(n))^2, one per n

  bool index_pass(std::size_t n) const { return lhs[n] < Rat(1); }
};

// Checks norm_sq(eps_n) * (n! * q_ub(n))^2 < 1 for every n; since
// q_ub >= q this implies |eps_n| < 1 / (n! * q(n)).
CoeffBoundsReport verify_coeff_bounds(const NewtonSeries& s);

// Exact check of norm_sq(p_n(z')) <= (q_ub(n) * (1 + norm_ub(z))^n)^2,
// valid whenever norm_sq(z' - z) <= 1 (the precondition; violating it
// throws DomainError).
bool norm_p_certificate(std::size_t n, const QC& z, const QC& z_prime,
                        const PointSeq& w);

// Exact rational upper bound on the series tail sum_{i>=N} x^i / i! with
// x = 1 + norm_ub(z), by geometric domination:
//
//   sum_{i>=N} x^i/i! <= (x^N / N!) * (N+1) / (N+1 - x)   when N+1 > x.
//
// This dominates the sup-norm tail of any series obeying the coefficient
// bound over the closed unit disk around z. Throws DomainError when
// N+1 <= x (no geometric domination).
Rat tail_bound(std::uint64_t n_terms, const QC& z);

// Exact monomial expansion of sum eps_i * p_i(z).
Poly to_monomial(const NewtonSeries& s);

}  // namespace wetzel
