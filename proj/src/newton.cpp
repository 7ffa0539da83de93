#include "wetzel/newton.hpp"

#include <algorithm>

namespace wetzel {

PointSeq::PointSeq(std::vector<QC> pts) : pts_(std::move(pts)) {
  std::vector<QC> sorted = pts_;
  std::sort(sorted.begin(), sorted.end(),
            [](const QC& a, const QC& b) { return lex_cmp(a, b) < 0; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i] == sorted[i - 1])
      throw DomainError("duplicate point " + sorted[i].str() +
                        " in node sequence");
}

NewtonSeries::NewtonSeries(PointSeq pts, std::vector<QC> eps)
    : points(std::move(pts)), coeffs(std::move(eps)) {
  if (coeffs.size() > points.size())
    throw DomainError("series has more coefficients than nodes");
}

Poly Poly::from_coeffs(std::vector<QC> monomial) {
  while (!monomial.empty() && monomial.back().is_zero()) monomial.pop_back();
  Poly p;
  p.coeffs_ = std::move(monomial);
  return p;
}

std::size_t Poly::degree() const {
  if (is_zero()) throw DomainError("degree of the zero polynomial");
  return coeffs_.size() - 1;
}

QC Poly::eval(const QC& z) const {
  QC acc;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

Poly Poly::operator+(const Poly& o) const {
  std::vector<QC> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < o.coeffs_.size()) out[i] += o.coeffs_[i];
  }
  return from_coeffs(std::move(out));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<QC> out(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < coeffs_.size()) out[i] += coeffs_[i];
    if (i < o.coeffs_.size()) out[i] -= o.coeffs_[i];
  }
  return from_coeffs(std::move(out));
}

QC eval_p(std::size_t n, const QC& z, const PointSeq& w) {
  if (n > w.size())
    throw DomainError("eval_p: index beyond the node sequence");
  QC prod(1);
  for (std::size_t i = 0; i < n; ++i) prod *= z - w[i];
  return prod;
}

Rat q_ub(std::size_t n, const PointSeq& w) {
  if (n > w.size())
    throw DomainError("q_ub: index beyond the node sequence");
  Rat prod(1);
  for (std::size_t i = 0; i < n; ++i) prod *= Rat(1) + norm_ub(w[i]);
  return prod;
}

QC eval_h(const NewtonSeries& s, std::size_t n, const QC& z) {
  if (n > s.length())
    throw DomainError("eval_h: index beyond the coefficient sequence");
  QC sum, basis(1);
  for (std::size_t i = 0; i < n; ++i) {
    sum += s.coeffs[i] * basis;
    basis *= z - s.points[i];
  }
  return sum;
}

Rat ball_radius_lb(std::size_t n, const NewtonSeries& s) {
  if (n >= s.points.size() && n != 0)
    throw DomainError("ball_radius_lb: node w_n not defined");
  if (n > s.length())
    throw DomainError("ball_radius_lb: coefficients below n not all defined");
  QC pn = eval_p(n, n < s.points.size() ? s.points[n] : QC(), s.points);
  return norm_lb(pn) / (Rat(factorial(n)) * q_ub(n, s.points));
}

SelectionPolicy SelectionPolicy::offset_half() {
  return {Rat(Int(1), Int(2)), Rat(Int(1), Int(4))};
}

SelectionPolicy SelectionPolicy::offset_quarter_fallback() {
  return {Rat(Int(1), Int(4)), Rat(Int(1), Int(8))};
}

void SelectionPolicy::validate() const {
  if (!(Rat(0) < primary && primary < Rat(1)))
    throw DomainError("selection policy: primary offset must be in (0,1)");
  if (!(Rat(0) < fallback && fallback < Rat(1)))
    throw DomainError("selection policy: fallback offset must be in (0,1)");
  if (primary == fallback)
    throw DomainError("selection policy: offsets must differ");
}

QC dd_select(const QC& center, const Rat& radius_lb, const QC& forbidden,
             const SelectionPolicy& policy) {
  if (!(radius_lb > Rat(0)))
    throw DomainError("dd_select: ball radius must be positive");
  policy.validate();
  QC candidate = center + QC(radius_lb * policy.primary, Rat(0));
  if (candidate == forbidden)
    candidate = center + QC(radius_lb * policy.fallback, Rat(0));
  return candidate;
}

NewtonSeries erdos_step(const PointSeq& w, std::span<const QC> forbidden,
                        const SelectionPolicy& policy) {
  const std::size_t n_stages = w.size();
  if (forbidden.size() != n_stages)
    throw DomainError("erdos_step: need one forbidden value per node");

  std::vector<QC> coeffs;
  coeffs.reserve(n_stages);

  // vals[j] = current partial sum at w_j, prods[j] = p_n(w_j)
  std::vector<QC> vals(n_stages), prods(n_stages, QC(1));
  Int fact(1);
  Rat q(1);

  for (std::size_t n = 0; n < n_stages; ++n) {
    if (n > 0) {
      fact *= static_cast<unsigned long>(n);
      q *= Rat(1) + norm_ub(w[n - 1]);
    }
    Rat radius = norm_lb(prods[n]) / (Rat(fact) * q);
    QC target = dd_select(vals[n], radius, forbidden[n], policy);
    QC eps = (target - vals[n]) / prods[n];
    coeffs.push_back(eps);
    for (std::size_t j = 0; j < n_stages; ++j) {
      vals[j] += eps * prods[j];
      prods[j] *= w[j] - w[n];
    }
  }
  return NewtonSeries(w, std::move(coeffs));
}

CoeffBoundsReport verify_coeff_bounds(const NewtonSeries& s) {
  CoeffBoundsReport report;
  Int fact(1);
  Rat q(1);
  for (std::size_t n = 0; n < s.length(); ++n) {
    if (n > 0) {
      fact *= static_cast<unsigned long>(n);
      q *= Rat(1) + norm_ub(s.points[n - 1]);
    }
    Rat scale = Rat(fact) * q;
    report.lhs.push_back(norm_sq(s.coeffs[n]) * scale * scale);
    if (!(report.lhs.back() < Rat(1))) report.pass = false;
  }
  return report;
}

bool norm_p_certificate(std::size_t n, const QC& z, const QC& z_prime,
                        const PointSeq& w) {
  if (!(norm_sq(z_prime - z) <= Rat(1)))
    throw DomainError("norm_p_certificate: points more than distance 1 apart");
  Rat rhs = q_ub(n, w) * (Rat(1) + norm_ub(z)).pow(n);
  return norm_sq(eval_p(n, z_prime, w)) <= rhs * rhs;
}

Rat tail_bound(std::uint64_t n_terms, const QC& z) {
  Rat x = Rat(1) + norm_ub(z);
  Rat n_plus_1(Int(n_terms) + 1);
  if (!(n_plus_1 > x))
    throw DomainError("tail_bound: needs N + 1 > 1 + norm_ub(z)");
  Rat head = x.pow(n_terms) / Rat(factorial(n_terms));
  return head * (n_plus_1 / (n_plus_1 - x));
}

Poly to_monomial(const NewtonSeries& s) {
  std::vector<QC> acc;                // running monomial coefficients
  std::vector<QC> basis = {QC(1)};    // p_i in monomial form
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (acc.size() < basis.size()) acc.resize(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      acc[k] += s.coeffs[i] * basis[k];
    // basis <- basis * (z - w_i)
    std::vector<QC> next(basis.size() + 1);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      next[k + 1] += basis[k];
      next[k] -= basis[k] * s.points[i];
    }
    basis = std::move(next);
  }
  return Poly::from_coeffs(std::move(acc));
}

}  // namespace wetzel
