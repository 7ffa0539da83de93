#include "wetzel/qc.hpp"

namespace wetzel {

QC QC::operator/(const QC& o) const {
  Rat n = norm_sq(o);
  if (n.is_zero()) throw DomainError("complex division by zero");
  // a/b = a * conj(b) / |b|^2, all exact
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

std::string QC::str() const {
  if (im.is_zero()) return re.str();
  if (re.is_zero()) return im.str() + "i";
  return re.str() + (im.sign() > 0 ? "+" : "") + im.str() + "i";
}

Rat norm_sq(const QC& a) { return a.re * a.re + a.im * a.im; }

Rat norm_ub(const QC& a) { return abs(a.re) + abs(a.im); }

Rat norm_lb(const QC& a) { return max(abs(a.re), abs(a.im)); }

std::strong_ordering lex_cmp(const QC& a, const QC& b) {
  auto c = a.re <=> b.re;
  if (c != std::strong_ordering::equal) return c;
  return a.im <=> b.im;
}

}  // namespace wetzel
