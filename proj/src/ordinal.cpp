#include "wetzel/ordinal.hpp"

namespace wetzel {

OrdCNF OrdCNF::from_natural(const Int& n) {
  if (sgn(n) < 0) throw DomainError("ordinal from negative integer");
  OrdCNF r;
  if (sgn(n) > 0) r.terms_.push_back({OrdCNF(), n});
  return r;
}

OrdCNF OrdCNF::omega() {
  OrdCNF r;
  r.terms_.push_back({from_natural(1), Int(1)});
  return r;
}

OrdCNF OrdCNF::omega_pow(const OrdCNF& e) {
  OrdCNF r;
  r.terms_.push_back({e, Int(1)});
  return r;
}

OrdCNF OrdCNF::make(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (sgn(terms[i].coef) <= 0)
      throw DomainError("CNF coefficient must be >= 1");
    if (i > 0 && !(terms[i].exp < terms[i - 1].exp))
      throw DomainError("CNF exponents must be strictly decreasing");
  }
  OrdCNF r;
  r.terms_ = std::move(terms);
  return r;
}

OrdCNF OrdCNF::sum_of(const std::vector<Term>& raw) {
  OrdCNF acc;
  for (const Term& t : raw) {
    if (sgn(t.coef) < 0) throw DomainError("CNF coefficient must be >= 0");
    if (sgn(t.coef) == 0) continue;
    OrdCNF single;
    single.terms_.push_back(t);
    acc = acc + single;
  }
  return acc;
}

int OrdCNF::compare(const OrdCNF& a, const OrdCNF& b) {
  // Lexicographic on the term sequence; a proper prefix is smaller.
  std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a.terms_[i].exp, b.terms_[i].exp); c != 0) return c;
    if (int c = cmp(a.terms_[i].coef, b.terms_[i].coef); c != 0) return c;
  }
  if (a.terms_.size() != b.terms_.size())
    return a.terms_.size() < b.terms_.size() ? -1 : 1;
  return 0;
}

OrdCNF OrdCNF::operator+(const OrdCNF& o) const {
  if (o.is_zero()) return *this;
  const OrdCNF& lead = o.terms_[0].exp;
  OrdCNF r;
  // terms of a above the lead exponent of b survive
  std::size_t i = 0;
  while (i < terms_.size() && lead < terms_[i].exp) r.terms_.push_back(terms_[i++]);
  // equal exponents merge coefficients; everything below is absorbed
  Int coef = o.terms_[0].coef;
  if (i < terms_.size() && terms_[i].exp == lead) coef += terms_[i].coef;
  r.terms_.push_back({lead, coef});
  r.terms_.insert(r.terms_.end(), o.terms_.begin() + 1, o.terms_.end());
  return r;
}

OrdCNF OrdCNF::operator*(const OrdCNF& o) const {
  OrdCNF r;
  if (is_zero() || o.is_zero()) return r;
  const OrdCNF& e1 = terms_[0].exp;
  for (const Term& t : o.terms_) {
    if (!t.exp.is_zero()) {
      // a * omega^f * d = omega^(e1 + f) * d for f > 0
      r.terms_.push_back({e1 + t.exp, t.coef});
    } else {
      // finite part (always last): only the leading coefficient multiplies
      r.terms_.push_back({e1, terms_[0].coef * t.coef});
      r.terms_.insert(r.terms_.end(), terms_.begin() + 1, terms_.end());
    }
  }
  return r;
}

std::string OrdCNF::str() const {
  if (is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) s += "+";
    const Term& t = terms_[i];
    if (t.exp.is_zero()) {
      s += t.coef.get_str();
      continue;
    }
    s += "w";
    if (!(t.exp == from_natural(1))) s += "^(" + t.exp.str() + ")";
    if (t.coef != 1) s += "*" + t.coef.get_str();
  }
  return s;
}

}  // namespace wetzel
