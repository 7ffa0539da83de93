#include "wetzel/rational.hpp"

namespace wetzel {

namespace {

// Canonical decimal integer: optional '-', digits, no leading zeros, no "-0".
bool valid_decimal(const std::string& s) {
  std::size_t i = 0;
  if (s.empty()) return false;
  if (s[0] == '-') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') return false;
  if (s[i] == '0' && s.size() - i > 1) return false;  // leading zero
  if (s[0] == '-' && s[i] == '0') return false;       // "-0"
  return true;
}

}  // namespace

Rat::Rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw DomainError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse_canonical(const std::string& num, const std::string& den) {
  if (!valid_decimal(num))
    throw ParseError("malformed numerator '" + num + "'");
  if (!valid_decimal(den))
    throw ParseError("malformed denominator '" + den + "'");
  Int n(num), d(den);
  if (sgn(d) <= 0) throw ParseError("denominator must be positive, got '" + den + "'");
  if (gcd(::abs(n), d) != 1)
    throw ParseError("non-canonical rational " + num + "/" + den +
                     " (not in lowest terms)");
  Rat r;
  r.q_ = mpq_class(n, d);  // already canonical by the checks above
  return r;
}

Rat Rat::operator-() const {
  Rat r;
  r.q_ = -q_;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  Rat r;
  r.q_ = q_ + o.q_;
  return r;
}

Rat Rat::operator-(const Rat& o) const {
  Rat r;
  r.q_ = q_ - o.q_;
  return r;
}

Rat Rat::operator*(const Rat& o) const {
  Rat r;
  r.q_ = q_ * o.q_;
  return r;
}

Rat Rat::operator/(const Rat& o) const {
  if (o.is_zero()) throw DomainError("rational division by zero");
  Rat r;
  r.q_ = q_ / o.q_;
  return r;
}

Rat Rat::abs() const {
  Rat r;
  r.q_ = ::abs(q_);
  return r;
}

Int Rat::floor() const {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
  return f;
}

Rat Rat::pow(std::uint64_t e) const {
  Rat acc(1), base = *this;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

Rat abs(const Rat& a) { return a.abs(); }

Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

Int factorial(std::uint64_t n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}

}  // namespace wetzel
