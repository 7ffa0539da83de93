#include "wetzel/zeta.hpp"

#include <algorithm>

namespace wetzel {

namespace {

Int rat_height(const Rat& r) { return abs(r.num()) + r.den(); }

// Rationals with |p| + q == h, canonical form.
std::vector<Rat> rats_of_height(std::uint64_t h) {
  std::vector<Rat> out;
  if (h == 1) {
    out.emplace_back(0);
    return out;
  }
  for (std::uint64_t q = 1; q < h; ++q) {
    Int p(static_cast<unsigned long>(h - q));
    Int den(static_cast<unsigned long>(q));
    if (gcd(p, den) != 1) continue;
    out.push_back(Rat(-p, den));
    out.push_back(Rat(p, den));
  }
  return out;
}

}  // namespace

ZetaEnumerator::ZetaEnumerator() { advance_height(); }

void ZetaEnumerator::advance_height() {
  ++height_;
  for (Rat& r : rats_of_height(height_)) rats_.push_back(std::move(r));
  std::sort(rats_.begin(), rats_.end());
  klass_.clear();
  pos_ = 0;
  Int h(static_cast<unsigned long>(height_));
  for (const Rat& re : rats_)
    for (const Rat& im : rats_)
      if (std::max(rat_height(re), rat_height(im)) == h)
        klass_.emplace_back(re, im);
}

QC ZetaEnumerator::next() {
  while (pos_ >= klass_.size()) advance_height();
  return klass_[pos_++];
}

QC default_zeta(std::uint64_t index) {
  ZetaEnumerator zeta;
  for (std::uint64_t i = 0; i < index; ++i) zeta.next();
  return zeta.next();
}

std::vector<QC> zeta_prefix(std::uint64_t count, std::uint64_t start) {
  ZetaEnumerator zeta;
  for (std::uint64_t i = 0; i < start; ++i) zeta.next();
  std::vector<QC> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) out.push_back(zeta.next());
  return out;
}

std::uint64_t zeta_count_up_to_height(std::uint64_t h) {
  std::uint64_t rats = 0;
  for (std::uint64_t k = 1; k <= h; ++k) rats += rats_of_height(k).size();
  return rats * rats;
}

}  // namespace wetzel
