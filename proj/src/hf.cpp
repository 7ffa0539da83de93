#include "wetzel/hf.hpp"

#include <algorithm>

namespace wetzel {

namespace {
const std::vector<HFSet>& empty_elems() {
  static const std::vector<HFSet> e;
  return e;
}
}  // namespace

const std::vector<HFSet>& HFSet::elts() const {
  return elems_ ? *elems_ : empty_elems();
}

int HFSet::compare(const HFSet& a, const HFSet& b) {
  if (a.elems_ == b.elems_) return 0;  // shared structure or both empty
  const auto& ea = a.elts();
  const auto& eb = b.elts();
  if (ea.size() != eb.size()) return ea.size() < eb.size() ? -1 : 1;
  for (std::size_t i = 0; i < ea.size(); ++i)
    if (int c = compare(ea[i], eb[i]); c != 0) return c;
  return 0;
}

HFSet HFSet::of(std::vector<HFSet> raw) {
  if (raw.empty()) return HFSet();
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  return HFSet(std::make_shared<const std::vector<HFSet>>(std::move(raw)));
}

bool HFSet::contains(const HFSet& x) const {
  const auto& e = elts();
  return std::binary_search(e.begin(), e.end(), x);
}

bool HFSet::subset_of(const HFSet& o) const {
  const auto& ea = elts();
  const auto& eb = o.elts();
  if (ea.size() > eb.size()) return false;
  // both sorted: one linear merge pass
  std::size_t j = 0;
  for (const HFSet& x : ea) {
    while (j < eb.size() && eb[j] < x) ++j;
    if (j == eb.size() || !(eb[j] == x)) return false;
    ++j;
  }
  return true;
}

std::string HFSet::str() const {
  std::string s = "{";
  bool first = true;
  for (const HFSet& m : elts()) {
    if (!first) s += ",";
    s += m.str();
    first = false;
  }
  return s + "}";
}

HFSet hf_union(const HFSet& a, const HFSet& b) {
  std::vector<HFSet> out = a.elts();
  out.insert(out.end(), b.elts().begin(), b.elts().end());
  return HFSet::of(std::move(out));
}

HFSet hf_inter(const HFSet& a, const HFSet& b) {
  std::vector<HFSet> out;
  for (const HFSet& x : a.elts())
    if (b.contains(x)) out.push_back(x);
  return HFSet::of(std::move(out));
}

HFSet hf_diff(const HFSet& a, const HFSet& b) {
  std::vector<HFSet> out;
  for (const HFSet& x : a.elts())
    if (!b.contains(x)) out.push_back(x);
  return HFSet::of(std::move(out));
}

HFSet finite_ordinal(std::size_t n) {
  std::vector<HFSet> accum;
  HFSet ord;  // 0
  for (std::size_t k = 0; k < n; ++k) {
    accum.push_back(ord);
    // accum is already sorted: ordinal k has k elements, counts increase
    ord = HFSet::of(accum);
  }
  return ord;
}

}  // namespace wetzel
