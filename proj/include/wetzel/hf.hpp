#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "wetzel/errors.hpp"

namespace wetzel {

// Hereditarily finite set in canonical form: elements sorted by a total
// structural order (element count first, then lexicographic on the
// recursively ordered elements) and deduplicated. Membership is well-founded
// by finite construction, which is what makes eps-recursion terminate.
//
// Values are immutable and share structure; copying is cheap.
class HFSet {
 public:
  HFSet() = default;  // the empty set

  // Canonicalizes an arbitrary finite list of sets: sorts, dedups.
  static HFSet of(std::vector<HFSet> raw);

  const std::vector<HFSet>& elts() const;

  // Element count; for finite sets this is the least ordinal equipollent
  // with the set, so it doubles as the cardinality.
  std::size_t card() const { return elts().size(); }
  bool is_empty() const { return elts().empty(); }

  bool contains(const HFSet& x) const;   // membership, binary search
  bool subset_of(const HFSet& o) const;

  bool operator==(const HFSet& o) const { return compare(*this, o) == 0; }
  std::strong_ordering operator<=>(const HFSet& o) const {
    int c = compare(*this, o);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  static int compare(const HFSet& a, const HFSet& b);

  std::string str() const;  // "{}" / "{{},{{}}}" notation

 private:
  explicit HFSet(std::shared_ptr<const std::vector<HFSet>> e)
      : elems_(std::move(e)) {}
  std::shared_ptr<const std::vector<HFSet>> elems_;  // null means empty
};

HFSet hf_union(const HFSet& a, const HFSet& b);
HFSet hf_inter(const HFSet& a, const HFSet& b);
HFSet hf_diff(const HFSet& a, const HFSet& b);

// von Neumann encoding: n = {0, 1, ..., n-1}, so
// finite_ordinal(n+1) = finite_ordinal(n) | {finite_ordinal(n)}.
HFSet finite_ordinal(std::size_t n);

// eps-recursion. Given a functional H, returns F(a) for the unique F with
//
//   F(a) = H(F restricted to elts(a), a)
//
// H receives the restricted map as a callable; consulting it outside
// elts(a) throws ContractViolation. The memo table is private to each
// invocation, so concurrent calls are independent.
template <typename Value>
using TransrecFunctional =
    std::function<Value(const std::function<Value(const HFSet&)>&, const HFSet&)>;

namespace detail {

template <typename Value>
const Value& transrec_impl(const TransrecFunctional<Value>& H, const HFSet& a,
                           std::map<HFSet, Value>& memo) {
  if (auto it = memo.find(a); it != memo.end()) return it->second;
  for (const HFSet& m : a.elts()) transrec_impl(H, m, memo);
  std::function<Value(const HFSet&)> restricted =
      [&memo, &a](const HFSet& x) -> Value {
    if (!a.contains(x))
      throw ContractViolation(
          "transrec functional consulted the map outside elts of its argument");
    return memo.at(x);
  };
  return memo.emplace(a, H(restricted, a)).first->second;
}

}  // namespace detail

template <typename Value>
Value transrec(const TransrecFunctional<Value>& H, const HFSet& a) {
  std::map<HFSet, Value> memo;
  return detail::transrec_impl(H, a, memo);
}

}  // namespace wetzel
