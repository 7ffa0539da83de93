#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "wetzel/newton.hpp"

namespace wetzel {

// A finite family of exact polynomials built by the stage runner, together
// with the node enumeration prefix it consumed. Members must be pairwise
// distinct (exact coefficient comparison).
struct FamilyRecord {
  std::vector<Poly> members;
  std::vector<std::size_t> provenance;  // stage index of each member
  PointSeq zeta_prefix;

  bool pairwise_distinct() const;
  void validate() const;  // throws DomainError on duplicates / size mismatch
};

// How many points two distinct polynomials can agree at: deg(f - g).
// Throws DomainError("identical functions") when f = g, since then the
// agreement set is all of C.
std::size_t agreement_count_bound(const Poly& f, const Poly& g);

// Exact membership test for the agreement set {z : f(z) = g(z)}.
bool is_agreement_point(const Poly& f, const Poly& g, const QC& z);

// First candidate z0 at which all members take pairwise distinct values,
// i.e. z0 lies outside every pairwise agreement set. Throws SearchExhausted
// when no candidate separates (enlarge the candidate set; a separating
// point always exists because the union of agreement sets is finite).
QC find_separating_point(const FamilyRecord& family,
                         std::span<const QC> candidates);

// Verifies that member values at all earlier enumeration points are Gaussian
// rational: member with stage index b, evaluated at zeta_prefix[a] for every
// a < b. Over exact arithmetic the value of a QC polynomial at a QC point is
// closed in D, so this evaluates everything and certifies true.
bool check_inD(const FamilyRecord& family);

// Diagonalization check: the series value at w_n differs from
// prior_values[n] (= g_n(w_n)) for every n, exactly.
bool check_diagonal(const NewtonSeries& series,
                    std::span<const QC> prior_values);

// Split of the family's values at z = zeta_alpha into the part with stage
// index <= alpha (at most alpha + 1 members) and the part with stage index
// > alpha (whose values all lie in D). When z is not an enumeration point
// the whole family is reported as the second part.
struct CensusReport {
  std::optional<std::size_t> alpha;
  std::size_t le_count = 0;
  std::size_t gt_count = 0;
  bool gt_in_d = true;
};

CensusReport wetzel_value_census(const FamilyRecord& family, const QC& z);

}  // namespace wetzel
