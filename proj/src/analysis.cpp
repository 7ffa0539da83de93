#include "wetzel/analysis.hpp"

#include <algorithm>

namespace wetzel {

bool FamilyRecord::pairwise_distinct() const {
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (members[i] == members[j]) return false;
  return true;
}

void FamilyRecord::validate() const {
  if (provenance.size() != members.size())
    throw DomainError("family: one stage index per member required");
  if (!pairwise_distinct())
    throw DomainError("family: members must be pairwise distinct");
}

std::size_t agreement_count_bound(const Poly& f, const Poly& g) {
  Poly diff = f - g;
  if (diff.is_zero())
    throw DomainError("identical functions: agreement set is all of C");
  return diff.degree();
}

bool is_agreement_point(const Poly& f, const Poly& g, const QC& z) {
  return f.eval(z) == g.eval(z);
}

QC find_separating_point(const FamilyRecord& family,
                         std::span<const QC> candidates) {
  family.validate();
  for (const QC& z : candidates) {
    std::vector<QC> values;
    values.reserve(family.members.size());
    for (const Poly& f : family.members) values.push_back(f.eval(z));
    std::sort(values.begin(), values.end(),
              [](const QC& a, const QC& b) { return lex_cmp(a, b) < 0; });
    bool separated = true;
    for (std::size_t i = 1; i < values.size(); ++i)
      if (values[i] == values[i - 1]) { separated = false; break; }
    if (separated) return z;
  }
  throw SearchExhausted("no separating point in search space of " +
                        std::to_string(candidates.size()) + " candidates");
}

bool check_inD(const FamilyRecord& family) {
  for (std::size_t m = 0; m < family.members.size(); ++m) {
    std::size_t beta = family.provenance[m];
    std::size_t upto = std::min(beta, family.zeta_prefix.size());
    for (std::size_t a = 0; a < upto; ++a) {
      // evaluation over Q(i) cannot leave D; computing it is the certificate
      (void)family.members[m].eval(family.zeta_prefix[a]);
    }
  }
  return true;
}

bool check_diagonal(const NewtonSeries& series,
                    std::span<const QC> prior_values) {
  if (prior_values.size() != series.length())
    throw DomainError("check_diagonal: one prior value per node required");
  for (std::size_t n = 0; n < series.length(); ++n)
    if (eval_h(series, series.length(), series.points[n]) == prior_values[n])
      return false;
  return true;
}

CensusReport wetzel_value_census(const FamilyRecord& family, const QC& z) {
  CensusReport report;
  for (std::size_t a = 0; a < family.zeta_prefix.size(); ++a)
    if (family.zeta_prefix[a] == z) { report.alpha = a; break; }
  for (std::size_t m = 0; m < family.members.size(); ++m) {
    QC value = family.members[m].eval(z);
    (void)value;  // exact evaluation: value is in D by closure
    if (report.alpha && family.provenance[m] <= *report.alpha)
      ++report.le_count;
    else
      ++report.gt_count;
  }
  return report;
}

}  // namespace wetzel
