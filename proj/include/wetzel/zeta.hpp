#pragma once

#include <cstdint>
#include <vector>

#include "wetzel/qc.hpp"

namespace wetzel {

// Injective enumeration of all Gaussian rationals, ordered by diagonal
// height. For a canonical fraction p/q the height is |p| + q (so 0 = 0/1
// has height 1), and the height of a point is the max over both components.
// Every point of height <= H is emitted before any point of height > H;
// within one height class points are ordered lexicographically by (re, im).
// The enumeration starts 0, -1-i, -1, -1+i, -i, i, 1-i, 1, 1+i, ...
class ZetaEnumerator {
 public:
  ZetaEnumerator();
  QC next();

 private:
  void advance_height();

  std::uint64_t height_ = 0;
  std::vector<Rat> rats_;      // all rationals of height <= height_, ascending
  std::vector<QC> klass_;      // current height class in emission order
  std::size_t pos_ = 0;        // next index within klass_
};

// zeta(index); linear in index, prefer zeta_prefix for batches.
QC default_zeta(std::uint64_t index);

// [zeta(start), ..., zeta(start + count - 1)]
std::vector<QC> zeta_prefix(std::uint64_t count, std::uint64_t start = 0);

// Number of enumeration slots occupied by points of height <= h, i.e. the
// square of the count of rationals of height <= h. Every point whose
// components have |num| + den <= h appears in the first
// zeta_count_up_to_height(h) indices.
std::uint64_t zeta_count_up_to_height(std::uint64_t h);

}  // namespace wetzel
