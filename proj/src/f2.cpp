#include "tvg/f2.hpp"

#include <algorithm>
#include <bit>

namespace tvg {

bool BitVector::none() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  }
  return nbits_;
}

bool F2LinearSystem::add_equation(BitVector coeffs, bool rhs) {
  if (!consistent_) return false;
  // Every stored row has its pivot as lowest set bit, so each xor strictly
  // raises the lowest set bit of `coeffs`.
  for (std::size_t p = coeffs.first_set(); p < nvars_; p = coeffs.first_set()) {
    const std::size_t r = pivot_row_[p];
    if (r == kNone) {
      pivot_row_[p] = rows_.size();
      rows_.push_back({std::move(coeffs), rhs, p});
      return true;
    }
    coeffs ^= rows_[r].coeffs;
    rhs ^= rows_[r].rhs;
  }
  if (rhs) consistent_ = false;
  return consistent_;
}

std::optional<BitVector> F2LinearSystem::solve() const {
  if (!consistent_) return std::nullopt;
  BitVector f(nvars_);
  for (std::size_t p = nvars_; p-- > 0;) {
    const std::size_t r = pivot_row_[p];
    if (r == kNone) continue;
    const Row& row = rows_[r];
    bool v = row.rhs;
    for (std::size_t j = p + 1; j < nvars_; ++j) {
      if (row.coeffs.get(j) && f.get(j)) v = !v;
    }
    f.set(p, v);
  }
  return f;
}

}  // namespace tvg
