#ifndef TVG_F2_HPP
#define TVG_F2_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tvg {

// Dense vector over F_2 packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t size() const { return nbits_; }
  bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (v) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
    return *this;
  }

  bool none() const;
  // Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Incremental Gaussian elimination for A f = b over F_2. Rows are reduced
// against the current pivots as they arrive, so memory stays O(rank * n).
class F2LinearSystem {
 public:
  explicit F2LinearSystem(std::size_t nvars) : nvars_(nvars), pivot_row_(nvars, kNone) {}

  std::size_t num_vars() const { return nvars_; }

  // Adds sum_i coeffs[i] f_i = rhs. Returns false if the system became
  // inconsistent.
  bool add_equation(BitVector coeffs, bool rhs);

  bool consistent() const { return consistent_; }
  std::size_t rank() const { return rows_.size(); }

  // A solution with every free variable set to 0, or nullopt when
  // inconsistent.
  std::optional<BitVector> solve() const;

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  struct Row {
    BitVector coeffs;
    bool rhs;
    std::size_t pivot;
  };

  std::size_t nvars_;
  std::vector<Row> rows_;
  std::vector<std::size_t> pivot_row_;
  bool consistent_ = true;
};

}  // namespace tvg

#endif  // TVG_F2_HPP
