#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dmt {

/// Dense bit matrix over the two-element field.
class Gf2Matrix {
 public:
  Gf2Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  void set(size_t r, size_t c) { bits_[r * words_ + c / 64] |= uint64_t(1) << (c % 64); }

  bool get(size_t r, size_t c) const {
    return (bits_[r * words_ + c / 64] >> (c % 64)) & 1;
  }

  /// Rank by row elimination.
  size_t rank() const {
    std::vector<uint64_t> work(bits_);
    size_t rank = 0;
    for (size_t col = 0; col < cols_ && rank < rows_; ++col) {
      const size_t word = col / 64;
      const uint64_t mask = uint64_t(1) << (col % 64);
      size_t pivot = rank;
      while (pivot < rows_ && !(work[pivot * words_ + word] & mask)) ++pivot;
      if (pivot == rows_) continue;
      if (pivot != rank) {
        for (size_t w = 0; w < words_; ++w)
          std::swap(work[pivot * words_ + w], work[rank * words_ + w]);
      }
      for (size_t r = 0; r < rows_; ++r) {
        if (r != rank && (work[r * words_ + word] & mask)) {
          for (size_t w = 0; w < words_; ++w)
            work[r * words_ + w] ^= work[rank * words_ + w];
        }
      }
      ++rank;
    }
    return rank;
  }

 private:
  size_t rows_, cols_, words_;
  std::vector<uint64_t> bits_;
};

}  // namespace dmt
