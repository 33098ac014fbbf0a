#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cayleyqc/bit_vector.hpp"

namespace cayleyqc {

/// Row-major dense matrix over GF(2). Every row is a BitVector of length cols().
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols);
  /// Rows given as '0'/'1' strings of equal length.
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  BitVector& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVector>& row_data() const { return rows_; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool value = true) { rows_[i].set(j, value); }

  void append_row(BitVector row);
  BitVector column(std::size_t j) const;
  BitMatrix transpose() const;

  /// Matrix-vector product m·x; entry i is the parity of row i against x.
  BitVector multiply(const BitVector& x) const;
  BitMatrix multiply(const BitMatrix& other) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

}  // namespace cayleyqc
