#include "cayleyqc/bit_matrix.hpp"

#include "cayleyqc/errors.hpp"

namespace cayleyqc {

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVector> rows, std::size_t cols) {
  BitMatrix m(0, cols);
  for (auto& r : rows) m.append_row(std::move(r));
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  BitMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(BitVector::from_string(r));
  return m;
}

void BitMatrix::append_row(BitVector row) {
  if (row.size() != cols_) {
    throw DimensionError("row of length " + std::to_string(row.size()) + " appended to matrix with " +
                         std::to_string(cols_) + " columns");
  }
  rows_.push_back(std::move(row));
}

BitVector BitMatrix::column(std::size_t j) const {
  if (j >= cols_) throw IndexError("column " + std::to_string(j) + " out of range");
  BitVector c(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i].get(j)) c.set(i);
  }
  return c;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    const auto& r = rows_[i];
    for (std::size_t j = r.first_set(); j < cols_; j = r.next_set(j)) t.set(j, i);
  }
  return t;
}

BitVector BitMatrix::multiply(const BitVector& x) const {
  if (x.size() != cols_) {
    throw DimensionError("vector of length " + std::to_string(x.size()) + " multiplied by matrix with " +
                         std::to_string(cols_) + " columns");
  }
  BitVector out(rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    if (rows_[i].dot(x)) out.set(i);
  }
  return out;
}

BitMatrix BitMatrix::multiply(const BitMatrix& other) const {
  if (other.rows() != cols_) throw DimensionError("inner dimensions differ in matrix product");
  BitMatrix out(rows(), other.cols());
  for (std::size_t i = 0; i < rows(); ++i) {
    const auto& r = rows_[i];
    for (std::size_t k = r.first_set(); k < cols_; k = r.next_set(k)) out.rows_[i] ^= other.rows_[k];
  }
  return out;
}

}  // namespace cayleyqc
