#include "cayleyqc/gf2.hpp"

#include <limits>
#include <string>

#include "cayleyqc/errors.hpp"

namespace cayleyqc {

namespace {

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> reduce_rows(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t col = 0; col < cols && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].get(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i != next && rows[i].get(col)) rows[i] ^= rows[next];
    }
    pivots.push_back(col);
    ++next;
  }
  rows.resize(next);
  return pivots;
}

}  // namespace

std::size_t rank(const BitMatrix& m) {
  EchelonBasis basis(m.cols());
  for (const auto& r : m.row_data()) basis.insert(r);
  return basis.rank();
}

BitMatrix kernel_basis(const BitMatrix& m) {
  std::vector<BitVector> rows = m.row_data();
  const auto pivots = reduce_rows(rows, m.cols());

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  BitMatrix basis(0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(m.cols());
    v.set(free);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].get(free)) v.set(pivots[i]);
    }
    basis.append_row(std::move(v));
  }
  return basis;
}

bool in_span(const BitMatrix& m, const BitVector& x) {
  if (x.size() != m.cols()) {
    throw DimensionError("in_span: vector length " + std::to_string(x.size()) + " does not match " +
                         std::to_string(m.cols()) + " columns");
  }
  EchelonBasis basis(m.cols());
  for (const auto& r : m.row_data()) basis.insert(r);
  return basis.contains(x);
}

bool rows_self_orthogonal(const BitMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = i; j < m.rows(); ++j) {
      if (m.row(i).dot(m.row(j))) return false;
    }
  }
  return true;
}

bool EchelonBasis::insert(const BitVector& v) {
  if (v.size() != length_) throw DimensionError("EchelonBasis: vector length mismatch");
  BitVector r = reduce(v);
  const std::size_t pivot = r.first_set();
  if (pivot == length_) return false;
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

BitVector EchelonBasis::reduce(BitVector v) const {
  if (v.size() != length_) throw DimensionError("EchelonBasis: vector length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (v.get(pivots_[i])) v ^= rows_[i];
  }
  return v;
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    acc = acc * (n - k + i) / i;
    if (acc > std::numeric_limits<std::uint64_t>::max()) {
      throw ResourceError("binomial coefficient overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(acc);
}

Combination::Combination(std::size_t length, std::size_t weight) : length_(length), positions_(weight) {
  if (weight > length) {
    done_ = true;
    return;
  }
  for (std::size_t i = 0; i < weight; ++i) positions_[i] = i;
}

bool Combination::advance() {
  if (done_) return false;
  const std::size_t w = positions_.size();
  std::size_t j = 0;
  while (j < w) {
    const std::size_t limit = (j + 1 < w) ? positions_[j + 1] : length_;
    if (positions_[j] + 1 < limit) break;
    ++j;
  }
  if (j == w) {
    done_ = true;
    return false;
  }
  ++positions_[j];
  for (std::size_t i = 0; i < j; ++i) positions_[i] = i;
  return true;
}

FixedWeightRange::iterator& FixedWeightRange::iterator::operator++() {
  if (combination_.advance()) current_ = combination_.to_bit_vector();
  return *this;
}

}  // namespace cayleyqc
