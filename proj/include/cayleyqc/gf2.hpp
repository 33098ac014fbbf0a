#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "cayleyqc/bit_matrix.hpp"
#include "cayleyqc/bit_vector.hpp"

namespace cayleyqc {

/// Dimension of the row space over GF(2).
std::size_t rank(const BitMatrix& m);

/// Basis of {x : m·x = 0}, one vector per free column of the reduced echelon form.
BitMatrix kernel_basis(const BitMatrix& m);

/// True iff x is a GF(2) combination of the rows of m.
bool in_span(const BitMatrix& m, const BitVector& x);

/// True iff every pair of rows, a row with itself included, has even overlap.
bool rows_self_orthogonal(const BitMatrix& m);

/// Incrementally built row-echelon basis of a subspace of GF(2)^length.
///
/// Each stored row carries a pivot (its lowest set bit) and is reduced against
/// the rows inserted before it, so a single ordered pass reduces any vector.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t length) : length_(length) {}

  /// Adds v to the spanned space. Returns false if v was already in it.
  bool insert(const BitVector& v);
  BitVector reduce(BitVector v) const;
  bool contains(const BitVector& v) const { return reduce(v).none(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return length_; }
  const std::vector<BitVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

 private:
  std::size_t length_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
};

/// C(n, k) in 64-bit arithmetic; throws ResourceError on overflow.
std::uint64_t binomial(std::size_t n, std::size_t k);

/// Walks the weight-w subsets of {0..length-1} in colexicographic order.
///
/// The support is kept sorted ascending; advance() moves to the successor
/// by incrementing the lowest position that has room and resetting those
/// below it.
class Combination {
 public:
  Combination(std::size_t length, std::size_t weight);

  const std::vector<std::size_t>& support() const { return positions_; }
  bool done() const { return done_; }
  bool advance();
  BitVector to_bit_vector() const { return BitVector::from_support(length_, positions_); }

 private:
  std::size_t length_;
  std::vector<std::size_t> positions_;
  bool done_ = false;
};

/// Input range over every length-bit vector of a fixed weight, colex order.
class FixedWeightRange {
 public:
  class iterator {
   public:
    using value_type = BitVector;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(Combination c) : combination_(std::move(c)), current_(combination_.to_bit_vector()) {}

    const BitVector& operator*() const { return current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return combination_.done(); }

   private:
    Combination combination_{0, 0};
    BitVector current_;
  };

  FixedWeightRange(std::size_t length, std::size_t weight) : length_(length), weight_(weight) {}

  iterator begin() const { return iterator(Combination(length_, weight_)); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t length_;
  std::size_t weight_;
};

inline FixedWeightRange fixed_weight_iter(std::size_t length, std::size_t weight) {
  return FixedWeightRange(length, weight);
}

}  // namespace cayleyqc
