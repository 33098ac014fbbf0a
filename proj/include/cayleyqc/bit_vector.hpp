#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cayleyqc {

/// Dense vector over GF(2), packed 64 bits per word.
///
/// Bit i holds component x_{i+1}. Storage is little-endian within and across
/// words, and bits past size() are always zero. String renderings put bit 0
/// first, so "100" is the vector with only x_1 set.
class BitVector {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector from_string(std::string_view bits);
  static BitVector from_support(std::size_t length, std::span<const std::size_t> support);
  /// Low `length` bits of `value`; length must be at most 64.
  static BitVector from_word(std::size_t length, word_type value);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }

  bool get(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / word_bits] ^= word_type{1} << (i % word_bits); }
  void clear();

  std::size_t weight() const;
  bool none() const;
  bool any() const { return !none(); }

  /// Parity of the intersection, i.e. the GF(2) inner product.
  bool dot(const BitVector& other) const;

  /// Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first_set() const;
  /// Lowest set bit strictly above `i`, or size().
  std::size_t next_set(std::size_t i) const;
  std::vector<std::size_t> support() const;

  std::string to_string() const;

  std::span<const word_type> words() const { return words_; }
  std::span<word_type> words() { return words_; }

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);

  friend BitVector operator^(BitVector lhs, const BitVector& rhs) { return lhs ^= rhs; }
  friend BitVector operator&(BitVector lhs, const BitVector& rhs) { return lhs &= rhs; }
  friend BitVector operator|(BitVector lhs, const BitVector& rhs) { return lhs |= rhs; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  void require_same_size(const BitVector& other) const;

  std::size_t length_ = 0;
  std::vector<word_type> words_;
};

/// Colexicographic order on support sets: the vector whose highest
/// differing bit is set is the larger one.
bool colex_less(const BitVector& a, const BitVector& b);

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

}  // namespace cayleyqc
