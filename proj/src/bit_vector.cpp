#include "cayleyqc/bit_vector.hpp"

#include <string>

#include "cayleyqc/errors.hpp"

namespace cayleyqc {

namespace {

std::size_t words_for(std::size_t length) { return (length + BitVector::word_bits - 1) / BitVector::word_bits; }

}  // namespace

BitVector::BitVector(std::size_t length) : length_(length), words_(words_for(length), 0) {}

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw ValidationError("bit string may only contain '0' and '1'");
    }
  }
  return v;
}

BitVector BitVector::from_support(std::size_t length, std::span<const std::size_t> support) {
  BitVector v(length);
  for (std::size_t i : support) {
    if (i >= length) throw IndexError("support index " + std::to_string(i) + " out of range");
    v.set(i);
  }
  return v;
}

BitVector BitVector::from_word(std::size_t length, word_type value) {
  if (length > word_bits) throw DimensionError("from_word supports at most 64 bits");
  BitVector v(length);
  if (length > 0) {
    if (length < word_bits) value &= (word_type{1} << length) - 1;
    v.words_[0] = value;
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const word_type mask = word_type{1} << (i % word_bits);
  if (value) {
    words_[i / word_bits] |= mask;
  } else {
    words_[i / word_bits] &= ~mask;
  }
}

void BitVector::clear() {
  for (auto& w : words_) w = 0;
}

std::size_t BitVector::weight() const {
  std::size_t total = 0;
  for (word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVector::none() const {
  for (word_type w : words_) {
    if (w != 0) return false;
  }
  return true;
}

bool BitVector::dot(const BitVector& other) const {
  require_same_size(other);
  word_type acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::first_set() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i]));
  }
  return length_;
}

std::size_t BitVector::next_set(std::size_t i) const {
  ++i;
  if (i >= length_) return length_;
  std::size_t wi = i / word_bits;
  word_type w = words_[wi] & (~word_type{0} << (i % word_bits));
  while (true) {
    if (w != 0) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
    if (++wi == words_.size()) return length_;
    w = words_[wi];
  }
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = first_set(); i < length_; i = next_set(i)) out.push_back(i);
  return out;
}

std::string BitVector::to_string() const {
  std::string s(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  require_same_size(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void BitVector::require_same_size(const BitVector& other) const {
  if (length_ != other.length_) {
    throw DimensionError("bit vector length mismatch: " + std::to_string(length_) + " vs " +
                         std::to_string(other.length_));
  }
}

bool colex_less(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  auto wa = a.words();
  auto wb = b.words();
  for (std::size_t i = wa.size(); i-- > 0;) {
    if (wa[i] != wb[i]) return wa[i] < wb[i];
  }
  return false;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::size_t h = v.size() * 0x9e3779b97f4a7c15ULL;
  for (auto w : v.words()) h = (h ^ w) * 0x100000001b3ULL;
  return h;
}

}  // namespace cayleyqc
