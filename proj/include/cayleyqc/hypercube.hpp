#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cayleyqc/bit_matrix.hpp"
#include "cayleyqc/coset_search.hpp"

namespace cayleyqc {

/// Subset of [n] = {1..n}; element i+1 is bit i.
using SubsetMask = std::uint64_t;

inline constexpr std::size_t max_ground_set = 63;

inline std::size_t subset_size(SubsetMask s) { return static_cast<std::size_t>(__builtin_popcountll(s)); }

/// Ball order: by size, then colexicographic within a size.
inline bool ball_order_less(SubsetMask a, SubsetMask b) {
  const auto sa = subset_size(a);
  const auto sb = subset_size(b);
  return sa != sb ? sa < sb : a < b;
}

/// Duplicate-free family of subsets of [n], kept in ball order.
class SetFamily {
 public:
  explicit SetFamily(std::size_t n);
  SetFamily(std::size_t n, std::vector<SubsetMask> members);
  /// Elements are 1-based, as in [[], [1], [2, 3]].
  static SetFamily from_lists(std::size_t n, const std::vector<std::vector<std::size_t>>& lists);

  std::size_t n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<SubsetMask>& members() const { return members_; }

  bool contains(SubsetMask s) const;
  void insert(SubsetMask s);
  /// Adds s if absent, removes it if present.
  void toggle(SubsetMask s);

  SetFamily symmetric_difference(const SetFamily& other) const;
  std::vector<std::vector<std::size_t>> to_lists() const;

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  void check(SubsetMask s) const;

  std::size_t n_;
  std::vector<SubsetMask> members_;
};

/// N(S): the n subsets at Hamming distance one from S.
SetFamily neighborhood(std::size_t n, SubsetMask s);

/// Checks all three defining conditions: the empty set is a member, every
/// center of size <= t-1 meets the family evenly, and no member is larger
/// than t.
bool is_t_pseudo_border(const SetFamily& f, std::size_t t);

/// f Δ N(s).
SetFamily flip(const SetFamily& f, SubsetMask s);

/// Column numbering of the radius ball around the empty set, in ball order,
/// so each layer of k-sets is a contiguous range.
class BallIndex {
 public:
  BallIndex(std::size_t n, std::size_t radius);

  std::size_t n() const { return n_; }
  std::size_t radius() const { return radius_; }
  std::size_t size() const { return masks_.size(); }
  std::size_t layer_begin(std::size_t k) const { return offsets_[k]; }
  std::size_t layer_end(std::size_t k) const { return offsets_[k + 1]; }

  SubsetMask mask_at(std::size_t column) const { return masks_[column]; }
  /// Colex rank within the layer plus the layer offset.
  std::size_t column_of(SubsetMask s) const;

 private:
  std::size_t n_;
  std::size_t radius_;
  std::vector<std::size_t> offsets_;
  std::vector<SubsetMask> masks_;
};

/// The t-pseudo-border conditions as a GF(2) system over the radius-t ball.
/// One row per center S with |S| <= t-1: the indicator of N(S).
struct PseudoBorderInstance {
  std::size_t n = 0;
  std::size_t t = 0;
  BallIndex ball{0, 0};
  std::vector<SubsetMask> centers;
  BitMatrix constraints;

  BitVector indicator(const SetFamily& f) const;
  SetFamily family(const BitVector& x) const;
};

PseudoBorderInstance build_constraints(std::size_t n, std::size_t t, std::size_t max_columns = 1 << 16);

struct MinimalPseudoBorder {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<std::size_t> size;
  std::optional<SetFamily> witness;
  std::size_t ruled_out_below_or_at = 0;
};

/// Exact minimum t-pseudo-border. none_exists means no t-pseudo-border exists
/// at all (this happens for odd n and t >= 2).
MinimalPseudoBorder minimal_t_pseudo_border(std::size_t n, std::size_t t,
                                            std::optional<std::size_t> cap = std::nullopt,
                                            SearchStrategy strategy = SearchStrategy::automatic);

/// Some t-pseudo-border, drawn uniformly from the affine solution space using
/// the raw bits of `seed`'s generator; nullopt when none exists.
std::optional<SetFamily> random_t_pseudo_border(std::size_t n, std::size_t t, std::uint64_t seed);

/// Every t-pseudo-border, by walking the affine solution space.
/// Throws ResourceError when that space has more than 2^max_dimension points.
std::vector<SetFamily> all_t_pseudo_borders(std::size_t n, std::size_t t, std::size_t max_dimension = 20);

std::size_t count_k_sets(const SetFamily& f, std::size_t k);

/// k-subsets of [n] containing an odd number of the family's (k-1)-sets.
SetFamily odd_sets(const SetFamily& f, std::size_t k);

struct OddToNextCheck {
  std::size_t odd_k_sets = 0;
  std::size_t next_layer = 0;
  bool holds = false;
};

/// next_layer >= odd_k_sets / (k + 1), compared exactly.
OddToNextCheck verify_odd_to_next(const SetFamily& f, std::size_t k);

struct SetsToOddCheck {
  std::size_t k_sets = 0;
  std::size_t odd_next = 0;
  bool holds = false;
};

/// odd_next >= (n - (k-1)k) / (k+1) · k_sets, compared exactly.
SetsToOddCheck verify_sets_to_odd(const SetFamily& f, std::size_t k);

struct FlipDescent {
  SetFamily family;
  std::size_t flips = 0;
  /// No flip with 2 <= |S| <= t-1 strictly decreases the size.
  bool flip_minimal = false;
};

/// Greedy local search: repeatedly applies the flip (2 <= |S| <= t-1) with
/// the largest size decrease, ties to the smallest center in ball order,
/// until none decreases or `budget` flips were made. The result is only an
/// upper bound on the minimum.
FlipDescent flip_descent(const SetFamily& f, std::size_t t, std::size_t budget);

/// The best size change achievable by one legal flip, and its center.
std::optional<std::pair<SubsetMask, long>> best_flip(const SetFamily& f, std::size_t t);

}  // namespace cayleyqc
