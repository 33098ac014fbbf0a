#pragma once

#include <cstddef>
#include <limits>
#include <optional>

#include "cayleyqc/bit_matrix.hpp"
#include "cayleyqc/bit_vector.hpp"

namespace cayleyqc {

enum class SearchStatus {
  found,        ///< a qualifying vector of weight <= cap was found; it is minimal
  none_exists,  ///< proven: no qualifying vector exists at any weight
  cap_reached,  ///< no qualifying vector of weight <= cap; larger ones may exist
};

const char* to_string(SearchStatus status);

enum class SearchStrategy {
  automatic,       ///< kernel enumeration when its dimension is small, else by weight
  by_weight,       ///< increasing-weight scan of all fixed-weight vectors
  kernel_gray,     ///< Gray-code walk over every kernel vector outside the excluded span
};

struct CosetSearchOptions {
  static constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

  std::size_t cap = unlimited;
  SearchStrategy strategy = SearchStrategy::automatic;
  /// Largest quotient dimension `automatic` will hand to the Gray-code walk.
  std::size_t kernel_enumeration_limit = 22;
};

struct CosetSearchResult {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<std::size_t> weight;
  std::optional<BitVector> witness;
  /// With cap_reached: every weight up to this value was ruled out.
  std::size_t ruled_out_below_or_at = 0;

  bool found() const { return status == SearchStatus::found; }
};

/// Minimum weight x with parity·x = 0 and x outside the row space of `excluded`.
///
/// Every row of `excluded` must lie in the kernel of `parity`; a violation
/// throws StructuralError naming the first offending row. Among witnesses of
/// minimal weight the colexicographically first is returned, whichever
/// strategy runs. A zero-row `excluded` (of matching width) makes this the
/// minimum distance of the kernel code.
CosetSearchResult min_weight_in_coset(const BitMatrix& parity, const BitMatrix& excluded,
                                      const CosetSearchOptions& options = {});

inline CosetSearchResult min_weight_in_coset(const BitMatrix& parity, const BitMatrix& excluded, std::size_t cap) {
  CosetSearchOptions options;
  options.cap = cap;
  return min_weight_in_coset(parity, excluded, options);
}

}  // namespace cayleyqc
