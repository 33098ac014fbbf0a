#include "cayleyqc/coset_search.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"

namespace cayleyqc {

const char* to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::found:
      return "found";
    case SearchStatus::none_exists:
      return "none-exists";
    case SearchStatus::cap_reached:
      return "cap-reached";
  }
  return "unknown";
}

namespace {

using word_type = BitVector::word_type;

// Column syndromes of `parity`, flattened with a fixed word stride.
struct SyndromeTable {
  std::size_t stride = 0;
  std::vector<word_type> words;

  explicit SyndromeTable(const BitMatrix& parity) {
    const BitMatrix columns = parity.transpose();
    stride = (parity.rows() + BitVector::word_bits - 1) / BitVector::word_bits;
    words.assign(stride * parity.cols(), 0);
    for (std::size_t j = 0; j < parity.cols(); ++j) {
      auto src = columns.row(j).words();
      std::copy(src.begin(), src.end(), words.begin() + static_cast<std::ptrdiff_t>(j * stride));
    }
  }

  const word_type* column(std::size_t j) const { return words.data() + j * stride; }
};

CosetSearchResult search_by_weight(const BitMatrix& parity, const EchelonBasis& excluded, std::size_t cap) {
  const std::size_t length = parity.cols();
  const SyndromeTable table(parity);
  std::vector<word_type> acc(table.stride);

  const std::size_t top = std::min(cap, length);
  for (std::size_t w = 1; w <= top; ++w) {
    for (Combination c(length, w); !c.done(); c.advance()) {
      std::fill(acc.begin(), acc.end(), 0);
      for (std::size_t j : c.support()) {
        const word_type* col = table.column(j);
        for (std::size_t k = 0; k < table.stride; ++k) acc[k] ^= col[k];
      }
      if (std::any_of(acc.begin(), acc.end(), [](word_type x) { return x != 0; })) continue;
      BitVector candidate = c.to_bit_vector();
      if (excluded.contains(candidate)) continue;
      return {SearchStatus::found, w, std::move(candidate)};
    }
  }
  return {cap >= length ? SearchStatus::none_exists : SearchStatus::cap_reached, std::nullopt, std::nullopt, top};
}

CosetSearchResult search_kernel_gray(const std::vector<BitVector>& quotient, const std::vector<BitVector>& inner,
                                     std::size_t length, std::size_t cap) {
  if (quotient.empty()) return {SearchStatus::none_exists, std::nullopt, std::nullopt};

  // Generators ordered inner-first so the Gray index splits into an inner
  // part (low bits) and a quotient part (high bits).
  std::vector<const BitVector*> gens;
  for (const auto& v : inner) gens.push_back(&v);
  for (const auto& v : quotient) gens.push_back(&v);
  const std::size_t inner_bits = inner.size();
  const std::size_t dim = gens.size();

  BitVector current(length);
  std::optional<BitVector> best;
  std::size_t best_weight = 0;
  const std::uint64_t total = std::uint64_t{1} << dim;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(step));
    current ^= *gens[flip];
    const std::uint64_t gray = step ^ (step >> 1);
    if ((gray >> inner_bits) == 0) continue;
    const std::size_t w = current.weight();
    if (!best || w < best_weight || (w == best_weight && colex_less(current, *best))) {
      best = current;
      best_weight = w;
    }
  }
  if (best_weight > cap) return {SearchStatus::cap_reached, std::nullopt, std::nullopt, cap};
  return {SearchStatus::found, best_weight, std::move(best)};
}

}  // namespace

CosetSearchResult min_weight_in_coset(const BitMatrix& parity, const BitMatrix& excluded,
                                      const CosetSearchOptions& options) {
  if (parity.cols() != excluded.cols()) {
    throw DimensionError("min_weight_in_coset: parity has " + std::to_string(parity.cols()) +
                         " columns but excluded has " + std::to_string(excluded.cols()));
  }
  for (std::size_t i = 0; i < excluded.rows(); ++i) {
    if (parity.multiply(excluded.row(i)).any()) {
      throw StructuralError("min_weight_in_coset: excluded row " + std::to_string(i + 1) +
                            " is not in the kernel of the parity matrix");
    }
  }

  EchelonBasis excluded_basis(parity.cols());
  for (const auto& r : excluded.row_data()) excluded_basis.insert(r);

  SearchStrategy strategy = options.strategy;
  std::vector<BitVector> quotient;
  if (strategy != SearchStrategy::by_weight) {
    EchelonBasis extended = excluded_basis;
    const BitMatrix kernel = kernel_basis(parity);
    for (const auto& k : kernel.row_data()) {
      if (extended.insert(k)) quotient.push_back(k);
    }
    const std::size_t dim = excluded_basis.rank() + quotient.size();
    if (strategy == SearchStrategy::automatic) {
      strategy = (dim <= options.kernel_enumeration_limit) ? SearchStrategy::kernel_gray : SearchStrategy::by_weight;
    } else if (dim >= 63) {
      throw ResourceError("kernel enumeration over dimension " + std::to_string(dim) + " is infeasible");
    }
    if (strategy == SearchStrategy::by_weight && quotient.empty()) {
      return {SearchStatus::none_exists, std::nullopt, std::nullopt};
    }
  }

  if (strategy == SearchStrategy::kernel_gray) {
    return search_kernel_gray(quotient, excluded_basis.rows(), parity.cols(), options.cap);
  }
  return search_by_weight(parity, excluded_basis, options.cap);
}

}  // namespace cayleyqc
