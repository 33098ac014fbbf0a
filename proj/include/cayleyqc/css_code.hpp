#pragma once

#include <cstddef>
#include <optional>

#include "cayleyqc/border.hpp"
#include "cayleyqc/bounds.hpp"
#include "cayleyqc/cayley.hpp"

namespace cayleyqc {

enum class DistanceStatus { exact, lower_bounded_by_cap, undefined_k_zero };

const char* to_string(DistanceStatus status);

/// [[N, K, D]] of the CSS code Q(H) built from the self-orthogonal code C(H).
///
/// `d` is the column-dependency distance of H; the quantum distance D is a
/// different quantity and never shares a field with it.
struct QuantumParams {
  std::size_t r = 0;
  std::size_t n = 0;
  std::size_t N = 0;
  std::size_t K = 0;
  std::size_t rank_a = 0;
  CosetSearchResult d;
  std::optional<std::size_t> D;
  DistanceStatus D_status = DistanceStatus::undefined_k_zero;
  /// With lower_bounded_by_cap: D is larger than this.
  std::size_t D_ruled_out_below_or_at = 0;
  std::size_t cap = 0;
  std::optional<BoundReport> bound;
  /// Set when both D and the bound are known: D >= bound.
  std::optional<bool> bound_satisfied;
  std::optional<VertexSet> witness;
};

struct DegeneracyReport {
  std::optional<std::size_t> d_perp;
  std::optional<std::size_t> D;
  std::optional<bool> degenerate;
};

/// Default distance cap, 2 + n.
std::size_t default_distance_cap(const GeneratorSpec& spec);

/// Refuses odd n with ValidationError; A(H) is self-orthogonal only for even n.
QuantumParams quantum_params(const GeneratorSpec& spec, std::optional<std::size_t> cap = std::nullopt,
                             GraphLimits limits = {});

/// d_perp is the minimum weight of a nonzero vector of C(H)^perp; the code is
/// degenerate when D > d_perp.
DegeneracyReport degeneracy_report(const GeneratorSpec& spec, std::optional<std::size_t> cap = std::nullopt,
                                   GraphLimits limits = {});
DegeneracyReport degeneracy_report(const GeneratorSpec& spec, const QuantumParams& params, GraphLimits limits = {});

}  // namespace cayleyqc
