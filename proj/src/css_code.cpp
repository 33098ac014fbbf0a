#include "cayleyqc/css_code.hpp"

#include <string>

#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"

namespace cayleyqc {

const char* to_string(DistanceStatus status) {
  switch (status) {
    case DistanceStatus::exact:
      return "exact";
    case DistanceStatus::lower_bounded_by_cap:
      return "lower-bounded-by-cap";
    case DistanceStatus::undefined_k_zero:
      return "undefined-K-zero";
  }
  return "unknown";
}

namespace {

void require_even(const GeneratorSpec& spec) {
  if (spec.n() % 2 != 0) {
    throw ValidationError("n = " + std::to_string(spec.n()) +
                          " is odd; A(H) generates a self-orthogonal code only for even n");
  }
}

// Distance lower bound for Q(H) from what is known about d.
std::optional<BoundReport> distance_bound(const GeneratorSpec& spec, const CosetSearchResult& d) {
  const std::size_t n = spec.n();
  switch (d.status) {
    case SearchStatus::found:
      if (*d.weight >= 5) return corollary_bound(n, *d.weight);
      return std::nullopt;
    case SearchStatus::cap_reached: {
      // d > cap; the sum is nondecreasing in d, so cap + 1 is a safe stand-in.
      const std::size_t d_low = d.ruled_out_below_or_at + 1;
      if (d_low < 5) return std::nullopt;
      auto b = corollary_bound(n, d_low);
      b.validity_note += "; d only known to be >= " + std::to_string(d_low);
      return b;
    }
    case SearchStatus::none_exists:
      // Independent columns give the n-cube, where K = 0.
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::size_t default_distance_cap(const GeneratorSpec& spec) { return spec.n() + 2; }

QuantumParams quantum_params(const GeneratorSpec& spec, std::optional<std::size_t> cap, GraphLimits limits) {
  require_even(spec);
  const CayleyGraph g(spec, limits);

  QuantumParams p;
  p.r = spec.r();
  p.n = spec.n();
  p.N = g.vertex_count();
  p.cap = cap.value_or(default_distance_cap(spec));
  p.d = classical_distance(spec);

  const auto search = min_pseudo_border_not_border(g, p.cap);
  p.K = search.logical_qubits;
  p.rank_a = (p.N - p.K) / 2;
  if (2 * p.rank_a + p.K != p.N) throw StructuralError("K = N - 2 rank(A(H)) is inconsistent");

  if (p.K == 0) {
    p.D_status = DistanceStatus::undefined_k_zero;
    return p;
  }

  p.bound = distance_bound(spec, p.d);
  if (search.status == SearchStatus::found) {
    p.D = search.size;
    p.D_status = DistanceStatus::exact;
    p.witness = search.witness;
    if (p.bound) p.bound_satisfied = p.bound->satisfied_by(*p.D);
  } else {
    p.D_status = DistanceStatus::lower_bounded_by_cap;
    p.D_ruled_out_below_or_at = search.ruled_out_below_or_at;
  }
  return p;
}

DegeneracyReport degeneracy_report(const GeneratorSpec& spec, const QuantumParams& params, GraphLimits limits) {
  require_even(spec);
  const CayleyGraph g(spec, limits);
  const BitMatrix a = g.adjacency_matrix();

  DegeneracyReport out;
  const auto dual = min_weight_in_coset(a, BitMatrix(0, a.cols()), params.cap);
  if (dual.found()) out.d_perp = dual.weight;
  out.D = params.D;
  if (out.D && out.d_perp) out.degenerate = *out.D > *out.d_perp;
  return out;
}

DegeneracyReport degeneracy_report(const GeneratorSpec& spec, std::optional<std::size_t> cap, GraphLimits limits) {
  return degeneracy_report(spec, quantum_params(spec, cap, limits), limits);
}

}  // namespace cayleyqc
