#include "cayleyqc/border.hpp"

#include <string>

#include "cayleyqc/errors.hpp"

namespace cayleyqc {

namespace {

void require_size(const CayleyGraph& g, const VertexSet& x) {
  if (x.graph_size() != g.vertex_count()) {
    throw DimensionError("vertex set over " + std::to_string(x.graph_size()) + " vertices used with a graph of " +
                         std::to_string(g.vertex_count()));
  }
}

}  // namespace

VertexSet VertexSet::of(std::size_t graph_size, std::span<const Vertex> vertices) {
  VertexSet s(graph_size);
  for (Vertex v : vertices) {
    if (v >= graph_size) throw IndexError("vertex " + std::to_string(v) + " out of range");
    s.insert(v);
  }
  return s;
}

std::vector<Vertex> VertexSet::vertices() const {
  std::vector<Vertex> out;
  for (std::size_t i = members_.first_set(); i < members_.size(); i = members_.next_set(i)) out.push_back(i);
  return out;
}

VertexSet border_of(const CayleyGraph& g, const VertexSet& centers) {
  require_size(g, centers);
  VertexSet out(g.vertex_count());
  const auto& ind = centers.indicator();
  for (std::size_t v = ind.first_set(); v < ind.size(); v = ind.next_set(v)) {
    for (Vertex c : g.spec().generators()) {
      const Vertex w = v ^ c;
      if (out.contains(w)) {
        out.erase(w);
      } else {
        out.insert(w);
      }
    }
  }
  return out;
}

BorderSpace::BorderSpace(const CayleyGraph& g) : graph_(&g), basis_(g.vertex_count()) {}

bool BorderSpace::absorb_next() {
  if (next_row_ >= graph_->vertex_count()) return false;
  basis_.insert(graph_->neighborhood_row(next_row_++));
  return true;
}

bool BorderSpace::contains(const VertexSet& x) {
  require_size(*graph_, x);
  BitVector residue = basis_.reduce(x.indicator());
  std::size_t reduced_rows = basis_.rank();
  while (residue.any()) {
    if (!absorb_next()) return false;
    // Only a newly added basis row can still cancel the residue.
    if (basis_.rank() > reduced_rows) {
      if (residue.get(basis_.pivots().back())) residue ^= basis_.rows().back();
      reduced_rows = basis_.rank();
    }
  }
  return true;
}

std::size_t BorderSpace::rank() {
  while (absorb_next()) {
  }
  return basis_.rank();
}

bool is_border(const CayleyGraph& g, const VertexSet& x) {
  BorderSpace space(g);
  return space.contains(x);
}

bool is_pseudo_border(const CayleyGraph& g, const VertexSet& x) {
  // A(H) is symmetric, so A(H)·1_x is the border of x.
  return border_of(g, x).indicator().none();
}

PseudoBorderSearch min_pseudo_border_not_border(const CayleyGraph& g, std::optional<std::size_t> cap,
                                                SearchStrategy strategy) {
  PseudoBorderSearch out;
  const BitMatrix a = g.adjacency_matrix();
  const std::size_t rk = rank(a);
  if (2 * rk > g.vertex_count()) {
    throw StructuralError("rank(A(H)) exceeds N/2; A(H) is not self-orthogonal (odd n?)");
  }
  out.logical_qubits = g.vertex_count() - 2 * rk;
  if (out.logical_qubits == 0) {
    out.status = SearchStatus::none_exists;
    return out;
  }

  CosetSearchOptions options;
  if (cap) options.cap = *cap;
  options.strategy = strategy;
  auto found = min_weight_in_coset(a, a, options);
  out.status = found.status;
  out.size = found.weight;
  out.ruled_out_below_or_at = found.ruled_out_below_or_at;
  if (found.witness) out.witness = VertexSet(std::move(*found.witness));
  return out;
}

}  // namespace cayleyqc
