#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "cayleyqc/cayley.hpp"
#include "cayleyqc/coset_search.hpp"
#include "cayleyqc/gf2.hpp"

namespace cayleyqc {

/// Subset of the vertices of a Cayley graph, stored as its indicator vector.
class VertexSet {
 public:
  explicit VertexSet(std::size_t graph_size) : members_(graph_size) {}
  explicit VertexSet(BitVector members) : members_(std::move(members)) {}

  static VertexSet of(std::size_t graph_size, std::span<const Vertex> vertices);
  static VertexSet of(const CayleyGraph& g, std::span<const Vertex> vertices) {
    return of(g.vertex_count(), vertices);
  }

  std::size_t graph_size() const { return members_.size(); }
  std::size_t cardinality() const { return members_.weight(); }
  bool contains(Vertex v) const { return members_.get(v); }
  void insert(Vertex v) { members_.set(v); }
  void erase(Vertex v) { members_.set(v, false); }

  const BitVector& indicator() const { return members_; }
  /// Sorted ascending.
  std::vector<Vertex> vertices() const;

  VertexSet& operator^=(const VertexSet& other) {
    members_ ^= other.members_;
    return *this;
  }
  friend VertexSet operator^(VertexSet lhs, const VertexSet& rhs) { return lhs ^= rhs; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  BitVector members_;
};

/// Symmetric difference of N(v) over v in `centers`, i.e. A(H)·1_centers.
VertexSet border_of(const CayleyGraph& g, const VertexSet& centers);

/// Row space C(H) of A(H), with rows generated lazily from implicit adjacency.
///
/// Membership queries extend the echelon basis one row of A(H) at a time
/// and stop as soon as the query reduces to zero.
class BorderSpace {
 public:
  explicit BorderSpace(const CayleyGraph& g);

  bool contains(const VertexSet& x);
  /// rank(A(H)); forces every row to be absorbed.
  std::size_t rank();

 private:
  bool absorb_next();

  const CayleyGraph* graph_;
  EchelonBasis basis_;
  Vertex next_row_ = 0;
};

/// x is a border iff its indicator lies in C(H).
bool is_border(const CayleyGraph& g, const VertexSet& x);

/// |N(v) ∩ x| is even for every vertex v; equivalently A(H)·1_x = 0.
bool is_pseudo_border(const CayleyGraph& g, const VertexSet& x);

struct PseudoBorderSearch {
  SearchStatus status = SearchStatus::none_exists;
  std::optional<std::size_t> size;
  std::optional<VertexSet> witness;
  /// N - 2·rank(A(H)).
  std::size_t logical_qubits = 0;
  std::size_t ruled_out_below_or_at = 0;
};

/// Smallest pseudo-border that is not a border, i.e. min weight of
/// C(H)^perp minus C(H). When K = 0 the status is none_exists without a
/// search. Requires the dense adjacency matrix.
PseudoBorderSearch min_pseudo_border_not_border(const CayleyGraph& g, std::optional<std::size_t> cap = std::nullopt,
                                                SearchStrategy strategy = SearchStrategy::automatic);

}  // namespace cayleyqc
