#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "cayleyqc/bit_matrix.hpp"
#include "cayleyqc/coset_search.hpp"

namespace cayleyqc {

/// Element of F2^r encoded little-endian: bit i is coordinate i+1.
using Vertex = std::uint64_t;

struct GraphLimits {
  /// Largest r accepted by build_graph.
  std::size_t max_vertex_bits = 24;
  /// Largest r for which a dense 2^r x 2^r adjacency matrix is materialized.
  std::size_t max_dense_bits = 14;
};

/// Validated r x n parity-check matrix whose columns generate F2^r.
///
/// Columns must be nonzero and pairwise distinct, and the matrix must have
/// rank r; otherwise construction throws ValidationError naming the column.
class GeneratorSpec {
 public:
  explicit GeneratorSpec(BitMatrix h);

  static GeneratorSpec identity(std::size_t n) { return GeneratorSpec(BitMatrix::identity(n)); }

  std::size_t r() const { return h_.rows(); }
  std::size_t n() const { return h_.cols(); }
  const BitMatrix& matrix() const { return h_; }
  /// Column j as a vertex id.
  std::span<const Vertex> generators() const { return generators_; }

 private:
  BitMatrix h_;
  std::vector<Vertex> generators_;
};

/// Cayley graph G(H) on F2^r with adjacency v ~ v xor c_i. Nothing is stored
/// beyond the generator encodings.
class CayleyGraph {
 public:
  explicit CayleyGraph(GeneratorSpec spec, GraphLimits limits = {});

  const GeneratorSpec& spec() const { return spec_; }
  const GraphLimits& limits() const { return limits_; }
  std::size_t vertex_count() const { return std::size_t{1} << spec_.r(); }
  std::size_t degree() const { return spec_.n(); }

  std::vector<Vertex> neighbors(Vertex v) const;
  /// Indicator of N(v) over all vertices, i.e. row v of A(H).
  BitVector neighborhood_row(Vertex v) const;
  /// Dense A(H). Throws ResourceError above limits().max_dense_bits.
  BitMatrix adjacency_matrix() const;

  void require_vertex(Vertex v) const;

 private:
  GeneratorSpec spec_;
  GraphLimits limits_;
};

inline CayleyGraph build_graph(const GeneratorSpec& spec, GraphLimits limits = {}) {
  return CayleyGraph(spec, limits);
}

/// Whether A(H) generates a self-orthogonal code, checked from the
/// common-neighbour counts without building A(H).
bool is_self_orthogonal(const CayleyGraph& g);

/// Shortest dependency among the columns of H, the minimum distance of the
/// code with parity-check matrix H. Default cap is min(n, 20).
CosetSearchResult classical_distance(const GeneratorSpec& spec, std::optional<std::size_t> cap = std::nullopt);

struct BallView {
  Vertex center = 0;
  std::size_t radius = 0;
  /// (vertex, BFS depth), sorted by vertex id.
  std::vector<std::pair<Vertex, std::size_t>> vertices;
  /// Induced edges (u, v) with u < v, sorted.
  std::vector<std::pair<Vertex, Vertex>> edges;
};

BallView ball(const CayleyGraph& g, Vertex center, std::size_t radius);

struct LocalIsomorphism {
  std::size_t radius = 0;
  /// Ball vertex -> indicator in F2^n of the generator set reaching it.
  std::map<Vertex, BitVector> mapping;
  /// Edges of G(H) joining two vertices at distance exactly `radius`. The cube
  /// ball has none; for odd d every weight-d relation produces some.
  std::size_t outer_layer_edges = 0;
  bool ok = false;
};

/// Builds the map v xor sum_{i in T} c_i -> sum_{i in T} e_i from the ball of
/// radius floor((d-1)/2) around `center` onto the radius ball of the
/// n-cube, and checks that it is a well-defined bijection preserving
/// adjacency in both directions on every edge with an endpoint strictly
/// inside the ball. Edges inside the outermost layer are only counted. When
/// no column dependency exists the radius is n. `max_radius` truncates the
/// radius.
LocalIsomorphism verify_local_isomorphism(const GeneratorSpec& spec, Vertex center, const CosetSearchResult& distance,
                                          std::optional<std::size_t> max_radius = std::nullopt);

LocalIsomorphism verify_local_isomorphism(const GeneratorSpec& spec, Vertex center);

/// Uniformly random spec: n distinct nonzero columns of length r, redrawn
/// until they have rank r. Needs r <= n <= 2^r - 1.
GeneratorSpec random_generator_spec(std::size_t r, std::size_t n, std::mt19937_64& rng);

/// Every spec with r rows whose column set is an n-subset of F2^r \ {0} of
/// full rank, columns in increasing integer order.
std::vector<GeneratorSpec> all_generator_specs(std::size_t r, std::size_t n);

/// Radius guaranteed by a classical distance result.
std::size_t isomorphism_radius(const GeneratorSpec& spec, const CosetSearchResult& distance);

}  // namespace cayleyqc
