#include "cayleyqc/cayley.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"

namespace cayleyqc {

GeneratorSpec::GeneratorSpec(BitMatrix h) : h_(std::move(h)) {
  if (h_.rows() == 0 || h_.cols() == 0) throw ValidationError("generator matrix must be non-empty");
  if (h_.rows() > 63) throw ValidationError("r = " + std::to_string(h_.rows()) + " exceeds 63");

  generators_.reserve(h_.cols());
  std::unordered_map<Vertex, std::size_t> seen;
  for (std::size_t j = 0; j < h_.cols(); ++j) {
    Vertex c = 0;
    for (std::size_t i = 0; i < h_.rows(); ++i) {
      if (h_.get(i, j)) c |= Vertex{1} << i;
    }
    if (c == 0) throw ValidationError("column " + std::to_string(j + 1) + " is zero");
    auto [it, inserted] = seen.emplace(c, j);
    if (!inserted) {
      throw ValidationError("column " + std::to_string(j + 1) + " duplicates column " +
                            std::to_string(it->second + 1));
    }
    generators_.push_back(c);
  }
  if (rank(h_) != h_.rows()) {
    throw ValidationError("columns do not generate F2^" + std::to_string(h_.rows()) + " (rank " +
                          std::to_string(rank(h_)) + " < r)");
  }
}

CayleyGraph::CayleyGraph(GeneratorSpec spec, GraphLimits limits) : spec_(std::move(spec)), limits_(limits) {
  if (spec_.r() > limits_.max_vertex_bits) {
    throw ResourceError("r = " + std::to_string(spec_.r()) + " exceeds the vertex budget of 2^" +
                        std::to_string(limits_.max_vertex_bits));
  }
}

void CayleyGraph::require_vertex(Vertex v) const {
  if (v >= vertex_count()) {
    throw IndexError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(vertex_count()) + ")");
  }
}

std::vector<Vertex> CayleyGraph::neighbors(Vertex v) const {
  require_vertex(v);
  std::vector<Vertex> out;
  out.reserve(degree());
  for (Vertex c : spec_.generators()) out.push_back(v ^ c);
  return out;
}

BitVector CayleyGraph::neighborhood_row(Vertex v) const {
  require_vertex(v);
  BitVector row(vertex_count());
  for (Vertex c : spec_.generators()) row.set(v ^ c);
  return row;
}

BitMatrix CayleyGraph::adjacency_matrix() const {
  if (spec_.r() > limits_.max_dense_bits) {
    throw ResourceError("dense adjacency for r = " + std::to_string(spec_.r()) + " exceeds the limit r <= " +
                        std::to_string(limits_.max_dense_bits) + "; use implicit adjacency instead");
  }
  BitMatrix a(0, vertex_count());
  for (Vertex v = 0; v < vertex_count(); ++v) a.append_row(neighborhood_row(v));
  return a;
}

bool is_self_orthogonal(const CayleyGraph& g) {
  // |N(u) ∩ N(v)| = |N(0) ∩ N(u xor v)| by translation, so pairs (0, delta)
  // cover every pair of rows. Common neighbours of 0 and delta are the c_i
  // with c_i xor delta also a generator.
  const auto gens = g.spec().generators();
  std::unordered_map<Vertex, std::size_t> common;
  for (Vertex ci : gens) {
    for (Vertex cj : gens) common[ci ^ cj] += 1;
  }
  for (const auto& [delta, count] : common) {
    (void)delta;
    if (count % 2 != 0) return false;
  }
  return true;
}

CosetSearchResult classical_distance(const GeneratorSpec& spec, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(std::min<std::size_t>(spec.n(), 20));
  return min_weight_in_coset(spec.matrix(), BitMatrix(0, spec.n()), limit);
}

BallView ball(const CayleyGraph& g, Vertex center, std::size_t radius) {
  g.require_vertex(center);
  std::unordered_map<Vertex, std::size_t> depth{{center, 0}};
  std::vector<Vertex> frontier{center};
  for (std::size_t k = 0; k < radius && !frontier.empty(); ++k) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      for (Vertex c : g.spec().generators()) {
        if (depth.emplace(u ^ c, k + 1).second) next.push_back(u ^ c);
      }
    }
    frontier = std::move(next);
  }

  BallView view;
  view.center = center;
  view.radius = radius;
  view.vertices.assign(depth.begin(), depth.end());
  std::sort(view.vertices.begin(), view.vertices.end());
  for (const auto& [x, d] : view.vertices) {
    (void)d;
    for (Vertex c : g.spec().generators()) {
      const Vertex y = x ^ c;
      if (x < y && depth.count(y) != 0) view.edges.emplace_back(x, y);
    }
  }
  std::sort(view.edges.begin(), view.edges.end());
  return view;
}

std::size_t isomorphism_radius(const GeneratorSpec& spec, const CosetSearchResult& distance) {
  switch (distance.status) {
    case SearchStatus::found:
      return (*distance.weight - 1) / 2;
    case SearchStatus::none_exists:
      return spec.n();
    case SearchStatus::cap_reached:
      break;
  }
  // d exceeds every weight the search ruled out.
  return distance.ruled_out_below_or_at / 2;
}

LocalIsomorphism verify_local_isomorphism(const GeneratorSpec& spec, Vertex center, const CosetSearchResult& distance,
                                          std::optional<std::size_t> max_radius) {
  const CayleyGraph g(spec);
  g.require_vertex(center);
  const std::size_t n = spec.n();
  const auto gens = spec.generators();

  LocalIsomorphism result;
  result.radius = isomorphism_radius(spec, distance);
  if (max_radius) result.radius = std::min(result.radius, *max_radius);
  const std::size_t rho = result.radius;

  struct Entry {
    std::size_t depth;
    BitVector label;
  };
  std::unordered_map<Vertex, Entry> entries;
  entries.emplace(center, Entry{0, BitVector(n)});
  bool ok = true;

  std::vector<Vertex> frontier{center};
  for (std::size_t k = 0; k < rho; ++k) {
    std::vector<Vertex> next;
    for (Vertex u : frontier) {
      const BitVector base = entries.at(u).label;
      for (std::size_t i = 0; i < n; ++i) {
        const Vertex w = u ^ gens[i];
        BitVector label = base;
        label.flip(i);
        auto it = entries.find(w);
        if (it == entries.end()) {
          entries.emplace(w, Entry{k + 1, std::move(label)});
          next.push_back(w);
        } else if (it->second.depth != k && it->second.label != label) {
          ok = false;  // two geodesics disagree on the generator set
        }
      }
    }
    frontier = std::move(next);
  }

  std::unordered_set<BitVector, BitVectorHash> images;
  for (const auto& [v, e] : entries) {
    if (e.label.weight() != e.depth) ok = false;
    images.insert(e.label);
  }
  std::uint64_t cube_ball = 0;
  for (std::size_t i = 0; i <= std::min(rho, n); ++i) cube_ball += binomial(n, i);
  if (images.size() != entries.size() || entries.size() != cube_ball) ok = false;

  std::size_t outer_ends = 0;
  for (const auto& [x, e] : entries) {
    for (std::size_t i = 0; i < n; ++i) {
      auto it = entries.find(x ^ gens[i]);
      if (e.depth == rho) {
        if (it != entries.end() && it->second.depth == rho) ++outer_ends;
        continue;
      }
      BitVector image = e.label;
      image.flip(i);
      if (it == entries.end() || it->second.label != image) ok = false;
    }
  }
  result.outer_layer_edges = outer_ends / 2;

  for (auto& [v, e] : entries) result.mapping.emplace(v, std::move(e.label));
  result.ok = ok;
  return result;
}

LocalIsomorphism verify_local_isomorphism(const GeneratorSpec& spec, Vertex center) {
  return verify_local_isomorphism(spec, center, classical_distance(spec));
}

namespace {

BitMatrix matrix_from_columns(std::size_t r, const std::vector<Vertex>& columns) {
  BitMatrix h(r, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < r; ++i) {
      if ((columns[j] >> i) & 1U) h.set(i, j);
    }
  }
  return h;
}

}  // namespace

GeneratorSpec random_generator_spec(std::size_t r, std::size_t n, std::mt19937_64& rng) {
  if (r == 0 || r > 30) throw ValidationError("random specs support 1 <= r <= 30");
  const Vertex nonzero = (Vertex{1} << r) - 1;
  if (n < r || n > nonzero) throw ValidationError("need r <= n <= 2^r - 1 for a full-rank spec");
  while (true) {
    std::vector<Vertex> columns;
    std::unordered_set<Vertex> used;
    while (columns.size() < n) {
      const Vertex c = (rng() % nonzero) + 1;
      if (used.insert(c).second) columns.push_back(c);
    }
    BitMatrix h = matrix_from_columns(r, columns);
    if (rank(h) == r) return GeneratorSpec(std::move(h));
  }
}

std::vector<GeneratorSpec> all_generator_specs(std::size_t r, std::size_t n) {
  if (r == 0 || r > 5) throw ResourceError("exhaustive spec enumeration supports 1 <= r <= 5");
  const std::size_t nonzero = (std::size_t{1} << r) - 1;
  std::vector<GeneratorSpec> out;
  if (n > nonzero) return out;
  for (Combination c(nonzero, n); !c.done(); c.advance()) {
    std::vector<Vertex> columns;
    for (std::size_t j : c.support()) columns.push_back(j + 1);
    BitMatrix h = matrix_from_columns(r, columns);
    if (rank(h) == r) out.emplace_back(std::move(h));
  }
  return out;
}

}  // namespace cayleyqc
