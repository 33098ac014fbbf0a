#include <doctest.h>

#include <random>

#include "cayleyqc/border.hpp"
#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"
#include "oracles.hpp"

using namespace cayleyqc;

namespace {

std::vector<std::uint64_t> columns(const GeneratorSpec& spec) {
  return {spec.generators().begin(), spec.generators().end()};
}

}  // namespace

TEST_CASE("vertex sets") {
  const std::vector<Vertex> vs{3, 1};
  auto s = VertexSet::of(8, vs);
  CHECK(s.cardinality() == 2);
  CHECK(s.vertices() == std::vector<Vertex>{1, 3});
  s.insert(5);
  s.erase(1);
  CHECK(s.vertices() == std::vector<Vertex>{3, 5});
  CHECK((s ^ s).cardinality() == 0);
}

TEST_CASE("border of a single vertex is its neighbourhood") {
  const CayleyGraph cube(GeneratorSpec::identity(3));
  const std::vector<Vertex> one{0};
  CHECK(border_of(cube, VertexSet::of(cube, one)).vertices() == std::vector<Vertex>{1, 2, 4});
  const std::vector<Vertex> two{0, 3};
  // N(0) xor N(3) = {1,2,4} xor {2,1,7}.
  CHECK(border_of(cube, VertexSet::of(cube, two)).vertices() == std::vector<Vertex>{4, 7});
}

TEST_CASE("border and pseudo-border predicates match subset oracles") {
  for (std::size_t r = 2; r <= 3; ++r) {
    for (std::size_t n = 2; n <= 6; n += 2) {
      for (const auto& spec : all_generator_specs(r, n)) {
        const CayleyGraph g(spec);
        const auto table = oracle::subset_table(r, columns(spec));
        BorderSpace space(g);
        for (std::uint64_t x = 0; x < table.border.size(); ++x) {
          const VertexSet s(BitVector::from_word(g.vertex_count(), x));
          CHECK(space.contains(s) == table.border[x]);
          CHECK(is_border(g, s) == table.border[x]);
          CHECK(is_pseudo_border(g, s) == table.pseudo_border[x]);
        }
      }
    }
  }
}

TEST_CASE("border space rank is the rank of A") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const CayleyGraph g(random_generator_spec(5, 6 + 2 * (rng() % 3), rng));
    BorderSpace space(g);
    CHECK(space.rank() == rank(g.adjacency_matrix()));
  }
}

TEST_CASE("minimum pseudo-border that is not a border") {
  // G(I_2) is a 4-cycle: A has rank 2 over N = 4, so K = 0.
  const auto none = min_pseudo_border_not_border(CayleyGraph(GeneratorSpec::identity(2)));
  CHECK(none.logical_qubits == 0);
  CHECK(none.status == SearchStatus::none_exists);

  for (std::size_t r = 2; r <= 4; ++r) {
    for (std::size_t n = 2; n <= std::min<std::size_t>(6, (std::size_t{1} << r) - 1); n += 2) {
      for (const auto& spec : all_generator_specs(r, n)) {
        const CayleyGraph g(spec);
        const auto found = min_pseudo_border_not_border(g);
        const auto expected = oracle::quantum_distance(oracle::subset_table(r, columns(spec)));
        CHECK(found.size == expected);
        if (found.witness) {
          CHECK(is_pseudo_border(g, *found.witness));
          CHECK_FALSE(is_border(g, *found.witness));
        }
      }
    }
  }
}

TEST_CASE("odd degree is refused") {
  CHECK_THROWS_AS((void)min_pseudo_border_not_border(CayleyGraph(GeneratorSpec::identity(3))), StructuralError);
}
