#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cayleyqc/cayley.hpp"
#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"
#include "oracles.hpp"

using namespace cayleyqc;

namespace {

GeneratorSpec hamming() { return GeneratorSpec(BitMatrix::from_strings({"1010101", "0110011", "0001111"})); }

std::vector<std::uint64_t> columns(const GeneratorSpec& spec) {
  return {spec.generators().begin(), spec.generators().end()};
}

}  // namespace

TEST_CASE("spec validation names the column") {
  CHECK_THROWS_AS(GeneratorSpec(BitMatrix(0, 0)), ValidationError);
  try {
    GeneratorSpec(BitMatrix::from_strings({"1011", "0101"}));
    FAIL("duplicate columns accepted");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("3") != std::string::npos);
  }
  try {
    GeneratorSpec(BitMatrix::from_strings({"100", "100"}));
    FAIL("zero column accepted");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(GeneratorSpec(BitMatrix::from_strings({"11", "11", "00"})), ValidationError);
  CHECK_THROWS_AS(GeneratorSpec(BitMatrix::from_strings({"110", "110"})), ValidationError);
}

TEST_CASE("build graph examples") {
  const CayleyGraph cube(GeneratorSpec::identity(3));
  CHECK(cube.vertex_count() == 8);
  CHECK(cube.degree() == 3);
  for (Vertex v = 0; v < 8; ++v) {
    for (Vertex u : cube.neighbors(v)) CHECK(std::popcount(u ^ v) == 1);
  }

  const CayleyGraph square(GeneratorSpec::identity(2));
  for (Vertex v = 0; v < 4; ++v) CHECK(square.neighbors(v).size() == 2);

  const CayleyGraph h(hamming());
  CHECK(h.vertex_count() == 8);
  CHECK(h.degree() == 7);

  GraphLimits tight;
  tight.max_vertex_bits = 2;
  CHECK_THROWS_AS(CayleyGraph(GeneratorSpec::identity(3), tight), ResourceError);
}

TEST_CASE("neighbors") {
  const CayleyGraph cube(GeneratorSpec::identity(3));
  auto n0 = cube.neighbors(0);
  std::sort(n0.begin(), n0.end());
  CHECK(n0 == std::vector<Vertex>{1, 2, 4});
  CHECK_THROWS_AS((void)cube.neighbors(8), IndexError);

  const CayleyGraph h(hamming());
  auto nh = h.neighbors(0);
  std::sort(nh.begin(), nh.end());
  CHECK(nh == std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7});

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const CayleyGraph g(random_generator_spec(5, 8, rng));
    const Vertex u = rng() % 32;
    const Vertex v = rng() % 32;
    auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    CHECK(std::find(nu.begin(), nu.end(), u) == nu.end());
    CHECK(std::set<Vertex>(nu.begin(), nu.end()).size() == 8);
    for (auto& x : nu) x ^= u ^ v;
    CHECK(std::set<Vertex>(nu.begin(), nu.end()) == std::set<Vertex>(nv.begin(), nv.end()));
  }
}

TEST_CASE("adjacency matrix") {
  const auto square = CayleyGraph(GeneratorSpec::identity(2)).adjacency_matrix();
  CHECK(square == BitMatrix::from_strings({"0110", "1001", "1001", "0110"}));

  const auto cube = CayleyGraph(GeneratorSpec::identity(3)).adjacency_matrix();
  CHECK(cube.row(0).support() == std::vector<std::size_t>{1, 2, 4});

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t r = 2 + rng() % 9;
    const std::size_t n = std::min<std::size_t>((std::size_t{1} << r) - 1, r + rng() % 4);
    const CayleyGraph g(random_generator_spec(r, n, rng));
    const auto a = g.adjacency_matrix();
    CHECK(a == a.transpose());
    for (const auto& row : a.row_data()) CHECK(row.weight() == n);
  }

  GraphLimits tight;
  tight.max_dense_bits = 2;
  CHECK_THROWS_AS((void)CayleyGraph(GeneratorSpec::identity(3), tight).adjacency_matrix(), ResourceError);
}

TEST_CASE("self-orthogonality") {
  CHECK(is_self_orthogonal(CayleyGraph(GeneratorSpec::identity(2))));
  CHECK_FALSE(is_self_orthogonal(CayleyGraph(GeneratorSpec::identity(3))));
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t r = 2 + rng() % 6;
    const std::size_t n = std::min<std::size_t>((std::size_t{1} << r) - 1, r + rng() % 5);
    const CayleyGraph g(random_generator_spec(r, n, rng));
    CHECK(is_self_orthogonal(g) == rows_self_orthogonal(g.adjacency_matrix()));
    if (n % 2 == 0) CHECK(is_self_orthogonal(g));
  }
}

TEST_CASE("hypercube neighbourhoods meet in n, 2 or 0 vertices") {
  for (std::size_t n = 2; n <= 6; ++n) {
    const CayleyGraph g(GeneratorSpec::identity(n));
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const auto meet = (g.neighborhood_row(u) & g.neighborhood_row(v)).weight();
        const int dist = std::popcount(u ^ v);
        CHECK(meet == (u == v ? n : (dist == 2 ? 2 : 0)));
      }
    }
  }
}

TEST_CASE("classical distance") {
  const auto h = classical_distance(hamming());
  REQUIRE(h.found());
  CHECK(*h.weight == 3);
  CHECK(classical_distance(GeneratorSpec::identity(5), 5).status == SearchStatus::none_exists);

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto spec = random_generator_spec(8, 16, rng);
    const auto d = classical_distance(spec, 5);
    const auto expected = oracle::min_dependency(columns(spec), 5);
    CHECK(d.weight == expected);
    if (!expected) CHECK(d.status == SearchStatus::cap_reached);
  }
}

TEST_CASE("balls") {
  const CayleyGraph q4(GeneratorSpec::identity(4));
  const auto b1 = ball(q4, 0, 1);
  CHECK(b1.vertices.size() == 5);
  CHECK(b1.edges.size() == 4);
  const auto b0 = ball(q4, 5, 0);
  CHECK(b0.vertices.size() == 1);
  CHECK(b0.edges.empty());
  for (std::size_t n = 2; n <= 6; ++n) {
    const CayleyGraph g(GeneratorSpec::identity(n));
    for (std::size_t t = 0; t <= n; ++t) {
      std::uint64_t expected = 0;
      for (std::size_t i = 0; i <= t; ++i) expected += binomial(n, i);
      const auto b = ball(g, 0, t);
      CHECK(b.vertices.size() == expected);
      for (const auto& [v, depth] : b.vertices) CHECK(static_cast<std::size_t>(std::popcount(v)) == depth);
    }
  }
  CHECK_THROWS_AS((void)ball(q4, 16, 1), IndexError);
}

TEST_CASE("local isomorphism") {
  for (Vertex v = 0; v < 16; ++v) {
    const auto iso = verify_local_isomorphism(GeneratorSpec::identity(4), v);
    CHECK(iso.ok);
    CHECK(iso.radius == 4);
    CHECK(iso.outer_layer_edges == 0);
  }
  for (Vertex v = 0; v < 8; ++v) {
    const auto iso = verify_local_isomorphism(hamming(), v);
    CHECK(iso.ok);
    CHECK(iso.radius == 1);
    CHECK(iso.mapping.size() == 8);
    // Any two columns sum to a third, so all 21 neighbour pairs are adjacent.
    CHECK(iso.outer_layer_edges == 21);
  }

  std::mt19937_64 rng(8);
  int tested = 0;
  while (tested < 5) {
    const auto spec = random_generator_spec(8, 10, rng);
    const auto d = classical_distance(spec);
    if (!d.found() || *d.weight < 5) continue;
    ++tested;
    const auto iso = verify_local_isomorphism(spec, rng() % 256, d);
    CHECK(iso.ok);
    CHECK(iso.radius >= 2);
    CHECK(iso.mapping.size() == 1 + 10 + 45);
    if (*d.weight % 2 == 0) {
      CHECK(iso.outer_layer_edges == 0);
    } else {
      CHECK(iso.outer_layer_edges > 0);
    }
  }
}

TEST_CASE("local isomorphism fails past the guaranteed radius") {
  // Radius 2 on a d = 3 spec: c1 + c2 = c3 collapses two geodesics.
  const auto h = hamming();
  const auto d = classical_distance(h);
  const auto iso = verify_local_isomorphism(h, 0, {SearchStatus::none_exists, std::nullopt, std::nullopt, 0}, 2);
  CHECK_FALSE(iso.ok);
  CHECK(verify_local_isomorphism(h, 0, d, 2).ok);
}

TEST_CASE("random and exhaustive spec generators") {
  std::mt19937_64 rng(9);
  const auto spec = random_generator_spec(4, 6, rng);
  CHECK(spec.r() == 4);
  CHECK(spec.n() == 6);
  CHECK_THROWS_AS((void)random_generator_spec(3, 8, rng), ValidationError);
  CHECK(all_generator_specs(2, 2).size() == 3);
  CHECK(all_generator_specs(3, 7).size() == 1);
  CHECK(all_generator_specs(3, 3).size() == 28);
}
