#include <doctest.h>

#include "cayleyqc/css_code.hpp"
#include "cayleyqc/errors.hpp"

using namespace cayleyqc;

TEST_CASE("odd n is rejected") {
  const GeneratorSpec hamming(BitMatrix::from_strings({"1010101", "0110011", "0001111"}));
  CHECK_THROWS_AS((void)quantum_params(hamming), ValidationError);
}

TEST_CASE("I_2 has no logical qubits") {
  const auto q = quantum_params(GeneratorSpec::identity(2));
  CHECK(q.N == 4);
  CHECK(q.K == 0);
  CHECK(q.D_status == DistanceStatus::undefined_k_zero);
  CHECK_FALSE(q.D);
  CHECK_FALSE(q.bound);
}

TEST_CASE("cubes never carry logical qubits") {
  for (std::size_t n : {2U, 4U, 6U}) {
    const auto q = quantum_params(GeneratorSpec::identity(n));
    CHECK(q.N == (std::size_t{1} << n));
    CHECK(2 * q.rank_a == q.N);
    CHECK(q.K == 0);
    CHECK(q.d.status == SearchStatus::none_exists);
    CHECK_FALSE(q.bound);
  }
}

TEST_CASE("K_{4,4} parameters") {
  const GeneratorSpec spec(BitMatrix::from_strings({"1001", "0101", "0011"}));
  const auto q = quantum_params(spec);
  CHECK(q.N == 8);
  CHECK(q.rank_a == 2);
  CHECK(q.K == 4);
  CHECK(q.D_status == DistanceStatus::exact);
  REQUIRE(q.D);
  CHECK(*q.D == 2);
  REQUIRE(q.witness);
  CHECK(q.witness->cardinality() == 2);
  REQUIRE(q.d.weight);
  CHECK(*q.d.weight == 4);
  CHECK_FALSE(q.bound);

  const auto deg = degeneracy_report(spec, q);
  REQUIRE(deg.d_perp);
  CHECK(*deg.d_perp <= *q.D);
  CHECK(deg.degenerate == (*q.D > *deg.d_perp));
}

TEST_CASE("cap below D is reported as a lower bound") {
  const GeneratorSpec spec(BitMatrix::from_strings({"1001", "0101", "0011"}));
  const auto q = quantum_params(spec, 1);
  CHECK(q.D_status == DistanceStatus::lower_bounded_by_cap);
  CHECK_FALSE(q.D);
  CHECK(q.D_ruled_out_below_or_at == 1);
}
