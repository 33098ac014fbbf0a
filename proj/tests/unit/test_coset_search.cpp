#include <doctest.h>

#include <random>

#include "cayleyqc/coset_search.hpp"
#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"
#include "oracles.hpp"

using namespace cayleyqc;

namespace {

// Minimum weight of kernel vectors outside the row space of `excluded`, by
// listing all 2^dim kernel vectors.
std::optional<std::size_t> exhaustive(const BitMatrix& parity, const BitMatrix& excluded) {
  const auto k = kernel_basis(parity);
  std::optional<std::size_t> best;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k.rows()); ++mask) {
    BitVector x(parity.cols());
    for (std::size_t i = 0; i < k.rows(); ++i) {
      if ((mask >> i) & 1U) x ^= k.row(i);
    }
    if (!in_span(excluded, x) && (!best || x.weight() < *best)) best = x.weight();
  }
  return best;
}

}  // namespace

TEST_CASE("trivial quotient gives none-exists") {
  const auto h = BitMatrix::from_strings({"1010101", "0110011", "0001111"});
  const auto k = kernel_basis(h);
  for (auto strategy : {SearchStrategy::by_weight, SearchStrategy::kernel_gray}) {
    CosetSearchOptions options;
    options.strategy = strategy;
    for (std::size_t cap : {1, 3, 7}) {
      options.cap = cap;
      const auto r = min_weight_in_coset(h, k, options);
      CHECK_FALSE(r.found());
      CHECK_FALSE(r.weight.has_value());
    }
  }
  CHECK(min_weight_in_coset(h, k).status == SearchStatus::none_exists);
}

TEST_CASE("even weight code") {
  const auto parity = BitMatrix::from_strings({"1111"});
  const auto r = min_weight_in_coset(parity, BitMatrix(0, 4));
  REQUIRE(r.found());
  CHECK(*r.weight == 2);
  CHECK(r.witness->to_string() == "1100");
}

TEST_CASE("strategies agree, witnesses qualify and are colex-first") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t cols = 3 + rng() % 12;
    const std::size_t rows = rng() % cols;
    const auto parity = oracle::to_bits(oracle::random_dense(rows, cols, rng), cols);
    const auto k = kernel_basis(parity);
    BitMatrix excluded(0, cols);
    for (std::size_t i = 0; i < k.rows(); ++i) {
      if (rng() % 3 == 0) excluded.append_row(k.row(i));
    }
    CosetSearchOptions by_weight{CosetSearchOptions::unlimited, SearchStrategy::by_weight};
    CosetSearchOptions gray{CosetSearchOptions::unlimited, SearchStrategy::kernel_gray};
    const auto a = min_weight_in_coset(parity, excluded, by_weight);
    const auto b = min_weight_in_coset(parity, excluded, gray);
    const auto expected = exhaustive(parity, excluded);
    CHECK(a.weight == expected);
    CHECK(b.weight == expected);
    CHECK(a.status == b.status);
    if (a.found()) {
      CHECK(*a.witness == *b.witness);
      CHECK(parity.multiply(*a.witness).none());
      CHECK_FALSE(in_span(excluded, *a.witness));
    } else {
      CHECK(a.status == SearchStatus::none_exists);
    }
  }
}

TEST_CASE("cap below the minimum is flagged, never silent") {
  const auto parity = BitMatrix::from_strings({"1010101", "0110011", "0001111"});
  for (auto strategy : {SearchStrategy::by_weight, SearchStrategy::kernel_gray}) {
    CosetSearchOptions options{2, strategy};
    const auto r = min_weight_in_coset(parity, BitMatrix(0, 7), options);
    CHECK(r.status == SearchStatus::cap_reached);
    CHECK(r.ruled_out_below_or_at == 2);
    CHECK_FALSE(r.weight);
    options.cap = 3;
    CHECK(*min_weight_in_coset(parity, BitMatrix(0, 7), options).weight == 3);
  }
  // No kernel at all: proven only with a full-length cap when searching by weight.
  CosetSearchOptions options{2, SearchStrategy::by_weight};
  CHECK(min_weight_in_coset(BitMatrix::identity(4), BitMatrix(0, 4), options).status == SearchStatus::cap_reached);
  options.cap = 4;
  CHECK(min_weight_in_coset(BitMatrix::identity(4), BitMatrix(0, 4), options).status == SearchStatus::none_exists);
}

TEST_CASE("precondition violations") {
  const auto parity = BitMatrix::from_strings({"1100"});
  CHECK_THROWS_AS((void)min_weight_in_coset(parity, BitMatrix(0, 5)), DimensionError);
  const auto bad = BitMatrix::from_strings({"1100", "1000"});
  try {
    (void)min_weight_in_coset(parity, bad);
    FAIL("expected a structural error");
  } catch (const StructuralError& e) {
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
}
