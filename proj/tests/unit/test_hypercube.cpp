#include <doctest.h>

#include <random>

#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"
#include "cayleyqc/hypercube.hpp"
#include "oracles.hpp"

using namespace cayleyqc;

namespace {

SubsetMask mask(std::initializer_list<std::size_t> elements) {
  SubsetMask s = 0;
  for (auto e : elements) s |= SubsetMask{1} << (e - 1);
  return s;
}

std::vector<std::uint64_t> masks(const SetFamily& f) { return {f.members().begin(), f.members().end()}; }

SetFamily random_family(std::size_t n, std::size_t t, std::mt19937_64& rng) {
  std::vector<SubsetMask> members;
  for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) {
    if (subset_size(s) <= t && rng() % 3 == 0) members.push_back(s);
  }
  return SetFamily(n, members);
}

}  // namespace

TEST_CASE("set families keep ball order without duplicates") {
  const auto f = SetFamily::from_lists(4, {{2, 3}, {}, {1}, {2, 3}, {4}, {1, 2}});
  CHECK(f.size() == 5);
  CHECK(f.to_lists() == std::vector<std::vector<std::size_t>>{{}, {1}, {4}, {1, 2}, {2, 3}});
  CHECK(f.contains(mask({2, 3})));
  CHECK_FALSE(f.contains(mask({1, 3})));
  CHECK_THROWS_AS(SetFamily::from_lists(3, {{4}}), ValidationError);
}

TEST_CASE("neighbourhood") {
  const auto nb = neighborhood(3, mask({1}));
  CHECK(nb.to_lists() == std::vector<std::vector<std::size_t>>{{}, {1, 2}, {1, 3}});
}

TEST_CASE("t-pseudo-border predicate examples") {
  CHECK_FALSE(is_t_pseudo_border(SetFamily::from_lists(4, {{1}}), 2));
  // Parity conditions with t = 1 are vacuous: {empty} alone qualifies.
  CHECK(is_t_pseudo_border(SetFamily::from_lists(4, {{}}), 1));
  CHECK_FALSE(is_t_pseudo_border(SetFamily::from_lists(4, {{}}), 2));
  // Every 1-set together with the empty set: N(empty) meets it in 4 points,
  // N({i}) in the empty set only.
  CHECK_FALSE(is_t_pseudo_border(SetFamily::from_lists(4, {{}, {1}, {2}, {3}, {4}}), 2));
  CHECK_THROWS_AS((void)is_t_pseudo_border(SetFamily(3), 3), ValidationError);
  CHECK_THROWS_AS((void)is_t_pseudo_border(SetFamily(3), 0), ValidationError);
}

TEST_CASE("predicate agrees with the definition oracle on random families") {
  std::mt19937_64 rng(41);
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t t = 1; t < n; ++t) {
      for (int trial = 0; trial < 30; ++trial) {
        const auto f = random_family(n, t + (trial % 2), rng);
        CHECK(is_t_pseudo_border(f, t) == oracle::is_t_pseudo_border(n, t, masks(f)));
      }
    }
  }
}

TEST_CASE("ball index numbers layers contiguously in colex order") {
  const BallIndex b(4, 2);
  CHECK(b.size() == 11);
  CHECK(b.layer_begin(1) == 1);
  CHECK(b.layer_begin(2) == 5);
  CHECK(b.mask_at(5) == mask({1, 2}));
  CHECK(b.mask_at(6) == mask({1, 3}));
  CHECK(b.mask_at(7) == mask({2, 3}));
  for (std::size_t c = 0; c < b.size(); ++c) CHECK(b.column_of(b.mask_at(c)) == c);
  CHECK_THROWS_AS((void)b.column_of(mask({1, 2, 3})), IndexError);
}

TEST_CASE("constraint system matches the predicate exactly") {
  // Exhaustive up to 16 ball elements, sampled beyond.
  std::mt19937_64 rng(81);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t t = 1; t <= std::min<std::size_t>(3, n - 1); ++t) {
      const auto inst = build_constraints(n, t);
      CHECK(inst.constraints.rows() == inst.ball.layer_end(t - 1));
      const std::size_t size = inst.ball.size();
      const bool exhaustive = size <= 16;
      const std::uint64_t trials = exhaustive ? std::uint64_t{1} << size : 100000;
      for (std::uint64_t i = 0; i < trials; ++i) {
        const std::uint64_t x = exhaustive ? i : rng() & ((std::uint64_t{1} << size) - 1);
        const auto v = BitVector::from_word(size, x);
        const auto f = inst.family(v);
        CHECK(inst.indicator(f) == v);
        const bool linear = inst.constraints.multiply(v).none() && v.get(0);
        CHECK(linear == is_t_pseudo_border(f, t));
      }
    }
  }
}

TEST_CASE("kernel members without the empty set satisfy only the parity conditions") {
  const auto inst = build_constraints(4, 3);
  const auto k = kernel_basis(inst.constraints);
  std::size_t checked = 0;
  for (const auto& v : k.row_data()) {
    if (v.get(0)) continue;
    ++checked;
    const auto f = inst.family(v);
    CHECK_FALSE(f.contains(0));
    CHECK_FALSE(is_t_pseudo_border(f, 3));
    for (SubsetMask s = 0; s < 16; ++s) {
      if (subset_size(s) > 2) continue;
      std::size_t meet = 0;
      for (auto m : f.members()) meet += subset_size(m ^ s) == 1;
      CHECK(meet % 2 == 0);
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("too large a ball is a resource error") {
  CHECK_THROWS_AS((void)build_constraints(40, 6), ResourceError);
}

TEST_CASE("exact minima agree with the subset oracle for n <= 4") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t t = 1; t < n; ++t) {
      const auto m = minimal_t_pseudo_border(n, t);
      const auto expected = oracle::min_t_pseudo_border(n, t);
      CHECK(m.size == expected);
      if (m.witness) {
        CHECK(is_t_pseudo_border(*m.witness, t));
        CHECK(m.witness->size() == *m.size);
      } else {
        CHECK(m.status == SearchStatus::none_exists);
      }
    }
  }
}

TEST_CASE("odd n admits no t-pseudo-border for t >= 2") {
  for (std::size_t n : {3, 5, 7}) {
    for (std::size_t t = 2; t <= std::min<std::size_t>(n - 1, 3); ++t) {
      CHECK(minimal_t_pseudo_border(n, t).status == SearchStatus::none_exists);
      CHECK(all_t_pseudo_borders(n, t).empty());
      CHECK_FALSE(random_t_pseudo_border(n, t, 1));
    }
  }
}

TEST_CASE("search strategies agree on the minimum") {
  for (auto [n, t] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 2}, {4, 3}, {6, 3}}) {
    const auto a = minimal_t_pseudo_border(n, t, std::nullopt, SearchStrategy::by_weight);
    const auto b = minimal_t_pseudo_border(n, t, std::nullopt, SearchStrategy::kernel_gray);
    CHECK(a.size == b.size);
    CHECK(a.witness == b.witness);
  }
}

TEST_CASE("cap below the minimum") {
  const auto m = minimal_t_pseudo_border(6, 3, 2);
  CHECK(m.status == SearchStatus::cap_reached);
  CHECK_FALSE(m.size);
}

TEST_CASE("enumeration of every t-pseudo-border") {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (std::size_t t = 1; t < n; ++t) {
      const auto all = all_t_pseudo_borders(n, t);
      std::size_t expected = 0;
      const auto b = oracle::ball(n, t);
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << b.size()); ++x) {
        std::vector<std::uint64_t> family;
        for (std::size_t i = 0; i < b.size(); ++i) {
          if ((x >> i) & 1U) family.push_back(b[i]);
        }
        if (oracle::is_t_pseudo_border(n, t, family)) ++expected;
      }
      CHECK(all.size() == expected);
    }
  }
}

TEST_CASE("random t-pseudo-borders are valid and seed-determined") {
  const auto a = random_t_pseudo_border(6, 4, 99);
  const auto b = random_t_pseudo_border(6, 4, 99);
  REQUIRE(a);
  CHECK(*a == *b);
  CHECK(is_t_pseudo_border(*a, 4));
}

TEST_CASE("k-sets and odd sets") {
  const SetFamily empty_only(5, {0});
  CHECK(count_k_sets(empty_only, 0) == 1);
  CHECK(count_k_sets(empty_only, 6) == 0);
  CHECK(odd_sets(empty_only, 1).size() == 5);
  CHECK(odd_sets(empty_only, 2).empty());
  CHECK_THROWS_AS((void)odd_sets(empty_only, 0), ValidationError);

  std::mt19937_64 rng(43);
  for (std::size_t n = 2; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto f = random_family(n, n, rng);
      for (std::size_t k = 1; k <= n; ++k) {
        const auto got = odd_sets(f, k);
        const auto expected = oracle::odd_sets(n, masks(f), k);
        CHECK(std::set<std::uint64_t>(got.members().begin(), got.members().end()) == expected);
      }
    }
  }
}

TEST_CASE("odd-set inequalities on minimal witnesses") {
  for (auto [n, t] : std::vector<std::pair<std::size_t, std::size_t>>{{4, 3}, {6, 3}, {6, 4}}) {
    const auto m = minimal_t_pseudo_border(n, t);
    REQUIRE(m.witness);
    for (std::size_t k = 1; k + 1 < t; ++k) {
      CHECK(verify_odd_to_next(*m.witness, k).holds);
      if (n == 6 && t == 4 && k == 2) continue;
      CHECK(verify_sets_to_odd(*m.witness, k).holds);
    }
  }
  // A minimum 4-pseudo-border of the 6-cube: the star at 1. Five 2-sets,
  // yet every 3-set holds an even number of them.
  const SetFamily star(6, {0b0, 0b11, 0b101, 0b1001, 0b10001, 0b100001});
  REQUIRE(is_t_pseudo_border(star, 4));
  REQUIRE(minimal_t_pseudo_border(6, 4).witness->size() == star.size());
  const auto gap = verify_sets_to_odd(star, 2);
  CHECK(gap.k_sets == 5);
  CHECK(gap.odd_next == 0);
  CHECK_FALSE(gap.holds);

  // No odd sets: holds vacuously.
  const auto c = verify_odd_to_next(SetFamily(4, {0}), 3);
  CHECK(c.odd_k_sets == 0);
  CHECK(c.holds);
  const auto s = verify_sets_to_odd(SetFamily(4, {0}), 2);
  CHECK(s.k_sets == 0);
  CHECK(s.holds);
}

TEST_CASE("flips") {
  const auto f = SetFamily::from_lists(4, {{}, {1, 2}});
  CHECK(flip(f, mask({1})).to_lists() == std::vector<std::vector<std::size_t>>{{1, 3}, {1, 4}});
  CHECK(flip(flip(f, mask({1, 3})), mask({1, 3})) == f);
}

TEST_CASE("flip closure on every small t-pseudo-border") {
  for (std::size_t n = 4; n <= 5; ++n) {
    const std::size_t t = 3;
    for (const auto& f : all_t_pseudo_borders(n, t)) {
      for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) {
        if (subset_size(s) == 2) CHECK(is_t_pseudo_border(flip(f, s), t));
      }
    }
  }
}

TEST_CASE("flip descent") {
  const auto m = minimal_t_pseudo_border(6, 3);
  REQUIRE(m.witness);
  const auto fixed = flip_descent(*m.witness, 3, 50);
  CHECK(fixed.flips == 0);
  CHECK(fixed.flip_minimal);
  CHECK(fixed.family == *m.witness);

  const auto bumped = flip(*m.witness, mask({1, 2}));
  const auto back = flip_descent(bumped, 3, 50);
  CHECK(back.family.size() <= m.witness->size());

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto start = random_t_pseudo_border(6, 3, seed);
    const auto result = flip_descent(*start, 3, 1000);
    CHECK(is_t_pseudo_border(result.family, 3));
    CHECK(result.family.size() <= start->size());
    CHECK(result.family.size() >= *m.size);
  }
  CHECK_THROWS_AS((void)flip_descent(SetFamily(6, {1}), 3, 10), StructuralError);
}
