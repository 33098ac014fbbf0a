#include "cayleyqc/verify_suites.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "cayleyqc/border.hpp"
#include "cayleyqc/bounds.hpp"
#include "cayleyqc/cayley.hpp"
#include "cayleyqc/css_code.hpp"
#include "cayleyqc/errors.hpp"
#include "cayleyqc/gf2.hpp"

namespace cayleyqc {

namespace {

constexpr std::size_t max_counterexamples = 5;

std::string describe(const GeneratorSpec& spec) {
  std::ostringstream os;
  os << "H=[";
  for (std::size_t j = 0; j < spec.n(); ++j) os << (j ? "," : "") << spec.generators()[j];
  os << "]";
  return os.str();
}

std::string describe(const SetFamily& f) { return to_json(f).dump(); }

std::string nt(std::size_t n, std::size_t t) {
  return "(n=" + std::to_string(n) + ",t=" + std::to_string(t) + ")";
}

GeneratorSpec hamming_spec() {
  return GeneratorSpec(BitMatrix::from_strings({"1010101", "0110011", "0001111"}));
}

// Subsets of [n] of every size in [lo, hi].
std::vector<SubsetMask> subsets_with_size(std::size_t n, std::size_t lo, std::size_t hi) {
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s < (SubsetMask{1} << n); ++s) {
    const auto k = subset_size(s);
    if (k >= lo && k <= hi) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), ball_order_less);
  return out;
}

std::vector<std::pair<SetFamily, std::size_t>> minimal_witnesses() {
  std::vector<std::pair<SetFamily, std::size_t>> out;
  for (const auto& [n, t] : exact_hypercube_cases()) {
    const auto& m = cached_minimal_t_pseudo_border(n, t);
    if (m.witness) out.emplace_back(*m.witness, t);
  }
  return out;
}

SuiteResult self_orthogonality_suite(std::uint64_t seed) {
  SuiteResult suite{"self-orthogonality", {}};
  CheckResult implicit{"even n: common-neighbour parities even"};
  CheckResult dense{"even n: rows of A(H) pairwise orthogonal"};
  CheckResult odd{"odd n hypercube: not self-orthogonal"};

  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 3 + rng() % 6;
    const std::size_t max_n = std::min<std::size_t>(12, (std::size_t{1} << r) - 1);
    const std::size_t min_n = r + (r % 2);
    const std::size_t n = min_n + 2 * (rng() % ((max_n - min_n) / 2 + 1));
    const auto spec = random_generator_spec(r, n, rng);
    const CayleyGraph g(spec);
    implicit.record(is_self_orthogonal(g), describe(spec));
    dense.record(rows_self_orthogonal(g.adjacency_matrix()), describe(spec));
  }
  for (std::size_t n : {3, 5, 7}) {
    odd.record(!is_self_orthogonal(CayleyGraph(GeneratorSpec::identity(n))), "I_" + std::to_string(n));
  }
  suite.checks = {implicit, dense, odd};
  return suite;
}

SuiteResult correspondance_suite() {
  SuiteResult suite{"correspondance", {}};
  CheckResult borders{"is_border <=> x in rowspace A(H)"};
  CheckResult pseudo{"is_pseudo_border <=> A(H) x = 0"};
  CheckResult inclusion{"every border is a pseudo-border"};
  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t n = 2; n <= 6; n += 2) {
      for (const auto& spec : all_generator_specs(r, n)) {
        const CayleyGraph g(spec);
        const BitMatrix a = g.adjacency_matrix();
        BorderSpace space(g);
        const std::size_t count = g.vertex_count();
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << count); ++bits) {
          const VertexSet x(BitVector::from_word(count, bits));
          const bool border = space.contains(x);
          const bool pseudo_border = is_pseudo_border(g, x);
          const std::string what = describe(spec) + " x=" + x.indicator().to_string();
          borders.record(border == in_span(a, x.indicator()) && border == is_border(g, x), what);
          pseudo.record(pseudo_border == a.multiply(x.indicator()).none(), what);
          inclusion.record(!border || pseudo_border, what);
        }
      }
    }
  }
  suite.checks = {borders, pseudo, inclusion};
  return suite;
}

SuiteResult local_isomorphism_suite(std::uint64_t seed) {
  SuiteResult suite{"local-isomorphism", {}};
  CheckResult hamming{"d=3 spec, radius 1, every center"};
  CheckResult random{"random specs with d >= 5, radius >= 2"};
  CheckResult hypercube{"hypercube I_n, no dependency"};
  CheckResult outer{"outer-layer edges present iff d is odd"};

  const auto h = hamming_spec();
  for (Vertex v = 0; v < 8; ++v) {
    const auto iso = verify_local_isomorphism(h, v);
    hamming.record(iso.ok && iso.radius == 1, describe(h) + " center=" + std::to_string(v));
    outer.record(iso.outer_layer_edges > 0, describe(h) + " center=" + std::to_string(v));
  }

  std::mt19937_64 rng(seed);
  std::size_t accepted = 0;
  for (int draws = 0; accepted < 20 && draws < 100000; ++draws) {
    const std::size_t n = 10 + 2 * (rng() % 2);
    const auto spec = random_generator_spec(8, n, rng);
    const auto d = classical_distance(spec);
    if (!d.found() || *d.weight < 5) continue;
    ++accepted;
    for (int c = 0; c < 5; ++c) {
      const Vertex v = rng() % 256;
      const auto iso = verify_local_isomorphism(spec, v, d);
      random.record(iso.ok && iso.radius >= 2, describe(spec) + " center=" + std::to_string(v));
      outer.record((iso.outer_layer_edges > 0) == (*d.weight % 2 == 1),
                   describe(spec) + " d=" + std::to_string(*d.weight) + " center=" + std::to_string(v));
    }
  }
  random.record(accepted == 20, "only " + std::to_string(accepted) + " specs with d >= 5 drawn");

  for (std::size_t n = 2; n <= 6; ++n) {
    const auto spec = GeneratorSpec::identity(n);
    const auto iso = verify_local_isomorphism(spec, (Vertex{1} << n) - 1);
    hypercube.record(iso.ok && iso.radius == n, describe(spec));
    outer.record(iso.outer_layer_edges == 0, describe(spec));
  }
  suite.checks = {hamming, random, hypercube, outer};
  return suite;
}

SuiteResult flip_closure_suite(std::uint64_t seed) {
  SuiteResult suite{"flip-closure", {}};
  CheckResult single{"single legal flip keeps a t-pseudo-border, exhaustive n <= 5, t <= 3"};
  CheckResult iterated{"iterated legal flips keep a t-pseudo-border, random"};
  CheckResult minimal{"no legal flip shrinks an exact minimal witness"};
  CheckResult descent{"flip_descent fixes exact minimal witnesses"};

  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t t = 1; t <= std::min<std::size_t>(3, n - 1); ++t) {
      const auto centers = subsets_with_size(n, 2, t - 1);
      for (const auto& f : all_t_pseudo_borders(n, t)) {
        for (SubsetMask s : centers) {
          single.record(is_t_pseudo_border(flip(f, s), t), nt(n, t) + " F=" + describe(f) + " S=" + std::to_string(s));
        }
      }
    }
  }

  std::mt19937_64 rng(seed);
  const std::pair<std::size_t, std::size_t> random_cases[] = {{6, 3}, {6, 4}, {6, 5}, {8, 3}, {8, 4}};
  for (const auto& [n, t] : random_cases) {
    const auto centers = subsets_with_size(n, 2, t - 1);
    for (int trial = 0; trial < 10; ++trial) {
      auto f = random_t_pseudo_border(n, t, rng());
      if (!f) continue;
      for (int step = 0; step < 8; ++step) *f = flip(*f, centers[rng() % centers.size()]);
      iterated.record(is_t_pseudo_border(*f, t), nt(n, t) + " F=" + describe(*f));
    }
  }

  for (const auto& [f, t] : minimal_witnesses()) {
    const auto best = best_flip(f, t);
    minimal.record(!best || best->second >= 0, nt(f.n(), t) + " F=" + describe(f));
    const auto result = flip_descent(f, t, 100);
    descent.record(result.flip_minimal && result.flips == 0 && result.family == f, nt(f.n(), t));
  }
  suite.checks = {single, iterated, minimal, descent};
  return suite;
}

SuiteResult odd_sets_suite() {
  SuiteResult suite{"odd-sets", {}};
  CheckResult odd_to_next{"next layer >= odd k-sets / (k+1)"};
  CheckResult sets_to_odd{"odd (k+1)-sets >= (n-(k-1)k)/(k+1) * k-sets"};
  CheckResult corollaries{"2-sets >= n/2 (t>=3), odd 3-sets >= n(n-2)/6 (t>=4), 4-sets >= n(n-2)/24 (t>=5)"};
  CheckResult all_singletons{"every 1-set is odd"};

  for (const auto& [f, t] : minimal_witnesses()) {
    const std::size_t n = f.n();
    const std::string tag = nt(n, t) + " F=" + describe(f);
    for (std::size_t k = 1; k + 1 < t; ++k) {
      const auto c = verify_odd_to_next(f, k);
      odd_to_next.record(c.holds, tag + " k=" + std::to_string(k));
      const auto s = verify_sets_to_odd(f, k);
      sets_to_odd.record(s.holds, tag + " k=" + std::to_string(k));
    }
    all_singletons.record(odd_sets(f, 1).size() == n, tag);
    if (t >= 3) corollaries.record(2 * count_k_sets(f, 2) >= n, tag + " 2-sets");
    if (t >= 4) corollaries.record(6 * odd_sets(f, 3).size() >= n * (n - 2), tag + " odd 3-sets");
    if (t >= 5) corollaries.record(24 * count_k_sets(f, 4) >= n * (n - 2), tag + " 4-sets");
  }
  suite.checks = {odd_to_next, sets_to_odd, corollaries, all_singletons};
  return suite;
}

SuiteResult bounds_suite() {
  SuiteResult suite{"bounds", {}};
  CheckResult theorem{"exact minimum >= theorem bound"};
  CheckResult simple{"exact minimum >= 1 + n/2 for t >= 3"};
  CheckResult layers{"k-sets >= n^{k/2}/(2^{k/2} k!) for even k <= min(t-1, sqrt(n/2))"};
  CheckResult consistency{"corollary(n, d) <= theorem(n, (d+1)/2), odd d <= 15, even n <= 64"};
  CheckResult saturation{"theorem bound constant once t-1 >= floor(sqrt(n/2))"};
  CheckResult odd_terms{"exact minima separate the full sum from the even-term sum", true};

  for (const auto& [f, t] : minimal_witnesses()) {
    const std::size_t n = f.n();
    const auto size = f.size();
    const std::string tag = nt(n, t) + " size=" + std::to_string(size);
    theorem.record(theorem_bound(n, t).satisfied_by(size), tag);
    if (t >= 3) simple.record(simple_bound(n).satisfied_by(size), tag);
    const std::size_t top = std::min(t - 1, sqrt_half_floor(n));
    Rational even_sum = 0;
    for (std::size_t k = 0; k <= top; k += 2) {
      const auto layer = k_layer_bound(n, k);
      even_sum += layer.value->rational_part();
      layers.record(layer.satisfied_by(count_k_sets(f, k)), tag + " k=" + std::to_string(k));
    }
    const auto full = theorem_bound(n, t);
    const bool between = full.value->compare(BigInt(size)) > 0 && Rational(size) >= even_sum;
    odd_terms.record(!between, tag);
  }

  for (std::size_t n = 2; n <= 64; n += 2) {
    for (std::size_t d = 3; d <= 15; d += 2) {
      const auto c = corollary_bound(n, d);
      const auto th = theorem_bound(n, (d + 1) / 2);
      consistency.record(c.value->compare(*th.value) <= 0, "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
    const std::size_t s = sqrt_half_floor(n);
    const auto base = theorem_bound(n, s + 1);
    for (std::size_t t = s + 2; t <= s + 4; ++t) {
      saturation.record(theorem_bound(n, t).value->compare(*base.value) == 0, nt(n, t));
    }
  }
  suite.checks = {theorem, simple, layers, consistency, saturation, odd_terms};
  return suite;
}

// Independent of the coset machinery: scan subsets by increasing weight.
std::optional<std::size_t> brute_force_quantum_distance(const CayleyGraph& g) {
  const BitMatrix a = g.adjacency_matrix();
  const std::size_t count = g.vertex_count();
  for (std::size_t w = 1; w <= count; ++w) {
    for (Combination c(count, w); !c.done(); c.advance()) {
      const BitVector x = c.to_bit_vector();
      if (a.multiply(x).none() && !in_span(a, x)) return w;
    }
  }
  return std::nullopt;
}

SuiteResult quantum_distance_suite(std::uint64_t seed) {
  SuiteResult suite{"quantum-distance", {}};
  CheckResult exact{"D equals subset-scan oracle"};
  CheckResult bound{"D >= corollary bound when d >= 5"};
  CheckResult params{"K = N - 2 rank A(H)"};

  auto check = [&](const GeneratorSpec& spec) {
    const auto q = quantum_params(spec);
    const CayleyGraph g(spec);
    params.record(q.K + 2 * rank(g.adjacency_matrix()) == q.N, describe(spec));
    if (q.K == 0) return;
    const auto oracle = brute_force_quantum_distance(g);
    exact.record(q.D_status == DistanceStatus::exact && q.D == oracle, describe(spec));
    if (q.d.found() && *q.d.weight >= 5 && q.D) {
      bound.record(corollary_bound(spec.n(), *q.d.weight).satisfied_by(*q.D), describe(spec));
    }
  };

  for (std::size_t r = 1; r <= 3; ++r) {
    for (std::size_t n = 2; n < (std::size_t{1} << r); n += 2) {
      for (const auto& spec : all_generator_specs(r, n)) check(spec);
    }
  }
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 4 + 2 * (rng() % 6);
    check(random_generator_spec(4, n, rng));
  }
  suite.checks = {exact, bound, params};
  return suite;
}

}  // namespace

void CheckResult::record(bool ok, const std::string& what) {
  ++cases;
  if (ok) return;
  ++failures;
  if (counterexamples.size() < max_counterexamples) counterexamples.push_back(what);
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"self-orthogonality", "correspondance", "local-isomorphism",
                                                 "flip-closure",       "odd-sets",       "bounds",
                                                 "quantum-distance",   "all"};
  return names;
}

const std::vector<std::pair<std::size_t, std::size_t>>& exact_hypercube_cases() {
  static const std::vector<std::pair<std::size_t, std::size_t>> cases = {
      {3, 2}, {4, 2}, {4, 3}, {5, 2}, {5, 3}, {6, 3}, {6, 4}};
  return cases;
}

const MinimalPseudoBorder& cached_minimal_t_pseudo_border(std::size_t n, std::size_t t) {
  static std::map<std::pair<std::size_t, std::size_t>, MinimalPseudoBorder> cache;
  auto it = cache.find({n, t});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, t), minimal_t_pseudo_border(n, t)).first;
  return it->second;
}

std::vector<SuiteResult> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "self-orthogonality") return {self_orthogonality_suite(seed)};
  if (name == "correspondance") return {correspondance_suite()};
  if (name == "local-isomorphism") return {local_isomorphism_suite(seed)};
  if (name == "flip-closure") return {flip_closure_suite(seed)};
  if (name == "odd-sets") return {odd_sets_suite()};
  if (name == "bounds") return {bounds_suite()};
  if (name == "quantum-distance") return {quantum_distance_suite(seed)};
  if (name == "all") {
    std::vector<SuiteResult> out;
    for (const auto& s : suite_names()) {
      if (s != "all") out.push_back(run_suite(s, seed).front());
    }
    return out;
  }
  throw ValidationError("unknown suite '" + name + "'");
}

Json to_json(const std::vector<SuiteResult>& results, std::uint64_t seed) {
  Json checks = Json::array();
  bool passed = true;
  for (const auto& suite : results) {
    passed = passed && suite.passed();
    for (const auto& c : suite.checks) {
      checks.push_back({{"suite", suite.suite},
                        {"check", c.name},
                        {"cases", c.cases},
                        {"failures", c.failures},
                        {"status", c.informational ? "info" : (c.passed() ? "pass" : "FAIL")},
                        {"counterexamples", c.counterexamples}});
    }
  }
  return {{"seed", seed}, {"passed", passed}, {"checks", checks}};
}

std::string render_checks(const Json& report, OutputFormat format) {
  if (format == OutputFormat::json) return report.dump(2) + "\n";
  Json rows = Json::array();
  for (const auto& c : report.at("checks")) {
    Json row = c;
    std::string joined;
    for (const auto& e : c.at("counterexamples")) joined += (joined.empty() ? "" : "; ") + e.get<std::string>();
    row["counterexamples"] = joined;
    rows.push_back(row);
  }
  return render_rows(rows, format);
}

}  // namespace cayleyqc
