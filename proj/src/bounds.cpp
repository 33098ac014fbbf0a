#include "cayleyqc/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "cayleyqc/errors.hpp"

namespace cayleyqc {

namespace mp = boost::multiprecision;

namespace {

BigInt pow10(unsigned digits) {
  BigInt p = 1;
  for (unsigned i = 0; i < digits; ++i) p *= 10;
  return p;
}

BigInt floor_of(const Rational& x) {
  BigInt q = mp::numerator(x) / mp::denominator(x);
  if (x < 0 && q * mp::denominator(x) != mp::numerator(x)) q -= 1;
  return q;
}

// Exact square root of a non-negative rational, if it has one.
std::optional<Rational> exact_sqrt(const Rational& q) {
  const BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  const BigInt rn = mp::sqrt(num);
  const BigInt rd = mp::sqrt(den);
  if (rn * rn == num && rd * rd == den) return Rational(rn, rd);
  return std::nullopt;
}

int sign(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

std::optional<bool> reaches_exponential(const SurdValue& v, std::size_t n) {
  const long double threshold = std::exp(std::sqrt(static_cast<long double>(n) / 2.0L));
  const long double lower = std::stold(v.lower_decimal(BoundReport::decimal_digits));
  return lower >= threshold;
}

BoundReport series_report(BoundFormula formula, std::size_t n, std::size_t t_or_d, std::size_t M) {
  BoundReport r;
  r.formula = formula;
  r.n = n;
  r.t_or_d = t_or_d;
  r.M = M;
  r.value = truncated_series(n, M);
  r.decimal = r.value->lower_decimal(BoundReport::decimal_digits);
  r.reaches_exponential = reaches_exponential(*r.value, n);
  return r;
}

}  // namespace

SurdValue::SurdValue(Rational a, Rational b, Rational q) : a_(std::move(a)), b_(std::move(b)), q_(std::move(q)) {
  if (q_ < 0) throw ValidationError("negative radicand");
  if (b_ != 0) {
    if (auto root = exact_sqrt(q_)) {
      a_ += b_ * *root;
      b_ = 0;
    }
  }
  if (b_ == 0) q_ = 0;
}

int SurdValue::compare(const SurdValue& other) const {
  if (!is_rational() && !other.is_rational() && q_ != other.q_) {
    throw ValidationError("comparison of surds with different radicands");
  }
  const Rational& q = is_rational() ? other.q_ : q_;
  const Rational da = a_ - other.a_;
  const Rational db = b_ - other.b_;
  // sign(da + db·sqrt(q))
  const int sa = sign(da);
  const int sb = (q == 0) ? 0 : sign(db);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  const Rational lhs = da * da;
  const Rational rhs = db * db * q;
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

BigInt SurdValue::scaled_floor(unsigned digits) const {
  const BigInt scale = pow10(digits);
  const Rational scaled_a = a_ * Rational(scale);
  if (is_rational()) return floor_of(scaled_a);
  // b·sqrt(q)·10^d = b·sqrt(q·10^{2d}); round the root toward the floor of the product.
  BigInt root = mp::sqrt(floor_of(q_ * Rational(scale * scale)));
  if (b_ < 0) root += 1;
  return floor_of(scaled_a + b_ * Rational(root));
}

std::string SurdValue::lower_decimal(unsigned digits) const {
  const BigInt scaled = scaled_floor(digits);
  const BigInt magnitude = scaled < 0 ? BigInt(-scaled) : scaled;
  const BigInt scale = pow10(digits);
  const std::string sign = scaled < 0 ? "-" : "";
  const BigInt whole = magnitude / scale;
  if (digits == 0) return sign + whole.str();
  std::string f = BigInt(magnitude % scale).str();
  f.insert(0, digits - f.size(), '0');
  return sign + whole.str() + "." + f;
}

std::string SurdValue::exact_form() const {
  if (is_rational()) return to_string(a_);
  return to_string(a_) + " + " + to_string(b_) + "*sqrt(" + to_string(q_) + ")";
}

const char* formula_id(BoundFormula f) {
  switch (f) {
    case BoundFormula::theorem:
      return "theorem";
    case BoundFormula::corollary:
      return "corollary";
    case BoundFormula::k_layer:
      return "lemma-k-layer";
    case BoundFormula::simple:
      return "simple";
    case BoundFormula::stirling_floor:
      return "stirling-floor";
  }
  return "unknown";
}

bool BoundReport::satisfied_by(std::size_t size) const {
  if (value) return value->compare(BigInt(size)) <= 0;
  return static_cast<long double>(size) >= std::stold(decimal);
}

std::size_t sqrt_half_floor(std::size_t n) {
  // floor(sqrt(n/2)) = floor(sqrt(floor(n/2))): no square lies in (m, m + 1/2].
  const std::size_t half = n / 2;
  std::size_t r = static_cast<std::size_t>(std::sqrt(static_cast<double>(half)));
  while (r * r > half) --r;
  while ((r + 1) * (r + 1) <= half) ++r;
  return r;
}

SurdValue truncated_series(std::size_t n, std::size_t M) {
  const Rational q(BigInt(n), BigInt(2));
  Rational even = 0;
  Rational odd = 0;
  Rational q_power = 1;  // q^j
  BigInt factorial = 1;  // i!
  for (std::size_t i = 0; i <= M; ++i) {
    if (i > 0) factorial *= i;
    if (i % 2 == 0) {
      if (i > 0) q_power *= q;
      even += q_power / Rational(factorial);
    } else {
      odd += q_power / Rational(factorial);
    }
  }
  return SurdValue(even, odd, q);
}

BoundReport theorem_bound(std::size_t n, std::size_t t) {
  if (t < 1 || n < 2) throw ValidationError("theorem bound needs t >= 1 and n >= 2");
  const std::size_t M = std::min(t - 1, sqrt_half_floor(n));
  BoundReport r = series_report(BoundFormula::theorem, n, t, M);
  r.validity_note = "lower bound on the size of any t-pseudo-border of the n-cube (t < n)";
  return r;
}

BoundReport corollary_bound(std::size_t n, std::size_t d) {
  if (n % 2 != 0) throw ValidationError("distance bound needs n even");
  if (d < 3) throw ValidationError("distance bound needs d >= 3");
  const std::size_t M = std::min((d - 3) / 2, sqrt_half_floor(n));
  BoundReport r = series_report(BoundFormula::corollary, n, d, M);
  r.validity_note = "lower bound on D for Q(H) when K != 0, d being the distance of the code with parity-check H";
  return r;
}

BoundReport k_layer_bound(std::size_t n, std::size_t k) {
  if (k % 2 != 0) throw ValidationError("k-layer bound is stated for even k only");
  BoundReport r;
  r.formula = BoundFormula::k_layer;
  r.n = n;
  r.t_or_d = k;
  r.M = k;
  BigInt num = 1;
  BigInt den = 1;
  for (std::size_t i = 0; i < k / 2; ++i) {
    num *= n;
    den *= 2;
  }
  for (std::size_t i = 2; i <= k; ++i) den *= i;
  r.value = SurdValue::rational(Rational(num, den));
  r.decimal = r.value->lower_decimal(BoundReport::decimal_digits);
  r.validity_note = "count of k-sets in a minimal t-pseudo-border, for even k <= min(t-1, sqrt(n/2))";
  return r;
}

BoundReport simple_bound(std::size_t n) {
  BoundReport r;
  r.formula = BoundFormula::simple;
  r.n = n;
  r.value = SurdValue::rational(Rational(1) + Rational(BigInt(n), BigInt(2)));
  r.decimal = r.value->lower_decimal(BoundReport::decimal_digits);
  r.validity_note = "size of a pseudo-border that is not a border when d >= 7; t-pseudo-borders with t >= 3";
  return r;
}

BoundReport stirling_floor(std::size_t n) {
  BoundReport r;
  r.formula = BoundFormula::stirling_floor;
  r.n = n;
  const long double x = std::exp(std::sqrt(static_cast<long double>(n) / 2.0L));
  // Long double exp is accurate to a few ulps; back off well beyond that.
  const long double lowered = x * (1.0L - 1e-15L);
  const long double whole = std::floor(lowered);
  const long double scale = std::pow(10.0L, static_cast<long double>(BoundReport::decimal_digits));
  const auto frac = static_cast<unsigned long long>(std::floor((lowered - whole) * scale));
  char buf[128];
  std::snprintf(buf, sizeof buf, "%.0Lf", whole);
  std::string f = std::to_string(frac);
  f.insert(0, BoundReport::decimal_digits - f.size(), '0');
  r.decimal = std::string(buf) + "." + f;
  r.validity_note = "e^sqrt(n/2); asymptotic reference level for the two sums, not a proven bound by itself";
  return r;
}

}  // namespace cayleyqc
