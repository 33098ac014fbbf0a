#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cayleyqc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact number of the form a + b·sqrt(q) with rational a, b and q >= 0.
class SurdValue {
 public:
  SurdValue() = default;
  SurdValue(Rational a, Rational b, Rational q);
  static SurdValue rational(Rational a) { return SurdValue(std::move(a), 0, 0); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const Rational& radicand() const { return q_; }
  bool is_rational() const { return b_ == 0; }

  /// Sign of (this - other); both must share the radicand or be rational.
  int compare(const SurdValue& other) const;
  int compare(const BigInt& integer) const { return compare(rational(Rational(integer))); }

  /// floor(value · 10^digits), never above the true value.
  BigInt scaled_floor(unsigned digits) const;
  /// Decimal rendering rounded toward minus infinity.
  std::string lower_decimal(unsigned digits) const;
  /// "a + b*sqrt(q)" in lowest terms, or just "a".
  std::string exact_form() const;

 private:
  Rational a_ = 0;
  Rational b_ = 0;
  Rational q_ = 0;
};

enum class BoundFormula { theorem, corollary, k_layer, simple, stirling_floor };

const char* formula_id(BoundFormula f);

struct BoundReport {
  static constexpr unsigned decimal_digits = 12;

  BoundFormula formula = BoundFormula::simple;
  std::size_t n = 0;
  /// t for theorem, d for corollary, k for k_layer, unused otherwise.
  std::size_t t_or_d = 0;
  /// Truncation index of the sum (k for k_layer).
  std::size_t M = 0;
  /// Absent only for stirling_floor, which has no closed form here.
  std::optional<SurdValue> value;
  std::string decimal;
  std::string validity_note;
  /// For the two sums: whether the value numerically reached e^sqrt(n/2).
  std::optional<bool> reaches_exponential;

  /// Exact test size >= value; stirling_floor compares against the decimal.
  bool satisfied_by(std::size_t size) const;
};

/// floor(sqrt(n/2)).
std::size_t sqrt_half_floor(std::size_t n);

/// sum_{i=0}^{M} (n/2)^{i/2} / i!  with  M = min(t-1, floor(sqrt(n/2))).
BoundReport theorem_bound(std::size_t n, std::size_t t);
/// Same sum with M = min(floor((d-3)/2), floor(sqrt(n/2))); n even, d >= 3.
BoundReport corollary_bound(std::size_t n, std::size_t d);
/// n^{k/2} / (2^{k/2} k!) for even k.
BoundReport k_layer_bound(std::size_t n, std::size_t k);
/// 1 + n/2.
BoundReport simple_bound(std::size_t n);
/// e^{sqrt(n/2)}, rounded down.
BoundReport stirling_floor(std::size_t n);

/// The partial exponential series shared by theorem_bound and corollary_bound.
SurdValue truncated_series(std::size_t n, std::size_t M);

}  // namespace cayleyqc
