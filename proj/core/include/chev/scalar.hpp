#pragma once

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "chev/gaussian.hpp"
#include "chev/rational.hpp"
#include "chev/rational_function.hpp"

namespace chev {

enum class Field { Rational, Gaussian, Laurent };

const char* to_string(Field f);

/// Smallest field containing both; Gaussian with Laurent throws ModeMismatch.
Field join(Field a, Field b);

/// Exact element of Q, Q(i) or Q(symbols).
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational q) : v_(std::move(q)) {}         // NOLINT
  Scalar(long q) : v_(Rational(q)) {}              // NOLINT
  Scalar(int q) : v_(Rational(q)) {}               // NOLINT
  Scalar(Gaussian g) : v_(std::move(g)) {}         // NOLINT
  Scalar(RationalFunction f) : v_(std::move(f)) {} // NOLINT
  static Scalar symbol(std::string_view name) { return RationalFunction::symbol(name); }

  Field field() const { return static_cast<Field>(v_.index()); }
  bool is_zero() const;
  bool is_one() const;

  /// Throws ModeMismatch unless the value is a rational number (in any mode).
  Rational to_rational() const;
  /// Throws ModeMismatch unless the value lies in Q(i).
  Gaussian to_gaussian() const;
  const RationalFunction& as_function() const;

  /// Same value viewed in a larger field.
  Scalar promoted(Field f) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar inverse() const;
  Scalar pow(long e) const;

  /// Value equality across modes (2 == 2+0 i).
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Substitutes values for the symbols of a Laurent scalar; other modes are
  /// returned unchanged. Missing symbols throw.
  Scalar substitute(const std::map<std::string, Scalar, std::less<>>& values) const;

  std::string to_string() const;
  bool is_canonical() const;

 private:
  std::variant<Rational, Gaussian, RationalFunction> v_;
};

/// Parses "3", "-2/3", "1/2+3/4 i", "i", or an arithmetic expression over
/// symbols such as "a*b^-1 - 2".
Scalar parse_scalar(std::string_view text);

}  // namespace chev
