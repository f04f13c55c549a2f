#pragma once

#include <string>
#include <vector>

#include "chev/polynomial.hpp"

namespace chev {

/// Quotient num/den of polynomials over Q in named symbols. Canonical form:
/// num and den coprime, den has coprime integer coefficients and a positive
/// leading coefficient, zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(Rational c) : num_(std::move(c)), den_(1) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);
  static RationalFunction symbol(std::string_view name);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const;
  /// Denominator is a single monomial, i.e. the value is a Laurent polynomial.
  bool is_laurent() const { return den_.is_monomial(); }
  std::vector<Symbol> symbols() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  template <class Field, class Lookup>
  Field evaluate(Lookup&& value_of) const {
    Field d = den_.evaluate<Field>(value_of);
    Field n = num_.evaluate<Field>(value_of);
    return n / d;
  }

  /// Laurent values print with negative exponents ("2*a*b^-1"), anything else
  /// as "(num)/(den)".
  std::string to_string() const;
  bool is_canonical() const;

 private:
  void normalize();

  Polynomial num_;
  Polynomial den_;
};

}  // namespace chev
