#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chev/rational.hpp"

namespace chev {

/// Interned parameter name. Equality is pointer identity; ordering is by name,
/// so canonical forms do not depend on interning order.
class Symbol {
 public:
  explicit Symbol(std::string_view name);

  const std::string& name() const { return *name_; }

  friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return *a.name_ <=> *b.name_;
  }

 private:
  const std::string* name_;
};

/// Product of symbol powers with positive exponents, sorted by symbol.
class Monomial {
 public:
  using Power = std::pair<Symbol, int>;

  Monomial() = default;
  static Monomial var(Symbol s, int exponent = 1);

  const std::vector<Power>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }
  int degree(Symbol s) const;
  int total_degree() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  /// Requires divides(o, *this).
  Monomial operator/(const Monomial& o) const;
  static Monomial gcd(const Monomial& a, const Monomial& b);
  Monomial without(Symbol s) const;

  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  /// Lexicographic order; smaller symbol names are more significant.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

  std::string to_string() const;

 private:
  std::vector<Power> powers_;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted in strictly
/// decreasing lexicographic order with nonzero coefficients.
class Polynomial {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Polynomial() = default;
  Polynomial(Rational c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial var(Symbol s);
  static Polynomial term(Monomial m, Rational c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_one() const;
  const Term& leading() const { return terms_.front(); }
  Rational constant_value() const;

  int degree(Symbol s) const;
  std::vector<Symbol> symbols() const;
  /// Coefficient of s^k, a polynomial free of s.
  Polynomial coefficient(Symbol s, int k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial times(const Monomial& m) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Exact quotient; throws Error when b does not divide a.
  static Polynomial divide_exact(const Polynomial& a, const Polynomial& b);
  /// Monic (leading coefficient 1) greatest common divisor; gcd(0, 0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Polynomial monic() const;
  /// Scales by a positive rational so coefficients are coprime integers.
  Polynomial primitive_integer() const;
  /// lcm of denominators / gcd of numerators, signed so that
  /// scaled(factor) has a positive leading coefficient.
  Rational primitive_factor() const;

  template <class Field, class Lookup>
  Field evaluate(Lookup&& value_of) const;

  std::string to_string() const;
  bool is_canonical() const;

 private:
  explicit Polynomial(std::vector<Term> terms) : terms_(std::move(terms)) {}
  static Polynomial from_unsorted(std::vector<Term> terms);

  std::vector<Term> terms_;
};

template <class Field, class Lookup>
Field Polynomial::evaluate(Lookup&& value_of) const {
  Field total(0);
  for (const auto& t : terms_) {
    Field v(t.coeff);
    for (const auto& [s, e] : t.monomial.powers()) {
      Field base = value_of(s);
      for (int k = 0; k < e; ++k) v *= base;
    }
    total += v;
  }
  return total;
}

}  // namespace chev
