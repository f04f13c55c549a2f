#include "chev/rational_function.hpp"

#include <algorithm>

#include "chev/error.hpp"

namespace chev {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::symbol(std::string_view name) {
  return RationalFunction(Polynomial::var(Symbol(name)));
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = Polynomial::divide_exact(num_, g);
      den_ = Polynomial::divide_exact(den_, g);
    }
  }
  Rational f = den_.primitive_factor();
  if (f != 1) {
    num_ = num_.scaled(f);
    den_ = den_.scaled(f);
  }
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw Error("rational function is not constant");
  return num_.constant_value() / den_.constant_value();
}

std::vector<Symbol> RationalFunction::symbols() const {
  std::vector<Symbol> s = num_.symbols();
  for (Symbol x : den_.symbols()) s.push_back(x);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Polynomial(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // cross-cancel first so the intermediate gcd stays small
  Polynomial g1 = Polynomial::gcd(num_, o.den_);
  Polynomial g2 = Polynomial::gcd(o.num_, den_);
  Polynomial n = Polynomial::divide_exact(num_, g1) * Polynomial::divide_exact(o.num_, g2);
  Polynomial d = Polynomial::divide_exact(den_, g2) * Polynomial::divide_exact(o.den_, g1);
  num_ = std::move(n);
  den_ = std::move(d);
  Rational f = den_.primitive_factor();
  if (f != 1) {
    num_ = num_.scaled(f);
    den_ = den_.scaled(f);
  }
  return *this;
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

namespace {

std::string laurent_term(const Monomial& num, const Monomial& den) {
  std::vector<Symbol> vars;
  for (const auto& p : num.powers()) vars.push_back(p.first);
  for (const auto& p : den.powers()) vars.push_back(p.first);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  std::string s;
  for (Symbol v : vars) {
    int e = num.degree(v) - den.degree(v);
    if (e == 0) continue;
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string RationalFunction::to_string() const {
  if (den_.is_one()) return num_.to_string();
  if (!den_.is_monomial()) return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  const Monomial& dm = den_.leading().monomial;
  const Rational& dc = den_.leading().coeff;
  std::string s;
  bool first = true;
  for (const auto& t : num_.terms()) {
    Rational c = t.coeff / dc;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    std::string m = laurent_term(t.monomial, dm);
    if (m.empty()) {
      s += chev::to_string(c);
    } else if (c == 1) {
      s += m;
    } else {
      s += chev::to_string(c) + "*" + m;
    }
  }
  return s;
}

bool RationalFunction::is_canonical() const {
  if (!num_.is_canonical() || !den_.is_canonical() || den_.is_zero()) return false;
  if (num_.is_zero()) return den_.is_one();
  if (den_.primitive_factor() != 1) return false;
  return Polynomial::gcd(num_, den_).is_one();
}

}  // namespace chev
