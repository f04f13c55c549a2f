#include "chev/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "chev/error.hpp"

namespace chev {

// ---------------------------------------------------------------- Symbol

namespace {

const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::set<std::string, std::less<>> table;
  std::lock_guard lock(mutex);
  auto it = table.find(name);
  if (it == table.end()) it = table.emplace(name).first;
  return &*it;
}

}  // namespace

Symbol::Symbol(std::string_view name) : name_(intern(name)) {
  if (name.empty()) throw ParseError("empty symbol name");
}

// -------------------------------------------------------------- Monomial

Monomial Monomial::var(Symbol s, int exponent) {
  Monomial m;
  if (exponent < 0) throw Error("negative exponent in polynomial monomial");
  if (exponent > 0) m.powers_.emplace_back(s, exponent);
  return m;
}

int Monomial::degree(Symbol s) const {
  for (const auto& [v, e] : powers_) {
    if (v == s) return e;
  }
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (const auto& p : powers_) d += p.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.powers_.reserve(powers_.size() + o.powers_.size());
  auto a = powers_.begin();
  auto b = o.powers_.begin();
  while (a != powers_.end() && b != o.powers_.end()) {
    if (a->first == b->first) {
      r.powers_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    } else if (a->first < b->first) {
      r.powers_.push_back(*a++);
    } else {
      r.powers_.push_back(*b++);
    }
  }
  r.powers_.insert(r.powers_.end(), a, powers_.end());
  r.powers_.insert(r.powers_.end(), b, o.powers_.end());
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (const auto& [s, e] : powers_) {
    if (o.degree(s) < e) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (const auto& [s, e] : powers_) {
    int d = e - o.degree(s);
    if (d < 0) throw Error("monomial division is not exact");
    if (d > 0) r.powers_.emplace_back(s, d);
  }
  for (const auto& [s, e] : o.powers_) {
    if (degree(s) == 0) throw Error("monomial division is not exact");
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (const auto& [s, e] : a.powers_) {
    int d = std::min(e, b.degree(s));
    if (d > 0) r.powers_.emplace_back(s, d);
  }
  return r;
}

Monomial Monomial::without(Symbol s) const {
  Monomial r;
  for (const auto& p : powers_) {
    if (!(p.first == s)) r.powers_.push_back(p);
  }
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto ia = a.powers_.begin();
  auto ib = b.powers_.begin();
  while (ia != a.powers_.end() && ib != b.powers_.end()) {
    if (ia->first == ib->first) {
      if (ia->second != ib->second) return ia->second <=> ib->second;
      ++ia;
      ++ib;
    } else if (ia->first < ib->first) {
      return std::strong_ordering::greater;
    } else {
      return std::strong_ordering::less;
    }
  }
  if (ia != a.powers_.end()) return std::strong_ordering::greater;
  if (ib != b.powers_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
  std::string s;
  for (const auto& [v, e] : powers_) {
    if (!s.empty()) s += '*';
    s += v.name();
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

// ------------------------------------------------------------ Polynomial

Polynomial::Polynomial(Rational c) {
  if (sgn(c) != 0) terms_.push_back({Monomial(), std::move(c)});
}

Polynomial Polynomial::var(Symbol s) { return term(Monomial::var(s), 1); }

Polynomial Polynomial::term(Monomial m, Rational c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms_.push_back({std::move(m), std::move(c)});
  return p;
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_[0].monomial.is_one() && terms_[0].coeff == 1;
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw Error("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

int Polynomial::degree(Symbol s) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree(s));
  return d;
}

std::vector<Symbol> Polynomial::symbols() const {
  std::vector<Symbol> out;
  for (const auto& t : terms_) {
    for (const auto& p : t.monomial.powers()) out.push_back(p.first);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial Polynomial::coefficient(Symbol s, int k) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.degree(s) == k) out.push_back({t.monomial.without(s), t.coeff});
  }
  return from_unsorted(std::move(out));
}

Polynomial Polynomial::from_unsorted(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().coeff) == 0) out.pop_back();
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

namespace {

template <class Combine>
std::vector<Polynomial::Term> merge_terms(const std::vector<Polynomial::Term>& a,
                                          const std::vector<Polynomial::Term>& b,
                                          bool negate_b, Combine&&) {
  std::vector<Polynomial::Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->monomial > ib->monomial)) {
      out.push_back(*ia++);
    } else if (ia == a.end() || ib->monomial > ia->monomial) {
      out.push_back(*ib++);
      if (negate_b) out.back().coeff = -out.back().coeff;
    } else {
      Rational c = negate_b ? Rational(ia->coeff - ib->coeff) : Rational(ia->coeff + ib->coeff);
      if (sgn(c) != 0) out.push_back({ia->monomial, std::move(c)});
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, false, 0);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.is_zero()) return *this;
  terms_ = merge_terms(terms_, o.terms_, true, 0);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) return b.scaled(a.terms_[0].coeff);
  if (b.is_constant()) return a.scaled(b.terms_[0].coeff);
  std::vector<Polynomial::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) out.push_back({x.monomial * y.monomial, x.coeff * y.coeff});
  }
  return Polynomial::from_unsorted(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (sgn(c) == 0) return {};
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times(const Monomial& m) const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Polynomial Polynomial::divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (b.is_constant()) return a.scaled(Rational(1) / b.terms_[0].coeff);
  std::vector<Term> quotient;
  Polynomial rest = a;
  const Term& lead = b.leading();
  while (!rest.is_zero()) {
    const Term& r = rest.leading();
    if (!lead.monomial.divides(r.monomial)) throw Error("polynomial division is not exact");
    Term q{r.monomial / lead.monomial, r.coeff / lead.coeff};
    rest -= b.times(q.monomial).scaled(q.coeff);
    quotient.push_back(std::move(q));
  }
  return Polynomial(std::move(quotient));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return scaled(Rational(1) / leading().coeff);
}

Rational Polynomial::primitive_factor() const {
  if (is_zero()) return 1;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : terms_) {
    den_lcm = ::lcm(den_lcm, t.coeff.get_den());
    num_gcd = ::gcd(num_gcd, t.coeff.get_num());
  }
  Rational f(den_lcm, num_gcd);
  f.canonicalize();
  if (sgn(leading().coeff) < 0) f = -f;
  return f;
}

Polynomial Polynomial::primitive_integer() const { return scaled(primitive_factor()); }

namespace {

Polynomial pow_var(Symbol x, int e) { return Polynomial::term(Monomial::var(x, e), 1); }

// gcd of the coefficients of p viewed as a polynomial in x
Polynomial content_in(const Polynomial& p, Symbol x) {
  Polynomial g;
  for (int k = p.degree(x); k >= 0; --k) {
    Polynomial c = p.coefficient(x, k);
    if (c.is_zero()) continue;
    g = Polynomial::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

Polynomial primitive_in(const Polynomial& p, Symbol x) {
  if (p.is_zero()) return p;
  return Polynomial::divide_exact(p, content_in(p, x));
}

// sparse pseudo-remainder of a by b with respect to x
Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, Symbol x) {
  const int d = b.degree(x);
  const Polynomial lc_b = b.coefficient(x, d);
  while (!a.is_zero() && a.degree(x) >= d) {
    const int e = a.degree(x);
    Polynomial lc_a = a.coefficient(x, e);
    a = a * lc_b - lc_a * pow_var(x, e - d) * b;
  }
  return a;
}

Polynomial monomial_gcd(const Monomial& m, const Polynomial& p) {
  Monomial g = m;
  for (const auto& t : p.terms()) {
    g = Monomial::gcd(g, t.monomial);
    if (g.is_one()) break;
  }
  return Polynomial::term(g, 1);
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  if (a.is_monomial()) return monomial_gcd(a.leading().monomial, b);
  if (b.is_monomial()) return monomial_gcd(b.leading().monomial, a);
  if (a == b) return a.monic();

  std::vector<Symbol> vars = a.symbols();
  for (Symbol s : b.symbols()) vars.push_back(s);
  const Symbol x = *std::min_element(vars.begin(), vars.end());

  if (a.degree(x) == 0) return gcd(a, content_in(b, x));
  if (b.degree(x) == 0) return gcd(content_in(a, x), b);

  Polynomial ca = content_in(a, x);
  Polynomial cb = content_in(b, x);
  Polynomial c = gcd(ca, cb);
  Polynomial p = divide_exact(a, ca);
  Polynomial q = divide_exact(b, cb);
  if (p.degree(x) < q.degree(x)) std::swap(p, q);
  while (true) {
    Polynomial r = pseudo_remainder(p, q, x);
    if (r.is_zero()) break;
    if (r.degree(x) == 0) {
      q = Polynomial(1);
      break;
    }
    p = std::move(q);
    q = primitive_in(r, x);
  }
  return (c * primitive_in(q, x)).monic();
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      s += chev::to_string(c);
    } else if (c == 1) {
      s += t.monomial.to_string();
    } else {
      s += chev::to_string(c) + "*" + t.monomial.to_string();
    }
  }
  return s;
}

bool Polynomial::is_canonical() const {
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (sgn(t.coeff) == 0 || !chev::is_canonical(t.coeff)) return false;
    const auto& pw = t.monomial.powers();
    for (std::size_t j = 0; j < pw.size(); ++j) {
      if (pw[j].second <= 0) return false;
      if (j > 0 && !(pw[j - 1].first < pw[j].first)) return false;
    }
    if (k > 0 && !(terms_[k - 1].monomial > t.monomial)) return false;
  }
  return true;
}

}  // namespace chev
