#include "chev/scalar.hpp"

#include <cctype>

#include "chev/error.hpp"

namespace chev {

const char* to_string(Field f) {
  switch (f) {
    case Field::Rational: return "rational";
    case Field::Gaussian: return "gaussian";
    case Field::Laurent: return "laurent";
  }
  return "?";
}

Field join(Field a, Field b) {
  if (a == b) return a;
  if (a == Field::Rational) return b;
  if (b == Field::Rational) return a;
  throw ModeMismatch("gaussian and laurent scalars do not mix");
}

bool Scalar::is_zero() const {
  switch (field()) {
    case Field::Rational: return sgn(std::get<Rational>(v_)) == 0;
    case Field::Gaussian: return std::get<Gaussian>(v_).is_zero();
    case Field::Laurent: return std::get<RationalFunction>(v_).is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (field()) {
    case Field::Rational: return std::get<Rational>(v_) == 1;
    case Field::Gaussian: return std::get<Gaussian>(v_) == Gaussian(1);
    case Field::Laurent: {
      const auto& f = std::get<RationalFunction>(v_);
      return f.den().is_one() && f.num().is_one();
    }
  }
  return false;
}

Rational Scalar::to_rational() const {
  switch (field()) {
    case Field::Rational: return std::get<Rational>(v_);
    case Field::Gaussian: {
      const auto& g = std::get<Gaussian>(v_);
      if (g.is_real()) return g.re();
      break;
    }
    case Field::Laurent: {
      const auto& f = std::get<RationalFunction>(v_);
      if (f.is_constant()) return f.constant_value();
      break;
    }
  }
  throw ModeMismatch("scalar " + to_string() + " is not rational");
}

Gaussian Scalar::to_gaussian() const {
  if (field() == Field::Gaussian) return std::get<Gaussian>(v_);
  return Gaussian(to_rational());
}

const RationalFunction& Scalar::as_function() const {
  if (field() != Field::Laurent) throw ModeMismatch("scalar is not a rational function");
  return std::get<RationalFunction>(v_);
}

Scalar Scalar::promoted(Field f) const {
  Field have = field();
  if (have == f) return *this;
  if (have != Field::Rational) {
    throw ModeMismatch(std::string("cannot view ") + chev::to_string(have) + " scalar as " +
                       chev::to_string(f));
  }
  const Rational& q = std::get<Rational>(v_);
  if (f == Field::Gaussian) return Gaussian(q);
  return RationalFunction(q);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

namespace {

template <class Op>
void combine(std::variant<Rational, Gaussian, RationalFunction>& a,
             const std::variant<Rational, Gaussian, RationalFunction>& b, Op op) {
  Field fa = static_cast<Field>(a.index());
  Field fb = static_cast<Field>(b.index());
  Field f = join(fa, fb);
  switch (f) {
    case Field::Rational:
      op(std::get<Rational>(a), std::get<Rational>(b));
      return;
    case Field::Gaussian: {
      if (fa != f) a = Gaussian(std::get<Rational>(a));
      if (fb != f) {
        op(std::get<Gaussian>(a), Gaussian(std::get<Rational>(b)));
      } else {
        op(std::get<Gaussian>(a), std::get<Gaussian>(b));
      }
      return;
    }
    case Field::Laurent: {
      if (fa != f) a = RationalFunction(std::get<Rational>(a));
      if (fb != f) {
        op(std::get<RationalFunction>(a), RationalFunction(std::get<Rational>(b)));
      } else {
        op(std::get<RationalFunction>(a), std::get<RationalFunction>(b));
      }
      return;
    }
  }
}

}  // namespace

Scalar& Scalar::operator+=(const Scalar& o) {
  combine(v_, o.v_, [](auto& x, const auto& y) { x += y; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  combine(v_, o.v_, [](auto& x, const auto& y) { x -= y; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  combine(v_, o.v_, [](auto& x, const auto& y) { x *= y; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DivisionByZero("scalar division by zero");
  combine(v_, o.v_, [](auto& x, const auto& y) { x /= y; });
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero scalar");
  switch (field()) {
    case Field::Rational: return Rational(1 / std::get<Rational>(v_));
    case Field::Gaussian: return std::get<Gaussian>(v_).inverse();
    case Field::Laurent: return std::get<RationalFunction>(v_).inverse();
  }
  return {};
}

Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result = Scalar(1).promoted(field());
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() == b.v_.index()) return a.v_ == b.v_;
  Field f = join(a.field(), b.field());
  return a.promoted(f).v_ == b.promoted(f).v_;
}

Scalar Scalar::substitute(const std::map<std::string, Scalar, std::less<>>& values) const {
  if (field() != Field::Laurent) return *this;
  return std::get<RationalFunction>(v_).evaluate<Scalar>([&](Symbol s) {
    auto it = values.find(s.name());
    if (it == values.end()) throw Error("no value for symbol '" + s.name() + "'");
    return it->second;
  });
}

std::string Scalar::to_string() const {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
          return chev::to_string(x);
        } else {
          return x.to_string();
        }
      },
      v_);
}

bool Scalar::is_canonical() const {
  return std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Rational>) {
          return chev::is_canonical(x);
        } else {
          return x.is_canonical();
        }
      },
      v_);
}

// ----------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v;
    if (eat('-')) {
      v = -term();
    } else {
      eat('+');
      v = term();
    }
    while (true) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  Scalar term() {
    Scalar v = power();
    while (true) {
      if (eat('*')) {
        v *= power();
      } else if (eat('/')) {
        v /= power();
      } else if (starts_factor()) {
        v *= power();  // juxtaposition, as in "3/4 i"
      } else {
        return v;
      }
    }
  }

  Scalar power() {
    Scalar base = atom();
    if (eat('^')) {
      skip();
      bool negative = false;
      if (eat('-')) negative = true;
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected integer exponent");
      long e = std::stol(std::string(s_.substr(start, pos_ - start)));
      return base.pow(negative ? -e : e);
    }
    return base;
  }

  Scalar atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = s_.substr(start, pos_ - start);
      if (name == "i") return Gaussian::i();
      return Scalar::symbol(name);
    }
    fail("unexpected character");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(std::string_view text) { return Parser(text).parse(); }

}  // namespace chev
