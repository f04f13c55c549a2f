#include "chev/symbols.hpp"

#include <cctype>

#include "chev/chevalley.hpp"
#include "chev/error.hpp"

namespace chev {

Universe::Universe(const std::vector<Scalar>& elements) {
  for (const auto& e : elements) {
    if (e.field() == Field::Laurent) throw InvalidUniverse("universe elements must be numbers, got " + e.to_string());
    if (e.is_zero()) throw InvalidUniverse("universe contains 0");
    if (!contains(e)) elems_.push_back(e);
  }
  if (elems_.size() > kMaxSize) {
    throw InvalidUniverse("universe has " + std::to_string(elems_.size()) + " elements, cap is " +
                          std::to_string(kMaxSize));
  }
}

std::optional<std::size_t> Universe::index_of(const Scalar& s) const {
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (elems_[k] == s) return k;
  }
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits at commas outside parentheses and braces.
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    if (c == '(' || c == '{' || c == '[') ++depth;
    else if (c == ')' || c == '}' || c == ']') --depth;
    else if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  out.push_back(trim(s.substr(start)));
  return out;
}

}  // namespace

Universe parse_universe(std::string_view text) {
  text = trim(text);
  if (!text.empty() && (text.front() == '[' || text.front() == '{')) {
    if (text.size() < 2 || (text.back() != ']' && text.back() != '}')) throw ParseError("unbalanced universe list");
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Scalar> elems;
  if (!text.empty()) {
    for (auto part : split_top(text)) elems.push_back(parse_scalar(part));
  }
  return Universe(elems);
}

// ---------------------------------------------------------------- exprs

SymbolExpr SymbolExpr::symbol(const Scalar& s, const Scalar& t, const Integer& e) {
  SymbolExpr x;
  x.multiply(s, t, e);
  return x;
}

SymbolExpr& SymbolExpr::multiply(const Scalar& s, const Scalar& t, const Integer& e) {
  if (e == 0) return *this;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->first == s && it->second == t) {
      it->exponent += e;
      if (it->exponent == 0) terms_.erase(it);
      return *this;
    }
  }
  terms_.push_back({s, t, e});
  return *this;
}

SymbolExpr& SymbolExpr::operator*=(const SymbolExpr& o) {
  for (const auto& t : o.terms_) multiply(t.first, t.second, t.exponent);
  return *this;
}

SymbolExpr SymbolExpr::power(const Integer& e) const {
  SymbolExpr x;
  if (e == 0) return x;
  x.terms_ = terms_;
  for (auto& t : x.terms_) t.exponent *= e;
  return x;
}

bool operator==(const SymbolExpr& a, const SymbolExpr& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (const auto& t : a.terms_) {
    bool found = false;
    for (const auto& u : b.terms_) {
      if (t.first == u.first && t.second == u.second) {
        found = t.exponent == u.exponent;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

std::string SymbolExpr::to_string() const {
  if (terms_.empty()) return "1";
  std::string s;
  for (const auto& t : terms_) {
    if (!s.empty()) s += '*';
    s += '{' + t.first.to_string() + ',' + t.second.to_string() + '}';
    if (t.exponent != 1) s += '^' + t.exponent.get_str();
  }
  return s;
}

SymbolExpr parse_symbol_expr(std::string_view text) {
  text = trim(text);
  SymbolExpr out;
  if (text == "1" || text.empty()) return out;
  std::size_t k = 0;
  auto skip = [&] {
    while (k < text.size() && std::isspace(static_cast<unsigned char>(text[k]))) ++k;
  };
  while (true) {
    skip();
    if (k >= text.size() || text[k] != '{') throw ParseError("expected '{' in symbol expression '" + std::string(text) + "'");
    std::size_t close = k + 1;
    int depth = 0;
    while (close < text.size() && !(text[close] == '}' && depth == 0)) {
      if (text[close] == '(') ++depth;
      if (text[close] == ')') --depth;
      ++close;
    }
    if (close >= text.size()) throw ParseError("unterminated symbol in '" + std::string(text) + "'");
    auto args = split_top(text.substr(k + 1, close - k - 1));
    if (args.size() != 2) throw ParseError("a symbol takes two entries: '" + std::string(text.substr(k, close - k + 1)) + "'");
    Scalar s = parse_scalar(args[0]), t = parse_scalar(args[1]);
    k = close + 1;
    skip();
    Integer e = 1;
    if (k < text.size() && text[k] == '^') {
      ++k;
      skip();
      std::size_t start = k;
      if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      std::string digits(text.substr(start, k - start));
      if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
      if (digits.empty() || digits == "-") throw ParseError("bad exponent in '" + std::string(text) + "'");
      e = Integer(digits);
      skip();
    }
    out.multiply(s, t, e);
    if (k >= text.size()) break;
    if (text[k] != '*') throw ParseError("expected '*' in symbol expression '" + std::string(text) + "'");
    ++k;
  }
  return out;
}

// --------------------------------------------------------------- axioms

const char* to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::Antisymmetry: return "antisymmetry";
    case AxiomKind::BilinearFirst: return "bilinear-first";
    case AxiomKind::BilinearSecond: return "bilinear-second";
    case AxiomKind::OneMinus: return "one-minus";
    case AxiomKind::MinusSelf: return "minus-self";
  }
  return "?";
}

AxiomKind parse_axiom_kind(std::string_view text) {
  for (AxiomKind k : all_axiom_kinds()) {
    if (text == to_string(k)) return k;
  }
  if (text == "bilinear") throw ParseError("use bilinear-first and bilinear-second");
  throw ParseError("unknown axiom kind '" + std::string(text) + "'");
}

std::set<AxiomKind> all_axiom_kinds() {
  return {AxiomKind::Antisymmetry, AxiomKind::BilinearFirst, AxiomKind::BilinearSecond, AxiomKind::OneMinus,
          AxiomKind::MinusSelf};
}

std::string AxiomInstance::to_string() const {
  std::string s = chev::to_string(kind);
  s += '(';
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k > 0) s += ", ";
    s += args[k].to_string();
  }
  return s + "): " + expr.to_string() + " = 1";
}

namespace {

using SparseVec = std::map<std::size_t, Integer>;

// x*a + y*b
SparseVec combine(const Integer& x, const SparseVec& a, const Integer& y, const SparseVec& b) {
  SparseVec out;
  if (x != 0) {
    for (const auto& [k, v] : a) out.emplace(k, x * v);
  }
  if (y != 0) {
    for (const auto& [k, v] : b) {
      auto [it, fresh] = out.emplace(k, y * v);
      if (!fresh) {
        it->second += y * v;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

AxiomLattice::Row combine(const Integer& x, const AxiomLattice::Row& a, const Integer& y, const AxiomLattice::Row& b) {
  return {combine(x, a.entries, y, b.entries), combine(x, a.certificate, y, b.certificate)};
}

}  // namespace

AxiomLattice::AxiomLattice(Universe u, std::set<AxiomKind> kinds) : universe_(std::move(u)), kinds_(std::move(kinds)) {
  const auto& U = universe_.elements();
  const std::size_t m = U.size();
  auto add = [&](AxiomKind k, std::vector<Scalar> args, SymbolExpr e) {
    if (e.is_empty()) return;
    axioms_.push_back({k, std::move(args), std::move(e)});
    insert(axioms_.size() - 1);
  };
  if (kinds_.count(AxiomKind::Antisymmetry)) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        add(AxiomKind::Antisymmetry, {U[i], U[j]}, SymbolExpr::symbol(U[i], U[j]) * SymbolExpr::symbol(U[j], U[i]));
      }
    }
  }
  for (AxiomKind k : {AxiomKind::BilinearFirst, AxiomKind::BilinearSecond}) {
    if (!kinds_.count(k)) continue;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t c = b; c < m; ++c) {
          Scalar prod = U[b] * U[c];
          if (!universe_.contains(prod)) continue;
          SymbolExpr e;
          if (k == AxiomKind::BilinearSecond) {
            e.multiply(U[a], prod, 1).multiply(U[a], U[b], -1).multiply(U[a], U[c], -1);
            add(k, {U[a], U[b], U[c]}, std::move(e));
          } else {
            e.multiply(prod, U[a], 1).multiply(U[b], U[a], -1).multiply(U[c], U[a], -1);
            add(k, {U[b], U[c], U[a]}, std::move(e));
          }
        }
      }
    }
  }
  if (kinds_.count(AxiomKind::OneMinus)) {
    for (std::size_t i = 0; i < m; ++i) {
      if (U[i].is_one()) continue;
      Scalar other = Scalar(1) - U[i];
      if (universe_.contains(other)) add(AxiomKind::OneMinus, {U[i]}, SymbolExpr::symbol(U[i], other));
    }
  }
  if (kinds_.count(AxiomKind::MinusSelf)) {
    for (std::size_t i = 0; i < m; ++i) {
      if (universe_.contains(-U[i])) add(AxiomKind::MinusSelf, {U[i]}, SymbolExpr::symbol(U[i], -U[i]));
    }
  }
}

std::map<std::size_t, Integer> AxiomLattice::vector_of(const SymbolExpr& e) const {
  std::map<std::size_t, Integer> v;
  for (const auto& t : e.terms()) {
    auto i = universe_.index_of(t.first);
    auto j = universe_.index_of(t.second);
    if (!i || !j) {
      throw InvalidUniverse("symbol {" + t.first.to_string() + "," + t.second.to_string() + "} leaves the universe");
    }
    Integer& slot = v[*i * universe_.size() + *j];
    slot += t.exponent;
    if (slot == 0) v.erase(*i * universe_.size() + *j);
  }
  return v;
}

// Incremental Hermite-style insertion: clear the leading column against the
// row owning that pivot, merging the two via the extended gcd when the
// pivot does not divide.
void AxiomLattice::insert(std::size_t axiom) {
  Row v{vector_of(axioms_[axiom].expr), {{axiom, Integer(1)}}};
  while (!v.entries.empty()) {
    auto [c, a] = *v.entries.begin();
    auto it = rows_.find(c);
    if (it == rows_.end()) {
      if (a < 0) v = combine(Integer(-1), v, Integer(0), v);
      rows_.emplace(c, std::move(v));
      return;
    }
    Row& r = it->second;
    Integer p = r.entries.begin()->second;
    if (a % p == 0) {
      v = combine(Integer(1), v, Integer(-(a / p)), r);
      continue;
    }
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
    Row merged = combine(x, r, y, v);
    Row rest = combine(Integer(p / g), v, Integer(-(a / g)), r);
    r = std::move(merged);
    v = std::move(rest);
  }
}

AxiomLattice build_axiom_lattice(const Universe& u, const std::set<AxiomKind>& kinds) { return AxiomLattice(u, kinds); }

ConsequenceResult is_consequence(const SymbolExpr& expr, const AxiomLattice& lat) {
  SparseVec residual = lat.vector_of(expr);
  SparseVec cert;
  const auto& rows = lat.rows();
  while (!residual.empty()) {
    auto [c, a] = *residual.begin();
    auto it = rows.find(c);
    if (it == rows.end() || a % it->second.entries.begin()->second != 0) {
      ConsequenceResult res;
      const std::size_t m = lat.universe().size();
      for (const auto& [k, e] : residual) res.obstruction.multiply(lat.universe()[k / m], lat.universe()[k % m], e);
      return res;
    }
    Integer q = a / it->second.entries.begin()->second;
    residual = combine(Integer(1), residual, Integer(-q), it->second.entries);
    cert = combine(Integer(1), cert, q, it->second.certificate);
  }
  Certificate c;
  for (auto& [k, e] : cert) c.uses.emplace_back(k, e);
  return {true, std::move(c), {}};
}

SymbolExpr replay(const SymbolExpr& expr, const AxiomLattice& lat, const Certificate& cert) {
  SymbolExpr out = expr;
  for (const auto& [k, e] : cert.uses) out *= lat.axioms().at(k).expr.power(-e);
  return out;
}

Matrix symbol_matrix(const SymbolExpr& expr, const GroupModel& model) {
  Root d = Root::diff(static_cast<std::size_t>(model.n), 0, 1);
  auto param = [&](const Scalar& s) { return model.is_sl() && model.family != Family::SLStd ? Param(s, Scalar(0)) : Param(s); };
  auto h = [&](const Scalar& s, bool inv) {
    Letter l = Letter::h(d, param(s));
    return letter_matrix(model, inv ? l.inverse() : l);
  };
  Matrix out = Matrix::identity(model.size(), model.field);
  for (const auto& t : expr.terms()) {
    Scalar st = t.first * t.second;
    bool neg = t.exponent < 0;
    Matrix m = neg ? mat_mul(mat_mul(h(st, false), h(t.second, true)), h(t.first, true))
                   : mat_mul(mat_mul(h(t.first, false), h(t.second, false)), h(st, true));
    Integer count = neg ? Integer(-t.exponent) : t.exponent;
    for (Integer k = 0; k < count; ++k) out = mat_mul(out, m);
  }
  return out;
}

}  // namespace chev
