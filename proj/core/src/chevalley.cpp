#include "chev/chevalley.hpp"

#include <cctype>

#include "chev/error.hpp"

namespace chev {

// ------------------------------------------------------------------ Param

bool Param::is_zero() const {
  for (const auto& s : v_) {
    if (!s.is_zero()) return false;
  }
  return true;
}

Param Param::operator-() const {
  Param p = *this;
  for (auto& s : p.v_) s = -s;
  return p;
}

Param operator+(const Param& a, const Param& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("cannot add parameters of different arity");
  Param p = a;
  for (std::size_t k = 0; k < p.v_.size(); ++k) p.v_[k] += b.v_[k];
  return p;
}

Param Param::scaled(const Scalar& c) const {
  Param p = *this;
  for (auto& s : p.v_) s *= c;
  return p;
}

Param Param::substitute(const std::map<std::string, Scalar, std::less<>>& values) const {
  Param p = *this;
  for (auto& s : p.v_) s = s.substitute(values);
  return p;
}

std::string Param::to_string() const {
  std::string s = "(";
  for (std::size_t k = 0; k < v_.size(); ++k) {
    if (k > 0) s += ", ";
    s += v_[k].to_string();
  }
  return s + ")";
}

Param parse_param(std::string_view text) {
  std::size_t a = text.find_first_not_of(" \t");
  std::size_t b = text.find_last_not_of(" \t");
  if (a == std::string_view::npos || text[a] != '(' || text[b] != ')') {
    throw ParseError("parameter must be parenthesized: '" + std::string(text) + "'");
  }
  std::string_view inner = text.substr(a + 1, b - a - 1);
  std::vector<Scalar> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k <= inner.size(); ++k) {
    if (k == inner.size() || (inner[k] == ',' && depth == 0)) {
      parts.push_back(parse_scalar(inner.substr(start, k - start)));
      start = k + 1;
    } else if (inner[k] == '(') {
      ++depth;
    } else if (inner[k] == ')') {
      --depth;
    }
  }
  if (parts.size() == 1) return Param(parts[0]);
  if (parts.size() == 2) return Param(parts[0], parts[1]);
  throw ParseError("parameter must have one or two entries: '" + std::string(text) + "'");
}

// -------------------------------------------------------------- generators

std::size_t param_arity(const GroupModel& model, const Root& r) {
  if (!model.is_sl() || r.tag != 0) return 1;
  auto k = classify(r).kind;
  return (k == RootShape::Long || k == RootShape::NegLong) ? 1 : 2;
}

void check_generator(const GroupModel& model, const Root& r, const Param& p) {
  if (r.rank() != model.rank()) {
    throw InvalidRoot("root '" + r.to_string() + "' has rank " + std::to_string(r.rank()) + ", model " +
                      model.name() + " needs " + std::to_string(model.rank()));
  }
  if (model.family == Family::SLStd) {
    if (!is_a_root(r) || r.tag != 0) throw InvalidRoot("'" + r.to_string() + "' is not a root L_k-L_l");
  } else {
    auto k = classify(r).kind;
    if (r.tag != 0 && (!model.is_sl() || k == RootShape::Long || k == RootShape::NegLong)) {
      throw InvalidRoot("root '" + r.to_string() + "' cannot carry a component tag in " + model.name());
    }
  }
  std::size_t want = param_arity(model, r);
  if (p.arity() != want) {
    throw ArityMismatch("root '" + r.to_string() + "' in " + model.name() + " takes " + std::to_string(want) +
                        " parameter(s), got " + std::to_string(p.arity()));
  }
}

namespace {

struct Entry {
  std::size_t i, j;
  int sign;
};

// Matrix support of each component of the root space (one component for Sp,
// standard SL and long roots, two for +-L_i+-L_j in the SL models).
std::vector<std::vector<Entry>> components(const GroupModel& model, const Root& r) {
  if (model.family == Family::SLStd) {
    auto s = classify(r);
    return {{{s.i, s.j, 1}}};
  }
  const std::size_t n = static_cast<std::size_t>(model.n);
  auto s = classify(r);
  const std::size_t i = s.i, j = s.j;
  std::vector<std::vector<Entry>> c;
  switch (s.kind) {
    case RootShape::Diff: c = {{{i, j, 1}}, {{j + n, i + n, -1}}}; break;
    case RootShape::Sum: c = {{{i, j + n, 1}}, {{j, i + n, 1}}}; break;
    case RootShape::NegSum: c = {{{j + n, i, 1}}, {{i + n, j, 1}}}; break;
    case RootShape::Long: return {{{i, i + n, 1}}};
    case RootShape::NegLong: return {{{i + n, i, 1}}};
  }
  if (model.family == Family::Sp) return {{c[0][0], c[1][0]}};
  // SL: the second component carries its own parameter with a plus sign
  c[1][0].sign = 1;
  if (r.tag != 0) return {c[r.tag - 1]};
  return c;
}

Matrix f_matrix(const GroupModel& model, const Root& r, const Param& p) {
  Matrix m(model.size(), model.field);
  auto comps = components(model, r);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    const Scalar& t = p[c];
    if (t.is_zero()) continue;
    for (const auto& e : comps[c]) m.set(e.i, e.j, e.sign > 0 ? t : -t);
  }
  return m;
}

}  // namespace

Matrix symplectic_form(const GroupModel& model) {
  const std::size_t n = static_cast<std::size_t>(model.n);
  Matrix j(model.size(), model.field);
  for (std::size_t i = 0; i < n; ++i) {
    j.set(i, i + n, Scalar(1));
    j.set(i + n, i, Scalar(-1));
  }
  return j;
}

Matrix gen_f(const GroupModel& model, const Root& r, const Param& p) {
  check_generator(model, r, p);
  return f_matrix(model, r, p);
}

Matrix gen_x(const GroupModel& model, const Root& r, const Param& p) {
  check_generator(model, r, p);
  // every root-space element here squares to zero, so exp is I + f
  Matrix x = f_matrix(model, r, p);
  for (std::size_t i = 0; i < x.size(); ++i) x.set(i, i, Scalar(1));
  return x;
}

Param root_coordinate(const GroupModel& model, const Root& r, const Matrix& m) {
  auto comps = components(model, r);
  std::vector<Scalar> v;
  for (const auto& c : comps) {
    const Entry& e = c.front();
    v.push_back(e.sign > 0 ? m(e.i, e.j) : -m(e.i, e.j));
  }
  return v.size() == 1 ? Param(v[0]) : Param(v[0], v[1]);
}

std::optional<Root> root_at(const GroupModel& model, std::size_t i, std::size_t j) {
  RootSystem rs(model);
  for (const auto& r : rs.roots()) {
    auto comps = components(model, r);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (const auto& e : comps[c]) {
        if (e.i == i && e.j == j) return comps.size() == 2 ? r.with_tag(static_cast<int>(c) + 1) : r;
      }
    }
  }
  return std::nullopt;
}

Matrix MonomialForm::to_matrix(Field field) const {
  Matrix m(perm.size(), field);
  for (std::size_t j = 0; j < perm.size(); ++j) m.set(perm[j], j, diag[j]);
  return m;
}

MonomialForm MonomialForm::of(const Matrix& m) {
  if (!m.is_monomial()) throw Error("matrix is not monomial");
  MonomialForm f;
  f.perm.resize(m.size());
  f.diag.resize(m.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m(i, j).is_zero()) {
        f.perm[j] = i;
        f.diag[j] = m(i, j);
      }
    }
  }
  return f;
}

namespace {

// componentwise -t^{-1}, zero components stay zero
Param opposite_param(const Param& p) {
  std::vector<Scalar> v;
  for (const auto& t : p.values()) v.push_back(t.is_zero() ? t : -t.inverse());
  return v.size() == 1 ? Param(v[0]) : Param(v[0], v[1]);
}

void require_unit(const Root& r, const Param& p) {
  bool ok = p.arity() == 1 ? !p[0].is_zero() : !p.is_zero();
  if (!ok) throw NonUnitParameter("w/h generator at '" + r.to_string() + "' needs a unit parameter, got " + p.to_string());
}

Matrix w_matrix(const GroupModel& model, const Root& r, const Param& p) {
  require_unit(r, p);
  Matrix x = gen_x(model, r, p);
  return mat_mul(mat_mul(x, gen_x(model, -r, opposite_param(p))), x);
}

}  // namespace

WElement gen_w(const GroupModel& model, const Root& r, const Param& p) {
  check_generator(model, r, p);
  Matrix w = w_matrix(model, r, p);
  MonomialForm f = MonomialForm::of(w);
  return {std::move(w), std::move(f)};
}

Param reference_param(const Param& p) {
  if (p.arity() == 1) return Param(Scalar(1));
  return Param(Scalar(p[0].is_zero() ? 0 : 1), Scalar(p[1].is_zero() ? 0 : 1));
}

Matrix gen_h(const GroupModel& model, const Root& r, const Param& p) {
  check_generator(model, r, p);
  return mat_mul(w_matrix(model, r, p), w_matrix(model, r, -reference_param(p)));
}

bool check_membership(const Matrix& m, const GroupModel& model) {
  if (m.size() != model.size()) {
    throw SizeMismatch("matrix of size " + std::to_string(m.size()) + " for model " + model.name());
  }
  if (model.family == Family::Sp) {
    Matrix j = symplectic_form(model).with_field(m.field());
    return mat_mul(mat_mul(m.transpose(), j), m) == j;
  }
  return determinant(m).is_one();
}

bool in_lie_algebra(const Matrix& x, const GroupModel& model) {
  if (model.family == Family::Sp) {
    Matrix j = symplectic_form(model).with_field(x.field());
    return (mat_mul(x.transpose(), j) + mat_mul(j, x)).is_zero();
  }
  Scalar trace = Scalar(0).promoted(x.field());
  for (std::size_t i = 0; i < x.size(); ++i) trace += x(i, i);
  return trace.is_zero();
}

Matrix TorusElement::matrix(const GroupModel& model) const {
  std::vector<Scalar> diag;
  if (model.family == Family::SLStd) {
    if (d.size() != model.size()) throw SizeMismatch("torus element needs 2n entries");
    diag = d;
  } else {
    if (d.size() != static_cast<std::size_t>(model.n)) throw SizeMismatch("torus element needs n entries");
    diag = d;
    for (const auto& x : d) diag.push_back(x.inverse());
  }
  Matrix m(model.size(), model.field);
  for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
  return m;
}

Scalar TorusElement::character(const Root& r) const {
  if (r.rank() != d.size()) throw SizeMismatch("torus element and root rank differ");
  Scalar chi(1);
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (r.coeffs[k] != 0) chi *= d[k].pow(r.coeffs[k]);
  }
  return chi;
}

// ----------------------------------------------------------------- letters

Letter Letter::inverse() const {
  Letter l = *this;
  if (kind == LetterKind::H) {
    l.inverted = !inverted;
  } else {
    l.param = -param;
  }
  return l;
}

std::string Letter::to_string() const {
  std::string s;
  switch (kind) {
    case LetterKind::X: s = "x"; break;
    case LetterKind::W: s = "w"; break;
    case LetterKind::H: s = inverted ? "h^-1" : "h"; break;
  }
  return s + " " + root.to_string() + " " + param.to_string();
}

Letter parse_letter(std::string_view text) {
  std::size_t a = text.find_first_not_of(" \t");
  if (a == std::string_view::npos) throw ParseError("empty letter");
  text.remove_prefix(a);
  std::size_t sp = text.find_first_of(" \t");
  if (sp == std::string_view::npos) throw ParseError("letter needs a root and a parameter: '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, sp);
  Letter l;
  if (kind == "x") {
    l.kind = LetterKind::X;
  } else if (kind == "w") {
    l.kind = LetterKind::W;
  } else if (kind == "h") {
    l.kind = LetterKind::H;
  } else if (kind == "h^-1") {
    l.kind = LetterKind::H;
    l.inverted = true;
  } else {
    throw ParseError("unknown letter kind '" + std::string(kind) + "'");
  }
  std::string_view rest = text.substr(sp);
  std::size_t r0 = rest.find_first_not_of(" \t");
  std::size_t paren = rest.find('(');
  if (r0 == std::string_view::npos || paren == std::string_view::npos) {
    throw ParseError("letter needs a root and a parameter: '" + std::string(text) + "'");
  }
  std::string_view root_text = rest.substr(r0, paren - r0);
  while (!root_text.empty() && (root_text.back() == ' ' || root_text.back() == '\t')) root_text.remove_suffix(1);
  l.root = parse_root(root_text);
  l.param = parse_param(rest.substr(paren));
  return l;
}

Matrix letter_matrix(const GroupModel& model, const Letter& l) {
  switch (l.kind) {
    case LetterKind::X: return gen_x(model, l.root, l.param);
    case LetterKind::W:
      check_generator(model, l.root, l.param);
      return w_matrix(model, l.root, l.param);
    case LetterKind::H: {
      check_generator(model, l.root, l.param);
      Param ref = reference_param(l.param);
      if (!l.inverted) return mat_mul(w_matrix(model, l.root, l.param), w_matrix(model, l.root, -ref));
      return mat_mul(w_matrix(model, l.root, ref), w_matrix(model, l.root, -l.param));
    }
  }
  throw Error("unknown letter kind");
}

std::vector<Letter> expand_to_x(const GroupModel& model, const Letter& l) {
  check_generator(model, l.root, l.param);
  auto w_word = [&](const Param& p) {
    require_unit(l.root, p);
    return std::vector<Letter>{Letter::x(l.root, p), Letter::x(-l.root, opposite_param(p)), Letter::x(l.root, p)};
  };
  switch (l.kind) {
    case LetterKind::X: return {l};
    case LetterKind::W: return w_word(l.param);
    case LetterKind::H: {
      Param ref = reference_param(l.param);
      std::vector<Letter> a = l.inverted ? w_word(ref) : w_word(l.param);
      std::vector<Letter> b = l.inverted ? w_word(-l.param) : w_word(-ref);
      a.insert(a.end(), b.begin(), b.end());
      return a;
    }
  }
  return {};
}

Letter torus_conjugate(const TorusElement& d, const Letter& l) {
  if (l.kind != LetterKind::X) throw Error("torus_conjugate acts on x-letters only");
  Letter out = l;
  out.param = l.param.scaled(d.character(l.root));
  return out;
}

}  // namespace chev
