#include "chev/relations.hpp"

#include "chev/error.hpp"

#include <memory>

namespace chev {

const char* to_string(RelationId id) {
  switch (id) {
    case RelationId::Additivity: return "Additivity";
    case RelationId::Commutator: return "Commutator";
    case RelationId::TrivialCommutator: return "TrivialCommutator";
    case RelationId::HMult: return "HMult";
    case RelationId::HInvolution: return "HInvolution";
    case RelationId::HDecomposition: return "HDecomposition";
    case RelationId::WeylConj: return "WeylConj";
    case RelationId::MonomialForm: return "MonomialForm";
  }
  return "?";
}

const char* to_string(Regime r) { return r == Regime::Grid ? "grid" : "symbolic"; }

Regime parse_regime(std::string_view text) {
  if (text == "grid") return Regime::Grid;
  if (text == "symbolic") return Regime::Symbolic;
  throw ParseError("unknown regime '" + std::string(text) + "' (expected grid or symbolic)");
}

// ------------------------------------------------------------------- grid

Grid Grid::default_for(const GroupModel& model) {
  auto q = [](long p, long d = 1) { return Scalar(Rational(p, d)); };
  Grid g;
  if (model.family == Family::SLC) {
    g.values = {q(1), q(-1), q(2), q(-3), q(1, 2), q(-2, 3), q(5, 7), Gaussian::i(), Gaussian(0, -1),
                Gaussian(1, 2), Gaussian(Rational(-1, 2), Rational(1, 3))};
  } else {
    g.values = {q(1), q(-1), q(2), q(-2), q(3), q(-3), q(1, 2), q(-1, 2), q(2, 3), q(-2, 3), q(5, 7)};
  }
  return g;
}

std::vector<Param> Grid::candidates(VarShape shape) const {
  std::vector<Param> out;
  const std::size_t m = values.size();
  for (std::size_t k = 0; k < m; ++k) {
    switch (shape) {
      case VarShape::Scalar: out.emplace_back(values[k]); break;
      case VarShape::Pair: out.emplace_back(values[k], values[(k + 4) % m]); break;
      case VarShape::First: out.emplace_back(values[k], Scalar(0)); break;
      case VarShape::Second: out.emplace_back(Scalar(0), values[k]); break;
    }
  }
  return out;
}

Param symbolic_param(const Variable& v) {
  switch (v.shape) {
    case VarShape::Scalar: return Param(Scalar::symbol(v.name));
    case VarShape::Pair: return Param(Scalar::symbol(v.name + "1"), Scalar::symbol(v.name + "2"));
    case VarShape::First: return Param(Scalar::symbol(v.name), Scalar(0));
    case VarShape::Second: return Param(Scalar(0), Scalar::symbol(v.name));
  }
  return {};
}

std::map<std::string, Scalar, std::less<>> flatten(const Assignment& a, const std::vector<Variable>& vars) {
  std::map<std::string, Scalar, std::less<>> out;
  for (const auto& v : vars) {
    const Param& p = a.at(v.name);
    switch (v.shape) {
      case VarShape::Scalar: out.emplace(v.name, p[0]); break;
      case VarShape::Pair:
        out.emplace(v.name + "1", p[0]);
        out.emplace(v.name + "2", p[1]);
        break;
      case VarShape::First: out.emplace(v.name, p[0]); break;
      case VarShape::Second: out.emplace(v.name, p[1]); break;
    }
  }
  return out;
}

namespace {

std::string describe(const Variable& v) {
  switch (v.shape) {
    case VarShape::Scalar: return v.name;
    case VarShape::Pair: return v.name + "=(" + v.name + "1, " + v.name + "2)";
    case VarShape::First: return v.name + "=(" + v.name + ", 0)";
    case VarShape::Second: return v.name + "=(0, " + v.name + ")";
  }
  return v.name;
}

std::string describe(const Assignment& a) {
  std::string s;
  for (const auto& [name, p] : a) {
    if (!s.empty()) s += ", ";
    s += name + "=" + p.to_string();
  }
  return s;
}

// Returns false and fills the witness on the first differing entry.
bool compare(const Sides& s, const Assignment& a, Witness& w) {
  if (s.lhs.size() != s.rhs.size()) {
    w.assignment = describe(a);
    w.error = "sides have different sizes";
    return false;
  }
  for (std::size_t i = 0; i < s.lhs.size(); ++i) {
    for (std::size_t j = 0; j < s.lhs.size(); ++j) {
      if (!(s.lhs(i, j) == s.rhs(i, j))) {
        w.assignment = describe(a);
        w.row = i;
        w.col = j;
        w.lhs = s.lhs(i, j).to_string();
        w.rhs = s.rhs(i, j).to_string();
        return false;
      }
    }
  }
  return true;
}

}  // namespace

VerificationReport verify(const RelationInstance& rel, Regime regime, const Grid& grid) {
  VerificationReport rep{rel.id, rel.label, rel.model, rel.roots, {}, regime, true, 0, std::nullopt, rel.note};
  for (const auto& v : rel.vars) rep.params.push_back(describe(v));

  GroupModel model = regime == Regime::Symbolic ? rel.model.with_field(Field::Laurent) : rel.model;
  if (regime == Regime::Symbolic && rel.model.family == Family::SLC) {
    if (!rep.note.empty()) rep.note += "; ";
    rep.note += "symbolic check over Q(symbols): integer structure constants make it valid over C";
  }

  auto check = [&](const Assignment& a) {
    ++rep.points;
    Witness w;
    try {
      Sides s = rel.build(model, a);
      if (compare(s, a, w)) return true;
    } catch (const Error& e) {
      w.assignment = describe(a);
      w.error = e.what();
    }
    rep.pass = false;
    rep.witness = w;
    return false;
  };

  if (regime == Regime::Symbolic) {
    Assignment a;
    for (const auto& v : rel.vars) a.emplace(v.name, symbolic_param(v));
    check(a);
    return rep;
  }

  std::vector<std::vector<Param>> cand;
  for (const auto& v : rel.vars) cand.push_back(grid.candidates(v.shape));
  std::vector<std::size_t> idx(rel.vars.size(), 0);
  while (true) {
    Assignment a;
    for (std::size_t k = 0; k < rel.vars.size(); ++k) a.emplace(rel.vars[k].name, cand[k][idx[k]]);
    if (!check(a)) return rep;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == cand[k].size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  return rep;
}

std::vector<VerificationReport> verify_all(const std::vector<RelationInstance>& rels, Regime regime,
                                           const Grid& grid) {
  std::vector<VerificationReport> out;
  out.reserve(rels.size());
  for (const auto& r : rels) out.push_back(verify(r, regime, grid));
  return out;
}

// ------------------------------------------------------------ commutators

namespace {

Matrix X(const GroupModel& m, const Root& r, const Param& p) { return gen_x(m, r, p); }
Matrix W(const GroupModel& m, const Root& r, const Param& p) { return letter_matrix(m, Letter::w(r, p)); }
Matrix W_inv(const GroupModel& m, const Root& r, const Param& p) { return W(m, r, -p); }
Matrix H(const GroupModel& m, const Root& r, const Param& p) { return letter_matrix(m, Letter::h(r, p)); }
Matrix H_inv(const GroupModel& m, const Root& r, const Param& p) {
  return letter_matrix(m, Letter::h(r, p).inverse());
}
Matrix I(const GroupModel& m) { return Matrix::identity(m.size(), m.field); }

Matrix product(const GroupModel& m, std::initializer_list<Matrix> ms) {
  Matrix out = I(m);
  for (const auto& x : ms) out = mat_mul(out, x);
  return out;
}

Param times(const Param& a, const Param& b) {
  if (a.arity() != b.arity()) throw ArityMismatch("parameter arity differs");
  if (a.arity() == 1) return Param(a[0] * b[0]);
  return Param(a[0] * b[0], a[1] * b[1]);
}

const Scalar& sc(const Assignment& a, const char* name) { return a.at(name)[0]; }

VarShape shape_for(const GroupModel& m, const Root& r) {
  return param_arity(m, r) == 2 ? VarShape::Pair : VarShape::Scalar;
}

}  // namespace

Matrix group_commutator(const Matrix& g, const Matrix& g_inv, const Matrix& h, const Matrix& h_inv) {
  return mat_mul(mat_mul(mat_mul(g, h), g_inv), h_inv);
}

Matrix x_commutator(const GroupModel& model, const Root& r, const Root& p, const Param& a, const Param& b) {
  return group_commutator(X(model, r, a), X(model, r, -a), X(model, p, b), X(model, p, -b));
}

CommutatorDecomposition decompose_commutator(const GroupModel& model, const Root& r, const Root& p,
                                             const Param& a, const Param& b) {
  if ((r + p).is_zero()) throw InvalidRoot("commutator of antipodal roots " + r.to_string() + ", " + p.to_string());
  if (r == p) throw InvalidRoot("commutator of a root with itself: " + r.to_string());
  RootSystem rs(model);
  CommutatorDecomposition d{x_commutator(model, r, p, a, b), {}, I(model)};
  Matrix residual = d.commutator;
  for (const auto& c : rs.positive_combinations(r, p)) {
    Param g = root_coordinate(model, c.root, residual);
    residual = mat_mul(X(model, c.root, -g), residual);
    d.factors.push_back({c.i, c.j, c.root, g});
    d.reassembled = mat_mul(d.reassembled, X(model, c.root, g));
  }
  if (!residual.is_identity()) {
    throw DecompositionFailure("commutator of " + r.to_string() + " and " + p.to_string() +
                               " leaves residual " + residual.to_string());
  }
  if (!(d.reassembled == d.commutator)) {
    throw DecompositionFailure("reassembled product differs from the commutator of " + r.to_string() + " and " +
                               p.to_string());
  }
  return d;
}

std::string StructureFunction::to_string() const {
  return "x_{" + target.to_string() + "}" + law.to_string() + " [i=" + std::to_string(i) + ", j=" + std::to_string(j) + "]";
}

namespace {

bool homogeneous(const Scalar& s, int i, int j) {
  const RationalFunction& f = s.as_function();
  if (!f.den().is_one()) return false;
  for (const auto& t : f.num().terms()) {
    int da = 0, db = 0;
    for (const auto& [sym, e] : t.monomial.powers()) {
      if (sym.name()[0] == 'a') da += e;
      else if (sym.name()[0] == 'b') db += e;
      else return false;
    }
    if (da != i || db != j) return false;
  }
  return true;
}

}  // namespace

std::vector<StructureFunction> structure_functions(const GroupModel& model, const Root& r, const Root& p) {
  GroupModel sym = model.with_field(Field::Laurent);
  Param a = symbolic_param({"a", shape_for(model, r)});
  Param b = symbolic_param({"b", shape_for(model, p)});
  auto d = decompose_commutator(sym, r, p, a, b);
  std::vector<StructureFunction> out;
  for (const auto& f : d.factors) {
    StructureFunction s{f.i, f.j, f.root, f.param, true};
    if (f.param.is_zero()) s.bidegree_ok = false;
    for (const auto& c : f.param.values()) {
      if (c.is_zero()) continue;
      if (!homogeneous(c, f.i, f.j)) s.bidegree_ok = false;
      if (model.family == Family::Sp) {
        const auto& num = c.as_function().num();
        if (!num.is_monomial() || num.leading().coeff.get_den() != 1) s.bidegree_ok = false;
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

// ------------------------------------------------------------------ suites

std::vector<RelationInstance> additivity_relations(const GroupModel& model) {
  std::vector<RelationInstance> out;
  RootSystem rs(model);
  for (const auto& r : rs.roots()) {
    VarShape sh = shape_for(model, r);
    out.push_back({RelationId::Additivity, "x_r(a) x_r(b) = x_r(a+b)", model, {r}, {{"a", sh}, {"b", sh}},
                   [r](const GroupModel& m, const Assignment& a) {
                     const Param& pa = a.at("a");
                     const Param& pb = a.at("b");
                     return Sides{mat_mul(X(m, r, pa), X(m, r, pb)), X(m, r, pa + pb)};
                   },
                   ""});
  }
  return out;
}

std::vector<RelationInstance> commutator_relations(const GroupModel& model) {
  std::vector<RelationInstance> out;
  RootSystem rs(model);
  for (const auto& r : rs.roots()) {
    for (const auto& p : rs.roots()) {
      if ((r + p).is_zero() || r == p) continue;
      if (rs.positive_combinations(r, p).empty()) continue;
      auto laws = structure_functions(model, r, p);
      std::vector<Variable> vars{{"a", shape_for(model, r)}, {"b", shape_for(model, p)}};
      std::string note;
      for (const auto& s : laws) {
        if (!note.empty()) note += " * ";
        note += s.to_string();
      }
      out.push_back({RelationId::Commutator, "[x_r(a), x_p(b)] = prod x_{ir+jp}(g_ij(a,b))", model, {r, p}, vars,
                     [r, p, laws, vars](const GroupModel& m, const Assignment& a) {
                       Matrix lhs = x_commutator(m, r, p, a.at("a"), a.at("b"));
                       auto values = flatten(a, vars);
                       Matrix rhs = I(m);
                       for (const auto& s : laws) rhs = mat_mul(rhs, X(m, s.target, s.law.substitute(values)));
                       return Sides{lhs, rhs};
                     },
                     note});
    }
  }
  return out;
}

std::vector<RelationInstance> trivial_commutator_relations(const GroupModel& model) {
  std::vector<RelationInstance> out;
  RootSystem rs(model);
  for (const auto& r : rs.roots()) {
    for (const auto& p : rs.roots()) {
      if ((r + p).is_zero()) continue;
      if (!rs.positive_combinations(r, p).empty()) continue;
      out.push_back({RelationId::TrivialCommutator, "[x_r(a), x_p(b)] = id", model, {r, p},
                     {{"a", shape_for(model, r)}, {"b", shape_for(model, p)}},
                     [r, p](const GroupModel& m, const Assignment& a) {
                       return Sides{x_commutator(m, r, p, a.at("a"), a.at("b")), I(m)};
                     },
                     r == p ? "r = p" : "r + p is not a root"});
    }
  }
  return out;
}

namespace {

std::vector<Letter> h_long_word(const GroupModel& m) {
  const std::size_t n = static_cast<std::size_t>(m.n);
  Root ln = Root::twice(n, n - 1);
  std::vector<Letter> w = {Letter::x(ln, Scalar(-1)), Letter::x(-ln, Scalar(1)), Letter::x(ln, Scalar(-1))};
  std::vector<Letter> out = w;
  out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::vector<Letter> h_short_word(const GroupModel& m, const Param& t) {
  Root d = Root::diff(static_cast<std::size_t>(m.n), 0, 1);
  Param minus_one = t.arity() == 1 ? Param(Scalar(-1)) : Param(Scalar(-1), Scalar(0));
  Param one = -minus_one;
  auto inv = [](const Param& p) {
    return p.arity() == 1 ? Param(-p[0].inverse()) : Param(-p[0].inverse(), Scalar(0));
  };
  return {Letter::x(d, t), Letter::x(-d, inv(t)), Letter::x(d, t),
          Letter::x(d, minus_one), Letter::x(-d, one), Letter::x(d, minus_one)};
}

Matrix word_matrix(const GroupModel& m, const std::vector<Letter>& w) {
  Matrix out = I(m);
  for (const auto& l : w) out = mat_mul(out, letter_matrix(m, l));
  return out;
}

Matrix diag_with(const GroupModel& m, const std::vector<std::pair<std::size_t, Scalar>>& entries) {
  Matrix d = I(m);
  for (const auto& [k, v] : entries) d.set(k, k, v);
  return d;
}

}  // namespace

std::vector<RelationInstance> h_relations(const GroupModel& model) {
  std::vector<RelationInstance> out;
  const std::size_t n = static_cast<std::size_t>(model.n);
  RootSystem rs(model);
  const Root d12 = Root::diff(n, 0, 1);
  const VarShape primary = model.is_sl() ? VarShape::First : VarShape::Scalar;

  auto hmult = [&](const Root& r, VarShape sh, std::string note) {
    out.push_back({RelationId::HMult, "h_r(a) h_r(b) = h_r(ab)", model, {r}, {{"a", sh}, {"b", sh}},
                   [r](const GroupModel& m, const Assignment& a) {
                     const Param& pa = a.at("a");
                     const Param& pb = a.at("b");
                     return Sides{mat_mul(H(m, r, pa), H(m, r, pb)), H(m, r, times(pa, pb))};
                   },
                   std::move(note)});
  };
  hmult(d12, primary, "generating relation");
  for (const auto& r : rs.roots()) {
    if (param_arity(model, r) == 2) {
      for (VarShape sh : {VarShape::First, VarShape::Second, VarShape::Pair}) {
        if (r == d12 && sh == VarShape::First) continue;
        hmult(r, sh, "additional root");
      }
    } else if (!(r == d12)) {
      hmult(r, VarShape::Scalar, "additional root");
    }
  }

  const Root ln = Root::twice(n, n - 1);
  out.push_back({RelationId::HInvolution, "h_{2L_n}(-1) h_{2L_n}(-1) = id", model, {ln}, {},
                 [](const GroupModel& m, const Assignment&) {
                   Matrix h = word_matrix(m, h_long_word(m));
                   return Sides{mat_mul(h, h), I(m)};
                 },
                 "h_{2L_n}(-1) = (x_{2L_n}(-1) x_{-2L_n}(1) x_{2L_n}(-1))^2"});

  out.push_back({RelationId::HDecomposition, "h_{2L_n}(-1) = diag(1,..,-1_n,1,..,-1_2n)", model, {ln}, {},
                 [n](const GroupModel& m, const Assignment&) {
                   return Sides{word_matrix(m, h_long_word(m)),
                                diag_with(m, {{n - 1, Scalar(-1)}, {2 * n - 1, Scalar(-1)}})};
                 },
                 ""});

  if (model.family == Family::Sp) {
    out.push_back({RelationId::HDecomposition, "h_{L1-L2}(t) word = diag(t_1, 1/t_2, 1/t_{1+n}, t_{2+n})", model,
                   {d12}, {{"t", VarShape::Scalar}},
                   [n](const GroupModel& m, const Assignment& a) {
                     const Scalar& t = sc(a, "t");
                     return Sides{word_matrix(m, h_short_word(m, t)),
                                  diag_with(m, {{0, t}, {1, t.inverse()}, {n, t.inverse()}, {n + 1, t}})};
                   },
                   ""});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        Root s = Root::sum(n, i, j);
        out.push_back({RelationId::HDecomposition, "h_{L_i+L_j}(s) = diag(s_i, s_j, 1/s_{i+n}, 1/s_{j+n})", model,
                       {s}, {{"s", VarShape::Scalar}},
                       [s, i, j, n](const GroupModel& m, const Assignment& a) {
                         const Scalar& v = sc(a, "s");
                         return Sides{H(m, s, v), diag_with(m, {{i, v}, {j, v}, {i + n, v.inverse()}, {j + n, v.inverse()}})};
                       },
                       ""});
      }
    }
  } else {
    out.push_back({RelationId::HDecomposition, "h_{L1-L2}(t,0) word = diag(t_1, 1/t_2)", model, {d12},
                   {{"t", VarShape::First}},
                   [](const GroupModel& m, const Assignment& a) {
                     const Param& t = a.at("t");
                     return Sides{word_matrix(m, h_short_word(m, t)), diag_with(m, {{0, t[0]}, {1, t[0].inverse()}})};
                   },
                   ""});
    for (const auto& r : rs.roots()) {
      if (param_arity(model, r) != 2) continue;
      for (VarShape sh : {VarShape::Pair, VarShape::First, VarShape::Second}) {
        out.push_back({RelationId::HDecomposition, "h_r(t1,t2) = w_r(t1,t2) w_r(-1,-1) (literal reading)", model,
                       {r}, {{"t", sh}},
                       [r](const GroupModel& m, const Assignment& a) {
                         const Param& t = a.at("t");
                         Param minus = -reference_param(t);
                         return Sides{H(m, r, t), mat_mul(W(m, r, t), W(m, r, minus))};
                       },
                       "normalized h_r(t) = w_r(t) w_r(ref)^-1 agrees with the literal definition"});
      }
    }
  }
  return out;
}

std::vector<RelationInstance> presentation_relations(const GroupModel& model) {
  std::vector<RelationInstance> out = additivity_relations(model);
  for (auto&& v : {commutator_relations(model), trivial_commutator_relations(model), h_relations(model)}) {
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// ---------------------------------------------------------- weyl suites

namespace {

void add(std::vector<RelationInstance>& out, const GroupModel& model, const std::string& label,
         std::vector<Root> roots, std::vector<Variable> vars, Builder b, std::string note = "") {
  out.push_back({RelationId::WeylConj, label, model, std::move(roots), std::move(vars), std::move(b),
                 note.empty() ? "matrix image of the identity" : note});
}

void sp_weyl(std::vector<RelationInstance>& out, const GroupModel& model) {
  const std::size_t n = static_cast<std::size_t>(model.n);
  const Root dn = Root::diff(n, n - 2, n - 1);
  const Root sn = Root::sum(n, n - 2, n - 1);
  const Root ln = Root::twice(n, n - 1);
  const Root ln1 = Root::twice(n, n - 2);
  const std::vector<Variable> at = {{"a", VarShape::Scalar}, {"t1", VarShape::Scalar}};
  const Scalar one(1), minus_one(-1);

  add(out, model, "w_{2L_n}(a) w_{L_{n-1}-L_n}(t1) w_{2L_n}(a)^-1 = w_{L_{n-1}+L_n}(-a t1)", {ln, dn}, at,
      [=](const GroupModel& m, const Assignment& v) {
        const Scalar &a = sc(v, "a"), &t = sc(v, "t1");
        return Sides{product(m, {W(m, ln, a), W(m, dn, t), W_inv(m, ln, a)}), W(m, sn, -a * t)};
      });
  add(out, model, "w_{2L_n}(a) w_{L_{n-1}+L_n}(t1) w_{2L_n}(a)^-1 = w_{L_{n-1}-L_n}(a^-1 t1)", {ln, sn}, at,
      [=](const GroupModel& m, const Assignment& v) {
        const Scalar &a = sc(v, "a"), &t = sc(v, "t1");
        return Sides{product(m, {W(m, ln, a), W(m, sn, t), W_inv(m, ln, a)}), W(m, dn, a.inverse() * t)};
      });
  add(out, model, "w_{L_{n-1}-L_n}(t1) w_{2L_n}(a) w_{L_{n-1}-L_n}(t1)^-1 = w_{2L_{n-1}}(a t1^2)", {dn, ln}, at,
      [=](const GroupModel& m, const Assignment& v) {
        const Scalar &a = sc(v, "a"), &t = sc(v, "t1");
        return Sides{product(m, {W(m, dn, t), W(m, ln, a), W_inv(m, dn, t)}), W(m, ln1, a * t * t)};
      });
  add(out, model, "w_{L_{n-1}-L_n}(t1) w_{2L_{n-1}}(a) w_{L_{n-1}-L_n}(t1)^-1 = w_{2L_n}(a t1^-2)", {dn, ln1}, at,
      [=](const GroupModel& m, const Assignment& v) {
        const Scalar &a = sc(v, "a"), &t = sc(v, "t1");
        return Sides{product(m, {W(m, dn, t), W(m, ln1, a), W_inv(m, dn, t)}), W(m, ln, a * t.pow(-2))};
      });
  add(out, model, "h_{L_{n-1}-L_n}(t1) w_{2L_n}(a) h_{L_{n-1}-L_n}(t1)^-1 = w_{2L_n}(a t1^-2)", {dn, ln}, at,
      [=](const GroupModel& m, const Assignment& v) {
        const Scalar &a = sc(v, "a"), &t = sc(v, "t1");
        return Sides{product(m, {H(m, dn, t), W(m, ln, a), H_inv(m, dn, t)}), W(m, ln, a * t.pow(-2))};
      });
  add(out, model,
      "w_{2L_n}(a) h_{L_{n-1}-L_n}(t1) w_{2L_n}(a)^-1 = h_{L_{n-1}+L_n}(-a t1) h_{L_{n-1}+L_n}(-a)^-1", {ln, dn},
      at, [=](const GroupModel& m, const Assignment& v) {
        const Scalar &a = sc(v, "a"), &t = sc(v, "t1");
        return Sides{product(m, {W(m, ln, a), H(m, dn, t), W_inv(m, ln, a)}),
                     mat_mul(H(m, sn, -a * t), H_inv(m, sn, -a))};
      });

  add(out, model, "h_{L_{n-1}-L_n}(-1) h_{L_{n-1}+L_n}(-1) = e", {dn, sn}, {},
      [=](const GroupModel& m, const Assignment&) {
        return Sides{mat_mul(H(m, dn, minus_one), H(m, sn, minus_one)), I(m)};
      });
  add(out, model, "h_{L_{n-1}-L_n}(-1) h_{L_{n-1}+L_n}(-1)^-1 = e", {dn, sn}, {},
      [=](const GroupModel& m, const Assignment&) {
        return Sides{mat_mul(H(m, dn, minus_one), H_inv(m, sn, minus_one)), I(m)};
      });
  add(out, model, "h_{L_{n-1}-L_n}(-1)^2 = e", {dn}, {}, [=](const GroupModel& m, const Assignment&) {
    Matrix h = H(m, dn, minus_one);
    return Sides{mat_mul(h, h), I(m)};
  });
  add(out, model, "h_{L_{n-1}-L_n}(-1) = diag(-1_{n-1}, -1_n, -1_{2n-1}, -1_{2n})", {dn}, {},
      [=](const GroupModel& m, const Assignment&) {
        return Sides{H(m, dn, minus_one),
                     diag_with(m, {{n - 2, minus_one}, {n - 1, minus_one}, {2 * n - 2, minus_one}, {2 * n - 1, minus_one}})};
      });

  // h_{2L_n}(t) through t = z^2 and t = -z^2
  const std::vector<Variable> z = {{"z", VarShape::Scalar}};
  add(out, model, "h_{2L_n}(t) = w_{2L_n}(t) w_{2L_n}(-1)", {ln}, {{"t", VarShape::Scalar}},
      [=](const GroupModel& m, const Assignment& v) {
        const Scalar& t = sc(v, "t");
        return Sides{H(m, ln, t), mat_mul(W(m, ln, t), W(m, ln, minus_one))};
      });
  for (int sign : {1, -1}) {
    std::string s = sign > 0 ? "z^2" : "-z^2";
    add(out, model, "h_{2L_n}(" + s + ") = h_{L_{n-1}-L_n}(z^-1) w_{2L_n}(" + s + " z^-2) h_{L_{n-1}-L_n}(z^-1)^-1 w_{2L_n}(-1)",
        {ln, dn}, z, [=](const GroupModel& m, const Assignment& v) {
          const Scalar& zz = sc(v, "z");
          Scalar t = zz * zz * Scalar(sign);
          Scalar zi = zz.inverse();
          return Sides{H(m, ln, t),
                       product(m, {H(m, dn, zi), W(m, ln, t * zi * zi), H_inv(m, dn, zi), W(m, ln, minus_one)})};
        });
  }
  add(out, model, "h_{2L_n}(z^2) = h_{L_{n-1}-L_n}(z^-1) h_{L_{n-1}+L_n}(-1) h_{L_{n-1}+L_n}(-z^-1)^-1", {ln, dn, sn},
      z, [=](const GroupModel& m, const Assignment& v) {
        const Scalar& zz = sc(v, "z");
        Scalar zi = zz.inverse();
        return Sides{H(m, ln, zz * zz), product(m, {H(m, dn, zi), H(m, sn, minus_one), H_inv(m, sn, -zi)})};
      });
  add(out, model, "h_{2L_n}(-z^2) = h_{L_{n-1}-L_n}(z^-1) h_{L_{n-1}+L_n}(z^-1)^-1 h_{2L_n}(-1)", {ln, dn, sn}, z,
      [=](const GroupModel& m, const Assignment& v) {
        const Scalar& zz = sc(v, "z");
        Scalar zi = zz.inverse();
        return Sides{H(m, ln, -zz * zz), product(m, {H(m, dn, zi), H_inv(m, sn, zi), H(m, ln, minus_one)})};
      });
  (void)one;
}

void sl_weyl(std::vector<RelationInstance>& out, const GroupModel& model) {
  const std::size_t n = static_cast<std::size_t>(model.n);
  const Scalar zero(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Root d = Root::diff(n, i, j);
      const Root s = Root::sum(n, i, j);
      const Root li = Root::twice(n, i);
      const Root lj = Root::twice(n, j);
      const Root dji = Root::diff(n, j, i);
      const std::vector<Variable> vars = {{"a", VarShape::Scalar}, {"t", VarShape::Pair}};

      // conjugating w_{L_i-L_j}(t1,t2) by w_{L_i+L_j}(a,0), line by line
      auto lhs = [=](const GroupModel& m, const Assignment& v) {
        const Scalar& a = sc(v, "a");
        Param wa(a, zero);
        return product(m, {W(m, s, wa), W(m, d, v.at("t")), W_inv(m, s, wa)});
      };
      using Line = std::function<Matrix(const GroupModel&, const Scalar&, const Scalar&, const Scalar&)>;
      std::vector<std::pair<std::string, Line>> lines = {
          {"w_{L_i+L_j}(a,0) x_{L_i-L_j}(t1,t2) x_{L_j-L_i}(-t1^-1,-t2^-1) x_{L_i-L_j}(t1,t2) w_{L_i+L_j}(a,0)^-1",
           [=](const GroupModel& m, const Scalar& a, const Scalar& t1, const Scalar& t2) {
             Param wa(a, zero), t(t1, t2);
             return product(m, {W(m, s, wa), X(m, d, t), X(m, -d, Param(-t1.inverse(), -t2.inverse())), X(m, d, t),
                                W_inv(m, s, wa)});
           }},
          {"x_{-2L_j}(-a^-1 t1) x_{2L_i}(a t2) x_{2L_j}(a t1^-1) x_{-2L_i}(-a^-1 t2^-1) x_{-2L_j}(-a^-1 t1) x_{2L_i}(a t2)",
           [=](const GroupModel& m, const Scalar& a, const Scalar& t1, const Scalar& t2) {
             Scalar ai = a.inverse();
             return product(m, {X(m, -lj, -ai * t1), X(m, li, a * t2), X(m, lj, a * t1.inverse()),
                                X(m, -li, -ai * t2.inverse()), X(m, -lj, -ai * t1), X(m, li, a * t2)});
           }},
          {"x_{-2L_j}(-a^-1 t1) x_{2L_j}(a t1^-1) x_{2L_i}(a t2) x_{-2L_i}(-a^-1 t2^-1) x_{2L_i}(a t2) x_{-2L_j}(-a^-1 t1)",
           [=](const GroupModel& m, const Scalar& a, const Scalar& t1, const Scalar& t2) {
             Scalar ai = a.inverse();
             return product(m, {X(m, -lj, -ai * t1), X(m, lj, a * t1.inverse()), X(m, li, a * t2),
                                X(m, -li, -ai * t2.inverse()), X(m, li, a * t2), X(m, -lj, -ai * t1)});
           }},
          {"x_{-2L_j}(-a^-1 t1) x_{2L_j}(a t1^-1) w_{2L_i}(a t2) x_{-2L_j}(-a^-1 t1)",
           [=](const GroupModel& m, const Scalar& a, const Scalar& t1, const Scalar& t2) {
             Scalar ai = a.inverse();
             return product(m, {X(m, -lj, -ai * t1), X(m, lj, a * t1.inverse()), W(m, li, a * t2), X(m, -lj, -ai * t1)});
           }},
          {"x_{-2L_j}(-a^-1 t1) x_{2L_j}(a t1^-1) x_{-2L_j}(-a^-1 t1) w_{2L_i}(a t2)",
           [=](const GroupModel& m, const Scalar& a, const Scalar& t1, const Scalar& t2) {
             Scalar ai = a.inverse();
             return product(m, {X(m, -lj, -ai * t1), X(m, lj, a * t1.inverse()), X(m, -lj, -ai * t1), W(m, li, a * t2)});
           }},
          {"w_{-2L_j}(-a^-1 t1) w_{2L_i}(a t2)",
           [=](const GroupModel& m, const Scalar& a, const Scalar& t1, const Scalar& t2) {
             return mat_mul(W(m, -lj, -a.inverse() * t1), W(m, li, a * t2));
           }},
      };
      for (const auto& [text, line] : lines) {
        add(out, model, "w_{L_i+L_j}(a,0) w_{L_i-L_j}(t1,t2) w_{L_i+L_j}(a,0)^-1 = " + text, {s, d}, vars,
            [=](const GroupModel& m, const Assignment& v) {
              const Param& t = v.at("t");
              return Sides{lhs(m, v), line(m, sc(v, "a"), t[0], t[1])};
            });
      }
      add(out, model, "w_{2L_i}(a) w_{L_i+L_j}(t1,t2) w_{2L_i}(a)^-1 = w_{L_j-L_i}(t2 a^-1, -t1 a^-1)", {li, s}, vars,
          [=](const GroupModel& m, const Assignment& v) {
            const Scalar& a = sc(v, "a");
            const Param& t = v.at("t");
            Scalar ai = a.inverse();
            return Sides{product(m, {W(m, li, a), W(m, s, t), W_inv(m, li, a)}), W(m, dji, Param(t[1] * ai, -t[0] * ai))};
          });
      add(out, model, "w_{2L_i}(a) w_{L_i+L_j}(t,0) w_{2L_i}(a)^-1 = w_{L_j-L_i}(0, -t a^-1)", {li, s},
          {{"a", VarShape::Scalar}, {"t", VarShape::First}}, [=](const GroupModel& m, const Assignment& v) {
            const Scalar& a = sc(v, "a");
            const Param& t = v.at("t");
            return Sides{product(m, {W(m, li, a), W(m, s, t), W_inv(m, li, a)}), W(m, dji, Param(zero, -t[0] * a.inverse()))};
          });
    }
  }
  RootSystem rs(model);
  for (const auto& g : rs.roots()) {
    if (param_arity(model, g) == 2) {
      add(out, model, "w_g(t1,t2) = w_{-g}(-t1^-1,-t2^-1)", {g}, {{"t", VarShape::Pair}},
          [g](const GroupModel& m, const Assignment& v) {
            const Param& t = v.at("t");
            return Sides{W(m, g, t), W(m, -g, Param(-t[0].inverse(), -t[1].inverse()))};
          });
      add(out, model, "w_g(t,0) = w_{-g}(-t^-1,0)", {g}, {{"t", VarShape::First}},
          [g, zero](const GroupModel& m, const Assignment& v) {
            const Param& t = v.at("t");
            return Sides{W(m, g, t), W(m, -g, Param(-t[0].inverse(), zero))};
          });
      add(out, model, "w_g(0,t) = w_{-g}(0,-t^-1)", {g}, {{"t", VarShape::Second}},
          [g, zero](const GroupModel& m, const Assignment& v) {
            const Param& t = v.at("t");
            return Sides{W(m, g, t), W(m, -g, Param(zero, -t[1].inverse()))};
          });
    } else {
      add(out, model, "w_{2L_i}(t) = w_{-2L_i}(-t^-1)", {g}, {{"t", VarShape::Scalar}},
          [g](const GroupModel& m, const Assignment& v) {
            const Scalar& t = sc(v, "t");
            return Sides{W(m, g, t), W(m, -g, -t.inverse())};
          });
    }
  }
}

// w x_b(v) w^-1 is the root-group element at the permuted support of b
void permutation_action(std::vector<RelationInstance>& out, const GroupModel& model) {
  RootSystem rs(model);
  std::vector<Root> targets;
  for (const auto& b : rs.roots()) {
    if (param_arity(model, b) == 2) {
      targets.push_back(b.with_tag(1));
      targets.push_back(b.with_tag(2));
    } else {
      targets.push_back(b);
    }
  }
  // root space of each matrix position, and the first support entry of each target
  const std::size_t N = model.size();
  auto lookup = std::make_shared<std::vector<std::optional<Root>>>(N * N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) (*lookup)[i * N + j] = root_at(model, i, j);
  }
  for (const auto& g : rs.roots()) {
    std::vector<VarShape> shapes = param_arity(model, g) == 2
                                       ? std::vector<VarShape>{VarShape::Pair, VarShape::First, VarShape::Second}
                                       : std::vector<VarShape>{VarShape::Scalar};
    for (VarShape sh : shapes) {
      for (const auto& b : targets) {
        Matrix support = gen_f(model, b, Param(Scalar(1)));
        std::size_t bi = 0;
        while (support.row(bi).empty()) ++bi;
        std::size_t bj = support.row(bi).front().first;
        out.push_back({RelationId::WeylConj, "w_g(u) x_b(v) w_g(u)^-1 = x_{w_g(b)}(c)", model, {g, b},
                       {{"u", sh}, {"v", VarShape::Scalar}},
                       [g, b, bi, bj, N, lookup](const GroupModel& m, const Assignment& v) {
                         WElement w = gen_w(m, g, v.at("u"));
                         MonomialForm inv;
                         inv.perm.resize(N);
                         inv.diag.resize(N);
                         for (std::size_t k = 0; k < N; ++k) {
                           inv.perm[w.form.perm[k]] = k;
                           inv.diag[w.form.perm[k]] = w.form.diag[k].inverse();
                         }
                         Matrix lhs = product(m, {w.matrix, X(m, b, v.at("v")), inv.to_matrix(m.field)});
                         const auto& target = (*lookup)[w.form.perm[bi] * N + w.form.perm[bj]];
                         if (!target) throw Error("permuted support is not a root space");
                         return Sides{lhs, X(m, *target, root_coordinate(m, *target, lhs))};
                       },
                       "the conjugated letter's root is read off the permuted matrix support"});
      }
    }
  }
}

}  // namespace

std::vector<RelationInstance> weyl_relations(const GroupModel& model) {
  std::vector<RelationInstance> out;
  if (model.family == Family::Sp) {
    sp_weyl(out, model);
  } else if (model.is_sl()) {
    sl_weyl(out, model);
  } else {
    throw Error("Weyl conjugation suite needs the sp, sl-r or sl-c model");
  }
  permutation_action(out, model);
  return out;
}

std::vector<RelationInstance> monomial_relations(const GroupModel& model) {
  std::vector<RelationInstance> out;
  const std::size_t n = static_cast<std::size_t>(model.n);
  const std::size_t N = model.size();
  struct Slot {
    std::size_t k;
    int which;   // 1 or 2: t1 or t2
    bool inverse_negated;  // -t^-1 instead of t
  };
  auto expected = [N](const Param& t, std::vector<std::pair<std::size_t, std::size_t>> swaps, std::vector<Slot> slots) {
    MonomialForm f;
    for (std::size_t k = 0; k < N; ++k) {
      f.perm.push_back(k);
      f.diag.push_back(Scalar(1));
    }
    for (auto [a, b] : swaps) std::swap(f.perm[a], f.perm[b]);
    for (const auto& s : slots) {
      const Scalar& v = t[static_cast<std::size_t>(s.which - 1)];
      f.diag[s.k] = s.inverse_negated ? -v.inverse() : v;
    }
    return f;
  };
  auto add_form = [&](const std::string& label, const Root& r, VarShape sh,
                      std::vector<std::pair<std::size_t, std::size_t>> swaps, std::vector<Slot> slots) {
    out.push_back({RelationId::MonomialForm, label, model, {r}, {{"t", sh}},
                   [=](const GroupModel& m, const Assignment& v) {
                     const Param& t = v.at("t");
                     WElement w = gen_w(m, r, t);
                     MonomialForm want = expected(t, swaps, slots);
                     if (!(w.form == want)) throw Error("monomial decomposition differs from the display");
                     return Sides{w.matrix, want.to_matrix(m.field)};
                   },
                   ""});
  };
  for (std::size_t i = 0; i < n; ++i) {
    add_form("w_{2L_i}(t) = p(pi) diag((-t^-1)_i, t_{i+n})", Root::twice(n, i), VarShape::Scalar, {{i, i + n}},
             {{i, 1, true}, {i + n, 1, false}});
  }
  if (!model.is_sl()) return out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      Root d = Root::diff(n, i, j);
      add_form("w_{L_i-L_j}(t1,t2) = p(pi) diag((-t1^-1)_i, (t1)_j, (t2)_{i+n}, (-t2^-1)_{j+n})", d, VarShape::Pair,
               {{i, j}, {i + n, j + n}}, {{i, 1, true}, {j, 1, false}, {i + n, 2, false}, {j + n, 2, true}});
      add_form("w_{L_i-L_j}(t1,0) = p(pi) diag((-t1^-1)_i, (t1)_j)", d, VarShape::First, {{i, j}},
               {{i, 1, true}, {j, 1, false}});
      add_form("w_{L_i-L_j}(0,t2) = p(pi) diag((t2)_{i+n}, (-t2^-1)_{j+n})", d, VarShape::Second,
               {{i + n, j + n}}, {{i + n, 2, false}, {j + n, 2, true}});
      if (i < j) {
        Root s = Root::sum(n, i, j);
        add_form("w_{L_i+L_j}(t1,t2) = p(pi) diag((-t1^-1)_i, (-t2^-1)_j, (t2)_{i+n}, (t1)_{j+n})", s,
                 VarShape::Pair, {{i, j + n}, {j, i + n}},
                 {{i, 1, true}, {j, 2, true}, {i + n, 2, false}, {j + n, 1, false}});
        add_form("w_{L_i+L_j}(0,t2) = p(pi) diag((-t2^-1)_j, (t2)_{i+n})", s, VarShape::Second, {{j, i + n}},
                 {{j, 2, true}, {i + n, 2, false}});
        add_form("w_{L_i+L_j}(t1,0) = p(pi) diag((-t1^-1)_i, (t1)_{j+n})", s, VarShape::First, {{i, j + n}},
                 {{i, 1, true}, {j + n, 1, false}});
      }
    }
  }
  return out;
}

}  // namespace chev
