#include "chev/cycles.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "chev/error.hpp"

namespace chev {

std::string Word::to_string() const {
  std::string s;
  for (const auto& l : letters) s += l.to_string() + "\n";
  return s;
}

Word parse_word(std::string_view text, const GroupModel& model) {
  Word w{model, {}};
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line[first] != '#') {
      Letter l = parse_letter(line);
      if (l.kind == LetterKind::X) {
        check_generator(model, l.root, l.param);
        w.letters.push_back(std::move(l));
      } else {
        for (auto& x : expand_to_x(model, l)) w.letters.push_back(std::move(x));
      }
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return w;
}

Matrix word_eval(const Word& w) {
  Matrix m = Matrix::identity(w.model.size(), w.model.field);
  for (const auto& l : w.letters) m = mat_mul(m, letter_matrix(w.model, l));
  return m;
}

namespace {

std::vector<Root> distinct_roots(const std::vector<Letter>& ls) {
  std::vector<Root> out;
  for (const auto& l : ls) {
    Root r = l.root.untagged();
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

Stability stability_of(const Plane& region, std::vector<Root> roots) {
  if (roots.empty()) return {true, CartanVector(region.ambient_dim(), Rational(0))};
  auto res = find_stable_element(region, roots);
  return {res.feasible, res.feasible ? res.point : CartanVector{}};
}

Param unit_param(std::size_t arity) { return arity == 2 ? Param(Scalar(1), Scalar(1)) : Param(Scalar(1)); }

Param opposite(const Param& p) {
  std::vector<Scalar> v;
  for (const auto& c : p.values()) v.push_back(c.is_zero() ? c : -c.inverse());
  return v.size() == 1 ? Param(v[0]) : Param(v[0], v[1]);
}

Param times(const Param& a, const Param& b) {
  if (a.arity() == 1) return Param(a[0] * b[0]);
  return Param(a[0] * b[0], a[1] * b[1]);
}

std::map<std::string, Scalar, std::less<>> slot_values(const char* name, const Param& p) {
  std::map<std::string, Scalar, std::less<>> out;
  if (p.arity() == 1) {
    out.emplace(name, p[0]);
  } else {
    out.emplace(std::string(name) + "1", p[0]);
    out.emplace(std::string(name) + "2", p[1]);
  }
  return out;
}

// Structure laws are symbolic and independent of the field, so they are
// shared across calls.
const std::vector<StructureFunction>& laws_for(const GroupModel& model, const Root& r, const Root& p) {
  static std::mutex mu;
  static std::map<std::string, std::vector<StructureFunction>> cache;
  std::string key = to_string(model.family) + std::to_string(model.n) + "|" + r.to_string() + "|" + p.to_string();
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, structure_functions(model, r, p)).first;
  return it->second;
}

// prod x_s(g_s(a, b)) for [x_r(a), x_p(b)]
std::vector<Letter> commutator_letters(const GroupModel& model, const Root& r, const Param& a, const Root& p,
                                       const Param& b) {
  auto values = slot_values("a", a);
  values.merge(slot_values("b", b));
  std::vector<Letter> out;
  for (const auto& s : laws_for(model, r, p)) {
    Param g = s.law.substitute(values);
    if (!g.is_zero()) out.push_back(Letter::x(s.target, g));
  }
  return out;
}

bool same_root(const Letter& a, const Letter& b) { return a.root == b.root; }

bool is_w_triple(const std::vector<Letter>& ls, std::size_t i, const Root& r, Param& u) {
  const Letter &a = ls[i], &b = ls[i + 1], &c = ls[i + 2];
  if (!(a.root == r) || !(c.root == r) || !(b.root == -r)) return false;
  if (!(a.param == c.param) || a.param.is_zero()) return false;
  if (!(b.param == opposite(a.param))) return false;
  u = a.param;
  return true;
}

// w(s) w(-ref) w(t) w(-st) starting at i
bool is_h_word(const std::vector<Letter>& ls, std::size_t i) {
  if (i + 12 > ls.size()) return false;
  const Root& r = ls[i].root;
  Param u[4];
  for (int k = 0; k < 4; ++k) {
    if (!is_w_triple(ls, i + 3 * static_cast<std::size_t>(k), r, u[k])) return false;
  }
  Param ref = reference_param(u[0]);
  return u[1] == -ref && reference_param(u[2]) == ref && u[3] == -times(u[0], u[2]) && reference_param(u[3]) == ref;
}

bool key_less(const Letter& a, const Letter& b, const CartanVector& witness) {
  Rational ha = -root_eval(a.root, witness), hb = -root_eval(b.root, witness);
  if (ha != hb) return ha < hb;
  return a.root.coeffs < b.root.coeffs;
}

class Reducer {
 public:
  Reducer(const Plane& region) : region_(region) {}

  const Stability& stability(std::vector<Root> roots) {
    std::sort(roots.begin(), roots.end(), [](const Root& a, const Root& b) { return a.coeffs < b.coeffs; });
    std::string key;
    for (const auto& r : roots) key += r.to_string() + ";";
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, stability_of(region_, roots)).first;
    return it->second;
  }

  std::optional<ReductionMove> next(const Word& w) {
    const auto& ls = w.letters;
    const std::size_t n = ls.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (ls[i].param.is_zero()) return ReductionMove{MoveKind::FreeCancellation, std::nullopt, i, 1, {}, {}};
      if (i + 1 < n && same_root(ls[i], ls[i + 1]) && (ls[i].param + ls[i + 1].param).is_zero()) {
        return ReductionMove{MoveKind::FreeCancellation, std::nullopt, i, 2, {}, {}};
      }
    }
    for (std::size_t i = 0; i + 12 <= n; ++i) {
      if (is_h_word(ls, i)) return ReductionMove{MoveKind::RelationSubstitution, RelationId::HMult, i, 12, {}, {}};
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (same_root(ls[i], ls[i + 1])) {
        return ReductionMove{MoveKind::RelationSubstitution, RelationId::Additivity, i, 2,
                             {Letter::x(ls[i].root, ls[i].param + ls[i + 1].param)}, {}};
      }
    }
    const Stability& whole = stability(distinct_roots(ls));
    if (!whole.stable) return std::nullopt;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (!key_less(ls[i + 1], ls[i], whole.witness)) continue;
      const Letter &a = ls[i], &b = ls[i + 1];
      std::vector<Letter> ins = commutator_letters(w.model, a.root, a.param, b.root, b.param);
      RelationId id = laws_for(w.model, a.root, b.root).empty() ? RelationId::TrivialCommutator : RelationId::Commutator;
      ins.push_back(b);
      ins.push_back(a);
      return ReductionMove{MoveKind::RelationSubstitution, id, i, 2, std::move(ins), {}};
    }
    return std::nullopt;
  }

 private:
  const Plane& region_;
  std::map<std::string, Stability> cache_;
};

}  // namespace

Stability is_stable_word(const Word& w, const Plane& region) { return stability_of(region, distinct_roots(w.letters)); }

const char* to_string(MoveKind k) {
  switch (k) {
    case MoveKind::FreeCancellation: return "FreeCancellation";
    case MoveKind::RelationSubstitution: return "RelationSubstitution";
    case MoveKind::ConjugationPush: return "ConjugationPush";
  }
  return "?";
}

Word apply_move(const Word& w, const ReductionMove& m) {
  Word out = w;
  auto& ls = out.letters;
  if (m.kind == MoveKind::ConjugationPush) {
    if (m.position > ls.size()) throw SizeMismatch("rotation past the end of the word");
    std::rotate(ls.begin(), ls.begin() + static_cast<std::ptrdiff_t>(m.position), ls.end());
    return out;
  }
  if (m.position + m.removed > ls.size()) throw SizeMismatch("move range past the end of the word");
  auto at = ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(m.position),
                     ls.begin() + static_cast<std::ptrdiff_t>(m.position + m.removed));
  ls.insert(at, m.inserted.begin(), m.inserted.end());
  return out;
}

ReductionTrace reduce_cycle(const Word& w, const Plane& region, std::size_t budget) {
  for (const auto& l : w.letters) {
    if (l.kind != LetterKind::X) throw NotACycle("cycle words contain x-letters only, got " + l.to_string());
  }
  if (!word_eval(w).is_identity()) throw NotACycle("word does not evaluate to the identity");
  ReductionTrace t{w, {}, w, false, ""};
  Reducer red(region);
  Word cur = w;
  std::size_t rotations = 0;
  while (!cur.letters.empty()) {
    if (t.moves.size() >= budget) {
      t.reason = "budget of " + std::to_string(budget) + " moves exhausted";
      break;
    }
    auto m = red.next(cur);
    std::vector<Letter> touched;
    if (m) {
      rotations = 0;
      touched.assign(cur.letters.begin() + static_cast<std::ptrdiff_t>(m->position),
                     cur.letters.begin() + static_cast<std::ptrdiff_t>(m->position + m->removed));
    } else if (rotations < cur.letters.size()) {
      ++rotations;
      m = ReductionMove{MoveKind::ConjugationPush, std::nullopt, 1, 0, {}, {}};
      touched.push_back(cur.letters.front());
    } else {
      t.reason = "no applicable move";
      break;
    }
    touched.insert(touched.end(), m->inserted.begin(), m->inserted.end());
    m->stability = red.stability(distinct_roots(touched));
    cur = apply_move(cur, *m);
    t.moves.push_back(std::move(*m));
  }
  t.final_word = cur;
  t.complete = cur.letters.empty();
  return t;
}

std::optional<std::size_t> replay(const ReductionTrace& t) {
  const Matrix target = word_eval(t.initial);
  Word cur = t.initial;
  for (std::size_t k = 0; k < t.moves.size(); ++k) {
    const ReductionMove& m = t.moves[k];
    Word next = cur;
    try {
      next = apply_move(cur, m);
    } catch (const Error&) {
      return k;
    }
    if (!(word_eval(next) == target)) return k;
    if (m.stability.stable) {
      std::vector<Letter> touched = m.inserted;
      if (m.kind == MoveKind::ConjugationPush) {
        touched.insert(touched.end(), cur.letters.begin(), cur.letters.begin() + static_cast<std::ptrdiff_t>(m.position));
      } else {
        touched.insert(touched.end(), cur.letters.begin() + static_cast<std::ptrdiff_t>(m.position),
                       cur.letters.begin() + static_cast<std::ptrdiff_t>(m.position + m.removed));
      }
      if (!is_stable_point(m.stability.witness, distinct_roots(touched))) return k;
    }
    cur = std::move(next);
  }
  if (!(cur.letters == t.final_word.letters)) return t.moves.size();
  return std::nullopt;
}

Word h_multiplicativity_word(const GroupModel& model, const Root& r, const Param& s, const Param& t) {
  Word w{model, {}};
  auto add_w = [&](const Param& u) {
    w.letters.push_back(Letter::x(r, u));
    w.letters.push_back(Letter::x(-r, opposite(u)));
    w.letters.push_back(Letter::x(r, u));
  };
  Param ref = reference_param(s);
  add_w(s);
  add_w(-ref);
  add_w(t);
  add_w(-times(s, t));
  return w;
}

std::vector<NamedWord> relation_words(const GroupModel& model) {
  const auto& g = Grid::default_for(model).values;
  auto sample = [&](const Root& r, bool second) {
    if (param_arity(model, r) == 2) return second ? Param(g[4], g[9]) : Param(g[2], g[7]);
    return second ? Param(g[4]) : Param(g[2]);
  };
  std::vector<NamedWord> out;
  RootSystem rs(model);
  for (const auto& r : rs.roots()) {
    Param a = sample(r, false), b = sample(r, true);
    out.push_back({RelationId::Additivity, "x_r(a) x_r(b) x_r(-a-b) [" + r.to_string() + "]",
                   Word{model, {Letter::x(r, a), Letter::x(r, b), Letter::x(r, -(a + b))}}});
  }
  for (const auto& r : rs.roots()) {
    for (const auto& p : rs.roots()) {
      if ((r + p).is_zero()) continue;
      Param a = sample(r, false), b = sample(p, true);
      Word w{model, {Letter::x(r, a), Letter::x(p, b), Letter::x(r, -a), Letter::x(p, -b)}};
      bool trivial = r == p || rs.positive_combinations(r, p).empty();
      if (!trivial) {
        auto factors = commutator_letters(model, r, a, p, b);
        for (auto it = factors.rbegin(); it != factors.rend(); ++it) w.letters.push_back(it->inverse());
      }
      out.push_back({trivial ? RelationId::TrivialCommutator : RelationId::Commutator,
                     "[x_r(a), x_p(b)] prod^-1 [" + r.to_string() + "] [" + p.to_string() + "]", std::move(w)});
    }
  }
  Root d = Root::diff(static_cast<std::size_t>(model.rank()), 0, 1);
  Param s = model.is_sl() && model.family != Family::SLStd ? Param(g[2], Scalar(0)) : Param(g[2]);
  Param t = model.is_sl() && model.family != Family::SLStd ? Param(g[4], Scalar(0)) : Param(g[4]);
  out.push_back({RelationId::HMult, "h(s) h(t) h(st)^-1 [" + d.to_string() + "]", h_multiplicativity_word(model, d, s, t)});
  return out;
}

std::string BracketDecomposition::expression() const { return "[" + left.to_string() + ", " + right.to_string() + "]"; }

namespace {

// law component k * sym with a single symbol of degree one
bool linear_term(const Scalar& s, std::string& sym, Rational& k) {
  const auto& f = s.as_function();
  if (!f.den().is_one() || !f.num().is_monomial()) return false;
  const auto& t = f.num().leading();
  if (t.monomial.powers().size() != 1 || t.monomial.powers()[0].second != 1) return false;
  sym = t.monomial.powers()[0].first.name();
  k = t.coeff;
  return true;
}

}  // namespace

BracketDecomposition bracket_decompose(const GroupModel& model, const Letter& target, const Plane& region,
                                       const std::vector<Root>& companions) {
  if (target.kind != LetterKind::X) throw NoDecomposition("bracket decomposition needs an x-letter target");
  check_generator(model, target.root, target.param);
  const Matrix want = letter_matrix(model, target);
  RootSystem rs(model);
  std::vector<std::string> tried;
  auto stable_with = [&](const Root& r) {
    std::vector<Root> set = companions;
    set.push_back(r);
    return stability_of(region, set);
  };
  for (const auto& q : rs.roots()) {
    Root p(target.root.coeffs);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) p.coeffs[k] -= q.coeffs[k];
    if (!rs.contains(p)) continue;
    std::string name = p.to_string() + "|" + q.to_string();
    const auto& laws = laws_for(model, p, q);
    if (laws.size() != 1 || !laws[0].target.same_functional(target.root)) {
      tried.push_back(name + ": commutator has other factors");
      continue;
    }
    Param unit = unit_param(param_arity(model, q));
    auto values = slot_values("b", unit);
    values.merge(slot_values("a", symbolic_param({"a", param_arity(model, p) == 2 ? VarShape::Pair : VarShape::Scalar})));
    Param law = laws[0].law.substitute(values);
    std::map<std::string, Scalar> solved;
    bool ok = true;
    for (std::size_t c = 0; c < law.arity() && ok; ++c) {
      const Scalar& want_c = target.param[c];
      if (law[c].is_zero()) {
        ok = want_c.is_zero();
        continue;
      }
      std::string sym;
      Rational k;
      ok = linear_term(law[c], sym, k);
      if (ok) solved[sym] = want_c / Scalar(k);
    }
    if (!ok) {
      tried.push_back(name + ": structure law cannot reach the target parameter");
      continue;
    }
    auto value = [&](const std::string& s) {
      auto it = solved.find(s);
      return it == solved.end() ? Scalar(0).promoted(model.field) : it->second;
    };
    Param u = param_arity(model, p) == 2 ? Param(value("a1"), value("a2")) : Param(value("a"));
    if (u.is_zero() || !(x_commutator(model, p, q, u, unit) == want)) {
      tried.push_back(name + ": commutator differs from the target");
      continue;
    }
    Stability sp = stable_with(p), sq = stable_with(q);
    if (!sp.stable || !sq.stable) {
      tried.push_back(name + ": " + (sp.stable ? q : p).to_string() + " is not stable with the companions");
      continue;
    }
    return {target, Letter::x(p, u), Letter::x(q, unit), sp.witness, sq.witness, tried};
  }
  std::string msg = "no bracket decomposition of " + target.to_string();
  for (const auto& s : tried) msg += "; " + s;
  if (tried.empty()) msg += ": the target root is not a sum of two roots";
  throw NoDecomposition(msg);
}

}  // namespace chev
