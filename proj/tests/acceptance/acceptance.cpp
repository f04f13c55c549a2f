// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// All comparisons are exact; the only pinned numbers are the time limits.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chev/arrangement.hpp"
#include "chev/cycles.hpp"
#include "chev/error.hpp"
#include "chev/relations.hpp"
#include "chev/symbols.hpp"

using namespace chev;

namespace {

constexpr double kRelationsLimit = 60.0;
constexpr double kCommutatorLimit = 30.0;
constexpr double kWordLimit = 10.0;
constexpr double kSymbolLimit = 5.0;
constexpr int kRandomOps = 10000;
constexpr unsigned kSeed = 20240611;

const Family kFamilies[] = {Family::Sp, Family::SLR, Family::SLC};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Scalar q(long a, long b = 1) { return Scalar(Rational(a, b)); }

CartanVector vec(std::initializer_list<long> xs) {
  CartanVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

Matrix diag(const GroupModel& m, const std::vector<Scalar>& d) {
  Matrix out(m.size(), m.field);
  for (std::size_t k = 0; k < d.size(); ++k) out.set(k, k, d[k]);
  return out;
}

// ------------------------------------------------------------ criterion 1

Outcome relation_suites() {
  Outcome o;
  auto start = Clock::now();
  std::size_t checked = 0;
  for (Family f : kFamilies) {
    for (int n : {2, 3, 4}) {
      GroupModel model(f, n);
      auto rels = presentation_relations(model);
      std::vector<Regime> regimes{Regime::Grid};
      if (n <= 3) regimes.push_back(Regime::Symbolic);
      for (Regime regime : regimes) {
        for (const auto& rep : verify_all(rels, regime, Grid::default_for(model))) {
          ++checked;
          if (!rep.pass) o.fail(model.name() + " " + to_string(regime) + ": " + rep.label);
        }
      }
    }
  }
  double t = seconds_since(start);
  if (t > kRelationsLimit) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(checked) + " instance runs in " + std::to_string(t) + " s";
  return o;
}

// ------------------------------------------------------------ criterion 2

Outcome commutator_oracle() {
  Outcome o;
  auto start = Clock::now();
  std::size_t pairs = 0;
  for (Family f : kFamilies) {
    for (int n : {2, 3}) {
      GroupModel model(f, n);
      const auto& g = Grid::default_for(model).values;
      RootSystem rs(model);
      for (const auto& r : rs.roots()) {
        for (const auto& p : rs.roots()) {
          if ((r + p).is_zero()) continue;
          ++pairs;
          std::string where = model.name() + " [" + r.to_string() + ", " + p.to_string() + "]";
          for (int k = 0; k < 3; ++k) {
            Param a = param_arity(model, r) == 2 ? Param(g[k], g[(k + 4) % g.size()]) : Param(g[k]);
            Param b = param_arity(model, p) == 2 ? Param(g[k + 5], g[(k + 2) % g.size()]) : Param(g[k + 5]);
            Matrix direct = x_commutator(model, r, p, a, b);
            if (r == p) {
              if (!direct.is_identity()) o.fail(where + ": self commutator is not I");
              continue;
            }
            auto d = decompose_commutator(model, r, p, a, b);
            if (!(d.reassembled == direct)) o.fail(where + ": reassembled product differs");
          }
          if (r == p) continue;
          for (const auto& sf : structure_functions(model, r, p)) {
            if (!sf.bidegree_ok) o.fail(where + ": law " + sf.to_string() + " has the wrong bidegree");
          }
        }
      }
    }
  }
  double t = seconds_since(start);
  if (t > kCommutatorLimit) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = std::to_string(pairs) + " ordered pairs in " + std::to_string(t) + " s";
  return o;
}

// ------------------------------------------------------------ criterion 3

Outcome conjugation_suites() {
  Outcome o;
  std::size_t checked = 0;
  for (Family f : kFamilies) {
    for (int n : {2, 3}) {
      GroupModel model(f, n);
      auto rels = weyl_relations(model);
      for (auto& r : monomial_relations(model)) rels.push_back(std::move(r));
      for (const auto& rep : verify_all(rels, Regime::Grid, Grid::default_for(model))) {
        ++checked;
        if (!rep.pass) o.fail(model.name() + ": " + rep.label);
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " identities";
  return o;
}

// ------------------------------------------------------------ criterion 4

Outcome diagonal_forms() {
  Outcome o;
  for (Family f : kFamilies) {
    for (int n : {2, 3, 4}) {
      GroupModel model(f, n);
      std::size_t nn = static_cast<std::size_t>(n);
      Root d12 = Root::diff(nn, 0, 1);
      for (const auto& t : Grid::default_for(model).values) {
        std::vector<Scalar> d(model.size(), Scalar(1));
        d[0] = t;
        d[1] = t.inverse();
        d[nn] = t.inverse();
        d[nn + 1] = t;
        Param p = model.is_sl() ? Param(t, t) : Param(t);
        if (!(gen_h(model, d12, p) == diag(model, d))) o.fail(model.name() + ": h_{L1-L2} at " + t.to_string());
      }
      Root ln = Root::twice(nn, nn - 1);
      Matrix h = gen_h(model, ln, Param(Scalar(-1)));
      std::vector<Scalar> d(model.size(), Scalar(1));
      d[nn - 1] = Scalar(-1);
      d[2 * nn - 1] = Scalar(-1);
      if (!(h == diag(model, d))) o.fail(model.name() + ": h_{2L_n}(-1) diagonal");
      if (!mat_mul(h, h).is_identity()) o.fail(model.name() + ": h_{2L_n}(-1) squared");
    }
  }
  return o;
}

// ------------------------------------------------------------ criterion 5

Outcome sl4_plane() {
  Outcome o;
  GroupModel std4(Family::SLStd, 2);
  auto roots = RootSystem(std4).roots();
  auto hps = lyapunov_hyperplanes(roots, 4);
  Plane plane = Plane::from_equations(4, {vec({1, 1, 1, 1}), vec({0, 1, 2, 3})});
  auto v = is_generic(plane, hps);
  if (v.generic || v.witness != GenericityVerdict::Witness::SharedLine) {
    o.fail("plane not reported non-generic by a shared line");
    return o;
  }
  auto normal = [](std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs) out.emplace_back(x);
    return out;
  };
  if (hps[*v.first].normal != normal({1, 0, 0, -1}) || hps[*v.second].normal != normal({0, 1, -1, 0})) {
    o.fail("witness pair is " + hps[*v.first].equation() + ", " + hps[*v.second].equation());
  }
  if (v.line != normal({1, -1, -1, 1})) o.fail("shared line differs");

  // Independent check of the line: it satisfies both plane equations and
  // both hyperplane equations, and those four equations have rank 3.
  CartanVector line = vec({1, -1, -1, 1});
  std::vector<CartanVector> eqs{vec({1, 1, 1, 1}), vec({0, 1, 2, 3}), vec({1, 0, 0, -1}), vec({0, 1, -1, 0})};
  Matrix m(4);
  for (std::size_t i = 0; i < 4; ++i) {
    Rational dot = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      dot += eqs[i][j] * line[j];
      m.set(i, j, Scalar(eqs[i][j]));
    }
    if (dot != 0) o.fail("line is off equation " + to_string(eqs[i]));
  }
  if (rank(m) != 3) o.fail("hyperplanes and plane equations do not cut a line");

  std::vector<Root> first{Root::diff(4, 2, 3), Root::diff(4, 1, 2)};
  std::vector<Root> second{Root::diff(4, 0, 2), Root::diff(4, 1, 2)};
  if (!is_stable_point(vec({5, -8, 1, 2}), first)) o.fail("(5,-8,1,2) not stable for {L3-L4, L2-L3}");
  if (!is_stable_point(vec({0, -1, 2, -1}), second)) o.fail("(0,-1,2,-1) not stable for {L1-L3, L2-L3}");

  for (const Scalar& t : {q(1), q(3, 2), q(-2, 7)}) {
    Letter target = Letter::x(Root::diff(4, 0, 3), Param(t));
    auto d = bracket_decompose(std4, target, plane, {Root::diff(4, 1, 2)});
    if (!(d.left == Letter::x(Root::diff(4, 0, 2), Param(t))) || !(d.right == Letter::x(Root::diff(4, 2, 3), Param(1)))) {
      o.fail("bracket for t = " + t.to_string() + " is " + d.expression());
    }
    Word replayed{std4, {d.left, d.right, d.left.inverse(), d.right.inverse(), target.inverse()}};
    if (!word_eval(replayed).is_identity()) o.fail("bracket replay is not exact");
  }
  return o;
}

// ------------------------------------------------------------ criterion 6

Outcome reduction_engine() {
  Outcome o;
  std::size_t words = 0;
  double slowest = 0;
  for (Family f : kFamilies) {
    for (int n : {2, 3}) {
      GroupModel model(f, n);
      Plane region = Plane::full(model.rank());
      bool saw_h_mult = false;
      for (const auto& nw : relation_words(model)) {
        ++words;
        saw_h_mult = saw_h_mult || nw.relation == RelationId::HMult;
        std::string where = model.name() + " " + nw.label;
        auto start = Clock::now();
        auto trace = reduce_cycle(nw.word, region);
        double t = seconds_since(start);
        slowest = std::max(slowest, t);
        if (!trace.complete || !trace.final_word.letters.empty()) o.fail(where + ": " + trace.reason);
        if (auto bad = replay(trace)) o.fail(where + ": replay breaks at move " + std::to_string(*bad));
        if (t > kWordLimit) o.fail(where + ": took " + std::to_string(t) + " s");
      }
      if (!saw_h_mult) o.fail(model.name() + ": no h-multiplicativity word");
      auto h = h_multiplicativity_word(model, Root::diff(model.rank(), 0, 1),
                                       model.is_sl() ? Param(q(2), q(0)) : Param(q(2)),
                                       model.is_sl() ? Param(q(-3, 2), q(0)) : Param(q(-3, 2)));
      if (h.letters.size() != 12) o.fail(model.name() + ": h-multiplicativity word has " +
                                         std::to_string(h.letters.size()) + " letters");
      auto trace = reduce_cycle(h, region);
      if (!trace.complete || replay(trace)) o.fail(model.name() + ": 12-letter word does not reduce");
    }
  }
  if (o.pass) o.detail = std::to_string(words) + " words, slowest " + std::to_string(slowest) + " s";
  return o;
}

// ------------------------------------------------------------ criterion 7

Outcome symbol_engine() {
  Outcome o;
  auto start = Clock::now();
  Universe u = parse_universe("1,-1,2,-2,3,-3,1/2,-1/2,1/3,-1/3,6,-6,2/3,-2/3");
  AxiomLattice all = build_axiom_lattice(u);
  AxiomLattice bilinear = build_axiom_lattice(u, {AxiomKind::BilinearFirst, AxiomKind::BilinearSecond});

  auto certify = [&](const std::string& text) {
    SymbolExpr e = parse_symbol_expr(text);
    auto res = is_consequence(e, all);
    if (!res.holds || !res.certificate) {
      o.fail(text + " not certified");
    } else if (!replay(e, all, *res.certificate).is_empty()) {
      o.fail(text + " certificate does not replay");
    }
  };
  certify("{2,-2}");
  certify("{2,2}*{2,-1}^-1");
  if (is_consequence(parse_symbol_expr("{2,3}"), bilinear).holds) o.fail("{2,3} follows from bilinearity alone");

  double t = seconds_since(start);
  if (t > kSymbolLimit) o.fail("took " + std::to_string(t) + " s");
  return o;
}

// ------------------------------------------------------------ criterion 8

Outcome exactness() {
  Outcome o;
  std::mt19937 rng(kSeed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto small = [&]() {
    int den = pick(1, 9);
    Rational r(pick(-12, 12), den);
    r.canonicalize();
    return r;
  };
  auto random_scalar = [&](Field f) -> Scalar {
    switch (f) {
      case Field::Rational:
        return Scalar(small());
      case Field::Gaussian:
        return Scalar(Gaussian(small(), small()));
      case Field::Laurent: {
        static const char* names[] = {"a", "b", "c"};
        Scalar s(small());
        for (int k = 0; k < 2; ++k) s += Scalar(small()) * Scalar::symbol(names[pick(0, 2)]).pow(pick(-2, 2));
        return s;
      }
    }
    return Scalar(0);
  };

  std::vector<std::function<Scalar(const Scalar&, const Scalar&)>> binary{
      [](const Scalar& x, const Scalar& y) { return x + y; },
      [](const Scalar& x, const Scalar& y) { return x - y; },
      [](const Scalar& x, const Scalar& y) { return x * y; },
      [](const Scalar& x, const Scalar& y) { return y.is_zero() ? x : x / y; },
      [](const Scalar& x, const Scalar&) { return x.is_zero() ? x : x.inverse(); },
      [](const Scalar& x, const Scalar&) { return -x; },
      [](const Scalar& x, const Scalar&) { return x.is_zero() ? x : x.pow(-2); },
  };

  const Field fields[] = {Field::Rational, Field::Gaussian, Field::Laurent};
  std::vector<Scalar> pool[3];
  for (int k = 0; k < 3; ++k) {
    for (int j = 0; j < 4; ++j) pool[k].push_back(random_scalar(fields[k]));
  }
  int ops = 0;
  auto check = [&](const Scalar& s, const std::string& what) {
    if (!s.is_canonical()) o.fail(what + " gave non-canonical " + s.to_string());
    Scalar back = parse_scalar(s.to_string());
    if (!(back == s) || back.to_string() != s.to_string()) o.fail(what + " does not round-trip: " + s.to_string());
  };
  while (ops < kRandomOps) {
    int kind = pick(0, 9);
    int fk = pick(0, 2);
    auto& p = pool[fk];
    if (kind < 8) {
      const Scalar& x = p[pick(0, static_cast<int>(p.size()) - 1)];
      const Scalar& y = pick(0, 3) == 0 ? random_scalar(fields[pick(0, fk == 1 ? 1 : 0)])
                                        : p[pick(0, static_cast<int>(p.size()) - 1)];
      Scalar r = binary[pick(0, static_cast<int>(binary.size()) - 1)](x, y);
      check(r, "scalar operation");
      // keep sizes bounded so the run stays fast
      if (r.to_string().size() < 120) p[pick(0, static_cast<int>(p.size()) - 1)] = r;
      ++ops;
    } else if (kind == 8 && fk == 2) {
      std::map<std::string, Scalar, std::less<>> values{{"a", Scalar(small())}, {"b", q(pick(1, 5))}, {"c", q(-1)}};
      const Scalar& x = p[pick(0, static_cast<int>(p.size()) - 1)];
      try {
        check(x.substitute(values), "substitution");
      } catch (const DivisionByZero&) {
      }
      ++ops;
    } else {
      // matrix path: product of two random generators and its inverse
      Family f = kFamilies[pick(0, 2)];
      GroupModel model(f, pick(2, 3));
      RootSystem rs(model);
      const auto& roots = rs.roots();
      auto gen = [&]() {
        const Root& r = roots[static_cast<std::size_t>(pick(0, static_cast<int>(roots.size()) - 1))];
        Field pf = model.family == Family::SLC ? fields[pick(0, 1)] : Field::Rational;
        Param a = param_arity(model, r) == 2 ? Param(random_scalar(pf), random_scalar(pf)) : Param(random_scalar(pf));
        return gen_x(model, r, a);
      };
      Matrix m = mat_mul(gen(), gen());
      Matrix inv = mat_inv(m);
      for (const Matrix* mm : {&m, &inv}) {
        for (std::size_t i = 0; i < mm->size(); ++i) {
          for (const auto& [j, v] : mm->row(i)) {
            if (v.is_zero()) o.fail("matrix stores an explicit zero");
            check(v, "matrix product");
          }
        }
      }
      ops += 2;
    }
  }
  if (o.pass) o.detail = std::to_string(ops) + " operations";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "relation suites, grid n=2..4 and symbolic n=2,3", relation_suites},
      {2, "commutator decomposition matches the direct commutator", commutator_oracle},
      {3, "Weyl conjugation and monomial-form identities", conjugation_suites},
      {4, "diagonal forms of h elements", diagonal_forms},
      {5, "non-generic SL(4) plane, stable points, bracket", sl4_plane},
      {6, "relation words reduce to the empty word", reduction_engine},
      {7, "symbol consequences and certificates", symbol_engine},
      {8, "scalars stay canonical under mixed operations", exactness},
  };
  bool all = true;
  for (const auto& c : criteria) {
    Outcome o;
    auto start = Clock::now();
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    all = all && o.pass;
    std::ostringstream line;
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
    if (!o.detail.empty()) line << " (" << o.detail << ")";
    line << " [" << seconds_since(start) << " s]";
    std::cout << line.str() << std::endl;
  }
  return all ? 0 : 1;
}
