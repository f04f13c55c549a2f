#include <catch_amalgamated.hpp>

#include "chev/chevalley.hpp"
#include "chev/error.hpp"

using namespace chev;

namespace {

Root R(std::initializer_list<int> c) { return Root(std::vector<int>(c)); }

// 1-based elementary matrix
Matrix e(const GroupModel& m, std::size_t i, std::size_t j) { return Matrix::unit(m.size(), i - 1, j - 1, m.field); }

const std::vector<Scalar> kSamples = {Scalar(1), Scalar(-1), Scalar(2), Scalar(Rational(-2, 3)), Scalar(Rational(5, 7))};

}  // namespace

TEST_CASE("gen_f table entries") {
  GroupModel sp(Family::Sp, 3);
  Scalar t(Rational(3, 2));
  for (std::size_t i = 1; i <= 3; ++i) {
    CHECK(gen_f(sp, Root::twice(3, i - 1), t) == e(sp, i, i + 3).scaled(t));
    CHECK(gen_f(sp, Root::twice(3, i - 1, -1), t) == e(sp, i + 3, i).scaled(t));
  }
  GroupModel sl(Family::SLR, 3);
  Scalar t1(2), t2(Rational(-1, 3));
  CHECK(gen_f(sl, R({1, 0, -1}), Param(t1, t2)) == e(sl, 1, 3).scaled(t1) + e(sl, 6, 4).scaled(t2));
  CHECK_THROWS_AS(gen_f(sl, R({1, 0, -1}), Param(t1)), ArityMismatch);
  CHECK_THROWS_AS(gen_f(sp, R({1, 0, -1}), Param(t1, t2)), ArityMismatch);
}

TEST_CASE("root vectors lie in the Lie algebra") {
  for (Family f : {Family::Sp, Family::SLR, Family::SLC, Family::SLStd}) {
    for (int n = 2; n <= 4; ++n) {
      GroupModel m(f, n);
      for (const auto& r : RootSystem(m).roots()) {
        Param p = param_arity(m, r) == 1 ? Param(Scalar(3)) : Param(Scalar(3), Scalar(-5));
        Matrix x = gen_f(m, r, p);
        CHECK(in_lie_algebra(x, m));
        CHECK(mat_mul(x, x).is_zero());
        CHECK(exp_nilpotent(x) == gen_x(m, r, p));
      }
    }
  }
}

TEST_CASE("the minus-sign reading of the long-sum root vector is not symplectic") {
  GroupModel sp(Family::Sp, 2);
  CHECK_FALSE(in_lie_algebra(e(sp, 1, 4) - e(sp, 2, 3), sp));
  CHECK(in_lie_algebra(e(sp, 1, 4) + e(sp, 2, 3), sp));
  // printed index for the negative long root
  CHECK_FALSE(in_lie_algebra(e(sp, 3, 2), sp));
  CHECK(in_lie_algebra(e(sp, 3, 1), sp));
}

TEST_CASE("gen_x examples") {
  GroupModel sp(Family::Sp, 2);
  Matrix I = Matrix::identity(4);
  CHECK(gen_x(sp, R({1, -1}), Scalar(0)) == I);
  Scalar t(Rational(-7, 4));
  CHECK(gen_x(sp, R({1, -1}), t) == I + (e(sp, 1, 2) - e(sp, 4, 3)).scaled(t));
  GroupModel sl(Family::SLR, 2);
  Scalar t1(3), t2(Rational(1, 2));
  Matrix f1 = e(sl, 1, 2).scaled(t1), f2 = e(sl, 4, 3).scaled(t2);
  CHECK(gen_x(sl, R({1, -1}), Param(t1, t2)) == I + f1 + f2);
  CHECK(exp_nilpotent(f1 + f2) == mat_mul(exp_nilpotent(f1), exp_nilpotent(f2)));
}

TEST_CASE("membership") {
  GroupModel sp(Family::Sp, 2);
  Matrix I = Matrix::identity(4);
  CHECK(check_membership(I, sp));
  Matrix x = I + e(sp, 1, 3).scaled(Scalar(3));
  CHECK(x == gen_x(sp, R({2, 0}), Scalar(3)));
  CHECK(check_membership(x, sp));
  CHECK_FALSE(check_membership(I + e(sp, 1, 3) + e(sp, 2, 4).scaled(Scalar(2)) + e(sp, 1, 4), sp));
  CHECK_FALSE(check_membership(Matrix::diagonal({Scalar(2), Scalar(1), Scalar(1), Scalar(1)}), sp));
  CHECK_FALSE(check_membership(Matrix::diagonal({Scalar(2), Scalar(1), Scalar(1), Scalar(1)}), GroupModel(Family::SLR, 2)));
  CHECK_THROWS_AS(check_membership(Matrix::identity(6), sp), SizeMismatch);
}

TEST_CASE("membership closed under products and inverses") {
  for (Family f : {Family::Sp, Family::SLR, Family::SLC}) {
    GroupModel m(f, 3);
    RootSystem rs(m);
    Matrix g = Matrix::identity(m.size(), m.field);
    std::size_t k = 0;
    for (const auto& r : rs.roots()) {
      const Scalar& a = kSamples[k++ % kSamples.size()];
      Param p = param_arity(m, r) == 1 ? Param(a) : Param(a, kSamples[k % kSamples.size()]);
      Matrix x = gen_x(m, r, p);
      CHECK(check_membership(x, m));
      g = mat_mul(g, x);
    }
    CHECK(check_membership(g, m));
    CHECK(check_membership(mat_inv(g), m));
  }
}

TEST_CASE("gen_w monomial forms") {
  GroupModel sp(Family::Sp, 3);
  Scalar t(Rational(-2, 5));
  for (std::size_t i = 0; i < 3; ++i) {
    auto w = gen_w(sp, Root::twice(3, i), t);
    MonomialForm want;
    for (std::size_t k = 0; k < 6; ++k) {
      want.perm.push_back(k);
      want.diag.push_back(Scalar(1));
    }
    std::swap(want.perm[i], want.perm[i + 3]);
    want.diag[i] = -t.inverse();
    want.diag[i + 3] = t;
    CHECK(w.form == want);
    CHECK(w.form.to_matrix(sp.field) == w.matrix);
  }
  GroupModel sl(Family::SLR, 3);
  Scalar t1(Rational(3, 2)), t2(Rational(-4));
  {
    // w_{L_1-L_3}(t1, 0): swap 1 <-> 3, diag (-t1^{-1})_1, (t1)_3
    auto w = gen_w(sl, R({1, 0, -1}), Param(t1, Scalar(0)));
    CHECK(w.form.perm == std::vector<std::size_t>{2, 1, 0, 3, 4, 5});
    CHECK(w.form.diag[0] == -t1.inverse());
    CHECK(w.form.diag[2] == t1);
  }
  {
    // w_{L_1+L_2}(0, t2): swap 2 <-> 1+n, diag (-t2^{-1})_2, (t2)_{1+n}
    auto w = gen_w(sl, R({1, 1, 0}), Param(Scalar(0), t2));
    CHECK(w.form.perm == std::vector<std::size_t>{0, 3, 2, 1, 4, 5});
    CHECK(w.form.diag[1] == -t2.inverse());
    CHECK(w.form.diag[3] == t2);
  }
  CHECK_THROWS_AS(gen_w(sp, R({1, -1, 0}), Scalar(0)), NonUnitParameter);
  CHECK_THROWS_AS(gen_w(sl, R({1, -1, 0}), Param(Scalar(0), Scalar(0))), NonUnitParameter);
}

TEST_CASE("gen_h diagonal forms") {
  for (int n = 2; n <= 4; ++n) {
    GroupModel sp(Family::Sp, n);
    const std::size_t N = sp.size();
    Scalar t(Rational(5, 3));
    Matrix h = gen_h(sp, Root::diff(n, 0, 1), t);
    std::vector<Scalar> d(N, Scalar(1));
    d[0] = t;
    d[1] = t.inverse();
    d[n] = t.inverse();
    d[n + 1] = t;
    CHECK(h == Matrix::diagonal(d));
    std::vector<Scalar> inv(N, Scalar(1));
    inv[n - 1] = Scalar(-1);
    inv[N - 1] = Scalar(-1);
    Matrix h2 = gen_h(sp, Root::twice(n, n - 1), Scalar(-1));
    CHECK(h2 == Matrix::diagonal(inv));
    CHECK(mat_mul(h2, h2).is_identity());
    for (const auto& r : RootSystem(sp).roots()) CHECK(gen_h(sp, r, Scalar(1)).is_identity());
  }
  GroupModel sl(Family::SLC, 2);
  for (const auto& r : RootSystem(sl).roots()) {
    if (param_arity(sl, r) == 1) continue;
    CHECK(gen_h(sl, r, Param(Scalar(1), Scalar(1))).is_identity());
    Matrix h = gen_h(sl, r, Param(Gaussian(1, 2), Scalar(0)));
    CHECK(h.is_diagonal());
    CHECK(check_membership(h, sl));
  }
}

TEST_CASE("expand_to_x matches letter matrices") {
  for (Family f : {Family::Sp, Family::SLR}) {
    GroupModel m(f, 2);
    for (const auto& r : RootSystem(m).roots()) {
      Param p = param_arity(m, r) == 1 ? Param(Scalar(Rational(-3, 2))) : Param(Scalar(2), Scalar(Rational(1, 3)));
      for (LetterKind k : {LetterKind::W, LetterKind::H}) {
        for (bool inv : {false, true}) {
          Letter l{k, r, p, inv};
          Matrix direct = letter_matrix(m, l);
          Matrix prod = Matrix::identity(m.size());
          for (const auto& x : expand_to_x(m, l)) prod = mat_mul(prod, letter_matrix(m, x));
          CHECK(prod == direct);
          CHECK(mat_mul(direct, letter_matrix(m, l.inverse())).is_identity());
        }
      }
    }
  }
}

TEST_CASE("torus_conjugate") {
  GroupModel sp(Family::Sp, 2);
  Scalar a(Rational(-3, 5));
  Letter x = Letter::x(R({2, 0}), a);
  TorusElement one{{Scalar(1), Scalar(1)}};
  CHECK(torus_conjugate(one, x) == x);
  TorusElement d{{Scalar(2), Scalar(1)}};
  CHECK(torus_conjugate(d, x).param == Param(a * Scalar(4)));
  Matrix D = d.matrix(sp);
  CHECK(mat_mul(mat_mul(D, letter_matrix(sp, x)), mat_inv(D)) == letter_matrix(sp, torus_conjugate(d, x)));
  GroupModel sl(Family::SLR, 2);
  TorusElement d2{{Scalar(2), Scalar(3)}};
  Letter y = Letter::x(R({1, -1}), Param(Scalar(5), Scalar(-7)));
  Letter c = torus_conjugate(d2, y);
  CHECK(c.param == Param(Scalar(Rational(10, 3)), Scalar(Rational(-14, 3))));
  Matrix D2 = d2.matrix(sl);
  CHECK(mat_mul(mat_mul(D2, letter_matrix(sl, y)), mat_inv(D2)) == letter_matrix(sl, c));
  for (const auto& r : RootSystem(sl).roots()) {
    Letter z{LetterKind::X, r, param_arity(sl, r) == 1 ? Param(Scalar(3)) : Param(Scalar(3), Scalar(-1))};
    CHECK(mat_mul(mat_mul(D2, letter_matrix(sl, z)), mat_inv(D2)) == letter_matrix(sl, torus_conjugate(d2, z)));
  }
}

TEST_CASE("letter text format") {
  Letter l = parse_letter("x 1,-1 (3/2, -1)");
  CHECK(l.kind == LetterKind::X);
  CHECK(l.param.arity() == 2);
  CHECK(l.to_string() == "x 1,-1 (3/2, -1)");
  CHECK(parse_letter("h^-1 0,2 (-1)").inverted);
  CHECK(parse_letter(" w 1,1:2 (t^-1)").root.tag == 2);
  CHECK_THROWS_AS(parse_letter("y 1,-1 (1)"), ParseError);
  CHECK_THROWS_AS(parse_letter("x 1,-1"), ParseError);
}
