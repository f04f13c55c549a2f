#include <catch_amalgamated.hpp>

#include "chev/arrangement.hpp"
#include "chev/error.hpp"
#include "chev/matrix.hpp"
#include "chev/model.hpp"

using namespace chev;

namespace {

Root R(std::initializer_list<int> c) { return Root(std::vector<int>(c)); }
CartanVector V(std::initializer_list<long> c) {
  CartanVector v;
  for (long x : c) v.emplace_back(x);
  return v;
}
std::vector<Integer> I(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return v;
}

std::vector<Root> sl_standard(std::size_t n) {
  std::vector<Root> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) out.push_back(Root::diff(n, i, j));
    }
  }
  return out;
}

Plane example_plane() { return Plane::from_equations(4, {V({1, 1, 1, 1}), V({0, 1, 2, 3})}); }

}  // namespace

TEST_CASE("hyperplanes of the restricted system for n = 2") {
  auto hps = lyapunov_hyperplanes(RootSystem(GroupModel(Family::Sp, 2)).roots(), 2);
  REQUIRE(hps.size() == 4);
  std::vector<std::string> eqs;
  for (const auto& h : hps) {
    eqs.push_back(h.equation());
    CHECK(h.labels.size() == 2);
    for (const auto& r : h.labels) CHECK(primitive({Rational(r.coeffs[0]), Rational(r.coeffs[1])}) == h.normal);
  }
  std::sort(eqs.begin(), eqs.end());
  CHECK(eqs == std::vector<std::string>{"t1+t2=0", "t1-t2=0", "t1=0", "t2=0"});
}

TEST_CASE("hyperplane edge cases") {
  CHECK(lyapunov_hyperplanes(sl_standard(4), 4).size() == 6);
  auto one = lyapunov_hyperplanes({R({2, 0, 0})}, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].equation() == "t1=0");
  CHECK_THROWS_AS(lyapunov_hyperplanes({R({0, 0})}, 2), DegenerateInput);
  CHECK_THROWS_AS(lyapunov_hyperplanes({R({1, -1})}, 3), SizeMismatch);
}

TEST_CASE("the trace-zero plane with t2+2t3+3t4=0 is not generic") {
  // independent check of the shared line: it solves all four equations, and
  // the four equations have rank 3
  Matrix eqs = parse_matrix("1,1,1,1;0,1,2,3;1,0,0,-1;0,1,-1,0");
  CHECK(rank(eqs) == 3);
  CartanVector line = V({1, -1, -1, 1});
  for (std::size_t i = 0; i < 4; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < 4; ++j) s += eqs(i, j).to_rational() * line[j];
    CHECK(s == 0);
  }

  auto hps = lyapunov_hyperplanes(sl_standard(4), 4);
  Plane p = example_plane();
  CHECK(p.dim() == 2);
  auto v = is_generic(p, hps);
  CHECK_FALSE(v.generic);
  REQUIRE(v.witness == GenericityVerdict::Witness::SharedLine);
  CHECK(hps[*v.first].normal == I({1, 0, 0, -1}));
  CHECK(hps[*v.second].normal == I({0, 1, -1, 0}));
  CHECK(v.line == I({1, -1, -1, 1}));
}

TEST_CASE("genericity is basis independent and detects containment") {
  auto hps = lyapunov_hyperplanes(RootSystem(GroupModel(Family::Sp, 2)).roots(), 2);
  CHECK(is_generic(Plane::full(2), hps).generic);
  CHECK(is_generic(Plane::from_basis({V({2, 1}), V({-1, 3})}), hps).generic);

  auto sl = lyapunov_hyperplanes(sl_standard(4), 4);
  Plane p = example_plane();
  Plane q = Plane::from_basis({p.point({Rational(1), Rational(1)}), p.point({Rational(2), Rational(-3)})});
  auto v = is_generic(q, sl);
  CHECK_FALSE(v.generic);
  CHECK(v.line == I({1, -1, -1, 1}));

  Plane inside = Plane::from_basis({V({1, 1, 0, 0}), V({0, 0, 1, 0})});
  auto c = is_generic(inside, sl);
  CHECK_FALSE(c.generic);
  CHECK(c.witness == GenericityVerdict::Witness::Containment);
  CHECK(sl[*c.first].normal == I({1, -1, 0, 0}));
  CHECK_THROWS_AS(is_generic(Plane::from_basis({V({1, 0, 0, 0})}), sl), DegenerateInput);
  CHECK_THROWS_AS(Plane::from_basis({V({1, 2}), V({2, 4})}), DegenerateInput);
}

TEST_CASE("stable elements") {
  std::vector<Root> a = {Root::diff(4, 2, 3), Root::diff(4, 1, 2)};
  std::vector<Root> b = {Root::diff(4, 0, 2), Root::diff(4, 1, 2)};
  CHECK(root_eval(a[0], V({5, -8, 1, 2})) == -1);
  CHECK(root_eval(a[1], V({5, -8, 1, 2})) == -9);
  CHECK(is_stable_point(V({5, -8, 1, 2}), a));
  CHECK(root_eval(b[0], V({0, -1, 2, -1})) == -2);
  CHECK(root_eval(b[1], V({0, -1, 2, -1})) == -3);
  CHECK(is_stable_point(V({0, -1, 2, -1}), b));
  for (const auto& roots : {a, b}) {
    auto res = find_stable_element(Plane::full(4), roots);
    REQUIRE(res.feasible);
    CHECK(is_stable_point(res.point, roots));
    auto tz = find_stable_element(Plane::from_equations(4, {V({1, 1, 1, 1})}), roots);
    REQUIRE(tz.feasible);
    CHECK(is_stable_point(tz.point, roots));
    Rational trace = 0;
    for (const auto& x : tz.point) trace += x;
    CHECK(trace == 0);
  }
}

TEST_CASE("infeasible stable systems carry a Farkas certificate") {
  Root r = R({1, -1, 0});
  auto res = find_stable_element(Plane::full(3), {r, -r});
  REQUIRE_FALSE(res.feasible);
  CHECK(res.multipliers.size() == 2);
  for (const auto& l : res.multipliers) CHECK(l >= 0);
  CHECK(res.multipliers[0] + res.multipliers[1] > 0);
  for (const auto& x : res.combination) CHECK(x == 0);

  // feasible in the ambient space, infeasible on t1 = t2
  auto on = find_stable_element(Plane::from_equations(3, {V({1, -1, 0})}), {r});
  CHECK_FALSE(on.feasible);
  auto three = find_stable_element(Plane::full(2), {R({1, 0}), R({0, 1}), R({-1, -1})});
  REQUIRE_FALSE(three.feasible);
  for (const auto& l : three.multipliers) CHECK(l > 0);
}

TEST_CASE("chamber counts") {
  auto c2 = weyl_chambers(lyapunov_hyperplanes(RootSystem(GroupModel(Family::Sp, 2)).roots(), 2), Plane::full(2));
  CHECK(c2.size() == 8);
  auto hps = lyapunov_hyperplanes(sl_standard(4), 4);
  auto c4 = weyl_chambers(hps, Plane::from_equations(4, {V({1, 1, 1, 1})}));
  CHECK(c4.size() == 24);
  for (const auto& ch : c4) {
    for (std::size_t k = 0; k < hps.size(); ++k) {
      Rational v = hps[k].eval(ch.sample);
      CHECK(v != 0);
      CHECK((v > 0) == (ch.signs[k] > 0));
    }
  }
  CHECK(weyl_chambers({hps[0]}, Plane::full(4)).size() == 2);
  CHECK(weyl_chambers(lyapunov_hyperplanes(RootSystem(GroupModel(Family::Sp, 3)).roots(), 3), Plane::full(3)).size() == 48);
  CHECK(weyl_chambers({hps[0]}, Plane::from_equations(4, {V({1, -1, 0, 0})})).empty());
}

TEST_CASE("plane parsing") {
  Plane p = parse_plane("eq:1,1,1,1;0,1,2,3", 4);
  CHECK(p.dim() == 2);
  CHECK(p.contains(V({1, -1, -1, 1})));
  Plane b = parse_plane("1,0,0;0,1/2,1", 3);
  CHECK(b.dim() == 2);
  CHECK_THROWS_AS(parse_plane("1,0;0,1", 3), SizeMismatch);
}
