#include <catch_amalgamated.hpp>

#include <algorithm>

#include "chev/error.hpp"
#include "chev/root.hpp"

using namespace chev;

namespace {

Root R(std::initializer_list<int> c) { return Root(std::vector<int>(c)); }

CartanVector V(std::initializer_list<long> c) {
  CartanVector v;
  for (long x : c) v.emplace_back(x);
  return v;
}

bool has(const std::vector<Root>& rs, const Root& r) { return std::find(rs.begin(), rs.end(), r) != rs.end(); }

}  // namespace

TEST_CASE("n=2 root system") {
  RootSystem rs(GroupModel(Family::Sp, 2));
  CHECK(rs.roots().size() == 8);
  for (auto r : {R({1, -1}), R({1, 1}), R({2, 0}), R({0, 2})}) {
    CHECK(has(rs.roots(), r));
    CHECK(has(rs.roots(), -r));
    CHECK(has(rs.positive(), r));
  }
  CHECK(rs.simple() == std::vector<Root>{R({1, -1}), R({0, 2})});
}

TEST_CASE("n=3 has 18 roots, standard SL(4) has 12") {
  CHECK(RootSystem(GroupModel(Family::Sp, 3)).roots().size() == 18);
  CHECK(RootSystem(GroupModel(Family::SLR, 3)).roots().size() == 18);
  CHECK(RootSystem(GroupModel(Family::SLStd, 2)).roots().size() == 12);
  CHECK_THROWS(GroupModel(Family::Sp, 1));
}

TEST_CASE("root system properties") {
  for (int n = 2; n <= 5; ++n) {
    for (Family f : {Family::Sp, Family::SLStd}) {
      RootSystem rs(GroupModel(f, n));
      std::size_t expect = f == Family::Sp ? 2u * n * n : 2u * n * (2u * n - 1);
      CHECK(rs.roots().size() == expect);
      CHECK(rs.positive().size() * 2 == rs.roots().size());
      for (const auto& r : rs.roots()) {
        CHECK(has(rs.roots(), -r));
        CHECK(has(rs.positive(), r) != has(rs.positive(), -r));
      }
      for (const auto& s : rs.simple()) CHECK(has(rs.positive(), s));
      for (const auto& r : rs.positive()) {
        for (const auto& c : rs.simple_coordinates(r)) {
          CHECK(sgn(c) >= 0);
          CHECK(c.get_den() == 1);
        }
      }
      // height-then-lex order is strict and total on the list
      for (std::size_t k = 1; k < rs.roots().size(); ++k) CHECK(rs.before(rs.roots()[k - 1], rs.roots()[k]));
    }
  }
}

TEST_CASE("root_eval examples") {
  CHECK(root_eval(R({0, 0, 1, -1}), V({5, -8, 1, 2})) == -1);
  CHECK(root_eval(R({2, 0}), V({0, 0})) == 0);
  CHECK(root_eval(R({0, 1, -1, 0}), V({0, -1, 2, -1})) == -3);
  CHECK_THROWS_AS(root_eval(R({1, -1}), V({1, 2, 3})), SizeMismatch);
}

TEST_CASE("root_eval is linear") {
  Root r = R({1, 1, 0});
  CartanVector t = V({1, -2, 5}), u = V({3, 7, -1});
  Rational s(-2, 3);
  CartanVector st(3);
  for (int k = 0; k < 3; ++k) st[k] = s * t[k] + u[k];
  CHECK(root_eval(r, st) == s * root_eval(r, t) + root_eval(r, u));
}

TEST_CASE("positive_combinations examples") {
  auto c = positive_combinations(R({1, -1}), R({0, 2}));
  REQUIRE(c.size() == 2);
  CHECK(c[0] == Combination{1, 1, R({1, 1})});
  CHECK(c[1] == Combination{2, 1, R({2, 0})});
  auto d = positive_combinations(R({1, -1, 0}), R({0, 1, -1}));
  REQUIRE(d.size() == 1);
  CHECK(d[0] == Combination{1, 1, R({1, 0, -1})});
  CHECK(positive_combinations(R({2, 0}), R({0, 2})).empty());
  CHECK_THROWS_AS(positive_combinations(R({1, -1}), R({-1, 1})), InvalidRoot);
}

TEST_CASE("positive_combinations stay within i+j <= 3") {
  for (int n = 2; n <= 4; ++n) {
    RootSystem rs(GroupModel(Family::Sp, n));
    for (const auto& r : rs.roots()) {
      for (const auto& p : rs.roots()) {
        if ((r + p).is_zero()) continue;
        for (const auto& c : rs.positive_combinations(r, p)) CHECK(c.i + c.j <= 3);
      }
    }
  }
}

TEST_CASE("root text format") {
  CHECK(parse_root("1,-1,0").to_string() == "1,-1,0");
  CHECK(parse_root("0,1:2").tag == 2);
  CHECK_THROWS_AS(parse_root("1,x"), ParseError);
  CHECK_THROWS_AS(parse_root("1,1:3"), ParseError);
  CHECK_THROWS_AS(classify(R({1, 2})), InvalidRoot);
}
