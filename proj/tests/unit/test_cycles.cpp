#include <catch_amalgamated.hpp>

#include "chev/cycles.hpp"
#include "chev/error.hpp"

using namespace chev;

namespace {

Root R(std::initializer_list<int> c) { return Root(std::vector<int>(c)); }
Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }
CartanVector V(std::initializer_list<long> c) {
  CartanVector v;
  for (long x : c) v.emplace_back(x);
  return v;
}

void require_reduced(const Word& w, const Plane& region, std::size_t budget = kDefaultBudget) {
  auto t = reduce_cycle(w, region, budget);
  INFO(t.reason << "\n" << t.final_word.to_string());
  REQUIRE(t.complete);
  CHECK(t.final_word.letters.empty());
  CHECK_FALSE(replay(t).has_value());
}

}  // namespace

TEST_CASE("word evaluation") {
  GroupModel sp(Family::Sp, 2);
  CHECK(word_eval(Word{sp, {}}).is_identity());
  Root r = R({1, -1});
  CHECK(word_eval(Word{sp, {Letter::x(r, q(3)), Letter::x(r, q(-3))}}).is_identity());
  Word h = parse_word("h 1,-1 (5)", sp);
  CHECK(h.letters.size() == 6);
  CHECK(word_eval(h) == Matrix::diagonal({q(5), q(1, 5), q(1, 5), q(5)}));
  GroupModel sl(Family::SLR, 2);
  CHECK_THROWS_AS(word_eval(Word{sl, {Letter::x(r, Param(Scalar(Gaussian(1, 1)), q(0)))}}), ModeMismatch);
}

TEST_CASE("word files") {
  GroupModel sl(Family::SLR, 2);
  Word w = parse_word("# a comment\nx 1,-1 (2, 3)\n\nx 1,-1 (-2, -3)\n", sl);
  REQUIRE(w.letters.size() == 2);
  CHECK(parse_word(w.to_string(), sl).letters == w.letters);
  CHECK_THROWS(parse_word("x 1,-1 (2)", sl));
}

TEST_CASE("stability of words") {
  GroupModel std4(Family::SLStd, 2);
  Word w{std4, {Letter::x(Root::diff(4, 2, 3), q(1)), Letter::x(Root::diff(4, 1, 2), q(1))}};
  auto s = is_stable_word(w, Plane::full(4));
  REQUIRE(s.stable);
  CHECK(is_stable_point(s.witness, {Root::diff(4, 2, 3), Root::diff(4, 1, 2)}));
  CHECK(is_stable_point(V({5, -8, 1, 2}), {Root::diff(4, 2, 3), Root::diff(4, 1, 2)}));
  Word anti{std4, {Letter::x(Root::diff(4, 0, 1), q(1)), Letter::x(Root::diff(4, 1, 0), q(1))}};
  CHECK_FALSE(is_stable_word(anti, Plane::full(4)).stable);
  Word one{std4, {Letter::x(Root::diff(4, 0, 1), q(1))}};
  CHECK(is_stable_word(one, Plane::from_equations(4, {V({1, 1, 1, 1})})).stable);
}

TEST_CASE("additivity word reduces in two moves") {
  GroupModel sp(Family::Sp, 2);
  Root r = R({2, 0});
  Word w{sp, {Letter::x(r, q(2)), Letter::x(r, q(3)), Letter::x(r, q(-5))}};
  auto t = reduce_cycle(w, Plane::full(2));
  REQUIRE(t.complete);
  REQUIRE(t.moves.size() == 2);
  CHECK(t.moves[0].relation == RelationId::Additivity);
  CHECK(t.moves[1].kind == MoveKind::FreeCancellation);
  CHECK(t.moves[0].stability.stable);
  CHECK_FALSE(replay(t).has_value());
}

TEST_CASE("trivial commutator word") {
  GroupModel sl(Family::SLR, 4);
  Root r = R({1, -1, 0, 0}), p = R({0, 0, 1, -1});
  Param a(q(2), q(3)), b(q(-1), q(1, 2));
  Word w{sl, {Letter::x(r, a), Letter::x(p, b), Letter::x(r, -a), Letter::x(p, -b)}};
  auto t = reduce_cycle(w, Plane::full(4));
  REQUIRE(t.complete);
  bool used = false;
  for (const auto& m : t.moves) used = used || m.relation == RelationId::TrivialCommutator;
  CHECK(used);
  CHECK_FALSE(replay(t).has_value());
}

TEST_CASE("h-multiplicativity word") {
  GroupModel sl(Family::SLR, 2);
  Root d = R({1, -1});
  Word w = h_multiplicativity_word(sl, d, Param(q(2), q(0)), Param(q(-3), q(0)));
  CHECK(w.letters.size() == 12);
  require_reduced(w, Plane::full(2), 200);

  // conjugated and written with the unreduced inverse h
  Word c{sl, {Letter::x(R({0, 2}), q(7))}};
  for (auto& l : parse_word("h 1,-1 (2, 0)\nh 1,-1 (5, 0)", sl).letters) c.letters.push_back(l);
  for (auto& l : expand_to_x(sl, Letter::h(d, Param(q(10), q(0))).inverse())) c.letters.push_back(l);
  c.letters.push_back(Letter::x(R({0, 2}), q(-7)));
  require_reduced(c, Plane::full(2), 200);

  GroupModel sp(Family::Sp, 3);
  require_reduced(h_multiplicativity_word(sp, R({1, -1, 0}), q(2, 3), q(5)), Plane::full(3), 200);
}

TEST_CASE("relation words reduce and replay") {
  for (Family f : {Family::SLR, Family::SLC, Family::Sp}) {
    for (int n = 2; n <= 3; ++n) {
      GroupModel m(f, n);
      for (const auto& nw : relation_words(m)) {
        INFO(m.name() << " " << nw.label);
        CHECK(word_eval(nw.word).is_identity());
        require_reduced(nw.word, Plane::full(static_cast<std::size_t>(n)));
      }
    }
  }
}

TEST_CASE("non-cycles are rejected, exhausted budgets give partial traces") {
  GroupModel sp(Family::Sp, 2);
  Root r = R({1, -1});
  CHECK_THROWS_AS(reduce_cycle(Word{sp, {Letter::x(r, q(1))}}, Plane::full(2)), NotACycle);
  Word w = relation_words(sp).back().word;
  auto t = reduce_cycle(w, Plane::full(2), 0);
  CHECK_FALSE(t.complete);
  CHECK(t.final_word.letters == w.letters);
  CHECK_FALSE(t.reason.empty());
}

TEST_CASE("tampered traces fail replay") {
  GroupModel sp(Family::Sp, 2);
  Root r = R({2, 0});
  auto t = reduce_cycle(Word{sp, {Letter::x(r, q(2)), Letter::x(r, q(3)), Letter::x(r, q(-5))}}, Plane::full(2));
  REQUIRE(t.complete);
  t.moves[0].inserted[0].param = Param(q(4));
  CHECK(replay(t) == std::optional<std::size_t>(0));
}

TEST_CASE("bracket decomposition on the non-generic SL(4) plane") {
  GroupModel std4(Family::SLStd, 2);
  Plane p = Plane::from_equations(4, {V({1, 1, 1, 1}), V({0, 1, 2, 3})});
  Letter target = Letter::x(Root::diff(4, 0, 3), q(3, 2));
  auto d = bracket_decompose(std4, target, p, {Root::diff(4, 1, 2)});
  CHECK(d.left == Letter::x(Root::diff(4, 0, 2), q(3, 2)));
  CHECK(d.right == Letter::x(Root::diff(4, 2, 3), q(1)));
  CHECK(is_stable_point(d.left_witness, {Root::diff(4, 0, 2), Root::diff(4, 1, 2)}));
  CHECK(is_stable_point(d.right_witness, {Root::diff(4, 2, 3), Root::diff(4, 1, 2)}));
  CHECK(p.contains(d.left_witness));
  CHECK(p.contains(d.right_witness));
  CHECK(is_stable_point(V({0, -1, 2, -1}), {Root::diff(4, 0, 2), Root::diff(4, 1, 2)}));
  CHECK(is_stable_point(V({5, -8, 1, 2}), {Root::diff(4, 2, 3), Root::diff(4, 1, 2)}));
  // replay: the bracket evaluates to the target letter
  Word lhs{std4, {d.left, d.right, d.left.inverse(), d.right.inverse(), target.inverse()}};
  CHECK(word_eval(lhs).is_identity());
  CHECK(d.expression() == "[x 1,0,-1,0 (3/2), x 0,0,1,-1 (1)]");
}

TEST_CASE("bracket decomposition of a long root and failures") {
  GroupModel sp(Family::Sp, 2);
  Letter target = Letter::x(R({2, 0}), q(5));
  auto d = bracket_decompose(sp, target, Plane::full(2));
  CHECK((d.left.root + d.right.root).same_functional(R({2, 0})));
  Word check{sp, {d.left, d.right, d.left.inverse(), d.right.inverse(), target.inverse()}};
  CHECK(word_eval(check).is_identity());

  GroupModel std4(Family::SLStd, 2);
  std::vector<Root> everything = RootSystem(std4).roots();
  CHECK_THROWS_AS(bracket_decompose(std4, Letter::x(Root::diff(4, 0, 3), q(1)), Plane::full(4), everything),
                  NoDecomposition);
}
