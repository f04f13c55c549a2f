#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chev/model.hpp"
#include "chev/rational.hpp"

namespace chev {

using CartanVector = std::vector<Rational>;

/// Integer functional on the Cartan coordinates, optionally tagged with the
/// component 1 or 2 of a two-dimensional restricted root space.
struct Root {
  std::vector<int> coeffs;
  int tag = 0;

  Root() = default;
  explicit Root(std::vector<int> c, int t = 0) : coeffs(std::move(c)), tag(t) {}

  /// L_i - L_j, L_i + L_j, 2 L_i etc. (0-based indices, rank entries).
  static Root diff(std::size_t rank, std::size_t i, std::size_t j);
  static Root sum(std::size_t rank, std::size_t i, std::size_t j, int sign = 1);
  static Root twice(std::size_t rank, std::size_t i, int sign = 1);

  std::size_t rank() const { return coeffs.size(); }
  bool is_zero() const;
  Root untagged() const { return Root(coeffs); }
  Root with_tag(int t) const { return Root(coeffs, t); }

  Root operator-() const;
  /// Sum of functionals; the tag is dropped.
  friend Root operator+(const Root& a, const Root& b);
  Root times(int k) const;

  friend bool operator==(const Root&, const Root&) = default;
  bool same_functional(const Root& o) const { return coeffs == o.coeffs; }

  /// "c1,...,cn" with optional ":1" / ":2".
  std::string to_string() const;
};

Root parse_root(std::string_view text);

/// The shape of a root of the form +-L_i +- L_j or +-2 L_i (0-based i < j for
/// sums; i, j arbitrary distinct for differences L_i - L_j).
struct RootShape {
  enum Kind { Diff, Sum, NegSum, Long, NegLong } kind;
  std::size_t i = 0;
  std::size_t j = 0;
};

/// Throws InvalidRoot unless r has one of the shapes above.
RootShape classify(const Root& r);
bool is_c_root(const Root& r);
/// L_k - L_l with k != l.
bool is_a_root(const Root& r);

Rational root_eval(const Root& r, const CartanVector& t);

struct Combination {
  int i;
  int j;
  Root root;
  friend bool operator==(const Combination&, const Combination&) = default;
};

class RootSystem {
 public:
  explicit RootSystem(const GroupModel& model);

  const GroupModel& model() const { return model_; }
  const std::vector<Root>& roots() const& { return roots_; }
  std::vector<Root> roots() && { return std::move(roots_); }
  const std::vector<Root>& positive() const& { return positive_; }
  std::vector<Root> positive() && { return std::move(positive_); }
  const std::vector<Root>& simple() const& { return simple_; }
  std::vector<Root> simple() && { return std::move(simple_); }

  bool contains(const Root& r) const;
  bool is_positive(const Root& r) const;
  /// Sum of simple-root coordinates.
  Rational height(const Root& r) const;
  /// Simple-root coordinates of r.
  std::vector<Rational> simple_coordinates(const Root& r) const;
  /// All (i, j), i, j >= 1, with i r + j p a root, ordered by i + j then i.
  /// Throws InvalidRoot when r + p = 0.
  std::vector<Combination> positive_combinations(const Root& r, const Root& p) const;
  /// Height-then-lex comparison used for every deterministic root ordering.
  bool before(const Root& a, const Root& b) const;

 private:
  GroupModel model_;
  std::vector<Root> roots_;
  std::vector<Root> positive_;
  std::vector<Root> simple_;
};

RootSystem build_root_system(const GroupModel& model);

/// positive_combinations within the C_n-shaped system of rank r.rank().
std::vector<Combination> positive_combinations(const Root& r, const Root& p);

}  // namespace chev
