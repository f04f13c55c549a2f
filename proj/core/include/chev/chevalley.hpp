#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chev/matrix.hpp"
#include "chev/model.hpp"
#include "chev/root.hpp"

namespace chev {

/// Generator parameter: a single scalar, or a pair (t1, t2) for the two
/// dimensional restricted root spaces of the SL models.
class Param {
 public:
  Param() : v_{Scalar(0)} {}
  Param(Scalar a) : v_{std::move(a)} {}  // NOLINT
  Param(int a) : v_{Scalar(a)} {}        // NOLINT
  Param(Scalar a, Scalar b) : v_{std::move(a), std::move(b)} {}

  std::size_t arity() const { return v_.size(); }
  const Scalar& operator[](std::size_t k) const { return v_.at(k); }
  const std::vector<Scalar>& values() const { return v_; }

  bool is_zero() const;
  Param operator-() const;
  /// Componentwise sum; arities must agree.
  friend Param operator+(const Param& a, const Param& b);
  Param scaled(const Scalar& c) const;
  friend bool operator==(const Param&, const Param&) = default;

  Param substitute(const std::map<std::string, Scalar, std::less<>>& values) const;
  /// "(a)" or "(a, b)".
  std::string to_string() const;

 private:
  std::vector<Scalar> v_;
};

Param parse_param(std::string_view text);

/// Number of scalars a generator at root r takes in the model.
std::size_t param_arity(const GroupModel& model, const Root& r);
/// Throws InvalidRoot / ArityMismatch when (r, p) is not a valid generator.
void check_generator(const GroupModel& model, const Root& r, const Param& p);

/// Sp form matrix [[0, I], [-I, 0]].
Matrix symplectic_form(const GroupModel& model);

/// Root-space element, nilpotent.
Matrix gen_f(const GroupModel& model, const Root& r, const Param& p);
/// x_r(p) = exp(f_r(p)).
Matrix gen_x(const GroupModel& model, const Root& r, const Param& p);

/// Reads the parameter of the root-group element at r off the matrix support
/// of r (inverse of gen_f on that support).
Param root_coordinate(const GroupModel& model, const Root& r, const Matrix& m);
/// Root whose root space contains e_{ij}; tagged with its component in the
/// two-parameter SL case. Empty if e_{ij} lies in no root space.
std::optional<Root> root_at(const GroupModel& model, std::size_t i, std::size_t j);

/// Permutation times diagonal: entry (perm[j], j) equals diag[j], all others 0.
struct MonomialForm {
  std::vector<std::size_t> perm;
  std::vector<Scalar> diag;

  Matrix to_matrix(Field field) const;
  /// Throws Error unless m is monomial.
  static MonomialForm of(const Matrix& m);
  friend bool operator==(const MonomialForm&, const MonomialForm&) = default;
};

struct WElement {
  Matrix matrix;
  MonomialForm form;
};

/// w_r(t) = x_r(t) x_{-r}(-t^{-1}) x_r(t); the two-parameter form is taken
/// componentwise and a zero component contributes the identity.
WElement gen_w(const GroupModel& model, const Root& r, const Param& p);
/// Reference parameter of h_r for the shape of p: 1, (1,1), (1,0) or (0,1).
Param reference_param(const Param& p);
/// h_r(p) = w_r(p) w_r(reference)^{-1}.
Matrix gen_h(const GroupModel& model, const Root& r, const Param& p);

bool check_membership(const Matrix& m, const GroupModel& model);
bool in_lie_algebra(const Matrix& x, const GroupModel& model);

/// d = (d_1..d_n) acting as diag(d, d^{-1}); in the standard SL model d has
/// 2n entries acting as diag(d).
struct TorusElement {
  std::vector<Scalar> d;
  Matrix matrix(const GroupModel& model) const;
  /// prod d_k^{c_k} over the root coefficients.
  Scalar character(const Root& r) const;
};

enum class LetterKind { X, W, H };

struct Letter {
  LetterKind kind = LetterKind::X;
  Root root;
  Param param;
  /// Only meaningful for h-letters; x and w letters invert by negation.
  bool inverted = false;

  static Letter x(Root r, Param p) { return {LetterKind::X, std::move(r), std::move(p), false}; }
  static Letter w(Root r, Param p) { return {LetterKind::W, std::move(r), std::move(p), false}; }
  static Letter h(Root r, Param p) { return {LetterKind::H, std::move(r), std::move(p), false}; }

  Letter inverse() const;
  friend bool operator==(const Letter&, const Letter&) = default;
  /// "x 1,-1 (3/2)", "w 0,2 (-1)", "h^-1 1,-1 (2, 1)".
  std::string to_string() const;
};

Letter parse_letter(std::string_view text);

Matrix letter_matrix(const GroupModel& model, const Letter& l);
/// Rewrites w and h letters into the x-letters of their defining words.
std::vector<Letter> expand_to_x(const GroupModel& model, const Letter& l);

/// D x_r(a) D^{-1} = x_r(chi_r(D) a).
Letter torus_conjugate(const TorusElement& d, const Letter& l);

}  // namespace chev
