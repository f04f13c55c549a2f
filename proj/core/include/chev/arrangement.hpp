#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chev/rational.hpp"
#include "chev/root.hpp"

namespace chev {

/// Kernel of a root functional. The normal is primitive with its first
/// nonzero entry positive; labels list every root that produced it.
struct Hyperplane {
  std::vector<Integer> normal;
  std::vector<Root> labels;

  Rational eval(const CartanVector& x) const;
  /// "t1-t2=0".
  std::string equation() const;
};

/// Throws DegenerateInput on a zero root and SizeMismatch on a rank other
/// than ambient_dim.
std::vector<Hyperplane> lyapunov_hyperplanes(const std::vector<Root>& roots, std::size_t ambient_dim);

/// Linear subspace of Q^ambient_dim given by a basis. The basis is
/// independent and satisfies every recorded constraint.
class Plane {
 public:
  static Plane full(std::size_t ambient_dim);
  /// Throws DegenerateInput if the basis is empty or dependent, and
  /// SizeMismatch on wrong lengths.
  static Plane from_basis(std::vector<CartanVector> basis, std::vector<CartanVector> constraints = {});
  /// Kernel of the given equations (each a coefficient vector).
  static Plane from_equations(std::size_t ambient_dim, std::vector<CartanVector> equations);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<CartanVector>& basis() const { return basis_; }
  const std::vector<CartanVector>& constraints() const { return constraints_; }

  bool contains(const CartanVector& x) const;
  /// sum y_k basis_k.
  CartanVector point(const std::vector<Rational>& coords) const;
  /// Values of the functional on the basis vectors.
  std::vector<Rational> restrict(const std::vector<Rational>& functional) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<CartanVector> basis_;
  std::vector<CartanVector> constraints_;
};

/// "a,b,c;d,e,f" as basis vectors, or "eq:a,b,c;d,e,f" as equations.
Plane parse_plane(std::string_view text, std::size_t ambient_dim);
CartanVector parse_vector(std::string_view text);
std::string to_string(const CartanVector& v);
/// Scales a nonzero rational vector to a primitive integer one with first
/// nonzero entry positive.
std::vector<Integer> primitive(const std::vector<Rational>& v);

struct GenericityVerdict {
  bool generic = false;
  enum class Witness { None, SharedLine, Containment } witness = Witness::None;
  /// Indices into the hyperplane list; second is set only for SharedLine.
  std::optional<std::size_t> first;
  std::optional<std::size_t> second;
  /// Primitive direction of the shared line.
  std::vector<Integer> line;
  /// P intersect H_k for every k, or empty when P lies in H_k.
  std::vector<std::vector<Integer>> lines;
};

/// Throws DegenerateInput unless the plane has dimension exactly 2.
GenericityVerdict is_generic(const Plane& plane, const std::vector<Hyperplane>& hps);

struct StableResult {
  bool feasible = false;
  CartanVector point;
  /// On infeasibility: lambda_k >= 0, not all zero, with sum lambda_k r_k
  /// vanishing on the region.
  std::vector<Rational> multipliers;
  CartanVector combination;
};

/// A point of the region where every root is strictly negative, found by
/// Fourier-Motzkin elimination, or a Farkas certificate.
StableResult find_stable_element(const Plane& region, const std::vector<Root>& roots);
bool is_stable_point(const CartanVector& x, const std::vector<Root>& roots);

struct Chamber {
  std::vector<int> signs;
  CartanVector sample;
};

/// Every realizable strict sign vector over hps inside the region, with a
/// rational sample point. Empty when some hyperplane contains the region.
std::vector<Chamber> weyl_chambers(const std::vector<Hyperplane>& hps, const Plane& region);

}  // namespace chev
