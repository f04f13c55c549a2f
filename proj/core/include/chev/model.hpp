#pragma once

#include <string>
#include <string_view>

#include "chev/scalar.hpp"

namespace chev {

enum class Family {
  Sp,     // Sp(2n, R), one-parameter generators
  SLR,    // SL(2n, R) with restricted roots and two-parameter generators
  SLC,    // SL(2n, C) likewise, scalars in Q(i)
  SLStd,  // SL(2n) with the standard roots L_k - L_l and v_kl = I + t e_kl
};

/// Group family, block size n (matrices are 2n x 2n) and the scalar field
/// the matrices are built over.
struct GroupModel {
  Family family = Family::Sp;
  int n = 2;
  Field field = Field::Rational;

  GroupModel() = default;
  GroupModel(Family f, int block);

  std::size_t size() const { return static_cast<std::size_t>(2 * n); }
  bool is_sl() const { return family == Family::SLR || family == Family::SLC; }
  /// Length of root coefficient vectors: n, or 2n for the standard SL roots.
  std::size_t rank() const { return family == Family::SLStd ? size() : static_cast<std::size_t>(n); }
  GroupModel with_field(Field f) const;

  std::string name() const;
  friend bool operator==(const GroupModel&, const GroupModel&) = default;
};

Family parse_family(std::string_view text);
const char* to_string(Family f);

}  // namespace chev
