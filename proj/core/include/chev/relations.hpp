#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chev/chevalley.hpp"

namespace chev {

enum class RelationId {
  Additivity,
  Commutator,
  TrivialCommutator,
  HMult,
  HInvolution,
  HDecomposition,
  WeylConj,
  MonomialForm,
};

const char* to_string(RelationId id);

enum class Regime { Grid, Symbolic };

const char* to_string(Regime r);
Regime parse_regime(std::string_view text);

/// Shape of a relation variable: a scalar, a full pair (t1, t2), or a pair
/// with one component zero.
enum class VarShape { Scalar, Pair, First, Second };

struct Variable {
  std::string name;
  VarShape shape = VarShape::Scalar;
};

using Assignment = std::map<std::string, Param, std::less<>>;

struct Sides {
  Matrix lhs;
  Matrix rhs;
};

using Builder = std::function<Sides(const GroupModel&, const Assignment&)>;

/// One relation to be checked as a matrix identity in its variables.
struct RelationInstance {
  RelationId id;
  std::string label;
  GroupModel model;
  std::vector<Root> roots;
  std::vector<Variable> vars;
  Builder build;
  std::string note;
};

struct Witness {
  std::string assignment;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
  std::string error;
};

struct VerificationReport {
  RelationId id;
  std::string label;
  GroupModel model;
  std::vector<Root> roots;
  std::vector<std::string> params;
  Regime regime;
  bool pass = false;
  std::size_t points = 0;
  std::optional<Witness> witness;
  std::string note;
};

/// Nonzero sample values for one grid parameter.
struct Grid {
  std::vector<Scalar> values;

  /// {1,-1,2,-2,3,-3,1/2,-1/2,2/3,-2/3,5/7}; the SL(2n,C) grid swaps four of
  /// these for Gaussian values.
  static Grid default_for(const GroupModel& model);
  /// Candidate parameters for a variable of the given shape.
  std::vector<Param> candidates(VarShape shape) const;
};

/// Symbolic value of a variable: symbol name, or (name1, name2) for pairs.
Param symbolic_param(const Variable& v);
/// name -> scalar map used to substitute into structure laws.
std::map<std::string, Scalar, std::less<>> flatten(const Assignment& a, const std::vector<Variable>& vars);

/// Grid regime: every point of the tensor grid over the variables.
/// Symbolic regime: one evaluation with the variables as symbols.
VerificationReport verify(const RelationInstance& rel, Regime regime, const Grid& grid);

// ----------------------------------------------------------- commutators

/// [g, h] = g h g^{-1} h^{-1}.
Matrix group_commutator(const Matrix& g, const Matrix& g_inv, const Matrix& h, const Matrix& h_inv);
Matrix x_commutator(const GroupModel& model, const Root& r, const Root& p, const Param& a, const Param& b);

struct Factor {
  int i;
  int j;
  Root root;
  Param param;
};

struct CommutatorDecomposition {
  Matrix commutator;
  std::vector<Factor> factors;
  Matrix reassembled;
};

/// Peels x_{ir+jp} factors off [x_r(a), x_p(b)] in positive_combinations
/// order; throws DecompositionFailure if the residual is not I.
CommutatorDecomposition decompose_commutator(const GroupModel& model, const Root& r, const Root& p,
                                             const Param& a, const Param& b);

/// Parameter of x_{ir+jp} in [x_r(a), x_p(b)] as a polynomial in the symbols
/// a (Sp) or a1, a2, b1, b2 (SL).
struct StructureFunction {
  int i;
  int j;
  Root target;
  Param law;
  /// Every nonzero component is homogeneous of degree i in a and j in b;
  /// in Sp it is moreover a single term c a^i b^j with c an integer.
  bool bidegree_ok = false;
  std::string to_string() const;
};

std::vector<StructureFunction> structure_functions(const GroupModel& model, const Root& r, const Root& p);

// ------------------------------------------------------------- suites

std::vector<RelationInstance> additivity_relations(const GroupModel& model);
/// Pairs with a nonempty positive_combinations list.
std::vector<RelationInstance> commutator_relations(const GroupModel& model);
/// Pairs with r + p not a root and not zero.
std::vector<RelationInstance> trivial_commutator_relations(const GroupModel& model);
/// h multiplicativity, the h_{2L_n}(-1) involution and the diagonal forms.
std::vector<RelationInstance> h_relations(const GroupModel& model);
/// Weyl-element conjugation identities (Sp or SL family specific) plus the
/// check that conjugation by w permutes restricted root spaces.
std::vector<RelationInstance> weyl_relations(const GroupModel& model);
/// Monomial form displays of the w elements.
std::vector<RelationInstance> monomial_relations(const GroupModel& model);

/// All generating relation families of the group presentation.
std::vector<RelationInstance> presentation_relations(const GroupModel& model);

std::vector<VerificationReport> verify_all(const std::vector<RelationInstance>& rels, Regime regime,
                                           const Grid& grid);

}  // namespace chev
