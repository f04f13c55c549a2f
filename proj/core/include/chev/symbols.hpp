#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "chev/matrix.hpp"
#include "chev/model.hpp"
#include "chev/rational.hpp"
#include "chev/scalar.hpp"

namespace chev {

/// Finite set of nonzero rational or Gaussian scalars, in insertion order
/// with duplicates removed. At most kMaxSize elements.
class Universe {
 public:
  static constexpr std::size_t kMaxSize = 32;

  explicit Universe(const std::vector<Scalar>& elements);

  std::size_t size() const { return elems_.size(); }
  const Scalar& operator[](std::size_t k) const { return elems_[k]; }
  const std::vector<Scalar>& elements() const { return elems_; }
  std::optional<std::size_t> index_of(const Scalar& s) const;
  bool contains(const Scalar& s) const { return index_of(s).has_value(); }

 private:
  std::vector<Scalar> elems_;
};

Universe parse_universe(std::string_view text);

struct SymbolTerm {
  Scalar first;
  Scalar second;
  Integer exponent;
};

/// Formal product of symbols {s,t}^e. Canonical: one term per pair, no zero
/// exponents, pairs in first-occurrence order.
class SymbolExpr {
 public:
  SymbolExpr() = default;
  static SymbolExpr symbol(const Scalar& s, const Scalar& t, const Integer& e = 1);

  const std::vector<SymbolTerm>& terms() const { return terms_; }
  bool is_empty() const { return terms_.empty(); }

  SymbolExpr& multiply(const Scalar& s, const Scalar& t, const Integer& e);
  SymbolExpr& operator*=(const SymbolExpr& o);
  SymbolExpr power(const Integer& e) const;
  SymbolExpr inverse() const { return power(-1); }
  friend SymbolExpr operator*(SymbolExpr a, const SymbolExpr& b) { return a *= b; }

  /// Same multiset of pair exponents, order ignored.
  friend bool operator==(const SymbolExpr& a, const SymbolExpr& b);

  /// "{2,-2}*{2,2}^-1"; the empty product prints as "1".
  std::string to_string() const;

 private:
  std::vector<SymbolTerm> terms_;
};

/// Inverse of to_string; also accepts "1".
SymbolExpr parse_symbol_expr(std::string_view text);

enum class AxiomKind { Antisymmetry, BilinearFirst, BilinearSecond, OneMinus, MinusSelf };

const char* to_string(AxiomKind k);
AxiomKind parse_axiom_kind(std::string_view text);
std::set<AxiomKind> all_axiom_kinds();

/// One literal axiom instance rewritten as "expr = 1".
struct AxiomInstance {
  AxiomKind kind;
  std::vector<Scalar> args;
  SymbolExpr expr;
  std::string to_string() const;
};

class AxiomLattice {
 public:
  AxiomLattice(Universe u, std::set<AxiomKind> kinds);

  const Universe& universe() const { return universe_; }
  const std::set<AxiomKind>& kinds() const { return kinds_; }
  const std::vector<AxiomInstance>& axioms() const { return axioms_; }
  /// Rank of the integer span of the axiom vectors.
  std::size_t rank() const { return rows_.size(); }

  /// Exponent vector over the |U|^2 pairs; throws InvalidUniverse if a pair
  /// leaves the universe.
  std::map<std::size_t, Integer> vector_of(const SymbolExpr& e) const;

  struct Row {
    std::map<std::size_t, Integer> entries;
    std::map<std::size_t, Integer> certificate;  // axiom index -> coefficient
  };
  /// Echelon rows keyed by pivot column.
  const std::map<std::size_t, Row>& rows() const { return rows_; }

 private:
  void insert(std::size_t axiom);

  Universe universe_;
  std::set<AxiomKind> kinds_;
  std::vector<AxiomInstance> axioms_;
  std::map<std::size_t, Row> rows_;
};

AxiomLattice build_axiom_lattice(const Universe& u, const std::set<AxiomKind>& kinds = all_axiom_kinds());

struct Certificate {
  /// expr = product of axiom[k]^coefficient
  std::vector<std::pair<std::size_t, Integer>> uses;
};

struct ConsequenceResult {
  bool holds = false;
  std::optional<Certificate> certificate;
  /// On failure: the reduced exponent vector that no row can clear.
  SymbolExpr obstruction;
};

ConsequenceResult is_consequence(const SymbolExpr& expr, const AxiomLattice& lat);

/// expr times the inverse of each certified axiom power; empty iff the
/// certificate is valid.
SymbolExpr replay(const SymbolExpr& expr, const AxiomLattice& lat, const Certificate& cert);

/// Matrix image of expr, each symbol realized as h(s) h(t) h(st)^-1 on the
/// L1-L2 root (first component in the SL models).
Matrix symbol_matrix(const SymbolExpr& expr, const GroupModel& model);

}  // namespace chev
