#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chev/scalar.hpp"

namespace chev {

/// Square matrix of even size 2n whose entries all live in one field. Only
/// nonzero entries are stored, row by row in column order.
class Matrix {
 public:
  using Row = std::vector<std::pair<std::size_t, Scalar>>;

  Matrix(std::size_t size, Field field = Field::Rational);
  static Matrix identity(std::size_t size, Field field = Field::Rational);
  /// Elementary matrix e_{ij} (0-based indices).
  static Matrix unit(std::size_t size, std::size_t i, std::size_t j, Field field = Field::Rational);
  static Matrix diagonal(const std::vector<Scalar>& entries);

  std::size_t size() const { return size_; }
  std::size_t n_block() const { return size_ / 2; }
  Field field() const { return field_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const;
  /// Nonzero entries of row i, sorted by column.
  const Row& row(std::size_t i) const { return rows_[i]; }
  /// Stores v promoted to this matrix's field.
  void set(std::size_t i, std::size_t j, const Scalar& v);
  void add_to(std::size_t i, std::size_t j, const Scalar& v);

  Matrix with_field(Field f) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_diagonal() const;
  /// Exactly one nonzero entry in every row and column.
  bool is_monomial() const;

  Matrix transpose() const;
  Matrix operator-() const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix scaled(const Scalar& c) const;

  friend bool operator==(const Matrix& a, const Matrix& b);

  Matrix substitute(const std::map<std::string, Scalar, std::less<>>& values) const;

  /// Row-major "a,b;c,d".
  std::string to_string() const;

 private:
  std::size_t size_;
  Field field_;
  std::vector<Row> rows_;

  friend Matrix mat_mul(const Matrix& a, const Matrix& b);

  void put(std::size_t i, std::size_t j, Scalar v);
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

Scalar determinant(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Throws SingularMatrix carrying the rank.
Matrix mat_inv(const Matrix& a);
/// sum of N^j/j!; throws NotNilpotent unless N^k = 0 for some k <= size.
Matrix exp_nilpotent(const Matrix& n);

/// Inverse of "a,b;c,d". Entries go through parse_scalar; the field is the
/// join of the entry fields.
Matrix parse_matrix(std::string_view text);

}  // namespace chev
