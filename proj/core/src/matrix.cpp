#include "chev/matrix.hpp"

#include "chev/error.hpp"

#include <tuple>

namespace chev {

namespace {

const Scalar& zero_of(Field f) {
  static const Scalar zeros[] = {Scalar(0), Scalar(0).promoted(Field::Gaussian), Scalar(0).promoted(Field::Laurent)};
  return zeros[static_cast<int>(f)];
}

void check_compatible(const Matrix& a, const Matrix& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("matrix sizes " + std::to_string(a.size()) + " and " +
                       std::to_string(b.size()) + " differ");
  }
  if (a.field() != b.field()) {
    throw ModeMismatch(std::string("matrix fields ") + to_string(a.field()) + " and " +
                       to_string(b.field()) + " differ");
  }
}

// Adds v into a sorted row, dropping the entry if it cancels.
void accumulate(Matrix::Row& row, std::size_t j, const Scalar& v, bool negate = false) {
  auto it = row.begin();
  while (it != row.end() && it->first < j) ++it;
  if (it != row.end() && it->first == j) {
    if (negate) it->second -= v;
    else it->second += v;
    if (it->second.is_zero()) row.erase(it);
  } else {
    row.emplace(it, j, negate ? -v : v);
  }
}

}  // namespace

Matrix::Matrix(std::size_t size, Field field) : size_(size), field_(field), rows_(size) {
  if (size == 0 || size % 2 != 0) {
    throw SizeMismatch("matrix size must be even and positive, got " + std::to_string(size));
  }
}

Matrix Matrix::identity(std::size_t size, Field field) {
  Matrix m(size, field);
  Scalar one = Scalar(1).promoted(field);
  for (std::size_t i = 0; i < size; ++i) m.rows_[i].emplace_back(i, one);
  return m;
}

Matrix Matrix::unit(std::size_t size, std::size_t i, std::size_t j, Field field) {
  if (i >= size || j >= size) throw SizeMismatch("unit matrix index out of range");
  Matrix m(size, field);
  m.rows_[i].emplace_back(j, Scalar(1).promoted(field));
  return m;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  Field f = Field::Rational;
  for (const auto& e : entries) f = join(f, e.field());
  Matrix m(entries.size(), f);
  for (std::size_t i = 0; i < entries.size(); ++i) m.set(i, i, entries[i]);
  return m;
}

const Scalar& Matrix::operator()(std::size_t i, std::size_t j) const {
  for (const auto& [c, v] : rows_[i]) {
    if (c == j) return v;
    if (c > j) break;
  }
  return zero_of(field_);
}

void Matrix::put(std::size_t i, std::size_t j, Scalar v) {
  Row& row = rows_[i];
  auto it = row.begin();
  while (it != row.end() && it->first < j) ++it;
  bool present = it != row.end() && it->first == j;
  if (v.is_zero()) {
    if (present) row.erase(it);
  } else if (present) {
    it->second = std::move(v);
  } else {
    row.emplace(it, j, std::move(v));
  }
}

void Matrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= size_ || j >= size_) throw SizeMismatch("matrix index out of range");
  put(i, j, v.promoted(field_));
}

void Matrix::add_to(std::size_t i, std::size_t j, const Scalar& v) {
  if (i >= size_ || j >= size_) throw SizeMismatch("matrix index out of range");
  if (v.is_zero()) return;
  if (join(field_, v.field()) != field_) throw ModeMismatch("entry left the matrix field");
  accumulate(rows_[i], j, v.promoted(field_));
}

Matrix Matrix::with_field(Field f) const {
  if (f == field_) return *this;
  Matrix m(size_, f);
  for (std::size_t i = 0; i < size_; ++i) {
    for (const auto& [j, v] : rows_[i]) m.rows_[i].emplace_back(j, v.promoted(f));
  }
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& r : rows_) {
    if (!r.empty()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  for (std::size_t i = 0; i < size_; ++i) {
    const Row& r = rows_[i];
    if (r.size() != 1 || r[0].first != i || !r[0].second.is_one()) return false;
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::size_t i = 0; i < size_; ++i) {
    for (const auto& e : rows_[i]) {
      if (e.first != i) return false;
    }
  }
  return true;
}

bool Matrix::is_monomial() const {
  std::vector<int> col_count(size_, 0);
  for (const auto& r : rows_) {
    if (r.size() != 1) return false;
    ++col_count[r[0].first];
  }
  for (int c : col_count) {
    if (c != 1) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix m(size_, field_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (const auto& [j, v] : rows_[i]) m.rows_[j].emplace_back(i, v);
  }
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& r : m.rows_) {
    for (auto& e : r) e.second = -e.second;
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < size_; ++i) {
    for (const auto& [j, v] : o.rows_[i]) accumulate(rows_[i], j, v);
  }
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  check_compatible(*this, o);
  for (std::size_t i = 0; i < size_; ++i) {
    for (const auto& [j, v] : o.rows_[i]) accumulate(rows_[i], j, v, true);
  }
  return *this;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m(size_, join(field_, c.field()));
  for (std::size_t i = 0; i < size_; ++i) {
    for (const auto& [j, v] : rows_[i]) m.put(i, j, (v * c).promoted(m.field_));
  }
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.size_ != b.size_) return false;
  for (std::size_t i = 0; i < a.size_; ++i) {
    const auto& ra = a.rows_[i];
    const auto& rb = b.rows_[i];
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k) {
      if (ra[k].first != rb[k].first || !(ra[k].second == rb[k].second)) return false;
    }
  }
  return true;
}

Matrix Matrix::substitute(const std::map<std::string, Scalar, std::less<>>& values) const {
  if (field_ != Field::Laurent) return *this;
  std::vector<std::tuple<std::size_t, std::size_t, Scalar>> out;
  Field f = Field::Rational;
  for (std::size_t i = 0; i < size_; ++i) {
    for (const auto& [j, v] : rows_[i]) {
      out.emplace_back(i, j, v.substitute(values));
      f = join(f, std::get<2>(out.back()).field());
    }
  }
  Matrix m(size_, f);
  for (const auto& [i, j, v] : out) m.put(i, j, v.promoted(f));
  return m;
}

std::string Matrix::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < size_; ++i) {
    if (i > 0) s += ';';
    for (std::size_t j = 0; j < size_; ++j) {
      if (j > 0) s += ',';
      s += (*this)(i, j).to_string();
    }
  }
  return s;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  check_compatible(a, b);
  const std::size_t n = a.size();
  Matrix c(n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    Matrix::Row out;
    for (const auto& [k, aik] : a.row(i)) {
      const bool unit = aik.is_one();
      for (const auto& [j, bkj] : b.row(k)) accumulate(out, j, unit ? bkj : aik * bkj);
    }
    c.rows_[i] = std::move(out);
  }
  return c;
}

namespace {

// Fraction-free (Bareiss) elimination on a row-major n x m array; returns the
// rank and the sign of the row permutation. After the call, the last nonzero
// pivot is the determinant up to that sign when the square part has full rank.
std::size_t bareiss(std::vector<std::vector<Scalar>>& rows, std::size_t cols, int& sign,
                    std::size_t pivot_cols) {
  const std::size_t n = rows.size();
  Scalar prev(1);
  std::size_t r = 0;
  sign = 1;
  for (std::size_t c = 0; c < pivot_cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && rows[p][c].is_zero()) ++p;
    if (p == n) continue;
    if (p != r) {
      std::swap(rows[p], rows[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[i][j] = (rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = Scalar(0).promoted(rows[i][c].field());
    }
    prev = rows[r][c];
    ++r;
  }
  return r;
}

std::vector<std::vector<Scalar>> rows_of(const Matrix& a) {
  std::vector<std::vector<Scalar>> rows(a.size(), std::vector<Scalar>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) rows[i][j] = a(i, j);
  }
  return rows;
}

}  // namespace

Scalar determinant(const Matrix& a) {
  auto rows = rows_of(a);
  int sign = 1;
  std::size_t r = bareiss(rows, a.size(), sign, a.size());
  if (r < a.size()) return Scalar(0).promoted(a.field());
  Scalar d = rows[a.size() - 1][a.size() - 1];
  return sign < 0 ? -d : d;
}

std::size_t rank(const Matrix& a) {
  auto rows = rows_of(a);
  int sign = 1;
  return bareiss(rows, a.size(), sign, a.size());
}

Matrix mat_inv(const Matrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Scalar>> rows(n, std::vector<Scalar>(2 * n, Scalar(0).promoted(a.field())));
  Scalar one = Scalar(1).promoted(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    rows[i][n + i] = one;
  }
  int sign = 1;
  std::size_t r = bareiss(rows, 2 * n, sign, n);
  if (r < n) throw SingularMatrix(r, n);
  // back substitution on the fraction-free upper triangle
  Matrix inv(n, a.field());
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<Scalar> x(n);
    for (std::size_t ii = n; ii-- > 0;) {
      Scalar s = rows[ii][n + col];
      for (std::size_t j = ii + 1; j < n; ++j) {
        if (!rows[ii][j].is_zero()) s -= rows[ii][j] * x[j];
      }
      x[ii] = s / rows[ii][ii];
    }
    for (std::size_t i = 0; i < n; ++i) inv.set(i, col, x[i]);
  }
  return inv;
}

Matrix exp_nilpotent(const Matrix& n) {
  const std::size_t size = n.size();
  Matrix result = Matrix::identity(size, n.field());
  Matrix power = n;
  Rational factorial = 1;
  for (std::size_t j = 1; j <= size; ++j) {
    if (power.is_zero()) return result;
    factorial *= static_cast<long>(j);
    result += power.scaled(Scalar(Rational(1 / factorial)));
    power = mat_mul(power, n);
  }
  if (power.is_zero()) return result;
  throw NotNilpotent("matrix is not nilpotent");
}

Matrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    std::string_view row = text.substr(start, end == std::string_view::npos ? end : end - start);
    std::vector<Scalar> entries;
    std::size_t s = 0;
    while (true) {
      std::size_t e = row.find(',', s);
      entries.push_back(parse_scalar(row.substr(s, e == std::string_view::npos ? e : e - s)));
      if (e == std::string_view::npos) break;
      s = e + 1;
    }
    rows.push_back(std::move(entries));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  const std::size_t n = rows.size();
  Field f = Field::Rational;
  for (const auto& r : rows) {
    if (r.size() != n) throw ParseError("matrix is not square: '" + std::string(text) + "'");
    for (const auto& e : r) f = join(f, e.field());
  }
  if (n % 2 != 0) throw ParseError("matrix size must be even: '" + std::string(text) + "'");
  Matrix m(n, f);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

}  // namespace chev
