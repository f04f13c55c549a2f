#include "chev/arrangement.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "chev/error.hpp"

namespace chev {

namespace {

using Vec = std::vector<Rational>;

Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] != 0 && b[k] != 0) s += a[k] * b[k];
  }
  return s;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(std::vector<Vec>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::size_t rank_of(std::vector<Vec> rows, std::size_t cols) { return rref(rows, cols).size(); }

std::vector<Vec> nullspace(std::vector<Vec> rows, std::size_t cols) {
  auto pivots = rref(rows, cols);
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Vec v(cols, Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

Vec to_vec(const Root& r) {
  Vec v;
  for (int c : r.coeffs) v.emplace_back(c);
  return v;
}

Vec to_vec(const std::vector<Integer>& n) {
  Vec v;
  for (const auto& c : n) v.emplace_back(c);
  return v;
}

// ------------------------------------------------------ Fourier-Motzkin

// a . y <= b, with the nonnegative multipliers over the original system
struct Ineq {
  Vec a;
  Rational b;
  Vec lam;
};

struct FMResult {
  bool feasible = false;
  Vec y;
  Vec lam;
};

std::string key_of(const Vec& a) {
  std::string k;
  for (const auto& x : a) k += x.get_str() + ",";
  return k;
}

// Scales to a leading coefficient of magnitude 1 and keeps the tightest
// bound among parallel constraints.
std::vector<Ineq> normalize(std::vector<Ineq> in) {
  std::map<std::string, Ineq> best;
  for (auto& c : in) {
    auto lead = std::find_if(c.a.begin(), c.a.end(), [](const Rational& x) { return x != 0; });
    if (lead != c.a.end()) {
      Rational s = abs(*lead);
      if (s != 1) {
        for (auto& x : c.a) x /= s;
        c.b /= s;
        for (auto& x : c.lam) x /= s;
      }
    }
    std::string k = key_of(c.a);
    auto it = best.find(k);
    if (it == best.end()) best.emplace(std::move(k), std::move(c));
    else if (c.b < it->second.b) it->second = std::move(c);
  }
  std::vector<Ineq> out;
  for (auto& [k, c] : best) out.push_back(std::move(c));
  return out;
}

Rational simple_value(const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  if (lo && hi) {
    Integer a = ceil(*lo), b = floor(*hi);
    if (a <= b) {
      if (a > 0) return Rational(a);
      if (b < 0) return Rational(b);
      return 0;
    }
    return (*lo + *hi) / 2;
  }
  if (lo) return *lo > 0 ? Rational(ceil(*lo)) : Rational(0);
  if (hi) return *hi < 0 ? Rational(floor(*hi)) : Rational(0);
  return 0;
}

FMResult fourier_motzkin(std::vector<Ineq> cons, std::size_t nvars) {
  auto contradiction = [](const std::vector<Ineq>& cs) -> const Ineq* {
    for (const auto& c : cs) {
      if (is_zero(c.a) && c.b < 0) return &c;
    }
    return nullptr;
  };
  cons = normalize(std::move(cons));
  std::vector<std::vector<Ineq>> stages(nvars);
  for (std::size_t k = nvars; k-- > 0;) {
    if (const Ineq* bad = contradiction(cons)) return {false, {}, bad->lam};
    std::vector<Ineq> pos, neg, next;
    for (auto& c : cons) {
      if (c.a[k] > 0) pos.push_back(c);
      else if (c.a[k] < 0) neg.push_back(c);
      else next.push_back(c);
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Rational fp = 1 / p.a[k], fq = -1 / q.a[k];
        Ineq c{Vec(nvars), fp * p.b + fq * q.b, Vec(p.lam.size())};
        for (std::size_t j = 0; j < nvars; ++j) c.a[j] = fp * p.a[j] + fq * q.a[j];
        c.a[k] = 0;
        for (std::size_t j = 0; j < c.lam.size(); ++j) c.lam[j] = fp * p.lam[j] + fq * q.lam[j];
        next.push_back(std::move(c));
      }
    }
    stages[k] = std::move(cons);
    cons = normalize(std::move(next));
  }
  if (const Ineq* bad = contradiction(cons)) return {false, {}, bad->lam};

  Vec y(nvars, Rational(0));
  for (std::size_t k = 0; k < nvars; ++k) {
    std::optional<Rational> lo, hi;
    for (const auto& c : stages[k]) {
      if (c.a[k] == 0) continue;
      Rational rest = c.b;
      for (std::size_t j = 0; j < k; ++j) {
        if (c.a[j] != 0) rest -= c.a[j] * y[j];
      }
      Rational bound = rest / c.a[k];
      if (c.a[k] > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else if (!lo || bound > *lo) {
        lo = bound;
      }
    }
    y[k] = simple_value(lo, hi);
  }
  return {true, std::move(y), {}};
}

// Strict system f_k . x < 0 on the region, solved as f_k . y <= -1 in plane
// coordinates (the cone is invariant under positive scaling).
FMResult strictly_negative(const Plane& region, const std::vector<Vec>& functionals) {
  std::vector<Ineq> cons;
  for (std::size_t k = 0; k < functionals.size(); ++k) {
    Vec lam(functionals.size(), Rational(0));
    lam[k] = 1;
    cons.push_back({region.restrict(functionals[k]), Rational(-1), std::move(lam)});
  }
  return fourier_motzkin(std::move(cons), region.dim());
}

std::string term(const Integer& c, std::size_t k, bool first) {
  std::string s;
  if (c < 0) s += "-";
  else if (!first) s += "+";
  Integer m = abs(c);
  if (m != 1) s += m.get_str();
  return s + "t" + std::to_string(k + 1);
}

}  // namespace

std::vector<Integer> primitive(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& x : v) {
    out.push_back(Integer(x * l));
    g = gcd(g, out.back());
  }
  if (g == 0) throw DegenerateInput("zero vector has no primitive form");
  auto lead = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (*lead < 0) g = -g;
  for (auto& x : out) x /= g;
  return out;
}

Rational Hyperplane::eval(const CartanVector& x) const {
  if (x.size() != normal.size()) throw SizeMismatch("point dimension differs from hyperplane dimension");
  return dot(to_vec(normal), x);
}

std::string Hyperplane::equation() const {
  std::string s;
  for (std::size_t k = 0; k < normal.size(); ++k) {
    if (normal[k] == 0) continue;
    s += term(normal[k], k, s.empty());
  }
  return s + "=0";
}

std::vector<Hyperplane> lyapunov_hyperplanes(const std::vector<Root>& roots, std::size_t ambient_dim) {
  std::vector<Hyperplane> out;
  for (const auto& r : roots) {
    if (r.rank() != ambient_dim) {
      throw SizeMismatch("root " + r.to_string() + " has rank " + std::to_string(r.rank()) + ", ambient dimension is " +
                         std::to_string(ambient_dim));
    }
    if (r.is_zero()) throw DegenerateInput("zero functional has no hyperplane");
    auto n = primitive(to_vec(r));
    auto it = std::find_if(out.begin(), out.end(), [&](const Hyperplane& h) { return h.normal == n; });
    if (it == out.end()) {
      out.push_back({std::move(n), {r}});
    } else if (std::find(it->labels.begin(), it->labels.end(), r) == it->labels.end()) {
      it->labels.push_back(r);
    }
  }
  return out;
}

Plane Plane::full(std::size_t ambient_dim) {
  if (ambient_dim == 0) throw DegenerateInput("ambient dimension must be positive");
  std::vector<CartanVector> basis;
  for (std::size_t k = 0; k < ambient_dim; ++k) {
    CartanVector e(ambient_dim, Rational(0));
    e[k] = 1;
    basis.push_back(std::move(e));
  }
  return from_basis(std::move(basis));
}

Plane Plane::from_basis(std::vector<CartanVector> basis, std::vector<CartanVector> constraints) {
  if (basis.empty()) throw DegenerateInput("plane needs at least one basis vector");
  Plane p;
  p.ambient_ = basis[0].size();
  for (const auto& v : basis) {
    if (v.size() != p.ambient_) throw SizeMismatch("basis vectors have different lengths");
  }
  for (const auto& c : constraints) {
    if (c.size() != p.ambient_) throw SizeMismatch("constraint length differs from the ambient dimension");
    for (const auto& v : basis) {
      if (dot(c, v) != 0) throw DegenerateInput("basis vector " + to_string(v) + " violates constraint " + to_string(c));
    }
  }
  if (rank_of(basis, p.ambient_) != basis.size()) throw DegenerateInput("basis vectors are linearly dependent");
  p.basis_ = std::move(basis);
  p.constraints_ = std::move(constraints);
  return p;
}

Plane Plane::from_equations(std::size_t ambient_dim, std::vector<CartanVector> equations) {
  for (const auto& e : equations) {
    if (e.size() != ambient_dim) throw SizeMismatch("equation length differs from the ambient dimension");
  }
  auto basis = nullspace(equations, ambient_dim);
  if (basis.empty()) throw DegenerateInput("equations cut out the zero subspace");
  return from_basis(std::move(basis), std::move(equations));
}

bool Plane::contains(const CartanVector& x) const {
  if (x.size() != ambient_) throw SizeMismatch("point dimension differs from the ambient dimension");
  std::vector<Vec> rows = basis_;
  rows.push_back(x);
  return rank_of(rows, ambient_) == basis_.size();
}

CartanVector Plane::point(const std::vector<Rational>& coords) const {
  if (coords.size() != basis_.size()) throw SizeMismatch("coordinate count differs from the plane dimension");
  CartanVector x(ambient_, Rational(0));
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) x[j] += coords[k] * basis_[k][j];
  }
  return x;
}

std::vector<Rational> Plane::restrict(const std::vector<Rational>& functional) const {
  if (functional.size() != ambient_) throw SizeMismatch("functional length differs from the ambient dimension");
  std::vector<Rational> out;
  for (const auto& b : basis_) out.push_back(dot(functional, b));
  return out;
}

CartanVector parse_vector(std::string_view text) {
  CartanVector v;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(',', start);
    v.push_back(parse_rational(text.substr(start, end == std::string_view::npos ? end : end - start)));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return v;
}

std::string to_string(const CartanVector& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k > 0) s += ',';
    s += to_string(v[k]);
  }
  return s;
}

Plane parse_plane(std::string_view text, std::size_t ambient_dim) {
  bool equations = text.substr(0, 3) == "eq:";
  if (equations) text.remove_prefix(3);
  std::vector<CartanVector> vs;
  std::size_t start = 0;
  while (true) {
    std::size_t end = text.find(';', start);
    auto part = text.substr(start, end == std::string_view::npos ? end : end - start);
    if (part.find_first_not_of(" \t") != std::string_view::npos) vs.push_back(parse_vector(part));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  for (const auto& v : vs) {
    if (v.size() != ambient_dim) {
      throw SizeMismatch("plane vector '" + to_string(v) + "' has length " + std::to_string(v.size()) +
                         ", expected " + std::to_string(ambient_dim));
    }
  }
  if (equations) return Plane::from_equations(ambient_dim, std::move(vs));
  return Plane::from_basis(std::move(vs));
}

GenericityVerdict is_generic(const Plane& plane, const std::vector<Hyperplane>& hps) {
  if (plane.dim() != 2) {
    throw DegenerateInput("genericity needs a 2-dimensional plane, got dimension " + std::to_string(plane.dim()));
  }
  GenericityVerdict v;
  for (const auto& h : hps) {
    auto c = plane.restrict(to_vec(h.normal));
    if (is_zero(c)) {
      v.lines.emplace_back();
      continue;
    }
    v.lines.push_back(primitive(plane.point({-c[1], c[0]})));
  }
  for (std::size_t k = 0; k < hps.size(); ++k) {
    if (v.lines[k].empty()) {
      v.witness = GenericityVerdict::Witness::Containment;
      v.first = k;
      return v;
    }
  }
  for (std::size_t i = 0; i < hps.size(); ++i) {
    for (std::size_t j = i + 1; j < hps.size(); ++j) {
      if (v.lines[i] == v.lines[j]) {
        v.witness = GenericityVerdict::Witness::SharedLine;
        v.first = i;
        v.second = j;
        v.line = v.lines[i];
        return v;
      }
    }
  }
  v.generic = true;
  return v;
}

StableResult find_stable_element(const Plane& region, const std::vector<Root>& roots) {
  if (roots.empty()) throw DegenerateInput("no roots given");
  std::vector<Vec> fs;
  for (const auto& r : roots) {
    if (r.rank() != region.ambient_dim()) throw SizeMismatch("root rank differs from the ambient dimension");
    fs.push_back(to_vec(r));
  }
  auto res = strictly_negative(region, fs);
  StableResult out;
  if (res.feasible) {
    out.feasible = true;
    out.point = region.point(res.y);
    if (!is_stable_point(out.point, roots)) throw Error("internal: elimination produced a non-stable point");
    return out;
  }
  out.multipliers = res.lam;
  out.combination.assign(region.ambient_dim(), Rational(0));
  for (std::size_t k = 0; k < fs.size(); ++k) {
    for (std::size_t j = 0; j < fs[k].size(); ++j) out.combination[j] += res.lam[k] * fs[k][j];
  }
  return out;
}

bool is_stable_point(const CartanVector& x, const std::vector<Root>& roots) {
  return std::all_of(roots.begin(), roots.end(), [&](const Root& r) { return root_eval(r, x) < 0; });
}

std::vector<Chamber> weyl_chambers(const std::vector<Hyperplane>& hps, const Plane& region) {
  std::vector<Chamber> out;
  std::vector<Vec> normals;
  for (const auto& h : hps) {
    if (h.normal.size() != region.ambient_dim()) throw SizeMismatch("hyperplane dimension differs from the region");
    normals.push_back(to_vec(h.normal));
    if (is_zero(region.restrict(normals.back()))) return out;
  }
  std::vector<int> signs;
  std::vector<Vec> active;  // functionals required to be negative
  std::function<void()> descend = [&] {
    auto res = strictly_negative(region, active);
    if (!res.feasible) return;
    if (signs.size() == hps.size()) {
      out.push_back({signs, region.point(res.y)});
      return;
    }
    const Vec& n = normals[signs.size()];
    for (int s : {1, -1}) {
      Vec f = n;
      if (s > 0) {
        for (auto& x : f) x = -x;
      }
      signs.push_back(s);
      active.push_back(std::move(f));
      descend();
      active.pop_back();
      signs.pop_back();
    }
  };
  descend();
  return out;
}

}  // namespace chev
