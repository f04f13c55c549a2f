#include "chev/root.hpp"

#include <algorithm>
#include <cstdlib>

#include "chev/error.hpp"

namespace chev {

Root Root::diff(std::size_t rank, std::size_t i, std::size_t j) {
  Root r(std::vector<int>(rank, 0));
  r.coeffs.at(i) += 1;
  r.coeffs.at(j) -= 1;
  return r;
}

Root Root::sum(std::size_t rank, std::size_t i, std::size_t j, int sign) {
  Root r(std::vector<int>(rank, 0));
  r.coeffs.at(i) += sign;
  r.coeffs.at(j) += sign;
  return r;
}

Root Root::twice(std::size_t rank, std::size_t i, int sign) {
  Root r(std::vector<int>(rank, 0));
  r.coeffs.at(i) = 2 * sign;
  return r;
}

bool Root::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (int& c : r.coeffs) c = -c;
  return r;
}

Root operator+(const Root& a, const Root& b) {
  if (a.rank() != b.rank()) throw SizeMismatch("roots of different rank");
  Root r(a.coeffs);
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += b.coeffs[k];
  return r;
}

Root Root::times(int k) const {
  Root r(coeffs);
  for (int& c : r.coeffs) c *= k;
  return r;
}

std::string Root::to_string() const {
  std::string s;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (k > 0) s += ',';
    s += std::to_string(coeffs[k]);
  }
  if (tag != 0) s += ":" + std::to_string(tag);
  return s;
}

Root parse_root(std::string_view text) {
  Root r;
  auto colon = text.find(':');
  std::string_view body = text.substr(0, colon);
  if (colon != std::string_view::npos) {
    std::string_view t = text.substr(colon + 1);
    if (t == "1") {
      r.tag = 1;
    } else if (t == "2") {
      r.tag = 2;
    } else {
      throw ParseError("root tag must be 1 or 2 in '" + std::string(text) + "'");
    }
  }
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    std::string item(body.substr(start, comma == std::string_view::npos ? comma : comma - start));
    char* end = nullptr;
    long v = std::strtol(item.c_str(), &end, 10);
    if (item.empty() || *end != '\0') throw ParseError("bad root coefficient in '" + std::string(text) + "'");
    r.coeffs.push_back(static_cast<int>(v));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return r;
}

RootShape classify(const Root& r) {
  std::vector<std::size_t> support;
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) {
    if (r.coeffs[k] != 0) support.push_back(k);
  }
  if (support.size() == 1) {
    std::size_t i = support[0];
    if (r.coeffs[i] == 2) return {RootShape::Long, i, i};
    if (r.coeffs[i] == -2) return {RootShape::NegLong, i, i};
  } else if (support.size() == 2) {
    std::size_t i = support[0], j = support[1];
    int a = r.coeffs[i], b = r.coeffs[j];
    if (a == 1 && b == -1) return {RootShape::Diff, i, j};
    if (a == -1 && b == 1) return {RootShape::Diff, j, i};
    if (a == 1 && b == 1) return {RootShape::Sum, i, j};
    if (a == -1 && b == -1) return {RootShape::NegSum, i, j};
  }
  throw InvalidRoot("'" + r.to_string() + "' is not of the form +-L_i+-L_j or +-2L_i");
}

bool is_c_root(const Root& r) {
  try {
    classify(r);
    return true;
  } catch (const InvalidRoot&) {
    return false;
  }
}

bool is_a_root(const Root& r) {
  try {
    return classify(r).kind == RootShape::Diff;
  } catch (const InvalidRoot&) {
    return false;
  }
}

Rational root_eval(const Root& r, const CartanVector& t) {
  if (r.rank() != t.size()) {
    throw SizeMismatch("root of rank " + std::to_string(r.rank()) + " evaluated at a vector of length " +
                       std::to_string(t.size()));
  }
  Rational v = 0;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (r.coeffs[k] != 0) v += r.coeffs[k] * t[k];
  }
  return v;
}

RootSystem::RootSystem(const GroupModel& model) : model_(model) {
  if (model.n < 2) throw Error("root system needs n >= 2");
  const std::size_t rank = model.rank();
  if (model.family == Family::SLStd) {
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        if (i != j) roots_.push_back(Root::diff(rank, i, j));
      }
    }
    for (std::size_t i = 0; i + 1 < rank; ++i) simple_.push_back(Root::diff(rank, i, i + 1));
  } else {
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = 0; j < rank; ++j) {
        if (i != j) roots_.push_back(Root::diff(rank, i, j));
      }
      for (std::size_t j = i + 1; j < rank; ++j) {
        roots_.push_back(Root::sum(rank, i, j, 1));
        roots_.push_back(Root::sum(rank, i, j, -1));
      }
      roots_.push_back(Root::twice(rank, i, 1));
      roots_.push_back(Root::twice(rank, i, -1));
    }
    for (std::size_t i = 0; i + 1 < rank; ++i) simple_.push_back(Root::diff(rank, i, i + 1));
    simple_.push_back(Root::twice(rank, rank - 1));
  }
  std::sort(roots_.begin(), roots_.end(), [this](const Root& a, const Root& b) { return before(a, b); });
  for (const Root& r : roots_) {
    if (sgn(height(r)) > 0) positive_.push_back(r);
  }
}

bool RootSystem::contains(const Root& r) const {
  if (r.rank() != model_.rank()) return false;
  if (model_.family == Family::SLStd) return r.tag == 0 && is_a_root(r);
  if (!is_c_root(r)) return false;
  if (r.tag == 0) return true;
  if (!model_.is_sl()) return false;
  auto k = classify(r).kind;
  return k != RootShape::Long && k != RootShape::NegLong;
}

bool RootSystem::is_positive(const Root& r) const { return contains(r) && sgn(height(r)) > 0; }

std::vector<Rational> RootSystem::simple_coordinates(const Root& r) const {
  const std::size_t rank = model_.rank();
  if (r.rank() != rank) throw SizeMismatch("root rank does not match the root system");
  std::vector<Rational> c;
  Rational partial = 0;
  for (std::size_t k = 0; k + 1 < rank; ++k) {
    partial += r.coeffs[k];
    c.push_back(partial);
  }
  if (model_.family != Family::SLStd) {
    partial += r.coeffs[rank - 1];
    c.push_back(partial / 2);
  }
  return c;
}

Rational RootSystem::height(const Root& r) const {
  Rational h = 0;
  for (const auto& c : simple_coordinates(r)) h += c;
  return h;
}

bool RootSystem::before(const Root& a, const Root& b) const {
  Rational ha = height(a), hb = height(b);
  if (ha != hb) return ha < hb;
  if (a.coeffs != b.coeffs) return a.coeffs < b.coeffs;
  return a.tag < b.tag;
}

std::vector<Combination> RootSystem::positive_combinations(const Root& r, const Root& p) const {
  if (r.rank() != p.rank()) throw SizeMismatch("roots of different rank");
  if ((r + p).is_zero()) {
    throw InvalidRoot("antipodal pair " + r.to_string() + ", " + p.to_string() + " has no commutator support");
  }
  std::vector<Combination> out;
  for (int s = 2; s <= 6; ++s) {
    for (int i = 1; i < s; ++i) {
      int j = s - i;
      if (i > 3 || j > 3) continue;
      Root c = r.untagged().times(i) + p.untagged().times(j);
      if (contains(c)) out.push_back({i, j, c});
    }
  }
  return out;
}

RootSystem build_root_system(const GroupModel& model) { return RootSystem(model); }

std::vector<Combination> positive_combinations(const Root& r, const Root& p) {
  GroupModel m;
  m.family = Family::Sp;
  m.n = static_cast<int>(r.rank());
  return RootSystem(m).positive_combinations(r, p);
}

}  // namespace chev
