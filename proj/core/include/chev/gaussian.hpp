#pragma once

#include <string>

#include "chev/rational.hpp"

namespace chev {

/// Element re + im*i of Q(i).
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  static Gaussian i() { return Gaussian(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Gaussian conj() const { return Gaussian(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Gaussian inverse() const;

  Gaussian& operator+=(const Gaussian& o);
  Gaussian& operator-=(const Gaussian& o);
  Gaussian& operator*=(const Gaussian& o);
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return Gaussian(-re_, -im_); }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// "p/q+r/s i" (imaginary part always present).
  std::string to_string() const;
  bool is_canonical() const { return chev::is_canonical(re_) && chev::is_canonical(im_); }

 private:
  Rational re_ = 0;
  Rational im_ = 0;
};

}  // namespace chev
