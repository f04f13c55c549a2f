#include "chev/gaussian.hpp"

#include "chev/error.hpp"

namespace chev {

Gaussian Gaussian::inverse() const {
  Rational n = norm();
  if (sgn(n) == 0) throw DivisionByZero("inverse of Gaussian zero");
  return Gaussian(re_ / n, -im_ / n);
}

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (o.is_real()) {
    re_ *= o.re_;
    im_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) { return *this *= o.inverse(); }

std::string Gaussian::to_string() const {
  std::string s = chev::to_string(re_);
  if (sgn(im_) < 0) {
    s += '-';
    s += chev::to_string(Rational(-im_));
  } else {
    s += '+';
    s += chev::to_string(im_);
  }
  s += " i";
  return s;
}

}  // namespace chev
