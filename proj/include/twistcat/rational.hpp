#ifndef TWISTCAT_RATIONAL_HPP
#define TWISTCAT_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>

namespace twistcat {

using Rational = boost::multiprecision::mpq_rational;

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero in Q(i)") {}
};

/// Element of Q(i): re + im*i with arbitrary-precision rational parts.
/// mpq keeps each part in lowest terms with positive denominator, so values
/// are always canonical and equality is exact.
class GaussianRational {
public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v) {}
  GaussianRational(const Rational& re) : re_(re) {}
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  GaussianRational(long re_num, long re_den, long im_num, long im_den)
      : re_(re_num, re_den), im_(im_num, im_den) {}

  static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_ == 0 && im_ == 0; }
  bool is_real() const { return im_ == 0; }

  GaussianRational conj() const { return GaussianRational(re_, -im_); }

  /// re^2 + im^2 (the multiplicative norm over Q; zero only at zero).
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  GaussianRational& operator/=(const GaussianRational& o) { return *this *= o.inv(); }

  GaussianRational inv() const {
    Rational n = norm();
    if (n == 0) throw DivisionByZero();
    return GaussianRational(re_ / n, -im_ / n);
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  /// Serialized as "a/b+c/di", omitting zero parts and unit denominators,
  /// e.g. "1", "-i", "1/2+2/3i", "1-i", "0".
  std::string str() const;

  /// Parses the str() format (also accepts leading '+').
  static GaussianRational parse(const std::string& s);

private:
  Rational re_{0};
  Rational im_{0};
};

inline GaussianRational gq(long num, long den = 1) { return GaussianRational(Rational(num, den)); }

}  // namespace twistcat

#endif
