#pragma once

#include <complex>
#include <gmpxx.h>
#include <ostream>
#include <string>
#include <string_view>

namespace hyperpde {

/// Ground field of an algebra: the rationals or the Gaussian rationals.
enum class Field { Q, Qi };

std::string_view to_string(Field f);
Field parse_field(std::string_view s);

/// Exact element of Q(i). Real scalars simply have a zero imaginary part, so
/// one type serves both fields; the field tag lives on the algebra.
///
/// Both parts are GMP rationals and therefore always in lowest terms with a
/// positive denominator.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  /// num/den in lowest terms; throws DivisionByZero when den == 0.
  static Scalar rational(long num, long den);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }
  /// Exact conversion of a finite double (doubles are dyadic rationals).
  static Scalar from_double(double v);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// Multiplicative inverse; throws DivisionByZero for zero.
  Scalar inv() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const { return Scalar(-re_, -im_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// Canonical text: "p/q" (integers as "p"), "p/q+r/s*i", or "r/s*i".
  std::string str() const;
  /// Inverse of str(); also accepts "i", "-i", whitespace, and a leading '+'.
  static Scalar parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace hyperpde
