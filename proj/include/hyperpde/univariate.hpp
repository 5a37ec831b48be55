#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyperpde/scalar.hpp"

namespace hyperpde {

/// Dense univariate polynomial in t over Q(i), coefficients in ascending
/// order with no trailing zeros (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> ascending);

  static UPoly monomial(std::size_t degree, Scalar coeff = 1);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == Scalar(1); }
  bool is_real() const;
  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Scalar& s);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  /// Remainder of division by a monic polynomial.
  UPoly mod(const UPoly& monic) const;

  /// "t^2+1", "-1/2*t+3", "(1+i)*t", "0".
  std::string str() const;
  /// Parses sums of terms `[coeff][*]t[^k]` or `coeff`, where coeff is a
  /// rational or a parenthesised scalar such as `(1/2-i)`.
  static UPoly parse(std::string_view text);

 private:
  void trim();
  std::vector<Scalar> coeffs_;
};

}  // namespace hyperpde
