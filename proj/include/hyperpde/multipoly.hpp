#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperpde/scalar.hpp"

namespace hyperpde {

/// Exponent vector (i_0, ..., i_m), one entry per variable.
using MultiIndex = std::vector<unsigned>;

unsigned total_degree(const MultiIndex& idx);

/// Graded lexicographic order: lower total degree first, then
/// lexicographically larger exponent vectors first (x0^2 < x0*x1 < x1^2).
struct GradedLex {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// Sparse polynomial in x_0..x_{nvars-1} over Q(i). No zero coefficient is
/// ever stored; the zero polynomial is the empty map.
class MultiPoly {
 public:
  using TermMap = std::map<MultiIndex, Scalar, GradedLex>;

  MultiPoly() = default;
  explicit MultiPoly(std::size_t nvars) : nvars_(nvars) {}

  static MultiPoly constant(std::size_t nvars, const Scalar& c);
  static MultiPoly variable(std::size_t nvars, std::size_t k);
  static MultiPoly monomial(MultiIndex exponents, const Scalar& c);
  /// Sums duplicate exponents and drops zeros.
  static MultiPoly from_terms(std::size_t nvars, std::span<const std::pair<MultiIndex, Scalar>> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_real() const;
  std::size_t size() const noexcept { return terms_.size(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  Scalar coefficient(const MultiIndex& exponents) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Scalar& s);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
  friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) = default;

  /// "x0^2 - x1^2", "2*x0*x1", "0". Terms in descending graded-lex order.
  std::string str() const;

 private:
  void require_arity(const MultiPoly& o) const;
  std::size_t nvars_ = 0;
  TermMap terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

/// Throws VarOutOfRange.
MultiPoly partial_derivative(const MultiPoly& p, std::size_t var);
/// d^|idx| / dx_0^{i_0} ... dx_m^{i_m}; throws ArityMismatch.
MultiPoly iterated_derivative(const MultiPoly& p, const MultiIndex& idx);

/// Exact value at a point; throws ArityMismatch.
Scalar evaluate(const MultiPoly& p, std::span<const Scalar> point);
/// Floating-point value at a (possibly complex) point.
std::complex<double> evaluate(const MultiPoly& p, std::span<const std::complex<double>> point);

}  // namespace hyperpde
