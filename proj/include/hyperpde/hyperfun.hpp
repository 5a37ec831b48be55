#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperpde/algebra.hpp"
#include "hyperpde/multipoly.hpp"

namespace hyperpde {

/// An algebra-valued function f = sum_k e_k u_k(x_0..x_m) on the subspace
/// spanned by a SubspaceBasis. Components are computed once at construction.
///
/// Functions built from coefficients represent f(z) = sum_j c_j z^j with
/// z = x_0 b_0 + ... + x_m b_m; functions built from raw components carry no
/// coefficient list and need not be hyperholomorphic.
class AlgebraPolyFunction {
 public:
  const SubspaceBasis& basis() const noexcept { return basis_; }
  const Algebra& algebra() const noexcept { return basis_.algebra(); }
  std::size_t nvars() const noexcept { return basis_.size(); }
  const std::optional<std::vector<Element>>& coeffs() const noexcept { return coeffs_; }
  /// u_0..u_n, one per algebra basis vector, each in nvars() variables.
  const std::vector<MultiPoly>& components() const noexcept { return components_; }
  const std::string& description() const noexcept { return description_; }

  /// Throws ShapeError unless there is one component per algebra coordinate,
  /// each with basis.size() variables.
  static AlgebraPolyFunction from_components(SubspaceBasis basis, std::vector<MultiPoly> components,
                                             std::string description = "raw components");

  friend AlgebraPolyFunction build_power_function(const SubspaceBasis&, std::vector<Element>, std::string);
  friend AlgebraPolyFunction derivative(const AlgebraPolyFunction&);
  friend AlgebraPolyFunction operator+(const AlgebraPolyFunction&, const AlgebraPolyFunction&);
  friend AlgebraPolyFunction operator*(const Scalar&, const AlgebraPolyFunction&);

 private:
  AlgebraPolyFunction(SubspaceBasis basis, std::optional<std::vector<Element>> coeffs,
                      std::vector<MultiPoly> components, std::string description)
      : basis_(std::move(basis)),
        coeffs_(std::move(coeffs)),
        components_(std::move(components)),
        description_(std::move(description)) {}

  SubspaceBasis basis_;
  std::optional<std::vector<Element>> coeffs_;
  std::vector<MultiPoly> components_;
  std::string description_;
};

/// Coordinates of z = sum_k x_k b_k as polynomials in x_0..x_m.
std::vector<MultiPoly> linear_form(const SubspaceBasis& basis);

/// Expands sum_j coeffs[j] * z^j. Throws InvalidArgument for an empty list and
/// AlgebraMismatch for coefficients from another algebra.
AlgebraPolyFunction build_power_function(const SubspaceBasis& basis, std::vector<Element> coeffs,
                                         std::string description = {});
/// z^degree.
AlgebraPolyFunction build_monomial(const SubspaceBasis& basis, unsigned degree);
/// sum_{j<=order} z^j / j!.
AlgebraPolyFunction build_truncated_exp(const SubspaceBasis& basis, unsigned order);

/// f' = sum_k e_k du_k/dx_0. For coefficient-built f the result also carries
/// the shifted coefficients j*c_j.
AlgebraPolyFunction derivative(const AlgebraPolyFunction& f);

AlgebraPolyFunction operator+(const AlgebraPolyFunction& f, const AlgebraPolyFunction& g);
AlgebraPolyFunction operator*(const Scalar& s, const AlgebraPolyFunction& f);

/// Multiplies an algebra element into an element-valued polynomial vector.
std::vector<MultiPoly> multiply(const Element& a, std::span<const MultiPoly> coords);

struct CrFailure {
  std::size_t direction;   // j in 1..m
  std::size_t coordinate;  // algebra coordinate k
  MultiPoly residual;      // nonzero
};

struct CrReport {
  bool holds = true;
  std::vector<CrFailure> failures;
};

/// Checks sum_k e_k du_k/dx_j == b_j * sum_k e_k du_k/dx_0 for j = 1..m exactly.
CrReport check_cauchy_riemann(const AlgebraPolyFunction& f);

using FloatCoords = std::vector<std::complex<double>>;

/// Components evaluated in floating point at a complex point.
FloatCoords evaluate(const AlgebraPolyFunction& f, std::span<const std::complex<double>> point);

/// (f(x + eps*h) - f(x)) / eps in floating point. h must lie in the span of
/// the basis (NotInSubspace otherwise); eps must be positive.
FloatCoords directional_difference_oracle(const AlgebraPolyFunction& f, std::span<const Scalar> point,
                                          const Element& h, double eps);

/// h * f'(x), evaluated exactly and rounded.
FloatCoords directional_derivative(const AlgebraPolyFunction& f, std::span<const Scalar> point, const Element& h);

}  // namespace hyperpde
