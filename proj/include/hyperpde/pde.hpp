#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hyperpde/algebra.hpp"
#include "hyperpde/hyperfun.hpp"
#include "hyperpde/multipoly.hpp"

namespace hyperpde {

/// Seed used for certificate spot checks unless the caller picks another.
inline constexpr std::uint64_t kDefaultSeed = 1729;
inline constexpr std::size_t kSpotCheckPoints = 8;

/// Homogeneous linear PDE with constant coefficients:
///   sum_{|i| = r} C_i d^r u / dx_0^{i_0} ... dx_m^{i_m} = 0.
class Pde {
 public:
  /// Throws ArityMismatch (index length != nvars), NotHomogeneous (an index
  /// whose total order differs from `order`), ZeroOperator, InvalidArgument
  /// (order 0 or nvars 0).
  static Pde make(std::size_t nvars, unsigned order, std::span<const std::pair<MultiIndex, Scalar>> terms);

  std::size_t nvars() const noexcept { return nvars_; }
  unsigned order() const noexcept { return order_; }
  const MultiPoly::TermMap& terms() const noexcept { return terms_; }
  bool is_real() const;

  /// Operator text such as "1*D(2,0) + 1*D(0,2)".
  std::string str() const;

  friend bool operator==(const Pde&, const Pde&) = default;

 private:
  Pde() = default;
  std::size_t nvars_ = 0;
  unsigned order_ = 0;
  MultiPoly::TermMap terms_;
};

struct SymbolResult {
  Element value;
  bool is_zero;
};

/// sum_i C_i b_0^{i_0} ... b_m^{i_m}, exactly. Throws ArityMismatch.
SymbolResult symbol_evaluate(const Pde& pde, const SubspaceBasis& basis);

/// The residual sum_i C_i D^i u. Zero iff u solves the PDE. Throws ArityMismatch.
MultiPoly apply_operator(const Pde& pde, const MultiPoly& u);

struct SpotCheck {
  std::vector<Scalar> point;      // rationals in [-2, 2]
  std::vector<double> point_f;    // the same point as doubles
  double max_abs_residual = 0.0;  // max_k |residual_k(point)|
};

struct SolutionCertificate {
  Pde pde;
  std::string algebra_label;
  std::vector<Element> basis;
  std::string function;
  std::vector<MultiPoly> residuals;  // one per component u_k
  bool verdict = false;              // all residuals are the zero polynomial
  std::vector<SpotCheck> spot_checks;
};

/// Deterministic rational points with coordinates num/8, num in [-16, 16].
std::vector<std::vector<Scalar>> spot_check_points(std::size_t nvars, std::size_t count, std::uint64_t seed);

/// Applies the operator to every component. Components are processed in
/// parallel; certify_serial is the single-threaded reference. Both return
/// identical certificates. Throws ArityMismatch.
SolutionCertificate certify(const Pde& pde, const AlgebraPolyFunction& f, std::uint64_t seed = kDefaultSeed);
SolutionCertificate certify_serial(const Pde& pde, const AlgebraPolyFunction& f, std::uint64_t seed = kDefaultSeed);

/// Central-difference approximation of the operator at `point` with step h:
/// each derivative order i along x_k uses the stencil
///   sum_s (-1)^s C(i, s) u(x + (i/2 - s) h e_k) / h^i,
/// composed across variables. Stencil nodes are formed from the exact values
/// of the doubles passed in and u is evaluated exactly there, so the result
/// differs from the exact residual only by the stencil's O(h^2) truncation.
std::complex<double> finite_difference_residual(const Pde& pde, const MultiPoly& u, std::span<const double> point,
                                                double h);

}  // namespace hyperpde
