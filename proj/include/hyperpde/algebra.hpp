#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperpde/errors.hpp"
#include "hyperpde/linalg.hpp"
#include "hyperpde/scalar.hpp"
#include "hyperpde/univariate.hpp"

namespace hyperpde {

inline constexpr std::size_t kMaxAlgebraDim = 64;

/// gamma[i][j][k] is the k-th coordinate of e_i * e_j.
using StructureTensor = std::vector<std::vector<std::vector<Scalar>>>;

struct StructureEntry {
  std::size_t k;
  Scalar value;
};

/// Nonzero structure constants of one basis product e_i * e_j.
struct StructurePair {
  std::size_t i;
  std::size_t j;
  std::vector<StructureEntry> entries;
};

/// A validated finite-dimensional commutative, associative algebra with unit
/// e_0. Cheap to copy: instances share one immutable table.
class Algebra {
 public:
  std::size_t dim() const noexcept { return data_->dim; }
  Field field() const noexcept { return data_->field; }
  const std::string& label() const noexcept { return data_->label; }

  const Scalar& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return data_->gamma[(i * data_->dim + j) * data_->dim + k];
  }
  StructureTensor tensor() const;
  /// Nonzero products grouped by (i, j), in row-major order.
  const std::vector<StructurePair>& nonzero_products() const noexcept { return data_->sparse; }

  /// Same table (and field). Labels are ignored.
  bool same_as(const Algebra& other) const;

  Algebra relabeled(std::string label) const;

 private:
  struct Data {
    std::size_t dim;
    Field field;
    std::string label;
    std::vector<Scalar> gamma;
    std::vector<StructurePair> sparse;
  };
  explicit Algebra(std::shared_ptr<const Data> d) : data_(std::move(d)) {}

  friend Algebra validate_algebra(const StructureTensor&, Field, std::string);
  std::shared_ptr<const Data> data_;
};

/// Checks shape, field, unit, commutativity and associativity exactly and
/// returns the algebra. Throws Error with codes ShapeError, DimTooLarge,
/// FieldViolation, UnitViolation(j,k), NotCommutative(i,j,k) or
/// NotAssociative(i,j,l); the witness is the first failing triple in
/// row-major order.
Algebra validate_algebra(const StructureTensor& gamma, Field field, std::string label = {});

/// First (i, j, l) with (e_i e_j) e_l != e_i (e_j e_l), scanning in row-major
/// order. The parallel version splits the scan over i with OpenMP.
std::optional<std::array<std::size_t, 3>> find_associativity_violation(const StructureTensor& gamma);
std::optional<std::array<std::size_t, 3>> find_associativity_violation_serial(const StructureTensor& gamma);

/// Element of an algebra, stored by coordinates in the algebra basis.
class Element {
 public:
  Element(Algebra algebra, std::vector<Scalar> coords);

  static Element unit(const Algebra& a) { return basis(a, 0); }
  static Element zero(const Algebra& a) { return Element(a, std::vector<Scalar>(a.dim())); }
  static Element basis(const Algebra& a, std::size_t index);

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t k) const { return coords_[k]; }
  bool is_zero() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Scalar& s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, const Scalar& s) { return a *= s; }
  friend Element operator*(const Scalar& s, Element a) { return a *= s; }
  Element operator-() const;

  /// Equal coordinates in the same algebra.
  friend bool operator==(const Element& a, const Element& b);

  std::string str() const;

 private:
  Algebra algebra_;
  std::vector<Scalar> coords_;
};

void require_same_algebra(const Algebra& a, const Algebra& b);

/// Bilinear extension of the structure constants to coordinate vectors over
/// any commutative ring T that can be scaled by Scalar (Scalar, MultiPoly).
template <class T>
std::vector<T> multiply_coords(const Algebra& alg, std::span<const T> a, std::span<const T> b, const T& zero) {
  std::vector<T> out(alg.dim(), zero);
  for (const auto& pair : alg.nonzero_products()) {
    if (is_zero(a[pair.i]) || is_zero(b[pair.j])) continue;
    T prod = a[pair.i] * b[pair.j];
    for (const auto& e : pair.entries) out[e.k] += prod * e.value;
  }
  return out;
}

Element mul(const Element& a, const Element& b);
inline Element operator*(const Element& a, const Element& b) { return mul(a, b); }
Element pow(const Element& a, unsigned exponent);

/// K[t]/(p) with basis 1, t, ..., t^{d-1}. p must be monic of degree >= 1.
Algebra quotient_algebra(const UPoly& p, Field field, std::string label = {});

/// A (+) B. The old units u_A = e_0 and u_B = e_{dim A} are replaced by
/// e'_0 = u_A + u_B and e'_{dim A} = u_A - u_B; all other basis vectors are
/// kept. For 1-dim (+) 1-dim this is exactly Q[t]/(t^2 - 1).
Algebra direct_sum(const Algebra& a, const Algebra& b, std::string label = {});

/// A (x) B with basis a_i (x) b_j at index i + dim(A) * j, so the unit stays at
/// index 0 and e.g. C (x) Q[t]/(t^2) is ordered 1, i, t, it.
Algebra tensor_product(const Algebra& a, const Algebra& b, std::string label = {});

/// Re-expresses the algebra in the basis given by the columns of `basis`
/// (old coordinates). The first column must be the unit.
Algebra change_basis(const Algebra& a, const Matrix& basis, std::string label = {});

/// M[k][j] = k-th coordinate of a * e_j.
Matrix regular_representation(const Element& a);

/// Ordered basis b_0..b_m of a subspace B with b_0 the unit.
class SubspaceBasis {
 public:
  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Element>& elements() const noexcept { return elements_; }
  const Element& operator[](std::size_t k) const { return elements_[k]; }
  /// m + 1, the number of variables x_0..x_m.
  std::size_t size() const noexcept { return elements_.size(); }

  /// Coordinates of h in this basis; throws NotInSubspace.
  std::vector<Scalar> coordinates_of(const Element& h) const;

 private:
  SubspaceBasis(Algebra a, std::vector<Element> e) : algebra_(std::move(a)), elements_(std::move(e)) {}
  friend SubspaceBasis check_basis(const Algebra&, std::vector<Element>);
  Algebra algebra_;
  std::vector<Element> elements_;
};

/// Thrown by check_basis for dependent inputs; `combination()` is a nonzero
/// vector lambda with sum lambda_k b_k = 0.
class LinearlyDependentError : public Error {
 public:
  LinearlyDependentError(const std::string& what, std::vector<Scalar> combination)
      : Error(ErrorCode::LinearlyDependent, what), combination_(std::move(combination)) {}
  const std::vector<Scalar>& combination() const noexcept { return combination_; }

 private:
  std::vector<Scalar> combination_;
};

/// Throws FirstNotUnit, LinearlyDependentError, AlgebraMismatch or
/// InvalidArgument (empty list).
SubspaceBasis check_basis(const Algebra& algebra, std::vector<Element> elements);

}  // namespace hyperpde
