#include "hyperpde/hyperfun.hpp"

namespace hyperpde {

namespace {

void require_basis_arity(const SubspaceBasis& basis, std::span<const MultiPoly> components) {
  if (components.size() != basis.algebra().dim())
    throw Error(ErrorCode::ShapeError, std::to_string(components.size()) + " components for an algebra of dim " +
                                           std::to_string(basis.algebra().dim()));
  for (const auto& u : components)
    if (u.nvars() != basis.size())
      throw Error(ErrorCode::ArityMismatch,
                  "component in " + std::to_string(u.nvars()) + " variables, basis has " + std::to_string(basis.size()));
}

std::vector<MultiPoly> lift(const Element& c, std::size_t nvars) {
  std::vector<MultiPoly> out;
  out.reserve(c.coords().size());
  for (const auto& s : c.coords()) out.push_back(MultiPoly::constant(nvars, s));
  return out;
}

std::vector<MultiPoly> derivative_along(std::span<const MultiPoly> components, std::size_t var) {
  std::vector<MultiPoly> out;
  out.reserve(components.size());
  for (const auto& u : components) out.push_back(partial_derivative(u, var));
  return out;
}

}  // namespace

AlgebraPolyFunction AlgebraPolyFunction::from_components(SubspaceBasis basis, std::vector<MultiPoly> components,
                                                         std::string description) {
  require_basis_arity(basis, components);
  return AlgebraPolyFunction(std::move(basis), std::nullopt, std::move(components), std::move(description));
}

std::vector<MultiPoly> linear_form(const SubspaceBasis& basis) {
  const std::size_t nvars = basis.size();
  std::vector<MultiPoly> z(basis.algebra().dim(), MultiPoly(nvars));
  for (std::size_t k = 0; k < nvars; ++k) {
    MultiPoly xk = MultiPoly::variable(nvars, k);
    for (std::size_t c = 0; c < z.size(); ++c)
      if (!basis[k][c].is_zero()) z[c] += xk * basis[k][c];
  }
  return z;
}

std::vector<MultiPoly> multiply(const Element& a, std::span<const MultiPoly> coords) {
  if (coords.size() != a.algebra().dim()) throw Error(ErrorCode::ShapeError, "coordinate vector has wrong length");
  const std::size_t nvars = coords.empty() ? 0 : coords.front().nvars();
  auto lifted = lift(a, nvars);
  return multiply_coords<MultiPoly>(a.algebra(), lifted, coords, MultiPoly(nvars));
}

AlgebraPolyFunction build_power_function(const SubspaceBasis& basis, std::vector<Element> coeffs,
                                         std::string description) {
  if (coeffs.empty()) throw Error(ErrorCode::InvalidArgument, "power function needs at least one coefficient");
  const Algebra& alg = basis.algebra();
  for (const auto& c : coeffs) require_same_algebra(alg, c.algebra());
  const std::size_t nvars = basis.size();
  const MultiPoly zero(nvars);

  std::vector<MultiPoly> z = linear_form(basis);
  std::vector<MultiPoly> power = lift(Element::unit(alg), nvars);
  std::vector<MultiPoly> sum(alg.dim(), zero);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (j > 0) power = multiply_coords<MultiPoly>(alg, power, z, zero);
    if (coeffs[j].is_zero()) continue;
    auto term = multiply(coeffs[j], power);
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += term[k];
  }
  if (description.empty()) {
    description = "sum_j c_j z^j, c = [";
    for (std::size_t j = 0; j < coeffs.size(); ++j) description += (j ? ", " : "") + coeffs[j].str();
    description += "]";
  }
  return AlgebraPolyFunction(basis, std::move(coeffs), std::move(sum), std::move(description));
}

AlgebraPolyFunction build_monomial(const SubspaceBasis& basis, unsigned degree) {
  std::vector<Element> c(degree + 1, Element::zero(basis.algebra()));
  c[degree] = Element::unit(basis.algebra());
  return build_power_function(basis, std::move(c), "z^" + std::to_string(degree));
}

AlgebraPolyFunction build_truncated_exp(const SubspaceBasis& basis, unsigned order) {
  std::vector<Element> c;
  Scalar factorial = 1;
  for (unsigned j = 0; j <= order; ++j) {
    if (j > 0) factorial *= Scalar(static_cast<long>(j));
    c.push_back(Element::unit(basis.algebra()) * factorial.inv());
  }
  return build_power_function(basis, std::move(c), "exp_" + std::to_string(order) + "(z)");
}

AlgebraPolyFunction derivative(const AlgebraPolyFunction& f) {
  auto comps = derivative_along(f.components(), 0);
  std::optional<std::vector<Element>> coeffs;
  if (f.coeffs()) {
    const auto& c = *f.coeffs();
    std::vector<Element> shifted;
    for (std::size_t j = 1; j < c.size(); ++j) shifted.push_back(c[j] * Scalar(static_cast<long>(j)));
    if (shifted.empty()) shifted.push_back(Element::zero(f.algebra()));
    coeffs = std::move(shifted);
  }
  return AlgebraPolyFunction(f.basis(), std::move(coeffs), std::move(comps), "d/dx0 of " + f.description());
}

AlgebraPolyFunction operator+(const AlgebraPolyFunction& f, const AlgebraPolyFunction& g) {
  require_same_algebra(f.algebra(), g.algebra());
  if (f.basis().elements() != g.basis().elements())
    throw Error(ErrorCode::AlgebraMismatch, "functions on different subspace bases");
  std::vector<MultiPoly> comps = f.components();
  for (std::size_t k = 0; k < comps.size(); ++k) comps[k] += g.components()[k];
  std::optional<std::vector<Element>> coeffs;
  if (f.coeffs() && g.coeffs()) {
    const auto& a = *f.coeffs();
    const auto& b = *g.coeffs();
    std::vector<Element> c(std::max(a.size(), b.size()), Element::zero(f.algebra()));
    for (std::size_t j = 0; j < a.size(); ++j) c[j] += a[j];
    for (std::size_t j = 0; j < b.size(); ++j) c[j] += b[j];
    coeffs = std::move(c);
  }
  return AlgebraPolyFunction(f.basis(), std::move(coeffs), std::move(comps),
                             "(" + f.description() + ") + (" + g.description() + ")");
}

AlgebraPolyFunction operator*(const Scalar& s, const AlgebraPolyFunction& f) {
  std::vector<MultiPoly> comps = f.components();
  for (auto& u : comps) u *= s;
  std::optional<std::vector<Element>> coeffs;
  if (f.coeffs()) {
    coeffs = *f.coeffs();
    for (auto& c : *coeffs) c *= s;
  }
  return AlgebraPolyFunction(f.basis(), std::move(coeffs), std::move(comps), s.str() + " * (" + f.description() + ")");
}

CrReport check_cauchy_riemann(const AlgebraPolyFunction& f) {
  CrReport report;
  const auto& basis = f.basis();
  auto d0 = derivative_along(f.components(), 0);
  for (std::size_t j = 1; j < basis.size(); ++j) {
    auto lhs = derivative_along(f.components(), j);
    auto rhs = multiply(basis[j], d0);
    for (std::size_t k = 0; k < lhs.size(); ++k) {
      MultiPoly residual = lhs[k] - rhs[k];
      if (!residual.is_zero()) report.failures.push_back({j, k, std::move(residual)});
    }
  }
  report.holds = report.failures.empty();
  return report;
}

FloatCoords evaluate(const AlgebraPolyFunction& f, std::span<const std::complex<double>> point) {
  FloatCoords out;
  out.reserve(f.components().size());
  for (const auto& u : f.components()) out.push_back(evaluate(u, point));
  return out;
}

FloatCoords directional_difference_oracle(const AlgebraPolyFunction& f, std::span<const Scalar> point,
                                          const Element& h, double eps) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (point.size() != f.nvars()) throw Error(ErrorCode::ArityMismatch, "point has wrong length");
  auto step = f.basis().coordinates_of(h);
  FloatCoords x(point.size()), shifted(point.size());
  for (std::size_t k = 0; k < point.size(); ++k) {
    x[k] = point[k].to_complex();
    shifted[k] = x[k] + eps * step[k].to_complex();
  }
  FloatCoords base = evaluate(f, x);
  FloatCoords moved = evaluate(f, shifted);
  for (std::size_t k = 0; k < base.size(); ++k) moved[k] = (moved[k] - base[k]) / eps;
  return moved;
}

FloatCoords directional_derivative(const AlgebraPolyFunction& f, std::span<const Scalar> point, const Element& h) {
  require_same_algebra(f.algebra(), h.algebra());
  AlgebraPolyFunction df = derivative(f);
  std::vector<Scalar> value;
  for (const auto& u : df.components()) value.push_back(evaluate(u, point));
  Element prod = mul(h, Element(f.algebra(), std::move(value)));
  FloatCoords out;
  for (const auto& c : prod.coords()) out.push_back(c.to_complex());
  return out;
}

}  // namespace hyperpde
