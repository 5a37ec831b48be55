#include "hyperpde/pde.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace hyperpde {

Pde Pde::make(std::size_t nvars, unsigned order, std::span<const std::pair<MultiIndex, Scalar>> terms) {
  if (nvars == 0) throw Error(ErrorCode::InvalidArgument, "PDE needs at least one variable");
  if (order == 0) throw Error(ErrorCode::InvalidArgument, "PDE order must be >= 1");
  for (const auto& [idx, c] : terms) {
    if (idx.size() != nvars)
      throw Error(ErrorCode::ArityMismatch,
                  "multi-index of length " + std::to_string(idx.size()) + " for " + std::to_string(nvars) + " variables");
    if (total_degree(idx) != order)
      throw Error(ErrorCode::NotHomogeneous,
                  "term of order " + std::to_string(total_degree(idx)) + " in an order-" + std::to_string(order) +
                      " operator; only homogeneous operators (every term of total order r) are supported");
  }
  Pde pde;
  pde.nvars_ = nvars;
  pde.order_ = order;
  pde.terms_ = MultiPoly::from_terms(nvars, terms).terms();
  if (pde.terms_.empty()) throw Error(ErrorCode::ZeroOperator, "all coefficients vanish");
  return pde;
}

bool Pde::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

std::string Pde::str() const {
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += "(" + it->second.str() + ")*D(";
    for (std::size_t k = 0; k < it->first.size(); ++k) out += (k ? "," : "") + std::to_string(it->first[k]);
    out += ")";
  }
  return out;
}

SymbolResult symbol_evaluate(const Pde& pde, const SubspaceBasis& basis) {
  if (pde.nvars() != basis.size())
    throw Error(ErrorCode::ArityMismatch, "PDE in " + std::to_string(pde.nvars()) + " variables, basis has " +
                                              std::to_string(basis.size()) + " elements");
  const Algebra& alg = basis.algebra();
  // powers[k][i] = b_k^i
  std::vector<std::vector<Element>> powers(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    powers[k].push_back(Element::unit(alg));
    for (unsigned i = 1; i <= pde.order(); ++i) powers[k].push_back(mul(powers[k].back(), basis[k]));
  }
  Element value = Element::zero(alg);
  for (const auto& [idx, c] : pde.terms()) {
    Element term = Element::unit(alg);
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (idx[k] > 0) term = mul(term, powers[k][idx[k]]);
    value += term * c;
  }
  bool zero = value.is_zero();
  return {std::move(value), zero};
}

MultiPoly apply_operator(const Pde& pde, const MultiPoly& u) {
  if (u.nvars() != pde.nvars())
    throw Error(ErrorCode::ArityMismatch, "polynomial in " + std::to_string(u.nvars()) + " variables, PDE has " +
                                              std::to_string(pde.nvars()));
  MultiPoly out(u.nvars());
  for (const auto& [idx, c] : pde.terms()) out += iterated_derivative(u, idx) * c;
  return out;
}

std::vector<std::vector<Scalar>> spot_check_points(std::size_t nvars, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::vector<Scalar>> points(count, std::vector<Scalar>(nvars));
  for (auto& p : points)
    for (auto& x : p) x = Scalar::rational(static_cast<long>(gen() % 33) - 16, 8);
  return points;
}

namespace {

SolutionCertificate certify_impl(const Pde& pde, const AlgebraPolyFunction& f, std::uint64_t seed, bool parallel) {
  if (f.nvars() != pde.nvars())
    throw Error(ErrorCode::ArityMismatch, "function in " + std::to_string(f.nvars()) + " variables, PDE has " +
                                              std::to_string(pde.nvars()));
  const auto& comps = f.components();
  std::vector<MultiPoly> residuals(comps.size());
  const auto n = static_cast<long>(comps.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long k = 0; k < n; ++k) residuals[k] = apply_operator(pde, comps[k]);

  SolutionCertificate cert{pde, f.algebra().label(), f.basis().elements(), f.description(), std::move(residuals),
                           false, {}};
  cert.verdict = std::all_of(cert.residuals.begin(), cert.residuals.end(), [](const MultiPoly& r) { return r.is_zero(); });
  for (auto& point : spot_check_points(pde.nvars(), kSpotCheckPoints, seed)) {
    SpotCheck row;
    for (const auto& x : point) row.point_f.push_back(x.re().get_d());
    for (const auto& r : cert.residuals)
      row.max_abs_residual = std::max(row.max_abs_residual, std::abs(evaluate(r, point).to_complex()));
    row.point = std::move(point);
    cert.spot_checks.push_back(std::move(row));
  }
  return cert;
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace

SolutionCertificate certify(const Pde& pde, const AlgebraPolyFunction& f, std::uint64_t seed) {
  return certify_impl(pde, f, seed, true);
}

SolutionCertificate certify_serial(const Pde& pde, const AlgebraPolyFunction& f, std::uint64_t seed) {
  return certify_impl(pde, f, seed, false);
}

std::complex<double> finite_difference_residual(const Pde& pde, const MultiPoly& u, std::span<const double> point,
                                                double h) {
  if (!(h > 0)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  if (point.size() != pde.nvars() || u.nvars() != pde.nvars())
    throw Error(ErrorCode::ArityMismatch, "point/polynomial arity does not match the PDE");
  if (u.is_zero()) return 0.0;
  const Scalar step = Scalar::from_double(h);
  const Scalar half_step = step * Scalar::rational(1, 2);
  std::vector<Scalar> x0;
  for (double v : point) x0.push_back(Scalar::from_double(v));

  Scalar total;
  for (const auto& [idx, c] : pde.terms()) {
    // Odometer over the product stencil: s_k in 0..idx[k].
    std::vector<unsigned> s(idx.size(), 0);
    Scalar acc;
    while (true) {
      Scalar weight = 1;
      std::vector<Scalar> node = x0;
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] == 0) continue;
        // offset (i/2 - s) h = (i - 2s) * h/2
        node[k] += half_step * Scalar(static_cast<long>(idx[k]) - 2 * static_cast<long>(s[k]));
        Scalar b(mpq_class(binomial(idx[k], s[k])));
        weight *= (s[k] % 2 ? -b : b);
      }
      acc += weight * evaluate(u, node);
      std::size_t k = 0;
      while (k < idx.size() && s[k] == idx[k]) s[k++] = 0;
      if (k == idx.size()) break;
      ++s[k];
    }
    total += acc * c;
  }
  Scalar scale = 1;
  for (unsigned i = 0; i < pde.order(); ++i) scale *= step;
  return (total / scale).to_complex();
}

}  // namespace hyperpde
