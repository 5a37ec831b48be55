#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hyperpde/algebra.hpp"
#include "hyperpde/hyperfun.hpp"
#include "hyperpde/multipoly.hpp"
#include "hyperpde/pde.hpp"

namespace hyperpde::test {

inline Algebra quotient(const char* p) { return quotient_algebra(UPoly::parse(p), Field::Q); }
inline Algebra complex_numbers() { return quotient("t^2+1"); }
inline Algebra split_complex() { return quotient("t^2-1"); }
inline Algebra dual_numbers() { return quotient("t^2"); }
/// Q[t]/((t^2+1)^2)
inline Algebra biharmonic_algebra() { return quotient("t^4+2*t^2+1"); }
/// (Q[t]/(t^2+1)) (x) (Q[t]/(t^2)) with basis 1, i, t, it.
inline Algebra complex_dual() { return tensor_product(complex_numbers(), dual_numbers()); }

inline SubspaceBasis first_basis_vectors(const Algebra& a, std::size_t count) {
  std::vector<Element> e;
  for (std::size_t k = 0; k < count; ++k) e.push_back(Element::basis(a, k));
  return check_basis(a, std::move(e));
}

inline Pde make_pde(std::size_t nvars, unsigned order, std::vector<std::pair<MultiIndex, long>> terms) {
  std::vector<std::pair<MultiIndex, Scalar>> t;
  for (auto& [idx, c] : terms) t.emplace_back(idx, Scalar(c));
  return Pde::make(nvars, order, t);
}
inline Pde laplace2() { return make_pde(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}}); }
inline Pde wave() { return make_pde(2, 2, {{{2, 0}, 1}, {{0, 2}, -1}}); }
inline Pde biharmonic() { return make_pde(2, 4, {{{4, 0}, 1}, {{2, 2}, 2}, {{0, 4}, 1}}); }
inline Pde laplace3() { return make_pde(3, 2, {{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}}); }

struct Fixture {
  std::string name;
  SubspaceBasis basis;
  Pde pde;
};

/// (algebra, basis, PDE) triples whose symbol vanishes.
inline std::vector<Fixture> solvable_fixtures() {
  return {
      {"laplace/complex", first_basis_vectors(complex_numbers(), 2), laplace2()},
      {"wave/split-complex", first_basis_vectors(split_complex(), 2), wave()},
      {"biharmonic/(t^2+1)^2", first_basis_vectors(biharmonic_algebra(), 2), biharmonic()},
      {"laplace3/complex-dual", first_basis_vectors(complex_dual(), 3), laplace3()},
  };
}

inline MultiPoly x(std::size_t nvars, std::size_t k) { return MultiPoly::variable(nvars, k); }
inline MultiPoly c(std::size_t nvars, long v) { return MultiPoly::constant(nvars, Scalar(v)); }

/// Small random scalar num/den with num in [-range, range], den in [1, 3].
inline Scalar random_scalar(std::mt19937_64& gen, long range = 3) {
  long num = static_cast<long>(gen() % static_cast<unsigned long>(2 * range + 1)) - range;
  long den = static_cast<long>(gen() % 3) + 1;
  return Scalar::rational(num, den);
}

inline Element random_element(std::mt19937_64& gen, const Algebra& a, long range = 3) {
  std::vector<Scalar> c;
  for (std::size_t k = 0; k < a.dim(); ++k) c.push_back(random_scalar(gen, range));
  return Element(a, std::move(c));
}

inline MultiPoly random_poly(std::mt19937_64& gen, std::size_t nvars, unsigned max_deg, std::size_t terms) {
  std::vector<std::pair<MultiIndex, Scalar>> t;
  for (std::size_t n = 0; n < terms; ++n) {
    MultiIndex e(nvars);
    unsigned budget = static_cast<unsigned>(gen() % (max_deg + 1));
    for (unsigned s = 0; s < budget; ++s) ++e[gen() % nvars];
    t.emplace_back(std::move(e), random_scalar(gen));
  }
  return MultiPoly::from_terms(nvars, t);
}

}  // namespace hyperpde::test
