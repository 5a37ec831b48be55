#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "hyperpde/multipoly.hpp"

using namespace hyperpde;
using namespace hyperpde::test;

namespace {

// Dense bivariate convolution over int64, the oracle for products.
using Dense = std::vector<std::vector<long>>;

Dense dense_mul(const Dense& a, const Dense& b) {
  Dense c(a.size() + b.size() - 1, std::vector<long>(a[0].size() + b[0].size() - 1));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j)
      for (std::size_t k = 0; k < b.size(); ++k)
        for (std::size_t l = 0; l < b[k].size(); ++l) c[i + k][j + l] += a[i][j] * b[k][l];
  return c;
}

MultiPoly from_dense(const Dense& d) {
  std::vector<std::pair<MultiIndex, Scalar>> t;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d[i].size(); ++j) t.push_back({{unsigned(i), unsigned(j)}, Scalar(d[i][j])});
  return MultiPoly::from_terms(2, t);
}

const MultiPoly X0 = x(2, 0), X1 = x(2, 1);

}  // namespace

TEST(MultiPoly, CanonicalForm) {
  MultiPoly zero(2);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.str(), "0");
  MultiPoly p = X0 - X0;
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
  std::vector<std::pair<MultiIndex, Scalar>> t{{{1, 0}, 2}, {{1, 0}, -2}, {{0, 1}, 0}};
  EXPECT_TRUE(MultiPoly::from_terms(2, t).is_zero());
  EXPECT_THROW(X0 + x(3, 0), Error);
}

TEST(MultiPoly, ArithmeticExamples) {
  MultiPoly p = X0 * X0 - X1 * X1;
  EXPECT_EQ(p + MultiPoly(2), p);
  EXPECT_EQ((X0 + X1) * (X0 - X1), p);

  Dense d{{0, 0, -1}, {0, 0, 0}, {1, 0, 0}};  // x0^2 - x1^2, indexed [deg x0][deg x1]
  EXPECT_EQ(from_dense(d), p);
  MultiPoly sq = p * p;
  EXPECT_EQ(sq, from_dense(dense_mul(d, d)));
  EXPECT_EQ(sq.str(), "x0^4 - 2*x0^2*x1^2 + x1^4");
  EXPECT_EQ((p * Scalar::rational(1, 2)).str(), "1/2*x0^2 - 1/2*x1^2");
  EXPECT_EQ(sq.total_degree(), 4);
}

TEST(MultiPoly, GradedLexOrder) {
  MultiPoly p = X1 * X1 + X0 * X1 + X0 * X0 + X1 + c(2, 7);
  std::vector<MultiIndex> order;
  for (const auto& [e, coeff] : p.terms()) order.push_back(e);
  std::vector<MultiIndex> expected{{0, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  EXPECT_EQ(order, expected);
}

TEST(PartialDerivative, Examples) {
  EXPECT_TRUE(partial_derivative(c(2, 5), 0).is_zero());
  MultiPoly p = X0 * X0 - X1 * X1;
  EXPECT_EQ(partial_derivative(p, 0), c(2, 2) * X0);
  EXPECT_EQ(partial_derivative(c(2, 2) * X0 * X1, 1), c(2, 2) * X0);
  // Central difference at (1, 1) as a cross-check of the slope 2.
  const double h = 1e-6;
  std::vector<std::complex<double>> plus{1 + h, 1}, minus{1 - h, 1};
  double slope = (evaluate(p, plus) - evaluate(p, minus)).real() / (2 * h);
  EXPECT_NEAR(slope, 2.0, 1e-6);
  EXPECT_THROW(partial_derivative(p, 2), Error);
}

TEST(IteratedDerivative, Examples) {
  MultiPoly p = X0 * X0 - X1 * X1;
  EXPECT_EQ(iterated_derivative(p, {0, 0}), p);
  EXPECT_EQ(iterated_derivative(p, {2, 0}), c(2, 2));
  EXPECT_EQ(iterated_derivative(c(2, 2) * X0 * X1, {1, 1}), c(2, 2));
  EXPECT_TRUE(iterated_derivative(p, {3, 0}).is_zero());
  EXPECT_THROW(iterated_derivative(p, {1}), Error);
}

TEST(Evaluate, Examples) {
  std::vector<Scalar> pt{3, 2};
  EXPECT_EQ(evaluate(MultiPoly(2), pt), Scalar(0));
  MultiPoly p = X0 * X0 - X1 * X1;
  EXPECT_EQ(evaluate(p, pt), Scalar(5));
  std::vector<Scalar> pt2{2, 1};
  Scalar factored = (Scalar(4) - Scalar(1)) * (Scalar(4) - Scalar(1));
  EXPECT_EQ(evaluate(p * p, pt2), factored);
  EXPECT_EQ(evaluate(p * p, pt2), Scalar(9));
  std::vector<Scalar> short_pt{1};
  EXPECT_THROW(evaluate(p, short_pt), Error);
}

TEST(MultiPolyProperties, RingAndDerivationLaws) {
  std::mt19937_64 gen(42);
  for (int n = 0; n < 60; ++n) {
    const std::size_t nv = 1 + gen() % 3;
    MultiPoly p = random_poly(gen, nv, 4, 5), q = random_poly(gen, nv, 4, 5);
    std::vector<Scalar> pt;
    for (std::size_t k = 0; k < nv; ++k) pt.push_back(random_scalar(gen));
    EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
    EXPECT_EQ(evaluate(p + q, pt), evaluate(p, pt) + evaluate(q, pt));
    for (std::size_t k = 0; k < nv; ++k) {
      EXPECT_EQ(partial_derivative(p * q, k), partial_derivative(p, k) * q + p * partial_derivative(q, k));
      for (std::size_t l = 0; l < nv; ++l)
        EXPECT_EQ(partial_derivative(partial_derivative(p, k), l), partial_derivative(partial_derivative(p, l), k));
    }
    // Folding single derivatives in any order matches the one-shot operator.
    MultiIndex idx(nv);
    for (auto& i : idx) i = static_cast<unsigned>(gen() % 3);
    MultiPoly folded = p;
    for (std::size_t k = nv; k-- > 0;)
      for (unsigned s = 0; s < idx[k]; ++s) folded = partial_derivative(folded, k);
    EXPECT_EQ(iterated_derivative(p, idx), folded);
    // Re-normalising a canonical polynomial is the identity.
    std::vector<std::pair<MultiIndex, Scalar>> terms(p.terms().begin(), p.terms().end());
    EXPECT_EQ(MultiPoly::from_terms(nv, terms), p);
  }
}
