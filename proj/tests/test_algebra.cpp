#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "fixtures.hpp"
#include "hyperpde/algebra.hpp"

using namespace hyperpde;
using namespace hyperpde::test;

namespace {

// Independent oracle: naive triple loop over index triples on the nested
// tensor, no sparsity, row-major order.
std::optional<std::array<std::size_t, 3>> brute_force_associator(const StructureTensor& g) {
  const std::size_t d = g.size();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t l = 0; l < d; ++l)
        for (std::size_t k = 0; k < d; ++k) {
          Scalar left, right;
          for (std::size_t s = 0; s < d; ++s) {
            left += g[i][j][s] * g[s][l][k];
            right += g[j][l][s] * g[i][s][k];
          }
          if (left != right) return std::array<std::size_t, 3>{i, j, l};
        }
  return std::nullopt;
}

// Independent oracle for K[t]/(p): integer polynomial product with explicit
// top-down reduction t^d -> -(p - t^d).
std::vector<long> reduce_mod(std::vector<long> a, const std::vector<long>& monic) {
  const std::size_t d = monic.size() - 1;
  for (std::size_t top = a.size(); top-- > d;) {
    long lead = a[top];
    a[top] = 0;
    for (std::size_t k = 0; k < d; ++k) a[top - d + k] -= lead * monic[k];
  }
  a.resize(d);
  return a;
}

std::vector<long> poly_mul(const std::vector<long>& a, const std::vector<long>& b) {
  std::vector<long> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

Element from_longs(const Algebra& a, const std::vector<long>& v) {
  std::vector<Scalar> c(v.begin(), v.end());
  c.resize(a.dim());
  return Element(a, c);
}

StructureTensor zero_tensor(std::size_t d) {
  return StructureTensor(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
}

// Unital commutative table with the given products of non-unit basis vectors.
StructureTensor unital_table(std::size_t d, const std::vector<std::tuple<int, int, int, long>>& products) {
  StructureTensor g = zero_tensor(d);
  for (std::size_t j = 0; j < d; ++j) {
    g[0][j][j] = 1;
    g[j][0][j] = 1;
  }
  for (auto [i, j, k, v] : products) {
    g[i][j][k] = v;
    g[j][i][k] = v;
  }
  return g;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(ValidateAlgebra, ComplexNumbers) {
  StructureTensor g = unital_table(2, {{1, 1, 0, -1}});
  Algebra a = validate_algebra(g, Field::Q, "C");
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_EQ(a.gamma(1, 1, 0), Scalar(-1));
}

TEST(ValidateAlgebra, UnitOnlyAlgebra) {
  StructureTensor g{{{Scalar(1)}}};
  EXPECT_EQ(validate_algebra(g, Field::Q).dim(), 1u);
}

TEST(ValidateAlgebra, ThreeDimTableAgreesWithTripleLoopOracle) {
  // e1 e1 = e1, e1 e2 = e2, e2 e2 = e1
  StructureTensor g = unital_table(3, {{1, 1, 1, 1}, {1, 2, 2, 1}, {2, 2, 1, 1}});
  auto oracle = brute_force_associator(g);
  EXPECT_FALSE(oracle.has_value());
  EXPECT_NO_THROW(validate_algebra(g, Field::Q));
  EXPECT_EQ(find_associativity_violation(g), oracle);
  EXPECT_EQ(find_associativity_violation_serial(g), oracle);
}

TEST(ValidateAlgebra, NotAssociativeReportsFirstTriple) {
  // e1 e1 = e2, e2 e2 = e1, e1 e2 = 0
  StructureTensor g = unital_table(3, {{1, 1, 2, 1}, {2, 2, 1, 1}});
  auto oracle = brute_force_associator(g);
  ASSERT_TRUE(oracle.has_value());
  try {
    validate_algebra(g, Field::Q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAssociative);
    EXPECT_EQ(e.witness(), *oracle);
  }
}

TEST(ValidateAlgebra, AxiomErrors) {
  StructureTensor g = unital_table(3, {});
  g[1][2][1] = 1;  // e1 e2 != e2 e1
  try {
    validate_algebra(g, Field::Q);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCommutative);
    EXPECT_EQ(e.witness(), (std::array<std::size_t, 3>{1, 2, 1}));
  }
  StructureTensor bad_unit = unital_table(2, {});
  bad_unit[0][1][0] = 1;
  EXPECT_EQ(code_of([&] { validate_algebra(bad_unit, Field::Q); }), ErrorCode::UnitViolation);
  EXPECT_EQ(code_of([&] { validate_algebra(StructureTensor{}, Field::Q); }), ErrorCode::ShapeError);
  StructureTensor ragged = unital_table(2, {});
  ragged[1][1].pop_back();
  EXPECT_EQ(code_of([&] { validate_algebra(ragged, Field::Q); }), ErrorCode::ShapeError);
  StructureTensor complex_entry = unital_table(2, {});
  complex_entry[1][1][0] = Scalar::imaginary_unit();
  complex_entry[1][1][1] = 0;
  EXPECT_EQ(code_of([&] { validate_algebra(complex_entry, Field::Q); }), ErrorCode::FieldViolation);
  EXPECT_NO_THROW(validate_algebra(complex_entry, Field::Qi));
  EXPECT_EQ(code_of([&] { validate_algebra(zero_tensor(kMaxAlgebraDim + 1), Field::Q); }), ErrorCode::DimTooLarge);
}

TEST(ValidateAlgebra, ParallelAndSerialScansAgreeOnRandomTables) {
  std::mt19937_64 gen(5);
  for (int n = 0; n < 40; ++n) {
    std::size_t d = 2 + gen() % 4;
    std::vector<std::tuple<int, int, int, long>> products;
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t j = i; j < d; ++j)
        products.emplace_back(i, j, gen() % d, static_cast<long>(gen() % 3) - 1);
    StructureTensor g = unital_table(d, products);
    auto oracle = brute_force_associator(g);
    EXPECT_EQ(find_associativity_violation(g), oracle);
    EXPECT_EQ(find_associativity_violation_serial(g), oracle);
  }
}

TEST(Mul, UnitLawAndExamples) {
  Algebra c = complex_numbers();
  Element e1 = Element::basis(c, 1);
  EXPECT_EQ(mul(e1, e1), -Element::unit(c));
  std::mt19937_64 gen(1);
  Element x = random_element(gen, c);
  EXPECT_EQ(mul(Element::unit(c), x), x);

  Algebra dual = dual_numbers();
  Element t = Element::basis(dual, 1);
  auto oracle = reduce_mod(poly_mul({0, 1}, {0, 1}), {0, 0, 1});
  EXPECT_EQ(mul(t, t), from_longs(dual, oracle));
  EXPECT_TRUE(mul(t, t).is_zero());
}

TEST(Mul, MismatchedAlgebrasThrow) {
  EXPECT_EQ(code_of([] { mul(Element::unit(complex_numbers()), Element::unit(dual_numbers())); }),
            ErrorCode::AlgebraMismatch);
}

TEST(Pow, Examples) {
  Algebra c = complex_numbers();
  std::mt19937_64 gen(2);
  EXPECT_EQ(pow(random_element(gen, c), 0), Element::unit(c));
  EXPECT_EQ(pow(Element::basis(c, 1), 2), -Element::unit(c));

  Algebra b = biharmonic_algebra();
  const std::vector<long> p{1, 0, 2, 0, 1};
  auto t4 = reduce_mod({0, 0, 0, 0, 1}, p);
  EXPECT_EQ(t4, (std::vector<long>{-1, 0, -2, 0}));
  EXPECT_EQ(pow(Element::basis(b, 1), 4), from_longs(b, t4));
}

TEST(QuotientAlgebra, Examples) {
  Algebra c = complex_numbers();
  EXPECT_EQ(c.gamma(1, 1, 0), Scalar(-1));
  EXPECT_EQ(c.gamma(1, 1, 1), Scalar(0));
  EXPECT_EQ(quotient("t-1").dim(), 1u);
  EXPECT_EQ(code_of([] { quotient("2*t^2+1"); }), ErrorCode::NonMonic);
  EXPECT_EQ(code_of([] { quotient("1"); }), ErrorCode::NonMonic);

  // (e0 + e1^2)^2 = 0 in Q[t]/((t^2+1)^2)
  Algebra b = biharmonic_algebra();
  Element e1 = Element::basis(b, 1);
  Element s = Element::unit(b) + mul(e1, e1);
  auto oracle = reduce_mod(poly_mul({1, 0, 1}, {1, 0, 1}), {1, 0, 2, 0, 1});
  EXPECT_EQ(mul(s, s), from_longs(b, oracle));
  EXPECT_TRUE(mul(s, s).is_zero());
}

TEST(QuotientAlgebra, RandomModuliMatchReductionOracle) {
  std::mt19937_64 gen(3);
  for (int n = 0; n < 30; ++n) {
    std::size_t d = 1 + gen() % 4;
    std::vector<long> p(d + 1);
    for (std::size_t k = 0; k < d; ++k) p[k] = static_cast<long>(gen() % 7) - 3;
    p[d] = 1;
    Algebra a = quotient_algebra(UPoly(std::vector<Scalar>(p.begin(), p.end())), Field::Q);
    EXPECT_FALSE(brute_force_associator(a.tensor()).has_value());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        std::vector<long> ti(i + 1), tj(j + 1);
        ti[i] = 1;
        tj[j] = 1;
        EXPECT_EQ(mul(Element::basis(a, i), Element::basis(a, j)), from_longs(a, reduce_mod(poly_mul(ti, tj), p)));
      }
  }
}

TEST(DirectSum, TwoPointsAlgebraIsSplitComplex) {
  Algebra one = quotient("t-1");
  Algebra sum = direct_sum(one, one);
  Algebra split = split_complex();
  EXPECT_TRUE(sum.same_as(split));
  // e1 <-> (1, -1): squares to the unit (1, 1).
  Element e1 = Element::basis(sum, 1);
  EXPECT_EQ(mul(e1, e1), Element::unit(sum));
}

TEST(DirectSum, AxiomsHold) {
  Algebra withOne = direct_sum(complex_numbers(), quotient("t-1"));
  EXPECT_EQ(withOne.dim(), 3u);
  EXPECT_FALSE(brute_force_associator(withOne.tensor()).has_value());
  Algebra cc = direct_sum(complex_numbers(), complex_numbers());
  EXPECT_EQ(cc.dim(), 4u);
  EXPECT_FALSE(brute_force_associator(cc.tensor()).has_value());
  EXPECT_NO_THROW(validate_algebra(cc.tensor(), Field::Q));
  Algebra ci = quotient_algebra(UPoly::parse("t^2+1"), Field::Qi);
  EXPECT_EQ(code_of([&] { direct_sum(complex_numbers(), ci); }), ErrorCode::FieldMismatch);
}

TEST(TensorProduct, ComplexDualOrdering) {
  Algebra a = complex_dual();
  ASSERT_EQ(a.dim(), 4u);
  Element i = Element::basis(a, 1), t = Element::basis(a, 2), it = Element::basis(a, 3);
  EXPECT_EQ(mul(i, i), -Element::unit(a));
  EXPECT_TRUE(mul(t, t).is_zero());
  EXPECT_EQ(mul(i, t), it);
  EXPECT_EQ(mul(it, i), -t);
}

TEST(RegularRepresentation, Examples) {
  Algebra c = complex_numbers();
  EXPECT_EQ(regular_representation(Element::unit(c)), Matrix::identity(2));
  Matrix rot = regular_representation(Element::basis(c, 1));
  Matrix expected(2, 2);
  expected(0, 1) = -1;
  expected(1, 0) = 1;
  EXPECT_EQ(rot, expected);

  Matrix shift = regular_representation(Element::basis(dual_numbers(), 1));
  EXPECT_EQ(shift * shift, Matrix(2, 2));
  EXPECT_FALSE(shift == Matrix(2, 2));
}

TEST(CheckBasis, Examples) {
  Algebra c = complex_numbers();
  EXPECT_EQ(check_basis(c, {Element::unit(c), Element::basis(c, 1)}).size(), 2u);
  try {
    check_basis(c, {Element::unit(c), Element::unit(c)});
    FAIL();
  } catch (const LinearlyDependentError& e) {
    ASSERT_EQ(e.combination().size(), 2u);
    EXPECT_EQ(e.combination()[0] + e.combination()[1], Scalar(0));
  }
  EXPECT_EQ(code_of([&] { check_basis(c, {Element::basis(c, 1)}); }), ErrorCode::FirstNotUnit);
  EXPECT_EQ(code_of([&] { check_basis(c, {}); }), ErrorCode::InvalidArgument);

  // (1, i, t) in the 1, i, t, it algebra: rank 3, oracle = nonzero 3x3 minor.
  Algebra cd = complex_dual();
  std::vector<Element> b{Element::unit(cd), Element::basis(cd, 1), Element::basis(cd, 2)};
  Scalar minor;  // determinant of rows 0..2
  const auto& u = b[0].coords();
  const auto& v = b[1].coords();
  const auto& w = b[2].coords();
  minor = u[0] * (v[1] * w[2] - v[2] * w[1]) - u[1] * (v[0] * w[2] - v[2] * w[0]) + u[2] * (v[0] * w[1] - v[1] * w[0]);
  EXPECT_FALSE(minor.is_zero());
  EXPECT_EQ(check_basis(cd, b).size(), 3u);
  std::vector<Element> five(5, Element::unit(cd));
  EXPECT_THROW(check_basis(cd, five), LinearlyDependentError);
}

TEST(CheckBasis, CoordinatesInSubspace) {
  Algebra cd = complex_dual();
  SubspaceBasis b = first_basis_vectors(cd, 3);
  Element h = Element::basis(cd, 1) * Scalar(3) - Element::basis(cd, 2);
  auto x = b.coordinates_of(h);
  EXPECT_EQ(x, (std::vector<Scalar>{0, 3, -1}));
  EXPECT_EQ(code_of([&] { b.coordinates_of(Element::basis(cd, 3)); }), ErrorCode::NotInSubspace);
}

class AlgebraProperties : public ::testing::TestWithParam<int> {};

TEST_P(AlgebraProperties, RingAxiomsPowersAndRegularRepresentation) {
  std::vector<Algebra> algebras{complex_numbers(), split_complex(), dual_numbers(), biharmonic_algebra(),
                                complex_dual(), direct_sum(complex_numbers(), dual_numbers())};
  const Algebra& a = algebras[static_cast<std::size_t>(GetParam())];
  std::mt19937_64 gen(100 + GetParam());
  for (int n = 0; n < 25; ++n) {
    Element x = random_element(gen, a), y = random_element(gen, a), z = random_element(gen, a);
    EXPECT_EQ(mul(x, y), mul(y, x));
    EXPECT_EQ(mul(mul(x, y), z), mul(x, mul(y, z)));
    EXPECT_EQ(mul(x, y + z), mul(x, y) + mul(x, z));
    EXPECT_EQ(regular_representation(mul(x, y)), regular_representation(x) * regular_representation(y));
    EXPECT_EQ(regular_representation(x).apply(y.coords()), mul(x, y).coords());
    unsigned i = static_cast<unsigned>(gen() % 7), j = static_cast<unsigned>(gen() % 7);
    EXPECT_EQ(pow(x, i + j), mul(pow(x, i), pow(x, j)));
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, AlgebraProperties, ::testing::Range(0, 6));
