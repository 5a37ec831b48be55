#include "hyperpde/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hyperpde {

namespace {

// Flat dim^3 copy of a cubical tensor.
struct FlatTensor {
  std::size_t dim = 0;
  std::vector<Scalar> v;
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const { return v[(i * dim + j) * dim + k]; }
};

FlatTensor flatten(const StructureTensor& g) {
  FlatTensor f{g.size(), {}};
  f.v.reserve(f.dim * f.dim * f.dim);
  for (const auto& row : g)
    for (const auto& col : row) f.v.insert(f.v.end(), col.begin(), col.end());
  return f;
}

void check_shape(const StructureTensor& g) {
  const std::size_t d = g.size();
  if (d == 0) throw Error(ErrorCode::ShapeError, "structure tensor must have dim >= 1");
  for (std::size_t i = 0; i < d; ++i) {
    if (g[i].size() != d)
      throw Error(ErrorCode::ShapeError, "gamma[" + std::to_string(i) + "] has " + std::to_string(g[i].size()) +
                                             " rows, expected " + std::to_string(d));
    for (std::size_t j = 0; j < d; ++j)
      if (g[i][j].size() != d)
        throw Error(ErrorCode::ShapeError, "gamma[" + std::to_string(i) + "][" + std::to_string(j) + "] has " +
                                               std::to_string(g[i][j].size()) + " entries, expected " +
                                               std::to_string(d));
  }
}

// Sparse rows of the tensor: for every (i, j) the nonzero (k, gamma_ijk).
std::vector<std::vector<StructureEntry>> sparse_rows(const FlatTensor& t) {
  std::vector<std::vector<StructureEntry>> rows(t.dim * t.dim);
  for (std::size_t i = 0; i < t.dim; ++i)
    for (std::size_t j = 0; j < t.dim; ++j)
      for (std::size_t k = 0; k < t.dim; ++k)
        if (!t.at(i, j, k).is_zero()) rows[i * t.dim + j].push_back({k, t.at(i, j, k)});
  return rows;
}

// First (j, l) for which the associator (e_i, e_j, e_l) is nonzero.
std::optional<std::array<std::size_t, 3>> scan_associator_row(const FlatTensor& t,
                                                              const std::vector<std::vector<StructureEntry>>& rows,
                                                              std::size_t i) {
  const std::size_t d = t.dim;
  std::vector<Scalar> left(d), right(d);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t l = 0; l < d; ++l) {
      std::fill(left.begin(), left.end(), Scalar());
      std::fill(right.begin(), right.end(), Scalar());
      // (e_i e_j) e_l
      for (const auto& s : rows[i * d + j])
        for (const auto& e : rows[s.k * d + l]) left[e.k] += s.value * e.value;
      // e_i (e_j e_l)
      for (const auto& s : rows[j * d + l])
        for (const auto& e : rows[i * d + s.k]) right[e.k] += s.value * e.value;
      if (left != right) return std::array<std::size_t, 3>{i, j, l};
    }
  }
  return std::nullopt;
}

StructureTensor multiply_table_in_basis(const FlatTensor& t, const Matrix& basis) {
  const std::size_t d = t.dim;
  Matrix inv = inverse(basis);
  std::vector<std::vector<Scalar>> cols(d);
  for (std::size_t a = 0; a < d; ++a) cols[a] = basis.column(a);
  StructureTensor out(d, std::vector<std::vector<Scalar>>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      std::vector<Scalar> prod(d);
      for (std::size_t i = 0; i < d; ++i) {
        if (cols[a][i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
          if (cols[b][j].is_zero()) continue;
          Scalar c = cols[a][i] * cols[b][j];
          for (std::size_t k = 0; k < d; ++k)
            if (!t.at(i, j, k).is_zero()) prod[k] += c * t.at(i, j, k);
        }
      }
      out[a][b] = inv.apply(prod);
    }
  }
  return out;
}

std::string field_prefix(Field f) { return f == Field::Q ? "Q" : "Qi"; }

}  // namespace

std::optional<std::array<std::size_t, 3>> find_associativity_violation_serial(const StructureTensor& gamma) {
  check_shape(gamma);
  FlatTensor t = flatten(gamma);
  auto rows = sparse_rows(t);
  for (std::size_t i = 0; i < t.dim; ++i)
    if (auto w = scan_associator_row(t, rows, i)) return w;
  return std::nullopt;
}

std::optional<std::array<std::size_t, 3>> find_associativity_violation(const StructureTensor& gamma) {
  check_shape(gamma);
  FlatTensor t = flatten(gamma);
  auto rows = sparse_rows(t);
  const auto d = static_cast<long>(t.dim);
  std::vector<std::optional<std::array<std::size_t, 3>>> found(t.dim);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < d; ++i) found[i] = scan_associator_row(t, rows, static_cast<std::size_t>(i));
  for (auto& w : found)
    if (w) return w;
  return std::nullopt;
}

Algebra validate_algebra(const StructureTensor& gamma, Field field, std::string label) {
  check_shape(gamma);
  const std::size_t d = gamma.size();
  if (d > kMaxAlgebraDim)
    throw Error(ErrorCode::DimTooLarge, "dim " + std::to_string(d) + " exceeds " + std::to_string(kMaxAlgebraDim));
  FlatTensor t = flatten(gamma);
  if (field == Field::Q) {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k)
          if (!t.at(i, j, k).is_real())
            throw Error(ErrorCode::FieldViolation, "non-real structure constant over Q", {i, j, k});
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      if (t.at(0, j, k) != Scalar(j == k ? 1 : 0))
        throw Error(ErrorCode::UnitViolation,
                    "e0*e" + std::to_string(j) + " has coordinate " + t.at(0, j, k).str() + " at " + std::to_string(k),
                    {j, k, 0});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (t.at(i, j, k) != t.at(j, i, k))
          throw Error(ErrorCode::NotCommutative,
                      "gamma[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) + "] != gamma[" +
                          std::to_string(j) + "][" + std::to_string(i) + "][" + std::to_string(k) + "]",
                      {i, j, k});
  if (auto w = find_associativity_violation(gamma))
    throw Error(ErrorCode::NotAssociative,
                "(e" + std::to_string((*w)[0]) + "*e" + std::to_string((*w)[1]) + ")*e" + std::to_string((*w)[2]) +
                    " != e" + std::to_string((*w)[0]) + "*(e" + std::to_string((*w)[1]) + "*e" +
                    std::to_string((*w)[2]) + ")",
                *w);

  auto data = std::make_shared<Algebra::Data>();
  data->dim = d;
  data->field = field;
  data->label = std::move(label);
  data->gamma = std::move(t.v);
  FlatTensor view{d, data->gamma};
  auto rows = sparse_rows(view);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!rows[i * d + j].empty()) data->sparse.push_back({i, j, std::move(rows[i * d + j])});
  return Algebra(std::move(data));
}

StructureTensor Algebra::tensor() const {
  const std::size_t d = dim();
  StructureTensor out(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out[i][j][k] = gamma(i, j, k);
  return out;
}

bool Algebra::same_as(const Algebra& other) const {
  if (data_ == other.data_) return true;
  return data_->dim == other.data_->dim && data_->field == other.data_->field && data_->gamma == other.data_->gamma;
}

Algebra Algebra::relabeled(std::string label) const {
  auto copy = std::make_shared<Data>(*data_);
  copy->label = std::move(label);
  return Algebra(std::move(copy));
}

void require_same_algebra(const Algebra& a, const Algebra& b) {
  if (!a.same_as(b))
    throw Error(ErrorCode::AlgebraMismatch, "elements of '" + a.label() + "' and '" + b.label() + "' mixed");
}

Element::Element(Algebra algebra, std::vector<Scalar> coords) : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (coords_.size() != algebra_.dim())
    throw Error(ErrorCode::ShapeError, "element has " + std::to_string(coords_.size()) + " coordinates, algebra dim is " +
                                           std::to_string(algebra_.dim()));
  if (algebra_.field() == Field::Q)
    for (const auto& c : coords_)
      if (!c.is_real()) throw Error(ErrorCode::FieldViolation, "non-real coordinate in an algebra over Q");
}

Element Element::basis(const Algebra& a, std::size_t index) {
  if (index >= a.dim()) throw Error(ErrorCode::InvalidArgument, "basis index out of range");
  std::vector<Scalar> c(a.dim());
  c[index] = 1;
  return Element(a, std::move(c));
}

bool Element::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Element& Element::operator+=(const Element& o) {
  require_same_algebra(algebra_, o.algebra_);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] += o.coords_[k];
  return *this;
}

Element& Element::operator-=(const Element& o) {
  require_same_algebra(algebra_, o.algebra_);
  for (std::size_t k = 0; k < coords_.size(); ++k) coords_[k] -= o.coords_[k];
  return *this;
}

Element& Element::operator*=(const Scalar& s) {
  if (algebra_.field() == Field::Q && !s.is_real())
    throw Error(ErrorCode::FieldViolation, "non-real scalar in an algebra over Q");
  for (auto& c : coords_) c *= s;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

bool operator==(const Element& a, const Element& b) { return a.algebra_.same_as(b.algebra_) && a.coords_ == b.coords_; }

std::string Element::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < coords_.size(); ++k) os << (k ? ", " : "") << coords_[k];
  os << ']';
  return os.str();
}

Element mul(const Element& a, const Element& b) {
  require_same_algebra(a.algebra(), b.algebra());
  return Element(a.algebra(), multiply_coords<Scalar>(a.algebra(), a.coords(), b.coords(), Scalar()));
}

Element pow(const Element& a, unsigned exponent) {
  Element result = Element::unit(a.algebra());
  Element base = a;
  while (exponent) {
    if (exponent & 1u) result = mul(result, base);
    exponent >>= 1;
    if (exponent) base = mul(base, base);
  }
  return result;
}

Algebra quotient_algebra(const UPoly& p, Field field, std::string label) {
  if (!p.is_monic()) throw Error(ErrorCode::NonMonic, "modulus " + p.str() + " is not monic");
  if (p.degree() < 1) throw Error(ErrorCode::NonMonic, "modulus must have degree >= 1");
  if (field == Field::Q && !p.is_real()) throw Error(ErrorCode::FieldViolation, "non-real modulus over Q");
  const auto d = static_cast<std::size_t>(p.degree());
  StructureTensor g(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
  std::vector<UPoly> reduced(2 * d - 1);
  for (std::size_t s = 0; s < reduced.size(); ++s) reduced[s] = UPoly::monomial(s).mod(p);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) g[i][j][k] = reduced[i + j].coeff(k);
  if (label.empty()) label = field_prefix(field) + "[t]/(" + p.str() + ")";
  return validate_algebra(g, field, std::move(label));
}

Algebra change_basis(const Algebra& a, const Matrix& basis, std::string label) {
  const std::size_t d = a.dim();
  if (basis.rows() != d || basis.cols() != d) throw Error(ErrorCode::ShapeError, "change of basis must be dim x dim");
  if (basis.column(0) != Element::unit(a).coords())
    throw Error(ErrorCode::FirstNotUnit, "first new basis vector must be the unit");
  FlatTensor t{d, {}};
  t.v.reserve(d * d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) t.v.push_back(a.gamma(i, j, k));
  return validate_algebra(multiply_table_in_basis(t, basis), a.field(), label.empty() ? a.label() : std::move(label));
}

Algebra direct_sum(const Algebra& a, const Algebra& b, std::string label) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "direct sum of algebras over different fields");
  const std::size_t p = a.dim(), q = b.dim(), d = p + q;
  if (d > kMaxAlgebraDim) throw Error(ErrorCode::DimTooLarge, "direct sum dim " + std::to_string(d));
  // Block-diagonal table in the concatenated basis; its unit is e_0 + e_p.
  FlatTensor t{d, std::vector<Scalar>(d * d * d)};
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) -> Scalar& { return t.v[(i * d + j) * d + k]; };
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) at(i, j, k) = a.gamma(i, j, k);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j)
      for (std::size_t k = 0; k < q; ++k) at(p + i, p + j, p + k) = b.gamma(i, j, k);
  Matrix basis = Matrix::identity(d);
  basis(p, 0) = 1;    // e'_0 = u_A + u_B
  basis(p, p) = -1;   // e'_p = u_A - u_B
  basis(0, p) = 1;
  if (label.empty()) label = "(" + a.label() + ")+(" + b.label() + ")";
  return validate_algebra(multiply_table_in_basis(t, basis), a.field(), std::move(label));
}

Algebra tensor_product(const Algebra& a, const Algebra& b, std::string label) {
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "tensor product of algebras over different fields");
  const std::size_t p = a.dim(), q = b.dim(), d = p * q;
  if (d > kMaxAlgebraDim) throw Error(ErrorCode::DimTooLarge, "tensor product dim " + std::to_string(d));
  StructureTensor g(d, std::vector<std::vector<Scalar>>(d, std::vector<Scalar>(d)));
  for (const auto& pa : a.nonzero_products())
    for (const auto& pb : b.nonzero_products())
      for (const auto& ea : pa.entries)
        for (const auto& eb : pb.entries) g[pa.i + p * pb.i][pa.j + p * pb.j][ea.k + p * eb.k] = ea.value * eb.value;
  if (label.empty()) label = "(" + a.label() + ")x(" + b.label() + ")";
  return validate_algebra(g, a.field(), std::move(label));
}

Matrix regular_representation(const Element& a) {
  const Algebra& alg = a.algebra();
  Matrix m(alg.dim(), alg.dim());
  for (const auto& pair : alg.nonzero_products()) {
    if (a[pair.i].is_zero()) continue;
    for (const auto& e : pair.entries) m(e.k, pair.j) += a[pair.i] * e.value;
  }
  return m;
}

SubspaceBasis check_basis(const Algebra& algebra, std::vector<Element> elements) {
  if (elements.empty()) throw Error(ErrorCode::InvalidArgument, "basis must contain at least the unit");
  for (const auto& e : elements) require_same_algebra(algebra, e.algebra());
  if (!(elements.front() == Element::unit(algebra)))
    throw Error(ErrorCode::FirstNotUnit, "b0 = " + elements.front().str() + " is not the unit");
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(elements.size());
  for (const auto& e : elements) cols.push_back(e.coords());
  if (auto v = null_vector(Matrix::from_columns(cols))) {
    std::ostringstream os;
    os << "basis elements satisfy";
    for (std::size_t k = 0; k < v->size(); ++k)
      if (!(*v)[k].is_zero()) os << " + (" << (*v)[k] << ")*b" << k;
    os << " = 0";
    throw LinearlyDependentError(os.str(), std::move(*v));
  }
  return SubspaceBasis(algebra, std::move(elements));
}

std::vector<Scalar> SubspaceBasis::coordinates_of(const Element& h) const {
  require_same_algebra(algebra_, h.algebra());
  std::vector<std::vector<Scalar>> cols;
  for (const auto& e : elements_) cols.push_back(e.coords());
  auto x = solve(Matrix::from_columns(cols), h.coords());
  if (!x) throw Error(ErrorCode::NotInSubspace, h.str() + " is not in the span of the basis");
  return *x;
}

}  // namespace hyperpde
