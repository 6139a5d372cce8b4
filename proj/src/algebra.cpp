#include "wedderburn/algebra.hpp"

#include <algorithm>
#include <string>

#include "wedderburn/accumulator.hpp"
#include "wedderburn/kernels.hpp"

namespace wedderburn {

Algebra::Algebra(PrimeField field, std::size_t dim, Vec sc, std::vector<std::string> labels)
    : field_(field), dim_(dim), sc_(std::move(sc)), labels_(std::move(labels)) {}

namespace {

void check_shape(const PrimeField& field, std::size_t dim, const Vec& sc,
                 const std::vector<std::string>& labels) {
  if (dim == 0) fail(ErrorCode::InvalidInput, "algebra dimension must be at least 1");
  if (sc.size() != dim * dim * dim)
    fail(ErrorCode::InvalidInput, "structure constants must have dim^3 entries");
  for (auto c : sc)
    if (c >= field.modulus())
      fail(ErrorCode::InvalidInput, "structure constant " + std::to_string(c) + " not in [0, p)");
  if (!labels.empty() && labels.size() != dim)
    fail(ErrorCode::InvalidInput, "labels must have one entry per basis element");
}

}  // namespace

AlgebraPtr Algebra::create(std::uint32_t p, std::size_t dim, Vec structure_constants,
                           std::optional<Vec> one, std::vector<std::string> labels) {
  const PrimeField field(p);
  check_shape(field, dim, structure_constants, labels);
  if (auto triple = kernels::associativity_witness(field, structure_constants, dim))
    throw NotAssociativeError(*triple);
  std::shared_ptr<Algebra> a(new Algebra(field, dim, std::move(structure_constants), std::move(labels)));
  a->adopt_identity(std::move(one));
  return a;
}

AlgebraPtr Algebra::create_inherited(std::uint32_t p, std::size_t dim, Vec structure_constants,
                                     Vec one, std::vector<std::string> labels) {
  const PrimeField field(p);
  check_shape(field, dim, structure_constants, labels);
  std::shared_ptr<Algebra> a(new Algebra(field, dim, std::move(structure_constants), std::move(labels)));
  a->adopt_identity(std::move(one));
  return a;
}

void Algebra::adopt_identity(std::optional<Vec> one) {
  if (!one) {
    // sum_i u_i c[i][j][k] = delta_jk and sum_i u_i c[j][i][k] = delta_jk
    Matrix system(field_, 2 * dim_ * dim_, dim_);
    Vec rhs(2 * dim_ * dim_, 0);
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) {
        const std::size_t left = j * dim_ + k, right = dim_ * dim_ + left;
        for (std::size_t i = 0; i < dim_; ++i) {
          system(left, i) = constant(i, j, k);
          system(right, i) = constant(j, i, k);
        }
        rhs[left] = rhs[right] = (j == k) ? 1 : 0;
      }
    one = solve_linear(system, rhs);
    if (!one) fail(ErrorCode::NoIdentity, "no two-sided identity exists");
  }
  if (one->size() != dim_) fail(ErrorCode::InvalidInput, "identity has the wrong length");
  for (auto c : *one)
    if (c >= modulus()) fail(ErrorCode::InvalidInput, "identity coordinate not in [0, p)");
  for (std::size_t i = 0; i < dim_; ++i) {
    const Vec b = unit_vector(dim_, i);
    if (multiply(*one, b) != b || multiply(b, *one) != b)
      fail(ErrorCode::NoIdentity, "given identity fails on basis element " + std::to_string(i));
  }
  one_ = std::move(*one);
}

Vec Algebra::multiply(std::span<const Residue> x, std::span<const Residue> y) const {
  if (x.size() != dim_ || y.size() != dim_) fail(ErrorCode::ShapeMismatch, "element length mismatch");
  RowAccumulator acc(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j)
      if (y[j] != 0) acc.add_scaled(field_.mul(x[i], y[j]), sc_.data() + (i * dim_ + j) * dim_);
  }
  return acc.result();
}

Vec Algebra::power(std::span<const Residue> x, std::uint64_t e) const {
  Vec result = one_;
  Vec base(x.begin(), x.end());
  while (e > 0) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e > 0) base = multiply(base, base);
  }
  return result;
}

bool Algebra::is_idempotent(std::span<const Residue> x) const {
  const Vec sq = multiply(x, x);
  return std::equal(sq.begin(), sq.end(), x.begin(), x.end());
}

bool Algebra::is_commutative() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k)
        if (constant(i, j, k) != constant(j, i, k)) return false;
  return true;
}

bool Algebra::same_presentation(const Algebra& other) const {
  return this == &other || (modulus() == other.modulus() && sc_ == other.sc_);
}

Matrix Algebra::left_regular(std::span<const Residue> x) const {
  Matrix m(field_, dim_, dim_);
  RowAccumulator acc(field_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    acc.clear();
    for (std::size_t i = 0; i < dim_; ++i) acc.add_scaled(x[i], sc_.data() + (i * dim_ + j) * dim_);
    m.set_column(j, acc.result());
  }
  return m;
}

Matrix Algebra::right_regular(std::span<const Residue> x) const {
  Matrix m(field_, dim_, dim_);
  RowAccumulator acc(field_, dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    acc.clear();
    for (std::size_t i = 0; i < dim_; ++i) acc.add_scaled(x[i], sc_.data() + (j * dim_ + i) * dim_);
    m.set_column(j, acc.result());
  }
  return m;
}

Element::Element(AlgebraPtr parent, Vec coords) : parent_(std::move(parent)), coords_(std::move(coords)) {
  if (coords_.size() != parent_->dim()) fail(ErrorCode::ShapeMismatch, "element length mismatch");
  for (auto c : coords_)
    if (c >= parent_->modulus()) fail(ErrorCode::InvalidInput, "coordinate not in [0, p)");
}

bool operator==(const Element& a, const Element& b) {
  return a.parent_->same_presentation(*b.parent_) && a.coords_ == b.coords_;
}

namespace {

void require_same_parent(const Element& x, const Element& y) {
  if (!x.parent()->same_presentation(*y.parent()))
    fail(ErrorCode::ParentMismatch, "elements belong to different algebras");
}

}  // namespace

Element operator*(const Element& x, const Element& y) {
  require_same_parent(x, y);
  return Element(x.parent(), x.parent()->multiply(x.coords(), y.coords()));
}

Element operator+(const Element& x, const Element& y) {
  require_same_parent(x, y);
  return Element(x.parent(), vec_add(x.parent()->field(), x.coords(), y.coords()));
}

Element operator-(const Element& x, const Element& y) {
  require_same_parent(x, y);
  return Element(x.parent(), vec_sub(x.parent()->field(), x.coords(), y.coords()));
}

std::vector<Vec> center_basis(const Algebra& a) {
  const std::size_t n = a.dim();
  const PrimeField& f = a.field();
  // row (i, k): sum_l z_l (c[l][i][k] - c[i][l][k]) = 0
  Matrix system(f, n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        system(i * n + k, l) = f.sub(a.constant(l, i, k), a.constant(i, l, k));
  return kernel_basis(system);
}

Vec evaluate(const Polynomial& f, const Algebra& a, std::span<const Residue> x) {
  const PrimeField& field = a.field();
  Vec acc = a.zero();
  const Vec& c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = a.multiply(acc, x);
    vec_axpy(field, c[k], a.one(), acc);
  }
  return acc;
}

Polynomial element_min_poly(const Algebra& a, std::span<const Residue> x) {
  const PrimeField& field = a.field();
  DependenceFinder finder(field, a.dim());
  Vec power = a.one();
  for (std::size_t k = 0;; ++k) {
    if (auto c = finder.add(power)) {
      Vec coeffs(k + 1, 0);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = field.neg((*c)[j]);
      coeffs[k] = 1;
      return Polynomial(field, std::move(coeffs));
    }
    power = a.multiply(power, x);
  }
}

CornerAlgebra::CornerAlgebra(AlgebraPtr parent, Vec e, std::vector<Vec> lifts, RowEchelon echelon,
                             Matrix to_lift_coords)
    : parent_(std::move(parent)),
      e_(std::move(e)),
      lifts_(std::move(lifts)),
      echelon_(std::move(echelon)),
      to_lift_coords_(std::move(to_lift_coords)) {
  build_local();
}

Vec CornerAlgebra::lift(std::span<const Residue> local_coords) const {
  const PrimeField& f = parent_->field();
  Vec v = parent_->zero();
  for (std::size_t t = 0; t < lifts_.size(); ++t) vec_axpy(f, local_coords[t], lifts_[t], v);
  return v;
}

std::optional<Vec> CornerAlgebra::project(std::span<const Residue> parent_coords) const {
  auto ech = coordinates_in_echelon_basis(echelon_, parent_coords);
  if (!ech) return std::nullopt;
  return to_lift_coords_.apply(*ech);
}

void CornerAlgebra::build_local() {
  const Algebra& a = *parent_;
  const std::size_t d = lifts_.size();
  const PrimeField& f = a.field();
  Vec sc(d * d * d, 0);
  // all products u_s u_t at once: column t of L_{u_s} U
  const Matrix lifts_as_columns = Matrix::from_columns(f, lifts_, a.dim());
  for (std::size_t s = 0; s < d; ++s) {
    const Matrix products = a.left_regular(lifts_[s]) * lifts_as_columns;
    for (std::size_t t = 0; t < d; ++t) {
      auto coords = project(products.column(t));
      if (!coords) fail(ErrorCode::InvariantViolation, "corner basis is not closed under products");
      std::copy(coords->begin(), coords->end(), sc.begin() + (s * d + t) * d);
    }
  }
  auto local_one = project(e_);
  if (!local_one) fail(ErrorCode::InvariantViolation, "corner does not contain its idempotent");
  if (d == 0) {
    local_ = nullptr;
    return;
  }
  local_ = Algebra::create_inherited(a.modulus(), d, std::move(sc), std::move(*local_one));
}

std::optional<CornerAlgebra> CornerAlgebra::from_basis(AlgebraPtr parent, Vec e, std::vector<Vec> lifts) {
  const Algebra& a = *parent;
  const PrimeField& f = a.field();
  if (e.size() != a.dim()) return std::nullopt;
  for (const auto& v : lifts) {
    if (v.size() != a.dim()) return std::nullopt;
    if (a.multiply(a.multiply(e, v), e) != v) return std::nullopt;
  }
  const std::size_t d = lifts.size();
  RowEchelon full = rref(Matrix::from_rows(f, lifts, a.dim()));
  if (full.rank() != d) return std::nullopt;
  Matrix basis(f, d, a.dim());
  for (std::size_t i = 0; i < d; ++i)
    std::copy(full.reduced.row(i).begin(), full.reduced.row(i).end(), basis.row(i).begin());
  // lift_t = sum_s G[t][s] echelon_s with G[t][s] = lift_t[pivot_s]
  Matrix g(f, d, d);
  for (std::size_t t = 0; t < d; ++t)
    for (std::size_t s = 0; s < d; ++s) g(t, s) = lifts[t][full.pivots[s]];
  auto g_inv = inverse(g.transpose());
  if (!g_inv) return std::nullopt;
  try {
    return CornerAlgebra(std::move(parent), std::move(e), std::move(lifts),
                         RowEchelon{std::move(basis), std::move(full.pivots)}, std::move(*g_inv));
  } catch (const Error&) {
    return std::nullopt;
  }
}

CornerAlgebra corner(const AlgebraPtr& a, std::span<const Residue> e) {
  if (e.size() != a->dim() || !a->is_idempotent(e))
    fail(ErrorCode::NotIdempotent, "corner requires an idempotent");
  // x -> (e x) e
  const Matrix op = a->right_regular(e) * a->left_regular(e);
  RowEchelon image = column_space(op);
  std::vector<Vec> lifts;
  for (std::size_t i = 0; i < image.rank(); ++i)
    lifts.emplace_back(image.reduced.row(i).begin(), image.reduced.row(i).end());
  const std::size_t d = lifts.size();
  return CornerAlgebra(a, Vec(e.begin(), e.end()), std::move(lifts), std::move(image),
                       Matrix::identity(a->field(), d));
}

HomSpace hom_space(const Algebra& a, std::span<const Residue> f, std::span<const Residue> e) {
  if (f.size() != a.dim() || e.size() != a.dim() || !a.is_idempotent(f) || !a.is_idempotent(e))
    fail(ErrorCode::NotIdempotent, "hom_space requires idempotents");
  // x -> (f x) e
  const Matrix op = a.right_regular(e) * a.left_regular(f);
  const RowEchelon image = column_space(op);
  HomSpace h{Vec(f.begin(), f.end()), Vec(e.begin(), e.end()), {}};
  for (std::size_t i = 0; i < image.rank(); ++i)
    h.basis.emplace_back(image.reduced.row(i).begin(), image.reduced.row(i).end());
  return h;
}

Matrix frobenius_matrix(const Algebra& a) {
  if (!a.is_commutative()) fail(ErrorCode::NotCommutative, "Frobenius map needs a commutative algebra");
  const std::size_t n = a.dim();
  Matrix m(a.field(), n, n);
  for (std::size_t j = 0; j < n; ++j) m.set_column(j, a.power(unit_vector(n, j), a.modulus()));
  return m;
}

std::size_t frobenius_fixed_dimension(const Algebra& a) {
  const Matrix fr = frobenius_matrix(a);
  return kernel_basis(fr - Matrix::identity(a.field(), a.dim())).size();
}

}  // namespace wedderburn
