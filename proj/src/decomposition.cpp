#include "wedderburn/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "wedderburn/accumulator.hpp"
#include "wedderburn/kernels.hpp"

namespace wedderburn {

namespace {

bool lex_less(const Vec& x, const Vec& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

std::string block_name(std::size_t i) { return "block " + std::to_string(i); }

}  // namespace

std::vector<ConnectingFamily> group_by_equivalence(const Algebra& a,
                                                   const OrthogonalDecomposition& decomposition) {
  std::vector<const Idempotent*> order;
  for (const auto& e : decomposition.parts) order.push_back(&e);
  std::sort(order.begin(), order.end(),
            [](const Idempotent* x, const Idempotent* y) { return lex_less(x->coords(), y->coords()); });

  std::vector<ConnectingFamily> families;
  for (const Idempotent* e : order) {
    bool placed = false;
    for (auto& family : families) {
      // a in e_1 A e, b in e A e_1, ab = e_1, ba = e
      if (auto w = equivalence_witness(a, *e, family.representative())) {
        family.members.push_back(*e);
        family.a.push_back(std::move(w->a));
        family.b.push_back(std::move(w->b));
        placed = true;
        break;
      }
    }
    if (!placed) families.push_back({{*e}, {e->coords()}, {e->coords()}});
  }
  return families;
}

Vec central_idempotent(const Algebra& a, const ConnectingFamily& family) {
  Vec c = a.zero();
  for (const auto& e : family.members) c = vec_add(a.field(), c, e.coords());
  if (!a.is_idempotent(c)) fail(ErrorCode::InvariantViolation, "block sum is not idempotent");
  if (!(a.left_regular(c) == a.right_regular(c)))
    fail(ErrorCode::InvariantViolation, "centrality violation: block sum is not central");
  return c;
}

std::optional<std::string> matrix_unit_violation(const Algebra& a, const MatrixUnitSystem& s) {
  const std::size_t n = s.size;
  if (s.units.size() != n * n) return "wrong number of matrix units";
  Vec diag = a.zero();
  for (std::size_t mu = 0; mu < n; ++mu) diag = vec_add(a.field(), diag, s(mu, mu));
  if (diag != s.block_identity) return "sum of diagonal matrix units differs from the block identity";
  std::vector<Matrix> left;
  for (const auto& u : s.units) left.push_back(a.left_regular(u));
  const Vec zero = a.zero();
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t xi = 0; xi < n; ++xi)
        for (std::size_t eta = 0; eta < n; ++eta) {
          const Vec prod = left[mu * n + nu].apply(s(xi, eta));
          const Vec& expected = nu == xi ? s(mu, eta) : zero;
          if (prod != expected)
            return "matrix unit relation E(" + std::to_string(mu) + "," + std::to_string(nu) + ") E(" +
                   std::to_string(xi) + "," + std::to_string(eta) + ") fails";
        }
  return std::nullopt;
}

MatrixUnitSystem matrix_units(const Algebra& a, const ConnectingFamily& family, const Vec& c) {
  const std::size_t n = family.size();
  MatrixUnitSystem s{n, {}, c};
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) s.units.push_back(a.multiply(family.b[mu], family.a[nu]));
  if (auto bad = matrix_unit_violation(a, s)) fail(ErrorCode::InvariantViolation, *bad);
  return s;
}

BlockLayout::BlockLayout(std::vector<std::pair<std::size_t, std::size_t>> shapes)
    : shapes_(std::move(shapes)) {
  for (const auto& [n, d] : shapes_) {
    offsets_.push_back(total_);
    total_ += n * n * d;
  }
}

BlockLayout::Coordinate BlockLayout::coordinate(std::size_t flat) const {
  const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
  const auto block = static_cast<std::size_t>(it - offsets_.begin()) - 1;
  const auto [n, d] = shapes_[block];
  const std::size_t local = flat - offsets_[block];
  return {block, local / d / n, (local / d) % n, local % d};
}

std::vector<AlgebraPtr> DecompositionResult::divisions() const {
  std::vector<AlgebraPtr> out;
  for (const auto& b : blocks) out.push_back(b.division.local_ptr());
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> DecompositionResult::block_multiset() const {
  auto shapes = layout.shapes();
  std::sort(shapes.begin(), shapes.end());
  return shapes;
}

std::vector<Vec> block_map(const Algebra& a, const WedderburnBlock& block, std::span<const Residue> x) {
  std::vector<Vec> entries;
  for (std::size_t mu = 0; mu < block.n; ++mu)
    for (std::size_t nu = 0; nu < block.n; ++nu) {
      const Vec v = a.multiply(a.multiply(block.family.a[mu], x), block.family.b[nu]);
      auto coords = block.division.project(v);
      if (!coords) fail(ErrorCode::InvariantViolation, "block map entry outside the corner");
      entries.push_back(std::move(*coords));
    }
  return entries;
}

namespace {

// Column j = flattened image of b_j under x -> (left[i][mu] x right[i][nu])
// projected into each block's corner. Returns nullopt (with a message) when
// some entry leaves its corner.
std::optional<Matrix> assemble_map(const Algebra& a, const BlockLayout& layout,
                                   const std::vector<std::vector<Vec>>& left,
                                   const std::vector<std::vector<Vec>>& right,
                                   const std::vector<const CornerAlgebra*>& corners, std::string& error) {
  const std::size_t n = a.dim();
  Matrix m(a.field(), layout.total(), n);
  for (std::size_t i = 0; i < layout.blocks(); ++i) {
    const std::size_t ni = layout.size(i);
    for (std::size_t mu = 0; mu < ni; ++mu) {
      const Matrix lm = a.left_regular(left[i][mu]);
      for (std::size_t nu = 0; nu < ni; ++nu) {
        const Matrix op = a.right_regular(right[i][nu]) * lm;
        for (std::size_t j = 0; j < n; ++j) {
          auto coords = corners[i]->project(op.column(j));
          if (!coords) {
            error = block_name(i) + ": image of basis element " + std::to_string(j) + " at (" +
                    std::to_string(mu) + "," + std::to_string(nu) + ") leaves the division corner";
            return std::nullopt;
          }
          for (std::size_t t = 0; t < coords->size(); ++t) m(layout.index(i, mu, nu, t), j) = (*coords)[t];
        }
      }
    }
  }
  return m;
}

}  // namespace

DecompositionResult full_isomorphism(const SemisimpleAlgebra& sa, std::uint64_t seed, std::size_t cap) {
  const Algebra& a = *sa;
  OrthogonalDecomposition primitive = decompose_identity(sa, seed, cap);
  std::vector<ConnectingFamily> families = group_by_equivalence(a, primitive);

  std::vector<WedderburnBlock> blocks;
  for (auto& family : families) {
    Vec c = central_idempotent(a, family);
    MatrixUnitSystem units = matrix_units(a, family, c);
    CornerAlgebra division = corner(sa.algebra(), family.representative().coords());
    ensure(division.dim() == 1 ||
               (division.local().is_commutative() && frobenius_fixed_dimension(division.local()) == 1),
           "division corner failed the field certificate");
    const std::size_t n = family.size();
    ensure(n * n * division.dim() == rank(a.left_regular(c)), "block dimension does not match A c");
    blocks.push_back({n, std::move(division), std::move(c), std::move(family), std::move(units)});
  }
  std::sort(blocks.begin(), blocks.end(), [](const WedderburnBlock& x, const WedderburnBlock& y) {
    if (x.n != y.n) return x.n < y.n;
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    return lex_less(x.central, y.central);
  });

  std::vector<std::pair<std::size_t, std::size_t>> shapes;
  std::vector<std::vector<Vec>> left, right;
  std::vector<const CornerAlgebra*> corners;
  for (const auto& b : blocks) {
    shapes.emplace_back(b.n, b.degree());
    left.push_back(b.family.a);
    right.push_back(b.family.b);
    corners.push_back(&b.division);
  }
  BlockLayout layout(std::move(shapes));
  if (layout.total() != a.dim()) fail(ErrorCode::InvariantViolation, "block dimensions do not add up to dim A");
  std::string error;
  auto iso = assemble_map(a, layout, left, right, corners, error);
  if (!iso) fail(ErrorCode::InvariantViolation, error);
  auto iso_inverse = inverse(*iso);
  if (!iso_inverse) fail(ErrorCode::InvariantViolation, "NonBijective: block map is singular");
  return DecompositionResult{std::move(blocks), std::move(*iso), std::move(*iso_inverse), std::move(layout),
                             seed, std::move(primitive)};
}

Vec target_multiply(const BlockLayout& layout, const std::vector<AlgebraPtr>& divisions,
                    std::span<const Residue> x, std::span<const Residue> y) {
  if (x.size() != layout.total() || y.size() != layout.total() || divisions.size() != layout.blocks())
    fail(ErrorCode::ShapeMismatch, "block matrices do not match the layout");
  Vec z(layout.total(), 0);
  for (std::size_t i = 0; i < layout.blocks(); ++i) {
    const Algebra& d = *divisions[i];
    const std::size_t n = layout.size(i), deg = layout.degree(i);
    if (d.dim() != deg) fail(ErrorCode::ShapeMismatch, "division algebra degree mismatch");
    RowAccumulator acc(d.field(), deg);
    for (std::size_t mu = 0; mu < n; ++mu)
      for (std::size_t nu = 0; nu < n; ++nu) {
        acc.clear();
        for (std::size_t xi = 0; xi < n; ++xi) {
          const Residue* xe = x.data() + layout.index(i, mu, xi, 0);
          const Residue* ye = y.data() + layout.index(i, xi, nu, 0);
          for (std::size_t s = 0; s < deg; ++s) {
            if (xe[s] == 0) continue;
            for (std::size_t t = 0; t < deg; ++t)
              if (ye[t] != 0) acc.add_scaled(d.field().mul(xe[s], ye[t]), d.basis_product(s, t).data());
          }
        }
        acc.store(z.data() + layout.index(i, mu, nu, 0));
      }
  }
  return z;
}

Vec target_identity(const BlockLayout& layout, const std::vector<AlgebraPtr>& divisions) {
  Vec id(layout.total(), 0);
  for (std::size_t i = 0; i < layout.blocks(); ++i)
    for (std::size_t mu = 0; mu < layout.size(i); ++mu) {
      const Vec& one = divisions[i]->one();
      std::copy(one.begin(), one.end(), id.begin() + static_cast<std::ptrdiff_t>(layout.index(i, mu, mu, 0)));
    }
  return id;
}

DecompositionReport make_report(const DecompositionResult& result, const Algebra& a) {
  DecompositionReport r;
  r.p = a.modulus();
  r.dim = a.dim();
  r.seed = result.seed;
  r.layout = result.layout;
  for (const auto& b : result.blocks) {
    DecompositionReport::Block rb;
    rb.n = b.n;
    rb.division_degree = b.degree();
    rb.central_idempotent = b.central;
    rb.representative_idempotent = b.family.representative().coords();
    for (const auto& e : b.family.members) rb.idempotents.push_back(e.coords());
    rb.connecting_a = b.family.a;
    rb.connecting_b = b.family.b;
    rb.matrix_units = b.units.units;
    rb.division_basis = b.division.basis_lift();
    r.blocks.push_back(std::move(rb));
  }
  for (std::size_t i = 0; i < a.dim(); ++i) {
    r.iso_matrix.emplace_back(result.iso.row(i).begin(), result.iso.row(i).end());
    r.iso_inverse.emplace_back(result.iso_inverse.row(i).begin(), result.iso_inverse.row(i).end());
  }
  return r;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorCode::InvalidInput, "report does not fit the algebra: " + what);
}

void check_report_shape(const Algebra& a, const DecompositionReport& r) {
  const std::size_t n = a.dim();
  auto vec_ok = [&](const Vec& v) {
    return v.size() == n && std::all_of(v.begin(), v.end(), [&](Residue x) { return x < a.modulus(); });
  };
  auto all_ok = [&](const std::vector<Vec>& vs, std::size_t count) {
    return vs.size() == count && std::all_of(vs.begin(), vs.end(), vec_ok);
  };
  require(r.p == a.modulus(), "modulus differs");
  require(r.dim == n, "dimension differs");
  require(all_ok(r.iso_matrix, n) && all_ok(r.iso_inverse, n), "iso matrices must be dim x dim");
  require(r.layout.blocks() == r.blocks.size() && r.layout.total() == n, "layout does not match blocks");
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& b = r.blocks[i];
    require(b.n >= 1 && b.division_degree >= 1, block_name(i) + " is empty");
    require(r.layout.size(i) == b.n && r.layout.degree(i) == b.division_degree,
            block_name(i) + " disagrees with the layout");
    require(vec_ok(b.central_idempotent) && vec_ok(b.representative_idempotent), block_name(i) + " idempotents");
    require(all_ok(b.idempotents, b.n) && all_ok(b.connecting_a, b.n) && all_ok(b.connecting_b, b.n),
            block_name(i) + " connecting family");
    require(all_ok(b.matrix_units, b.n * b.n), block_name(i) + " matrix units");
    require(all_ok(b.division_basis, b.division_degree), block_name(i) + " division basis");
  }
}

Matrix rows_to_matrix(const PrimeField& f, const std::vector<Vec>& rows) { return Matrix::from_rows(f, rows); }

// Relations that only involve the matrix units, connecting family and
// central idempotents.
std::optional<std::string> unit_system_violation(const Algebra& a, const DecompositionReport& r) {
  const PrimeField& f = a.field();
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& b = r.blocks[i];
    const Vec& c = b.central_idempotent;
    if (!a.is_idempotent(c)) return block_name(i) + ": central idempotent is not idempotent";
    if (!(a.left_regular(c) == a.right_regular(c))) return block_name(i) + ": central idempotent is not central";
    for (std::size_t j = 0; j < i; ++j)
      if (!vec_is_zero(a.multiply(c, r.blocks[j].central_idempotent)))
        return block_name(i) + " and " + block_name(j) + ": central idempotents are not orthogonal";
    if (b.idempotents.front() != b.representative_idempotent)
      return block_name(i) + ": first idempotent is not the representative";
    if (b.connecting_a.front() != b.representative_idempotent ||
        b.connecting_b.front() != b.representative_idempotent)
      return block_name(i) + ": a[0] and b[0] must equal the representative";
    for (std::size_t mu = 0; mu < b.n; ++mu) {
      if (a.multiply(b.connecting_a[mu], b.connecting_b[mu]) != b.representative_idempotent)
        return block_name(i) + ": a[" + std::to_string(mu) + "] b[" + std::to_string(mu) + "] != e_1";
      if (a.multiply(b.connecting_b[mu], b.connecting_a[mu]) != b.idempotents[mu])
        return block_name(i) + ": b[" + std::to_string(mu) + "] a[" + std::to_string(mu) + "] != e_mu";
      for (std::size_t nu = 0; nu < b.n; ++nu)
        if (a.multiply(b.connecting_b[mu], b.connecting_a[nu]) != b.matrix_units[mu * b.n + nu])
          return block_name(i) + ": matrix unit (" + std::to_string(mu) + "," + std::to_string(nu) +
                 ") is not b[mu] a[nu]";
    }
    MatrixUnitSystem s{b.n, b.matrix_units, c};
    if (auto bad = matrix_unit_violation(a, s)) return block_name(i) + ": " + *bad;
  }
  Vec sum = a.zero();
  for (const auto& b : r.blocks) sum = vec_add(f, sum, b.central_idempotent);
  if (sum != a.one()) return std::string("central idempotents do not sum to 1");
  return std::nullopt;
}

}  // namespace

VerificationReport verify_isomorphism(const AlgebraPtr& ap, const DecompositionReport& r, bool full) {
  const Algebra& a = *ap;
  check_report_shape(a, r);
  VerificationReport out;
  out.multiplicative_checked = full;

  if (auto bad = unit_system_violation(a, r)) out.failures.push_back("matrix_units: " + *bad);
  else out.matrix_units = true;

  std::vector<CornerAlgebra> corners;
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    auto c = CornerAlgebra::from_basis(ap, r.blocks[i].representative_idempotent, r.blocks[i].division_basis);
    if (!c) {
      out.failures.push_back("bijective: " + block_name(i) + " division basis does not span a corner subalgebra");
      return out;
    }
    corners.push_back(std::move(*c));
  }

  // x -> (E_{0 mu} x E_{nu 0}) per block
  std::vector<std::vector<Vec>> left(r.blocks.size()), right(r.blocks.size());
  std::vector<const CornerAlgebra*> corner_ptrs;
  std::vector<AlgebraPtr> divisions;
  for (std::size_t i = 0; i < r.blocks.size(); ++i) {
    const auto& b = r.blocks[i];
    for (std::size_t mu = 0; mu < b.n; ++mu) {
      left[i].push_back(b.matrix_units[mu]);
      right[i].push_back(b.matrix_units[mu * b.n]);
    }
    corner_ptrs.push_back(&corners[i]);
    divisions.push_back(corners[i].local_ptr());
  }
  std::string error;
  const auto phi = assemble_map(a, r.layout, left, right, corner_ptrs, error);
  if (!phi) {
    out.failures.push_back("bijective: " + error);
    return out;
  }

  const PrimeField& f = a.field();
  const Matrix iso = rows_to_matrix(f, r.iso_matrix);
  const Matrix iso_inv = rows_to_matrix(f, r.iso_inverse);
  if (!(*phi == iso)) out.failures.push_back("bijective: stored iso matrix differs from the matrix-unit map");
  else if (!(iso * iso_inv).is_identity() || !(iso_inv * iso).is_identity())
    out.failures.push_back("bijective: iso_inverse is not the inverse of iso_matrix");
  else out.bijective = true;

  const Vec identity = target_identity(r.layout, divisions);
  if (phi->apply(a.one()) != identity) out.failures.push_back("unit: image of 1 is not the identity");
  else out.unit = true;

  out.orthogonality = true;
  for (std::size_t i = 0; i < r.blocks.size() && out.orthogonality; ++i) {
    const Vec image = phi->apply(r.blocks[i].central_idempotent);
    for (std::size_t k = 0; k < image.size(); ++k) {
      const bool inside = r.layout.coordinate(k).block == i;
      if (image[k] != (inside ? identity[k] : 0)) {
        out.orthogonality = false;
        out.failures.push_back("orthogonality: image of the central idempotent of " + block_name(i) +
                               " is not the block identity");
        break;
      }
    }
  }

  if (full) {
    const std::size_t n = a.dim();
    std::vector<Vec> images(n);
    for (std::size_t j = 0; j < n; ++j) images[j] = phi->column(j);
    const auto bad = kernels::first_failure(n * n, [&](std::size_t pair) {
      const std::size_t i = pair / n, j = pair % n;
      return phi->apply(a.basis_product(i, j)) == target_multiply(r.layout, divisions, images[i], images[j]);
    });
    if (bad) {
      out.multiplicative_witness = std::pair{*bad / n, *bad % n};
      out.failures.push_back("multiplicative: image of b_" + std::to_string(*bad / n) + " b_" +
                             std::to_string(*bad % n) + " differs from the product of images");
    } else {
      out.multiplicative = true;
    }
  }
  return out;
}

VerificationReport verify_isomorphism(const AlgebraPtr& a, const DecompositionResult& result, bool full) {
  return verify_isomorphism(a, make_report(result, *a), full);
}

}  // namespace wedderburn
