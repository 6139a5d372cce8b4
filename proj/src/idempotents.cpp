#include "wedderburn/idempotents.hpp"

#include <string>

namespace wedderburn {

Idempotent::Idempotent(const Algebra& a, Vec coords) : coords_(std::move(coords)) {
  if (coords_.size() != a.dim() || !a.is_idempotent(coords_))
    fail(ErrorCode::NotIdempotent, "element is not idempotent");
}

namespace {

PrimitivityCertificate certify_corner(const Idempotent& e, const CornerAlgebra& b) {
  const bool commutative = b.dim() == 1 || b.local().is_commutative();
  const std::size_t fixed =
      b.dim() == 1 ? 1 : (commutative ? frobenius_fixed_dimension(b.local()) : 0);
  return {e, b.dim(), fixed, commutative};
}

// Given x in B with min poly m = g h, gcd(g, h) = 1, the element (s g)(x)
// is an idempotent of B that is neither 0 nor 1_B.
Split coprime_split(const Algebra& a, const Idempotent& e, const CornerAlgebra& b,
                    std::span<const Residue> x, const Polynomial& m,
                    const std::vector<Factor>& factors) {
  Polynomial g = Polynomial::constant(m.field(), 1);
  for (std::size_t i = 0; i < factors.front().multiplicity; ++i) g = g * factors.front().factor;
  const Polynomial h = m / g;
  const Bezout bez = poly_bezout(g, h);
  ensure(bez.gcd.is_one(), "split factors are not coprime");
  const Polynomial selector = (bez.s * g) % m;
  const Vec eps = b.lift(evaluate(selector, b.local(), x));
  const Vec rest = vec_sub(a.field(), e.coords(), eps);
  ensure(!vec_is_zero(eps) && !vec_is_zero(rest), "coprime split produced a trivial idempotent");
  ensure(vec_is_zero(a.multiply(eps, rest)) && vec_is_zero(a.multiply(rest, eps)),
         "coprime split produced non-orthogonal idempotents");
  return {Idempotent(a, eps), Idempotent(a, rest)};
}

std::optional<Split> try_element(const Algebra& a, const Idempotent& e, const CornerAlgebra& b,
                                 std::span<const Residue> x) {
  const Polynomial m = min_poly(b.local().left_regular(x));
  if (m.degree() < 2) return std::nullopt;
  const std::vector<Factor> factors = berlekamp_factor(m);
  if (factors.size() < 2) return std::nullopt;
  return coprime_split(a, e, b, x, m, factors);
}

bool is_scalar(const Algebra& local, std::span<const Residue> v) {
  return rank(Matrix::from_columns(local.field(), {local.one(), Vec(v.begin(), v.end())})) < 2;
}

}  // namespace

SplitOutcome split_once(const SemisimpleAlgebra& sa, const Idempotent& e, std::mt19937_64& rng,
                        std::size_t cap) {
  const Algebra& a = *sa;
  if (vec_is_zero(e.coords())) fail(ErrorCode::InvalidInput, "cannot split the zero idempotent");
  const CornerAlgebra b = corner(sa.algebra(), e.coords());
  if (b.dim() == 1) return certify_corner(e, b);

  const Algebra& local = b.local();
  const PrimeField& field = local.field();
  const std::size_t d = b.dim();

  // Frobenius on the center Z of B. Its fixed space is a copy of F_p^r,
  // r = number of simple factors of Z.
  const RowEchelon center = column_space(Matrix::from_columns(field, center_basis(local), d));
  const std::size_t dz = center.rank();
  Matrix frob(field, dz, dz);
  for (std::size_t s = 0; s < dz; ++s) {
    const auto coords = coordinates_in_echelon_basis(center, local.power(center.reduced.row(s), field.modulus()));
    ensure(coords.has_value(), "Frobenius image left the center");
    frob.set_column(s, *coords);
  }
  const std::vector<Vec> fixed = kernel_basis(frob - Matrix::identity(field, dz));

  if (fixed.size() > 1) {
    for (const auto& w : fixed) {
      Vec v(d, 0);
      for (std::size_t s = 0; s < dz; ++s) vec_axpy(field, w[s], center.reduced.row(s), v);
      if (is_scalar(local, v)) continue;
      auto split = try_element(a, e, b, v);
      ensure(split.has_value(), "non-scalar Frobenius-fixed central element did not split");
      return *split;
    }
    ensure(false, "Frobenius fixed space has no non-scalar element");
  }

  if (dz == d) return certify_corner(e, b);

  // B is a full matrix algebra of degree >= 2 over the field Z.
  std::uniform_int_distribution<Residue> coeff(0, field.modulus() - 1);
  Vec x(d);
  for (std::size_t attempt = 0; attempt < cap; ++attempt) {
    for (auto& c : x) c = coeff(rng);
    if (auto split = try_element(a, e, b, x)) return *split;
  }
  fail(ErrorCode::SplitIterationCapExceeded,
       "no splitting element found in " + std::to_string(cap) + " attempts; retry with another seed");
}

bool recheck_certificate(const SemisimpleAlgebra& sa, const PrimitivityCertificate& cert) {
  const CornerAlgebra b = corner(sa.algebra(), cert.e.coords());
  const PrimitivityCertificate fresh = certify_corner(cert.e, b);
  return fresh.corner_dim == cert.corner_dim && fresh.corner_commutative == cert.corner_commutative &&
         fresh.frobenius_fixed_dim == cert.frobenius_fixed_dim && fresh.claims_field();
}

bool is_orthogonal_decomposition(const Algebra& a, const std::vector<Idempotent>& parts,
                                 std::span<const Residue> target) {
  const PrimeField& f = a.field();
  Vec sum = a.zero();
  std::vector<Matrix> left;
  for (const auto& e : parts) {
    if (vec_is_zero(e.coords()) || !a.is_idempotent(e.coords())) return false;
    sum = vec_add(f, sum, e.coords());
    left.push_back(a.left_regular(e.coords()));
  }
  if (!std::equal(sum.begin(), sum.end(), target.begin(), target.end())) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (i != j && !vec_is_zero(left[i].apply(parts[j].coords()))) return false;
  return true;
}

OrthogonalDecomposition decompose_identity(const SemisimpleAlgebra& sa, std::uint64_t seed,
                                           std::size_t cap) {
  const Algebra& a = *sa;
  std::mt19937_64 rng(seed);
  std::vector<Idempotent> parts{Idempotent(a, a.one())};
  std::vector<std::optional<PrimitivityCertificate>> certs(1);
  for (std::size_t i = 0; i < parts.size();) {
    SplitOutcome outcome = split_once(sa, parts[i], rng, cap);
    if (auto* cert = std::get_if<PrimitivityCertificate>(&outcome)) {
      certs[i] = std::move(*cert);
      ++i;
      continue;
    }
    auto& split = std::get<Split>(outcome);
    parts[i] = std::move(split.first);
    parts.insert(parts.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::move(split.second));
    certs.insert(certs.begin() + static_cast<std::ptrdiff_t>(i) + 1, std::nullopt);
  }
  ensure(is_orthogonal_decomposition(a, parts, a.one()),
         "decomposition of the identity failed its orthogonality check");
  OrthogonalDecomposition result{std::move(parts), {}};
  for (auto& c : certs) {
    ensure(c.has_value() && c->claims_field(), "part without a primitivity certificate");
    result.certificates.push_back(std::move(*c));
  }
  return result;
}

std::optional<EquivalenceWitness> equivalence_witness(const Algebra& a, const Idempotent& e,
                                                      const Idempotent& f) {
  if (e == f) return EquivalenceWitness{e.coords(), e.coords()};
  const HomSpace fae = hom_space(a, f.coords(), e.coords());
  if (fae.basis.empty()) return std::nullopt;
  const Vec& x = fae.basis.front();
  const HomSpace eaf = hom_space(a, e.coords(), f.coords());
  if (eaf.basis.empty()) fail(ErrorCode::WitnessSolveFailed, "fAe is nonzero but eAf is zero");
  // x * (sum_t beta_t w_t) = f
  const Matrix lx = a.left_regular(x);
  std::vector<Vec> columns;
  for (const auto& w : eaf.basis) columns.push_back(lx.apply(w));
  const auto beta = solve_linear(Matrix::from_columns(a.field(), columns), f.coords());
  if (!beta) fail(ErrorCode::WitnessSolveFailed, "no b in eAf with ab = f");
  Vec y = a.zero();
  for (std::size_t t = 0; t < eaf.basis.size(); ++t) vec_axpy(a.field(), (*beta)[t], eaf.basis[t], y);
  if (a.multiply(y, x) != e.coords()) fail(ErrorCode::WitnessSolveFailed, "witness has ba != e");
  return EquivalenceWitness{x, std::move(y)};
}

bool is_valid_witness(const Algebra& a, const Idempotent& e, const Idempotent& f,
                      const EquivalenceWitness& w) {
  return a.multiply(w.a, w.b) == f.coords() && a.multiply(w.b, w.a) == e.coords() &&
         a.multiply(a.multiply(f.coords(), w.a), e.coords()) == w.a &&
         a.multiply(a.multiply(e.coords(), w.b), f.coords()) == w.b;
}

}  // namespace wedderburn
