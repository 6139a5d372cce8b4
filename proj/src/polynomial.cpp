#include "wedderburn/polynomial.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace wedderburn {

Polynomial::Polynomial(PrimeField field, Vec coefficients)
    : field_(field), coeffs_(std::move(coefficients)) {
  for (auto c : coeffs_)
    if (c >= field_.modulus()) fail(ErrorCode::InvalidInput, "polynomial coefficient out of range");
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(PrimeField field, Residue c) { return Polynomial(field, Vec{c}); }

Polynomial Polynomial::monomial(PrimeField field, std::size_t k) {
  Vec c(k + 1, 0);
  c[k] = 1;
  return Polynomial(field, std::move(c));
}

Polynomial Polynomial::linear(PrimeField field, Residue root) {
  return Polynomial(field, Vec{field.neg(root), 1});
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return field_.inv(leading()) * *this;
}

Polynomial Polynomial::derivative() const {
  Vec d;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    d.push_back(field_.mul(field_.reduce(static_cast<std::int64_t>(k)), coeffs_[k]));
  return Polynomial(field_, std::move(d));
}

Residue Polynomial::evaluate(Residue x) const {
  Residue acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = field_.add(field_.mul(acc, x), *it);
  return acc;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0 || coeffs_[k] != 1) out << coeffs_[k];
    if (k >= 1) out << "T";
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const PrimeField& f = a.field();
  Vec c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.add(a.coefficient(k), b.coefficient(k));
  return Polynomial(f, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const PrimeField& f = a.field();
  Vec c(std::max(a.coefficients().size(), b.coefficients().size()), 0);
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.sub(a.coefficient(k), b.coefficient(k));
  return Polynomial(f, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const PrimeField& f = a.field();
  if (a.is_zero() || b.is_zero()) return Polynomial(f);
  const Vec& x = a.coefficients();
  const Vec& y = b.coefficients();
  Vec c(x.size() + y.size() - 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(x[i], y[j]));
  return Polynomial(f, std::move(c));
}

Polynomial operator*(Residue s, const Polynomial& a) {
  return Polynomial(a.field(), vec_scale(a.field(), s, a.coefficients()));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  const PrimeField& f = a.field();
  if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(f), a};
  Vec rem = a.coefficients();
  const Vec& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  Vec quot(rem.size() - db, 0);
  const Residue lead_inv = f.inv(b.leading());
  for (std::size_t k = rem.size(); k-- > db;) {
    const Residue q = f.mul(rem[k], lead_inv);
    quot[k - db] = q;
    if (q == 0) continue;
    const Residue nq = f.neg(q);
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] = f.add(rem[k - db + j], f.mul(nq, d[j]));
  }
  rem.resize(db);
  return {Polynomial(f, std::move(quot)), Polynomial(f, std::move(rem))};
}

Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).first; }
Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).second; }

Polynomial powmod(const Polynomial& base, std::uint64_t e, const Polynomial& modulus) {
  Polynomial result = Polynomial::constant(base.field(), 1) % modulus;
  Polynomial b = base % modulus;
  while (e > 0) {
    if (e & 1) result = (result * b) % modulus;
    b = (b * b) % modulus;
    e >>= 1;
  }
  return result;
}

Bezout poly_bezout(const Polynomial& f, const Polynomial& g) {
  const PrimeField& field = f.field();
  if (f.is_zero() && g.is_zero()) fail(ErrorCode::InvalidInput, "gcd of two zero polynomials");
  Polynomial r0 = f, r1 = g;
  Polynomial s0 = Polynomial::constant(field, 1), s1(field);
  Polynomial t0(field), t1 = Polynomial::constant(field, 1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::exchange(r1, r);
    s0 = std::exchange(s1, s0 - q * s1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  const Residue scale = field.inv(r0.leading());
  return {scale * s0, scale * t0, scale * r0};
}

Polynomial poly_gcd(const Polynomial& f, const Polynomial& g) { return poly_bezout(f, g).gcd; }

namespace {

// Rows T^{ip} mod f for i < deg f, as a deg f x deg f matrix.
Matrix berlekamp_q_matrix(const Polynomial& f) {
  const PrimeField& field = f.field();
  const auto d = static_cast<std::size_t>(f.degree());
  Matrix q(field, d, d);
  const Polynomial xp = powmod(Polynomial::monomial(field, 1), field.modulus(), f);
  Polynomial row = Polynomial::constant(field, 1);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) q(i, j) = row.coefficient(j);
    row = (row * xp) % f;
  }
  return q;
}

// Basis of {v : v Q = v}, as polynomials.
std::vector<Polynomial> berlekamp_fixed_basis(const Polynomial& f) {
  const Matrix q = berlekamp_q_matrix(f);
  const Matrix shifted = (q - Matrix::identity(f.field(), q.rows())).transpose();
  std::vector<Polynomial> basis;
  for (auto& v : kernel_basis(shifted)) basis.emplace_back(f.field(), std::move(v));
  return basis;
}

// For q = g^e with g irreducible: the smallest k with gcd(q, T^{p^k} - T)
// nontrivial is deg g, and that gcd is g itself.
Polynomial irreducible_root_of_primary(const Polynomial& q) {
  const PrimeField& field = q.field();
  const Polynomial t = Polynomial::monomial(field, 1);
  Polynomial power = t % q;
  for (int k = 1; k <= q.degree(); ++k) {
    power = powmod(power, field.modulus(), q);
    Polynomial g = poly_gcd(q, power - t);
    if (g.degree() > 0) return g;
  }
  ensure(false, "primary factor has no irreducible divisor");
  return q;
}

bool factor_less(const Factor& a, const Factor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const Vec& x = a.factor.coefficients();
  const Vec& y = b.factor.coefficients();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

}  // namespace

std::size_t berlekamp_fixed_dimension(const Polynomial& f) {
  if (f.degree() < 1) fail(ErrorCode::InvalidInput, "Berlekamp needs degree >= 1");
  return berlekamp_fixed_basis(f.monic()).size();
}

std::vector<Factor> berlekamp_factor(const Polynomial& f, std::uint64_t seed) {
  if (f.degree() < 1) fail(ErrorCode::InvalidInput, "cannot factor a constant polynomial");
  const PrimeField& field = f.field();
  const Polynomial target = f.monic();
  const std::vector<Polynomial> fixed = berlekamp_fixed_basis(target);
  const std::size_t distinct = fixed.size();

  // Split target into its primary components g_i^{e_i}. Every fixed element
  // is congruent to a constant modulo each component.
  std::vector<Polynomial> primaries{target};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> coeff(0, field.modulus() - 1);
  const std::uint64_t half = (field.modulus() - 1) / 2;
  constexpr int kMaxRounds = 100000;
  for (int round = 0; primaries.size() < distinct; ++round) {
    ensure(round < kMaxRounds, "Berlekamp splitting did not converge");
    Polynomial v(field);
    for (const auto& b : fixed) v = v + coeff(rng) * b;
    std::vector<Polynomial> next;
    for (const auto& u : primaries) {
      if (u.degree() <= 1) {
        next.push_back(u);
        continue;
      }
      const Polynomial w = powmod(v, half, u) - Polynomial::constant(field, 1);
      const Polynomial g = poly_gcd(u, w);
      if (g.degree() > 0 && g.degree() < u.degree()) {
        next.push_back(g);
        next.push_back(u / g);
      } else {
        next.push_back(u);
      }
    }
    primaries = std::move(next);
  }

  std::vector<Factor> factors;
  for (const auto& q : primaries) {
    const Polynomial g = irreducible_root_of_primary(q).monic();
    ensure(berlekamp_fixed_dimension(g) == 1, "factor failed the irreducibility certificate");
    std::size_t multiplicity = 0;
    Polynomial rest = target;
    for (;;) {
      auto [quot, rem] = divmod(rest, g);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++multiplicity;
    }
    factors.push_back({g, multiplicity});
  }
  std::sort(factors.begin(), factors.end(), factor_less);

  Polynomial product = Polynomial::constant(field, 1);
  for (const auto& [g, m] : factors)
    for (std::size_t i = 0; i < m; ++i) product = product * g;
  ensure(product == target, "factorization does not multiply back to the input");
  return factors;
}

std::optional<Vec> DependenceFinder::add(std::span<const Residue> v) {
  if (v.size() != length_) fail(ErrorCode::ShapeMismatch, "dependence finder length mismatch");
  const std::size_t k = rows_.size();
  Vec residual(v.begin(), v.end());
  Vec combo(k + 1, 0);
  combo[k] = 1;
  for (std::size_t i = 0; i < k; ++i) {
    const Residue c = residual[pivots_[i]];
    if (c == 0) continue;
    const Residue nc = field_.neg(c);
    vec_axpy(field_, nc, rows_[i], residual);
    for (std::size_t j = 0; j < combos_[i].size(); ++j)
      combo[j] = field_.add(combo[j], field_.mul(nc, combos_[i][j]));
  }
  const auto nz = std::find_if(residual.begin(), residual.end(), [](Residue x) { return x != 0; });
  if (nz == residual.end()) {
    // 0 = v_k + sum_{j<k} combo_j v_j
    Vec coeffs(k);
    for (std::size_t j = 0; j < k; ++j) coeffs[j] = field_.neg(combo[j]);
    return coeffs;
  }
  const Residue scale = field_.inv(*nz);
  pivots_.push_back(static_cast<std::size_t>(nz - residual.begin()));
  rows_.push_back(vec_scale(field_, scale, residual));
  combos_.push_back(vec_scale(field_, scale, combo));
  return std::nullopt;
}

Polynomial min_poly(const Matrix& m) {
  if (!m.is_square()) fail(ErrorCode::ShapeMismatch, "min_poly needs a square matrix");
  const PrimeField& field = m.field();
  const std::size_t n = m.rows();
  DependenceFinder finder(field, n * n);
  Matrix power = Matrix::identity(field, n);
  for (std::size_t k = 0;; ++k) {
    if (auto c = finder.add(power.data())) {
      Vec coeffs(k + 1, 0);
      for (std::size_t j = 0; j < k; ++j) coeffs[j] = field.neg((*c)[j]);
      coeffs[k] = 1;
      return Polynomial(field, std::move(coeffs));
    }
    power = power * m;
  }
}

Matrix evaluate(const Polynomial& f, const Matrix& m) {
  const std::size_t n = m.rows();
  Matrix acc(m.field(), n, n);
  const Vec& c = f.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    acc = acc * m;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = m.field().add(acc(i, i), c[k]);
  }
  return acc;
}

Matrix companion_matrix(const Polynomial& f) {
  if (f.degree() < 1 || f.leading() != 1)
    fail(ErrorCode::InvalidInput, "companion matrix needs a monic polynomial of degree >= 1");
  const auto d = static_cast<std::size_t>(f.degree());
  Matrix c(f.field(), d, d);
  for (std::size_t i = 1; i < d; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < d; ++i) c(i, d - 1) = f.field().neg(f.coefficient(i));
  return c;
}

}  // namespace wedderburn
