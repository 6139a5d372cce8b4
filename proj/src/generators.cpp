#include "wedderburn/generators.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <string>

namespace wedderburn {

void CayleyTable::validate() const {
  const std::size_t m = order;
  if (m == 0) fail(ErrorCode::InvalidCayley, "group order must be positive");
  if (identity >= m) fail(ErrorCode::InvalidCayley, "identity index out of range");
  if (table.size() != m) fail(ErrorCode::InvalidCayley, "table must have `order` rows");
  for (std::size_t g = 0; g < m; ++g) {
    if (table[g].size() != m) fail(ErrorCode::InvalidCayley, "row " + std::to_string(g) + " has wrong length");
    std::vector<bool> seen_row(m, false), seen_col(m, false);
    for (std::size_t h = 0; h < m; ++h) {
      const std::size_t r = table[g][h];
      if (r >= m) fail(ErrorCode::InvalidCayley, "entry out of range");
      if (seen_row[r]) fail(ErrorCode::InvalidCayley, "row " + std::to_string(g) + " is not a permutation");
      seen_row[r] = true;
      if (table[h].size() != m) continue;  // reported when row h is checked
      const std::size_t c = table[h][g];
      if (c < m) {
        if (seen_col[c]) fail(ErrorCode::InvalidCayley, "column " + std::to_string(g) + " is not a permutation");
        seen_col[c] = true;
      }
    }
  }
  for (std::size_t g = 0; g < m; ++g)
    if (table[identity][g] != g || table[g][identity] != g)
      fail(ErrorCode::InvalidCayley, "identity index is not a two-sided identity");
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h)
      for (std::size_t k = 0; k < m; ++k)
        if (table[table[g][h]][k] != table[g][table[h][k]])
          fail(ErrorCode::InvalidCayley, "not associative at (" + std::to_string(g) + "," + std::to_string(h) +
                                             "," + std::to_string(k) + ")");
}

CayleyTable cyclic_group(std::size_t m) {
  CayleyTable t{m, 0, std::vector<std::vector<std::size_t>>(m, std::vector<std::size_t>(m))};
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) t.table[g][h] = (g + h) % m;
  return t;
}

namespace {

// Permutations of {0, 1, 2} in lexicographic order; (g h)(x) = g(h(x)).
CayleyTable symmetric3() {
  std::vector<std::array<std::size_t, 3>> perms;
  std::array<std::size_t, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  CayleyTable t{6, 0, std::vector<std::vector<std::size_t>>(6, std::vector<std::size_t>(6))};
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) {
      std::array<std::size_t, 3> c{};
      for (std::size_t x = 0; x < 3; ++x) c[x] = perms[g][perms[h][x]];
      t.table[g][h] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

// r^i s^j at index i + 4 j, with s r s = r^{-1}.
CayleyTable dihedral8() {
  CayleyTable t{8, 0, std::vector<std::vector<std::size_t>>(8, std::vector<std::size_t>(8))};
  for (std::size_t g = 0; g < 8; ++g)
    for (std::size_t h = 0; h < 8; ++h) {
      const std::size_t a = g % 4, b = g / 4, c = h % 4, d = h / 4;
      const std::size_t rot = (b == 0 ? a + c : a + 4 - c) % 4;
      t.table[g][h] = rot + 4 * ((b + d) % 2);
    }
  return t;
}

// sign * 4 + unit with units 1, i, j, k.
CayleyTable quaternion8() {
  // unit products: (sign, unit) for u v
  constexpr std::array<std::array<std::pair<int, std::size_t>, 4>, 4> prod{{
      {{{0, 0}, {0, 1}, {0, 2}, {0, 3}}},
      {{{0, 1}, {1, 0}, {0, 3}, {1, 2}}},
      {{{0, 2}, {1, 3}, {1, 0}, {0, 1}}},
      {{{0, 3}, {0, 2}, {1, 1}, {1, 0}}},
  }};
  CayleyTable t{8, 0, std::vector<std::vector<std::size_t>>(8, std::vector<std::size_t>(8))};
  for (std::size_t g = 0; g < 8; ++g)
    for (std::size_t h = 0; h < 8; ++h) {
      const auto [sign, unit] = prod[g % 4][h % 4];
      const std::size_t s = (g / 4 + h / 4 + static_cast<std::size_t>(sign)) % 2;
      t.table[g][h] = s * 4 + unit;
    }
  return t;
}

}  // namespace

std::vector<std::string> named_groups() { return {"C2", "C3", "C4", "S3", "D4", "Q8"}; }

CayleyTable named_group(const std::string& name) {
  if (name == "C2") return cyclic_group(2);
  if (name == "C3") return cyclic_group(3);
  if (name == "C4") return cyclic_group(4);
  if (name == "S3") return symmetric3();
  if (name == "D4") return dihedral8();
  if (name == "Q8") return quaternion8();
  fail(ErrorCode::InvalidInput, "unknown group '" + name + "'");
}

AlgebraPtr group_algebra(const CayleyTable& table, std::uint32_t p) {
  table.validate();
  const std::size_t m = table.order;
  Vec sc(m * m * m, 0);
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t h = 0; h < m; ++h) sc[(g * m + h) * m + table.table[g][h]] = 1;
  std::vector<std::string> labels;
  for (std::size_t g = 0; g < m; ++g) labels.push_back("g" + std::to_string(g));
  return Algebra::create(p, m, std::move(sc), unit_vector(m, table.identity), std::move(labels));
}

namespace {

bool is_irreducible(const Polynomial& poly) {
  if (poly.degree() < 1) return false;
  const auto factors = berlekamp_factor(poly);
  return factors.size() == 1 && factors.front().multiplicity == 1;
}

}  // namespace

PlantedDecomposition matrix_algebra_over_extension(std::size_t n, std::uint32_t p, const Polynomial& poly) {
  if (n == 0) fail(ErrorCode::InvalidInput, "matrix size must be positive");
  if (poly.field().modulus() != p) fail(ErrorCode::ModulusMismatch, "polynomial is over a different field");
  if (!is_irreducible(poly))
    fail(ErrorCode::ReduciblePolynomial, "defining polynomial " + poly.to_string() + " is not irreducible");
  const PrimeField& f = poly.field();
  const Polynomial modulus = poly.monic();
  const std::size_t d = static_cast<std::size_t>(modulus.degree());
  const std::size_t dim = n * n * d;

  // T^s T^t reduced mod the defining polynomial
  std::vector<Polynomial> powers;
  for (std::size_t k = 0; k + 1 < 2 * d; ++k) powers.push_back(Polynomial::monomial(f, k) % modulus);

  auto index = [&](std::size_t a, std::size_t b, std::size_t t) { return (a * n + b) * d + t; };
  Vec sc(dim * dim * dim, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t s = 0; s < d; ++s)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t t = 0; t < d; ++t) {
            // E_ab T^s E_bc T^t = E_ac T^{s+t}; products with b != second index vanish
            const std::size_t i = index(a, b, s), j = index(b, c, t);
            const Polynomial& r = powers[s + t];
            for (std::size_t u = 0; u < d; ++u) sc[(i * dim + j) * dim + index(a, c, u)] = r.coefficient(u);
          }
  Vec one(dim, 0);
  for (std::size_t a = 0; a < n; ++a) one[index(a, a, 0)] = 1;
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t t = 0; t < d; ++t)
        labels.push_back("E" + std::to_string(a + 1) + std::to_string(b + 1) + (d > 1 ? "T" + std::to_string(t) : ""));
  return {{{n, d}}, Algebra::create(p, dim, std::move(sc), std::move(one), std::move(labels)), std::nullopt};
}

PlantedDecomposition matrix_algebra(std::size_t n, std::uint32_t p) {
  return matrix_algebra_over_extension(n, p, Polynomial::monomial(PrimeField(p), 1));
}

Polynomial find_irreducible(std::uint32_t p, std::size_t d) {
  const PrimeField f(p);
  if (d == 0) fail(ErrorCode::InvalidInput, "degree must be positive");
  Vec coeffs(d + 1, 0);
  coeffs[d] = 1;
  while (true) {
    Polynomial candidate(f, coeffs);
    if (is_irreducible(candidate)) return candidate;
    // increment the lower coefficients as a base-p counter, highest first
    std::size_t k = 0;
    while (k < d && coeffs[k] == p - 1) coeffs[k++] = 0;
    if (k == d) fail(ErrorCode::InvariantViolation, "no irreducible polynomial found");
    ++coeffs[k];
  }
}

AlgebraPtr direct_sum(const std::vector<AlgebraPtr>& parts) {
  if (parts.empty()) fail(ErrorCode::InvalidInput, "direct sum of no algebras");
  const std::uint32_t p = parts.front()->modulus();
  std::size_t dim = 0;
  for (const auto& a : parts) {
    if (a->modulus() != p) fail(ErrorCode::ModulusMismatch, "direct sum parts have different moduli");
    dim += a->dim();
  }
  Vec sc(dim * dim * dim, 0), one(dim, 0);
  std::vector<std::string> labels;
  std::size_t offset = 0;
  for (std::size_t part = 0; part < parts.size(); ++part) {
    const Algebra& a = *parts[part];
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t k = 0; k < m; ++k)
          sc[((offset + i) * dim + offset + j) * dim + offset + k] = a.constant(i, j, k);
    std::copy(a.one().begin(), a.one().end(), one.begin() + static_cast<std::ptrdiff_t>(offset));
    for (std::size_t i = 0; i < m; ++i)
      labels.push_back(std::to_string(part) + ":" + (a.labels().empty() ? "b" + std::to_string(i) : a.labels()[i]));
    offset += m;
  }
  return Algebra::create_inherited(p, dim, std::move(sc), std::move(one), std::move(labels));
}

PlantedDecomposition direct_sum(const std::vector<PlantedDecomposition>& parts) {
  std::vector<AlgebraPtr> algebras;
  BlockSpec spec;
  for (const auto& part : parts) {
    algebras.push_back(part.presentation);
    spec.insert(spec.end(), part.spec.begin(), part.spec.end());
  }
  std::sort(spec.begin(), spec.end());
  return {std::move(spec), direct_sum(algebras), std::nullopt};
}

AlgebraPtr change_basis(const Algebra& a, const Matrix& s) {
  const PrimeField& f = a.field();
  const std::size_t n = a.dim();
  if (s.rows() != n || s.cols() != n || !(s.field() == f))
    fail(ErrorCode::InvalidInput, "change of basis matrix has the wrong shape");
  const auto s_inv = inverse(s);
  if (!s_inv) fail(ErrorCode::InvalidInput, "change of basis matrix is singular");
  const Matrix st = s.transpose();

  // T[a] = S^T C_a where C_a[b][m] = c[a][b][m], stacked as rows a, columns (j, m)
  Matrix t(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix ca(f, n, n);
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t m = 0; m < n; ++m) ca(b, m) = a.constant(i, b, m);
    const Matrix ta = st * ca;
    std::copy(ta.data().begin(), ta.data().end(), t.row(i).begin());
  }
  // U[i][(j, m)] = sum_a S[a][i] T[a][(j, m)]
  const Matrix u = st * t;
  // new coordinates: rows (i, j), columns k, V = U' S^{-T}
  Matrix flat(f, n * n, n);
  std::copy(u.data().begin(), u.data().end(), flat.data().begin());
  const Matrix v = flat * s_inv->transpose();
  Vec sc(v.data().begin(), v.data().end());
  return Algebra::create_inherited(a.modulus(), n, std::move(sc), s_inv->apply(a.one()));
}

std::pair<AlgebraPtr, Matrix> scramble(const Algebra& a, std::uint64_t seed) {
  const PrimeField& f = a.field();
  const std::size_t n = a.dim();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Residue> coeff(0, f.modulus() - 1);
  for (int draw = 0; draw < 64; ++draw) {
    Matrix s(f, n, n);
    for (auto& x : s.data()) x = coeff(rng);
    if (rank(s) == n) return {change_basis(a, s), std::move(s)};
  }
  fail(ErrorCode::InternalSamplingFailure, "no invertible change of basis in 64 draws");
}

PlantedDecomposition scramble(const PlantedDecomposition& planted, std::uint64_t seed) {
  auto [algebra, s] = scramble(*planted.presentation, seed);
  return {planted.spec, std::move(algebra), std::move(s)};
}

PlantedDecomposition planted(const BlockSpec& spec, std::uint32_t p) {
  std::vector<PlantedDecomposition> parts;
  for (const auto& [n, d] : spec) parts.push_back(matrix_algebra_over_extension(n, p, find_irreducible(p, d)));
  return direct_sum(parts);
}

AlgebraPtr upper_triangular(std::uint32_t p) {
  // E11 = 0, E12 = 1, E22 = 2
  Vec sc(27, 0);
  auto set = [&](std::size_t i, std::size_t j, std::size_t k) { sc[(i * 3 + j) * 3 + k] = 1; };
  set(0, 0, 0);
  set(0, 1, 1);
  set(1, 2, 1);
  set(2, 2, 2);
  return Algebra::create(p, 3, std::move(sc), std::nullopt, {"E11", "E12", "E22"});
}

}  // namespace wedderburn
