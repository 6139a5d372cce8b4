#include <cctype>
#include <fstream>

#include "doctest.h"
#include "oracles.hpp"
#include "wedderburn/decomposition.hpp"
#include "wedderburn/generators.hpp"
#include "wedderburn/serialization.hpp"

using namespace wedderburn;

TEST_CASE("named groups are valid and match the shipped fixtures") {
  for (const auto& name : named_groups()) {
    const CayleyTable t = named_group(name);
    CHECK_NOTHROW(t.validate());
    std::string lower = name;
    lower[0] = static_cast<char>(std::tolower(lower[0]));
    const CayleyTable shipped = cayley_from_json(read_json_file(std::string(WEDDERBURN_DATA_DIR) + "/" + lower + ".cayley"));
    CHECK(shipped.order == t.order);
    CHECK(shipped.identity == t.identity);
    CHECK(shipped.table == t.table);
  }
  CHECK(oracle::conjugacy_classes(named_group("S3").table, 0) == 3);
  CHECK(oracle::conjugacy_classes(named_group("D4").table, 0) == 5);
  CHECK(oracle::conjugacy_classes(named_group("Q8").table, 0) == 5);
  CHECK_THROWS_AS(named_group("A5"), Error);
}

TEST_CASE("invalid Cayley tables") {
  auto rejects = [](CayleyTable t) {
    try {
      t.validate();
      return false;
    } catch (const Error& e) {
      return e.code() == ErrorCode::InvalidCayley;
    }
  };
  CHECK(rejects({2, 0, {{0, 1}, {1, 1}}}));       // not Latin
  CHECK(rejects({2, 1, {{0, 1}, {1, 0}}}));       // wrong identity
  CHECK(rejects({2, 0, {{0, 1}}}));               // missing row
  CHECK(rejects({3, 0, {{0, 1, 2}, {1, 0, 2}, {2, 2, 0}}}));
  // Latin square with identity that is not associative (order 5 loop)
  CHECK(rejects({5, 0, {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}}));
}

TEST_CASE("group algebra presentation") {
  const auto a = group_algebra(cyclic_group(3), 7);
  CHECK(a->dim() == 3);
  CHECK(a->is_commutative());
  CHECK(a->one() == Vec{1, 0, 0});
  // cyclic convolution: (1 + 2g)(3 + g^2) = 3 + 6g + g^2 + 2 g^3 = 5 + 6g + g^2
  CHECK(a->multiply(Vec{1, 2, 0}, Vec{3, 0, 1}) == Vec{5, 6, 1});
  CHECK(group_algebra(cyclic_group(1), 5)->dim() == 1);
  CHECK_FALSE(group_algebra(named_group("S3"), 5)->is_commutative());
}

TEST_CASE("matrix algebras over extensions") {
  const PrimeField f5(5);
  const auto f25 = matrix_algebra_over_extension(1, 5, Polynomial(f5, {1, 1, 1}));
  CHECK(f25.presentation->dim() == 2);
  CHECK(f25.spec == BlockSpec{{1, 2}});
  const auto m2 = matrix_algebra(2, 7);
  CHECK(m2.presentation->dim() == 4);
  // E12 E21 = E11
  CHECK(m2.presentation->multiply(unit_vector(4, 1), unit_vector(4, 2)) == unit_vector(4, 0));
  try {
    matrix_algebra_over_extension(2, 5, Polynomial(f5, {1, 0, 1}));
    FAIL("T^2 + 1 is reducible over F_5");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ReduciblePolynomial);
  }
  for (std::uint32_t p : {5u, 7u, 97u})
    for (std::size_t d = 1; d <= 3; ++d) {
      const Polynomial g = find_irreducible(p, d);
      CHECK(g.degree() == static_cast<int>(d));
      CHECK(oracle::factor_degrees(oracle::Poly(g.coefficients().begin(), g.coefficients().end()), p) ==
            std::vector<std::size_t>{d});
    }
}

TEST_CASE("direct sums") {
  const auto a = direct_sum({matrix_algebra(2, 5), matrix_algebra_over_extension(1, 5, find_irreducible(5, 2))});
  CHECK(a.presentation->dim() == 6);
  CHECK(a.spec == BlockSpec{{1, 2}, {2, 1}});
  CHECK(a.presentation->one() == Vec{1, 0, 0, 1, 1, 0});
  try {
    direct_sum(std::vector<AlgebraPtr>{matrix_algebra(1, 5).presentation, matrix_algebra(1, 7).presentation});
    FAIL("mixed moduli");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ModulusMismatch);
  }
}

TEST_CASE("scramble and change of basis") {
  const auto base = planted({{2, 1}, {1, 1}}, 7);
  const Matrix id = Matrix::identity(PrimeField(7), 5);
  CHECK(change_basis(*base.presentation, id)->same_presentation(*base.presentation));

  const auto [scrambled, s] = scramble(*base.presentation, 9);
  CHECK(rank(s) == 5);
  // S maps new coordinates to old ones, so S (x' y') = (S x')(S y')
  const Vec x{1, 2, 3, 4, 5}, y{6, 0, 2, 1, 3};
  CHECK(s.apply(scrambled->multiply(x, y)) == base.presentation->multiply(s.apply(x), s.apply(y)));
  CHECK(s.apply(scrambled->one()) == base.presentation->one());
  // the scrambled table still passes the full validator
  CHECK_NOTHROW(Algebra::create(7, 5, scrambled->structure_constants()));
  const auto [again, s2] = scramble(*base.presentation, 9);
  CHECK(again->same_presentation(*scrambled));
  CHECK(s2 == s);
}

TEST_CASE("planted spec recovery across seeds") {
  const auto pd = planted({{1, 1}, {1, 1}, {2, 1}}, 7);
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    const auto sc = scramble(pd, seed);
    const auto r = full_isomorphism(require_semisimple(sc.presentation), seed);
    CHECK(r.block_multiset() == pd.spec);
  }
}
