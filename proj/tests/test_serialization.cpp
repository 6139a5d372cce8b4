#include "doctest.h"
#include "wedderburn/decomposition.hpp"
#include "wedderburn/generators.hpp"
#include "wedderburn/serialization.hpp"

using namespace wedderburn;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("algebra documents round-trip") {
  const auto a = scramble(planted({{2, 1}, {1, 2}}, 5), 4).presentation;
  const Json doc = algebra_to_json(*a);
  CHECK(doc["structure_constants"].size() == a->dim());
  CHECK(doc["structure_constants"][0].size() == a->dim());
  const auto back = algebra_from_json(parse_json(dump(doc)));
  CHECK(back->same_presentation(*a));
  CHECK(back->one() == a->one());
  CHECK(dump(algebra_to_json(*back)) == dump(doc));
}

TEST_CASE("malformed algebra documents") {
  const Json good = algebra_to_json(*matrix_algebra(2, 5).presentation);
  auto with = [&](const char* key, Json value) {
    Json d = good;
    d[key] = std::move(value);
    return d;
  };
  CHECK(code_of([] { parse_json("{not json"); }) == ErrorCode::InvalidInput);
  CHECK(code_of([] { algebra_from_json(Json::array()); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { algebra_from_json(with("dim", 3)); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { algebra_from_json(with("p", "five")); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { algebra_from_json(with("p", 6)); }) == ErrorCode::NotPrime);
  CHECK(code_of([&] { algebra_from_json(with("identity", Json::array({1, 0}))); }) == ErrorCode::InvalidInput);
  CHECK(code_of([&] { algebra_from_json(with("labels", Json::array({1, 2, 3, 4}))); }) == ErrorCode::InvalidInput);
  Json negative = good;
  negative["structure_constants"][0][0][0] = -1;
  CHECK(code_of([&] { algebra_from_json(negative); }) == ErrorCode::InvalidInput);
  Json big = good;
  big["structure_constants"][0][0][0] = 5;
  CHECK(code_of([&] { algebra_from_json(big); }) == ErrorCode::InvalidInput);
  Json no_id = good;
  no_id.erase("identity");
  CHECK(algebra_from_json(no_id)->one() == Vec{1, 0, 0, 1});
}

TEST_CASE("Cayley documents") {
  const CayleyTable t = named_group("Q8");
  const CayleyTable back = cayley_from_json(parse_json(dump(cayley_to_json(t))));
  CHECK(back.table == t.table);
  CHECK(code_of([] { cayley_from_json(parse_json(R"({"order": 2, "identity": 0, "table": [[0, 1], [1, 1]]})")); }) ==
        ErrorCode::InvalidCayley);
  CHECK(code_of([] { cayley_from_json(parse_json(R"({"order": 2, "table": [[0, 1], [1, 0]]})")); }) ==
        ErrorCode::InvalidInput);
}

TEST_CASE("report documents round-trip and re-verify") {
  const auto a = scramble(planted({{1, 1}, {2, 1}, {1, 2}}, 7), 8).presentation;
  const DecompositionResult r = full_isomorphism(require_semisimple(a), 3);
  const DecompositionReport report = make_report(r, *a);
  const VerificationReport v = verify_isomorphism(a, report);
  const Json doc = report_to_json(report, &v);
  for (const char* key : {"blocks", "iso_matrix", "iso_inverse", "layout", "verification", "seed", "p", "dim"})
    CHECK(doc.contains(key));
  for (const char* key : {"unit", "multiplicative", "bijective", "orthogonality"})
    CHECK(doc["verification"][key] == true);
  for (const char* key : {"n", "division_degree", "central_idempotent", "representative_idempotent",
                          "connecting_a", "connecting_b", "matrix_units", "division_basis"})
    CHECK(doc["blocks"][0].contains(key));

  const DecompositionReport back = report_from_json(parse_json(dump(doc)));
  CHECK(verify_isomorphism(a, back).passed());
  CHECK(dump(report_to_json(back, &v)) == dump(doc));

  const VerificationReport fast = verify_isomorphism(a, report, false);
  CHECK(report_to_json(report, &fast)["verification"]["multiplicative"].is_null());

  Json bad_layout = doc;
  bad_layout["layout"][0]["row"] = 7;
  CHECK(code_of([&] { report_from_json(bad_layout); }) == ErrorCode::InvalidInput);
  Json missing = doc;
  missing["blocks"][0].erase("matrix_units");
  CHECK(code_of([&] { report_from_json(missing); }) == ErrorCode::InvalidInput);
  Json short_units = doc;
  short_units["blocks"][0]["matrix_units"].erase(0);
  CHECK(code_of([&] { report_from_json(short_units); }) == ErrorCode::InvalidInput);
}
