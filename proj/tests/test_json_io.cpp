#include "doctest.h"

#include <fstream>
#include <random>

#include "billiard/json_io.hpp"
#include "billiard/leonard.hpp"
#include "support/generators.hpp"

using namespace billiard;

namespace {

const FieldSpec Q = FieldSpec::rational();

Json fixture(const std::string& name) {
  std::ifstream in(std::string(BILLIARD_FIXTURES) + "/" + name);
  REQUIRE(in.good());
  return Json::parse(in);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

}  // namespace

TEST_CASE("scalars serialize as strings") {
  CHECK(to_json(Scalar::parse("-3/7", Q)) == Json("-3/7"));
  CHECK(scalar_from_json(Json("6/4"), Q) == Scalar::parse("3/2", Q));
  CHECK(scalar_from_json(Json(12), Q) == Scalar(Q, 12L));
  CHECK(scalar_from_json(Json("-1"), FieldSpec::prime(7)) == Scalar(FieldSpec::prime(7), 6L));
  CHECK(kind_of([] { scalar_from_json(Json(1.5), Q); }) == ErrorKind::Schema);
  CHECK(kind_of([] { scalar_from_json(Json("x"), Q); }) == ErrorKind::Parse);
  const std::string big = "123456789012345678901234567891/1000";
  CHECK(to_json(scalar_from_json(Json(big), Q)) == Json(big));
}

TEST_CASE("field specs") {
  CHECK(to_json(Q) == Json{{"kind", "rational"}});
  CHECK(to_json(FieldSpec::prime(101)) == Json{{"kind", "gfp"}, {"p", 101}});
  CHECK(field_from_json(to_json(FieldSpec::prime(101))) == FieldSpec::prime(101));
  CHECK(field_from_json(Json("gfp:13")) == FieldSpec::prime(13));
  CHECK(kind_of([] { field_from_json(Json{{"kind", "real"}}); }) == ErrorKind::Schema);
  CHECK(kind_of([] { field_from_json(Json{{"kind", "gfp"}, {"p", 12}}); }) == ErrorKind::InvalidField);

  const Json doc = {{"field", {{"kind", "rational"}}}};
  CHECK(resolve_field(doc, std::nullopt) == Q);
  CHECK(resolve_field(doc, Q) == Q);
  CHECK(resolve_field(Json::object(), FieldSpec::prime(7)) == FieldSpec::prime(7));
  CHECK(resolve_field(Json::object(), std::nullopt) == Q);
  CHECK(kind_of([&] { resolve_field(doc, FieldSpec::prime(7)); }) == ErrorKind::FieldMismatch);
}

TEST_CASE("vectors, matrices and locations") {
  const Matrix m = Matrix::from_ints({{1, -2}, {0, 3}}, Q);
  CHECK(matrix_from_json(to_json(m), Q) == m);
  CHECK(kind_of([] { matrix_from_json(Json::array({Json::array({"1", "2"}), Json::array({"3"})}), Q); }) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { matrix_from_json(Json("nope"), Q); }) == ErrorKind::Schema);
  CHECK(to_json(Location{1, 0, 2}) == Json::array({1, 0, 2}));
  CHECK(location_from_json(Json::array({1, 0, 2})) == Location{1, 0, 2});
  CHECK(kind_of([] { location_from_json(Json::array({1, 0})); }) == ErrorKind::Schema);
  CHECK(kind_of([] { location_from_json(Json::array({1, -1, 2})); }) == ErrorKind::Schema);
  const Json clique = to_json(black_cliques(1).front());
  CHECK(clique["color"] == "black");
  CHECK(clique["members"][1] == Json::array({1, 0, 0}));
}

TEST_CASE("map documents") {
  const MapDocument doc = map_from_json(fixture("diag_d2.json"));
  CHECK(doc.field == Q);
  CHECK(doc.a == Matrix::diagonal(std::vector<Scalar>{Scalar(Q, 0L), Scalar(Q, 1L), Scalar(Q, 2L)}, Q));
  REQUIRE(doc.seed.has_value());
  CHECK(*doc.seed == Vector::from_ints({1, 1, 1}, Q));
  Json missing = fixture("diag_d2.json");
  missing.erase("theta");
  CHECK(kind_of([&] { map_from_json(missing); }) == ErrorKind::Schema);
}

TEST_CASE("array documents reject malformed arrays") {
  const Json good = fixture("diag_d2_array.json");
  const ArrayDocument doc = array_from_json(good);
  CHECK(doc.d == 2);
  CHECK(doc.array.at({1, 1, 0}) == Vector::from_ints({-2, -1, 0}, Q));

  Json dup = good;
  dup["array"][1]["loc"] = dup["array"][0]["loc"];
  CHECK(kind_of([&] { array_from_json(dup); }) == ErrorKind::Schema);
  Json short_array = good;
  short_array["array"].erase(0);
  CHECK(kind_of([&] { array_from_json(short_array); }) == ErrorKind::Schema);
  Json foreign = good;
  foreign["array"][0]["loc"] = Json::array({3, 0, 0});
  CHECK(kind_of([&] { array_from_json(foreign); }) == ErrorKind::Schema);
  Json ragged = good;
  ragged["array"][0]["vec"] = Json::array({"1"});
  CHECK(kind_of([&] { array_from_json(ragged); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("build, export, re-import and verify gives identical reports") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const unsigned d = static_cast<unsigned>(testing::uniform(rng, 0, 5));
    const FieldSpec field = trial % 3 == 0 ? FieldSpec::prime(1000003) : Q;
    const auto map = testing::random_multiplicity_free(rng, d, field);
    const EigStructure eig = primitive_idempotents(map.a, map.theta);
    const PolyCBA cba = build_poly_cba(eig, testing::random_generic_seed(rng, eig));
    const Report original = verify_cba(cba);

    const std::string text = to_json(cba).dump();
    const ArrayDocument doc = array_from_json(Json::parse(text));
    CHECK(doc.array == cba.array());
    CHECK(doc.field == field);
    CHECK(doc.theta == std::vector<Scalar>(cba.theta().begin(), cba.theta().end()));
    REQUIRE(doc.a.has_value());
    CHECK(*doc.a == map.a);
    CHECK(verify_cba(doc.array) == original);

    const Json report_json = to_json(original);
    CHECK(report_from_json(Json::parse(report_json.dump())) == original);
    CHECK(report_json["verdict"] == (original.passed() ? "PASS" : "FAIL"));
  }
}

TEST_CASE("export uses lexicographic location order") {
  const MapDocument m = map_from_json(fixture("diag_d2.json"));
  const Json out = to_json(build_poly_cba(primitive_idempotents(m.a, m.theta), *m.seed));
  std::vector<Location> seen;
  for (const Json& e : out["array"]) seen.push_back(location_from_json(e["loc"]));
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(seen.size() == 6);
  CHECK(out["d"] == 2);
  CHECK(out["theta"] == Json::array({"0", "1", "2"}));
}

TEST_CASE("Leonard and q-Racah documents") {
  const LeonardCandidate c = leonard_from_json(fixture("krawtchouk_d2.json"));
  const LeonardCandidate k = krawtchouk(2);
  CHECK(c.a == k.a);
  CHECK(c.a_star == k.a_star);
  CHECK(c.theta == k.theta);
  const LeonardCandidate back = leonard_from_json(to_json(k, Q));
  CHECK(back.theta_star == k.theta_star);

  const QRacahDocument q = qracah_from_json(fixture("qracah_ok.json"));
  CHECK(q.d == 2);
  CHECK(q.q == Scalar(Q, 2L));
  const QRacahParams p(q.q, q.a, q.b, q.c, q.d);
  const QRacahDocument again = qracah_from_json(to_json(p));
  CHECK(again.c == p.c());
  CHECK(again.field == Q);
  Json no_d = fixture("qracah_ok.json");
  no_d.erase("d");
  CHECK(kind_of([&] { qracah_from_json(no_d); }) == ErrorKind::Schema);
}

TEST_CASE("labels and values serialize per ordered pair and location") {
  const auto theta = std::vector<Scalar>{Scalar(Q, 0L), Scalar(Q, 1L), Scalar(Q, 2L)};
  const Json labels = to_json(edge_labels(theta));
  CHECK(labels.size() == 18);
  CHECK(labels[0].contains("from"));
  CHECK(labels[0]["label"].is_string());
  const Json values = to_json(value_function(edge_labels(theta)));
  REQUIRE(values.size() == 1);
  CHECK(values[0]["loc"] == Json::array({0, 0, 0}));
  CHECK(values[0]["value"] == "1");
}
