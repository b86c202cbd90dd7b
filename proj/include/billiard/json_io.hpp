#pragma once

// JSON encoding of fields, scalars, matrices, arrays, reports and the input
// documents read by the CLI. Scalars are always written as strings ("-3/7")
// so that no precision is lost; integers are also accepted on input.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "billiard/leonard.hpp"
#include "billiard/linalg.hpp"
#include "billiard/polycba.hpp"
#include "billiard/report.hpp"
#include "billiard/simplex.hpp"

namespace billiard {

using Json = nlohmann::ordered_json;

Json to_json(const FieldSpec& field);
FieldSpec field_from_json(const Json& j);

// The field of a document: the document's own "field" entry, the override,
// or Q if neither is present. Both present and different is FieldMismatch.
FieldSpec resolve_field(const Json& doc, const std::optional<FieldSpec>& override_field);

Json to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const FieldSpec& field);
Json to_json(std::span<const Scalar> scalars);
std::vector<Scalar> scalars_from_json(const Json& j, const FieldSpec& field);

Json to_json(const Vector& v);
Vector vector_from_json(const Json& j, const FieldSpec& field);
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const FieldSpec& field);

Json to_json(const Location& loc);
Location location_from_json(const Json& j);
Json to_json(const Clique& clique);

Json to_json(const CheckResult& c);
// {"verdict": "PASS"|"FAIL", "checks": [{"check", "subject", "pass", "detail"}]}
Json to_json(const Report& report);
Report report_from_json(const Json& j);

// [{"from": [r,s,t], "to": [r,s,t], "label": "..."}], lexicographic order.
Json to_json(const EdgeLabeling& labels);
// [{"loc": [r,s,t], "value": "..."}], lexicographic order.
Json to_json(const ValueFunction& values);

// {"field": .., "A": [[..]], "theta": [..], "v": [..]?}
struct MapDocument {
  FieldSpec field;
  Matrix a;
  std::vector<Scalar> theta;
  std::optional<Vector> seed;
};
MapDocument map_from_json(const Json& j, const std::optional<FieldSpec>& override_field = std::nullopt);

// {"d", "field", "theta", "A", "v", "array": [{"loc": [r,s,t], "vec": [..]}]},
// array entries in lexicographic location order.
Json to_json(const PolyCBA& cba);

struct ArrayDocument {
  unsigned d = 0;
  FieldSpec field;
  std::vector<Scalar> theta;
  std::optional<Matrix> a;
  std::optional<Vector> seed;
  ConcreteArray array;
};
ArrayDocument array_from_json(const Json& j, const std::optional<FieldSpec>& override_field = std::nullopt);

// {"field", "A", "theta", "Astar", "theta_star"}
Json to_json(const LeonardCandidate& c, const FieldSpec& field);
LeonardCandidate leonard_from_json(const Json& j, const std::optional<FieldSpec>& override_field = std::nullopt);

// {"q", "a", "b", "c", "d", "field"?}
struct QRacahDocument {
  FieldSpec field;
  Scalar q, a, b, c;
  unsigned d = 0;
};
QRacahDocument qracah_from_json(const Json& j, const std::optional<FieldSpec>& override_field = std::nullopt);
Json to_json(const QRacahParams& p);

}  // namespace billiard
