#include "billiard/json_io.hpp"

#include <algorithm>

namespace billiard {

namespace {

[[noreturn]] void schema(const std::string& message) { throw Error(ErrorKind::Schema, message); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) schema("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) schema(std::string("missing key \"") + key + "\"");
  return *it;
}

unsigned natural_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) schema(std::string(what) + " must be a natural number");
  return j.get<unsigned>();
}

}  // namespace

Json to_json(const FieldSpec& field) {
  if (field.is_rational()) return Json{{"kind", "rational"}};
  return Json{{"kind", "gfp"}, {"p", field.modulus()}};
}

FieldSpec field_from_json(const Json& j) {
  if (j.is_string()) return FieldSpec::parse(j.get<std::string>());
  const Json& kind = member(j, "kind");
  if (!kind.is_string()) schema("field kind must be a string");
  const auto k = kind.get<std::string>();
  if (k == "rational") return FieldSpec::rational();
  if (k == "gfp") {
    const Json& p = member(j, "p");
    if (!p.is_number_integer() || (!p.is_number_unsigned() && p.get<long long>() <= 0))
      schema("field modulus must be a positive integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  schema("unknown field kind \"" + k + "\"");
}

FieldSpec resolve_field(const Json& doc, const std::optional<FieldSpec>& override_field) {
  std::optional<FieldSpec> own;
  if (doc.is_object() && doc.contains("field")) own = field_from_json(doc.at("field"));
  if (own && override_field && *own != *override_field) {
    throw Error(ErrorKind::FieldMismatch,
                "input declares field " + own->to_string() + " but " + override_field->to_string() + " was requested");
  }
  if (own) return *own;
  if (override_field) return *override_field;
  return FieldSpec::rational();
}

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j, const FieldSpec& field) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>(), field);
  if (j.is_number_integer()) return Scalar(field, mpz_class(j.dump()));
  schema("scalar must be a string or an integer, got " + j.dump());
}

Json to_json(std::span<const Scalar> scalars) {
  Json out = Json::array();
  for (const Scalar& s : scalars) out.push_back(to_json(s));
  return out;
}

std::vector<Scalar> scalars_from_json(const Json& j, const FieldSpec& field) {
  if (!j.is_array()) schema("expected an array of scalars");
  std::vector<Scalar> out;
  for (const Json& e : j) out.push_back(scalar_from_json(e, field));
  return out;
}

Json to_json(const Vector& v) { return to_json(v.entries()); }

Vector vector_from_json(const Json& j, const FieldSpec& field) { return Vector(scalars_from_json(j, field), field); }

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j, const FieldSpec& field) {
  if (!j.is_array()) schema("matrix must be an array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (const Json& row : j) rows.push_back(scalars_from_json(row, field));
  return Matrix::from_rows(rows, field);
}

Json to_json(const Location& loc) { return Json::array({loc.r, loc.s, loc.t}); }

Location location_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) schema("location must be [r, s, t]");
  return {natural_from_json(j[0], "r"), natural_from_json(j[1], "s"), natural_from_json(j[2], "t")};
}

Json to_json(const Clique& clique) {
  Json members = Json::array();
  for (const Location& loc : clique.members) members.push_back(to_json(loc));
  return Json{{"color", clique.color == CliqueColor::Black ? "black" : "white"}, {"members", members}};
}

Json to_json(const CheckResult& c) {
  return Json{{"check", c.check}, {"subject", c.subject}, {"pass", c.pass}, {"detail", c.detail}};
}

Json to_json(const Report& report) {
  Json checks = Json::array();
  for (const CheckResult& c : report.checks()) checks.push_back(to_json(c));
  return Json{{"verdict", report.passed() ? "PASS" : "FAIL"}, {"checks", checks}};
}

Report report_from_json(const Json& j) {
  Report report;
  const Json& checks = member(j, "checks");
  if (!checks.is_array()) schema("\"checks\" must be an array");
  for (const Json& c : checks) {
    report.add(member(c, "check").get<std::string>(), member(c, "subject").get<std::string>(),
               member(c, "pass").get<bool>(), c.value("detail", std::string{}));
  }
  return report;
}

Json to_json(const EdgeLabeling& labels) {
  Json out = Json::array();
  for (const auto& [edge, value] : labels.labels) {
    out.push_back(Json{{"from", to_json(edge.first)}, {"to", to_json(edge.second)}, {"label", to_json(value)}});
  }
  return out;
}

Json to_json(const ValueFunction& values) {
  Json out = Json::array();
  for (const auto& [loc, value] : values.values) out.push_back(Json{{"loc", to_json(loc)}, {"value", to_json(value)}});
  return out;
}

MapDocument map_from_json(const Json& j, const std::optional<FieldSpec>& override_field) {
  MapDocument doc;
  doc.field = resolve_field(j, override_field);
  doc.a = matrix_from_json(member(j, "A"), doc.field);
  doc.theta = scalars_from_json(member(j, "theta"), doc.field);
  if (j.contains("v")) doc.seed = vector_from_json(j.at("v"), doc.field);
  return doc;
}

Json to_json(const PolyCBA& cba) {
  std::vector<Location> order = locations(cba.diameter());
  std::sort(order.begin(), order.end());
  Json array = Json::array();
  for (const Location& loc : order) array.push_back(Json{{"loc", to_json(loc)}, {"vec", to_json(cba.at(loc))}});
  return Json{{"d", cba.diameter()},      {"field", to_json(cba.field())},
              {"theta", to_json(cba.theta())}, {"A", to_json(cba.eig().matrix())},
              {"v", to_json(cba.seed())}, {"array", array}};
}

ArrayDocument array_from_json(const Json& j, const std::optional<FieldSpec>& override_field) {
  ArrayDocument doc;
  doc.field = resolve_field(j, override_field);
  doc.d = natural_from_json(member(j, "d"), "d");
  if (j.contains("theta")) doc.theta = scalars_from_json(j.at("theta"), doc.field);
  if (j.contains("A")) doc.a = matrix_from_json(j.at("A"), doc.field);
  if (j.contains("v")) doc.seed = vector_from_json(j.at("v"), doc.field);

  const Json& entries = member(j, "array");
  if (!entries.is_array()) schema("\"array\" must be an array");
  std::vector<std::optional<Vector>> slots(location_count(doc.d));
  for (const Json& entry : entries) {
    const Location loc = location_from_json(member(entry, "loc"));
    if (loc.diameter() != doc.d) schema("location " + loc.to_string() + " is not in Delta_" + std::to_string(doc.d));
    auto& slot = slots[picture_index(loc)];
    if (slot) schema("location " + loc.to_string() + " appears twice");
    slot = vector_from_json(member(entry, "vec"), doc.field);
  }
  std::vector<Vector> vectors;
  for (std::size_t k = 0; k < slots.size(); ++k) {
    if (!slots[k]) schema("array is missing location " + locations(doc.d)[k].to_string());
    vectors.push_back(std::move(*slots[k]));
  }
  doc.array = ConcreteArray(doc.d, doc.field, std::move(vectors));
  return doc;
}

Json to_json(const LeonardCandidate& c, const FieldSpec& field) {
  return Json{{"field", to_json(field)},
              {"A", to_json(c.a)},
              {"theta", to_json(c.theta)},
              {"Astar", to_json(c.a_star)},
              {"theta_star", to_json(c.theta_star)}};
}

LeonardCandidate leonard_from_json(const Json& j, const std::optional<FieldSpec>& override_field) {
  const FieldSpec field = resolve_field(j, override_field);
  return {matrix_from_json(member(j, "A"), field), scalars_from_json(member(j, "theta"), field),
          matrix_from_json(member(j, "Astar"), field), scalars_from_json(member(j, "theta_star"), field)};
}

QRacahDocument qracah_from_json(const Json& j, const std::optional<FieldSpec>& override_field) {
  QRacahDocument doc;
  doc.field = resolve_field(j, override_field);
  doc.q = scalar_from_json(member(j, "q"), doc.field);
  doc.a = scalar_from_json(member(j, "a"), doc.field);
  doc.b = scalar_from_json(member(j, "b"), doc.field);
  doc.c = scalar_from_json(member(j, "c"), doc.field);
  doc.d = natural_from_json(member(j, "d"), "d");
  return doc;
}

Json to_json(const QRacahParams& p) {
  return Json{{"q", to_json(p.q())}, {"a", to_json(p.a())}, {"b", to_json(p.b())},
              {"c", to_json(p.c())}, {"d", p.d()},         {"field", to_json(p.field())}};
}

}  // namespace billiard
