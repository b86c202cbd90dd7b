#include "billiard/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "CLI11.hpp"

#include "billiard/json_io.hpp"
#include "billiard/leonard.hpp"
#include "billiard/polycba.hpp"
#include "billiard/render.hpp"

namespace billiard::cli {

namespace {

const std::vector<std::string> kVerbs = {"build",         "verify",          "labels", "values", "leonard-verify",
                                         "leonard-split", "leonard-borders", "qracah", "render"};

struct Options {
  std::string verb;
  std::string input;
  std::string format;
  std::string out_path;
  std::string field;
  std::string seed_path;
  std::string show = "vec";
};

struct Outcome {
  Json json;
  std::string text;
  int code = kSuccess;
};

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Schema, path + " is not valid JSON: " + e.what());
  }
}

int verdict_code(const Report& report) { return report.passed() ? kSuccess : kVerificationFailed; }

class Runner {
 public:
  explicit Runner(const Options& opts) : opts_(opts) {
    if (!opts.field.empty()) field_override_ = FieldSpec::parse(opts.field);
  }

  Outcome run(const Json& doc) {
    const std::string& v = opts_.verb;
    if (v == "build") return build(doc);
    if (v == "verify") return verify(doc);
    if (v == "labels") return labels(doc);
    if (v == "values") return values(doc);
    if (v == "leonard-verify") return leonard_verify(doc);
    if (v == "leonard-split") return leonard_split(doc);
    if (v == "leonard-borders") return leonard_borders(doc);
    if (v == "qracah") return qracah(doc);
    return render(doc);
  }

 private:
  static bool is_array_doc(const Json& doc) { return doc.is_object() && doc.contains("array"); }

  void require_map_doc(const Json& doc) const {
    if (is_array_doc(doc)) throw Error(ErrorKind::Schema, opts_.verb + " expects a map document (A, theta), not an array");
    if (!doc.is_object() || !doc.contains("A") || !doc.contains("theta"))
      throw Error(ErrorKind::Schema, opts_.verb + " expects a map document with \"A\" and \"theta\"");
  }

  std::optional<Vector> seed_from_flag(const FieldSpec& field) const {
    if (opts_.seed_path.empty()) return std::nullopt;
    const Json doc = load_json(opts_.seed_path);
    if (doc.is_array()) return vector_from_json(doc, field);
    const FieldSpec seed_field = resolve_field(doc, field);
    if (seed_field != field) {
      throw Error(ErrorKind::FieldMismatch, "seed vector is over " + seed_field.to_string() + ", map is over " +
                                                field.to_string());
    }
    if (!doc.is_object() || !doc.contains("v")) throw Error(ErrorKind::Schema, "seed file must be an array or {\"v\": [...]}");
    return vector_from_json(doc.at("v"), field);
  }

  PolyCBA build_from_map(const Json& doc) const {
    require_map_doc(doc);
    const MapDocument m = map_from_json(doc, field_override_);
    const EigStructure eig = primitive_idempotents(m.a, m.theta);
    Vector seed = default_seed(eig);
    if (auto flag = seed_from_flag(m.field)) {
      seed = std::move(*flag);
    } else if (m.seed) {
      seed = *m.seed;
    }
    return build_poly_cba(eig, seed);
  }

  static std::string render_vectors(const ConcreteArray& array) {
    return render_triangle(array.diameter(), [&](const Location& loc) { return array.at(loc).to_string(); });
  }

  Outcome build(const Json& doc) {
    const PolyCBA cba = build_from_map(doc);
    std::ostringstream text;
    text << "d = " << cba.diameter() << ", field " << cba.field() << ", theta = "
         << Vector({cba.theta().begin(), cba.theta().end()}, cba.field()) << ", v = " << cba.seed() << "\n"
         << render_vectors(cba.array());
    return {to_json(cba), text.str(), kSuccess};
  }

  Outcome verify(const Json& doc) {
    const Report report =
        is_array_doc(doc) ? verify_cba(array_from_json(doc, field_override_).array) : verify_cba(build_from_map(doc));
    return {to_json(report), render_report(report), verdict_code(report)};
  }

  Outcome labels(const Json& doc) {
    std::vector<Scalar> theta;
    ConcreteArray array;
    if (is_array_doc(doc)) {
      ArrayDocument a = array_from_json(doc, field_override_);
      if (a.theta.size() != a.d + 1) throw Error(ErrorKind::Schema, "array document needs theta_0..theta_d for labels");
      theta = std::move(a.theta);
      array = std::move(a.array);
    } else {
      const PolyCBA cba = build_from_map(doc);
      theta.assign(cba.theta().begin(), cba.theta().end());
      array = cba.array();
    }
    const EdgeLabeling labeling = edge_labels(theta);
    Report report = edge_labeling_axioms(labeling);
    report.append(dependency_check(array, labeling));

    std::ostringstream text;
    for (const auto& [edge, value] : labeling.labels) {
      text << edge.first.to_string() << " -> " << edge.second.to_string() << "  " << value << "\n";
    }
    text << render_report(report);
    return {Json{{"d", labeling.d}, {"labels", to_json(labeling)}, {"report", to_json(report)}}, text.str(),
            verdict_code(report)};
  }

  std::vector<Scalar> theta_of(const Json& doc) const {
    if (is_array_doc(doc)) {
      ArrayDocument a = array_from_json(doc, field_override_);
      if (a.theta.size() != a.d + 1) throw Error(ErrorKind::Schema, "array document needs theta_0..theta_d");
      return a.theta;
    }
    const PolyCBA cba = build_from_map(doc);
    return {cba.theta().begin(), cba.theta().end()};
  }

  static std::string render_values(const ValueFunction& vf) {
    if (vf.d < 2) return "(value function is empty for d < 2)\n";
    return render_triangle(vf.d - 2, [&](const Location& loc) { return vf.values.at(loc).to_string(); });
  }

  Outcome values(const Json& doc) {
    const std::vector<Scalar> theta = theta_of(doc);
    const ValueFunction computed = value_function(edge_labels(theta));
    const ValueFunction expected = closed_form_value_function(theta);
    const Report report = compare_value_functions(computed, expected);
    return {Json{{"d", computed.d},
                 {"values", to_json(computed)},
                 {"closed_form", to_json(expected)},
                 {"report", to_json(report)}},
            render_values(computed) + render_report(report), verdict_code(report)};
  }

  // Tridiagonality report, plus the verified system when every check holds.
  std::pair<Report, std::optional<LeonardSystem>> leonard(const Json& doc) const {
    const LeonardCandidate c = leonard_from_json(doc, field_override_);
    Report report = check_leonard_system(c);
    if (!report.passed()) return {report, std::nullopt};
    return {report, verify_leonard_system(c)};
  }

  Outcome leonard_verify(const Json& doc) {
    const auto [report, ls] = leonard(doc);
    return {to_json(report), render_report(report), verdict_code(report)};
  }

  Outcome leonard_split(const Json& doc) {
    auto [report, ls] = leonard(doc);
    if (!ls) return {Json{{"report", to_json(report)}}, render_report(report), kVerificationFailed};
    const SplitDecomposition split = split_decomposition(*ls);
    Report checks = check_split_decomposition(*ls, split);
    Json spanners = Json::array();
    std::ostringstream text;
    for (std::size_t i = 0; i < split.spanners.size(); ++i) {
      spanners.push_back(to_json(split.spanners[i]));
      text << "U_" << i << " = span " << split.spanners[i] << "\n";
    }
    text << render_report(checks);
    return {Json{{"spanners", spanners}, {"report", to_json(checks)}}, text.str(), verdict_code(checks)};
  }

  Outcome leonard_borders(const Json& doc) {
    auto [report, ls] = leonard(doc);
    if (!ls) return {Json{{"report", to_json(report)}}, render_report(report), kVerificationFailed};
    const Vector seed = seed_from_flag(ls->field()).value_or(star_seed(*ls));
    const Report borders = border_correspondence(*ls, seed);
    return {Json{{"seed", to_json(seed)}, {"report", to_json(borders)}}, render_report(borders), verdict_code(borders)};
  }

  Outcome qracah(const Json& doc) {
    const QRacahDocument q = qracah_from_json(doc, field_override_);
    const QRacahParams params(q.q, q.a, q.b, q.c, q.d);
    const std::vector<Scalar> theta = qracah_eigenvalues(params);
    const ValueFunction formula = qracah_value_function(params);
    const ValueFunction generic = closed_form_value_function(theta);
    const Report report = compare_value_functions(formula, generic);
    std::ostringstream text;
    text << "theta = " << Vector(theta, params.field()) << "\n" << render_values(formula) << render_report(report);
    return {Json{{"params", to_json(params)},
                 {"theta", to_json(theta)},
                 {"values", to_json(formula)},
                 {"closed_form", to_json(generic)},
                 {"report", to_json(report)}},
            text.str(), verdict_code(report)};
  }

  Outcome render(const Json& doc) {
    std::string text;
    if (opts_.show == "value") {
      text = render_values(value_function(edge_labels(theta_of(doc))));
    } else if (is_array_doc(doc)) {
      const ArrayDocument a = array_from_json(doc, field_override_);
      text = opts_.show == "loc" ? render_triangle(a.d, compact_label) : render_vectors(a.array);
    } else {
      const PolyCBA cba = build_from_map(doc);
      text = opts_.show == "loc" ? render_triangle(cba.diameter(), compact_label) : render_vectors(cba.array());
    }
    return {Json{{"render", text}}, text, kSuccess};
  }

  const Options& opts_;
  std::optional<FieldSpec> field_override_;
};

void emit_error(const Options& opts, std::ostream& out, std::ostream& err, std::string_view kind,
                const std::string& message) {
  err << "error [" << kind << "]: " << message << "\n";
  if (opts.format == "json") out << Json{{"error", {{"kind", kind}, {"message", message}}}}.dump(2) << "\n";
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Exact construction and verification of billiard arrays over Q and GF(p)", "billiard"};
  app.add_option("verb", opts.verb, "build | verify | labels | values | leonard-verify | leonard-split | "
                                    "leonard-borders | qracah | render")
      ->required()
      ->check(CLI::IsMember(kVerbs));
  app.add_option("input", opts.input, "input JSON document")->required();
  app.add_option("--field", opts.field, "rational | gfp:<p> (overrides or supplies the input's field)");
  app.add_option("--format", opts.format, "json | text (render defaults to text)")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", opts.out_path, "write output here instead of stdout");
  app.add_option("--seed-vector", opts.seed_path, "JSON file holding an explicit seed vector v");
  app.add_option("--show", opts.show, "render: vec | loc | value")->check(CLI::IsMember({"vec", "loc", "value"}));

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kInputError;
  }
  if (opts.format.empty()) opts.format = opts.verb == "render" ? "text" : "json";

  Outcome outcome;
  try {
    Runner runner(opts);
    outcome = runner.run(load_json(opts.input));
  } catch (const Error& e) {
    emit_error(opts, out, err, to_string(e.kind()), e.what());
    return kInputError;
  } catch (const Json::exception& e) {
    emit_error(opts, out, err, "schema", e.what());
    return kInputError;
  }

  const std::string payload = opts.format == "json" ? outcome.json.dump(2) + "\n" : outcome.text;
  if (opts.out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(opts.out_path);
    if (!file || !(file << payload)) {
      err << "error [io]: cannot write " << opts.out_path << "\n";
      return kInputError;
    }
  }
  return outcome.code;
}

}  // namespace billiard::cli
