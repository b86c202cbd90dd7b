#include "billiard/polycba.hpp"

#include <string>

namespace billiard {

namespace {

std::string rank_detail(std::size_t got, std::size_t want) {
  return "rank " + std::to_string(got) + ", expected " + std::to_string(want);
}

unsigned diameter_of(std::span<const Scalar> theta) {
  if (theta.empty()) throw Error(ErrorKind::DimensionMismatch, "empty eigenvalue sequence");
  return static_cast<unsigned>(theta.size() - 1);
}

}  // namespace

// ---------------------------------------------------------------- ConcreteArray

ConcreteArray::ConcreteArray(unsigned d, const FieldSpec& field, std::vector<Vector> vectors)
    : d_(d), field_(field), vectors_(std::move(vectors)) {
  if (vectors_.size() != location_count(d)) {
    throw Error(ErrorKind::DimensionMismatch, "array of diameter " + std::to_string(d) + " needs " +
                                                  std::to_string(location_count(d)) + " vectors, got " +
                                                  std::to_string(vectors_.size()));
  }
  for (const Vector& v : vectors_) {
    if (v.field() != field_) throw Error(ErrorKind::FieldMismatch, "array vector field mismatch");
    if (v.size() != vectors_.front().size()) throw Error(ErrorKind::DimensionMismatch, "array vectors differ in length");
  }
}

const Vector& ConcreteArray::at(const Location& loc) const {
  if (loc.diameter() != d_) {
    throw Error(ErrorKind::DimensionMismatch, "location " + loc.to_string() + " is not in Delta_" + std::to_string(d_));
  }
  return vectors_[picture_index(loc)];
}

ConcreteArray ConcreteArray::with(const Location& loc, Vector replacement) const {
  ConcreteArray out = *this;
  (void)at(loc);
  out.vectors_[picture_index(loc)] = std::move(replacement);
  return ConcreteArray(out.d_, out.field_, std::move(out.vectors_));
}

// ---------------------------------------------------------------- tau / eta

std::vector<Scalar> tau_roots(std::span<const Scalar> theta, unsigned k) {
  const unsigned d = diameter_of(theta);
  if (k > d) throw Error(ErrorKind::DimensionMismatch, "tau_" + std::to_string(k) + " exceeds diameter");
  return {theta.begin(), theta.begin() + k};
}

std::vector<Scalar> eta_roots(std::span<const Scalar> theta, unsigned k) {
  const unsigned d = diameter_of(theta);
  if (k > d) throw Error(ErrorKind::DimensionMismatch, "eta_" + std::to_string(k) + " exceeds diameter");
  std::vector<Scalar> out;
  for (unsigned i = 1; i <= k; ++i) out.push_back(theta[d - i + 1]);
  return out;
}

namespace {

Scalar product_of_differences(const Scalar& x, std::span<const Scalar> roots) {
  Scalar out = Scalar::one(x.field());
  for (const Scalar& root : roots) out *= x - root;
  return out;
}

}  // namespace

Scalar tau_eval(std::span<const Scalar> theta, unsigned k, const Scalar& x) {
  return product_of_differences(x, tau_roots(theta, k));
}

Scalar eta_eval(std::span<const Scalar> theta, unsigned k, const Scalar& x) {
  return product_of_differences(x, eta_roots(theta, k));
}

// ---------------------------------------------------------------- construction

PolyCBA build_poly_cba(const EigStructure& eig, const Vector& v) {
  const FieldSpec& field = eig.field();
  const std::size_t n = eig.matrix().rows();
  if (v.field() != field) throw Error(ErrorKind::FieldMismatch, "seed vector is over " + v.field().to_string());
  if (v.size() != n) {
    throw Error(ErrorKind::DimensionMismatch,
                "seed vector has length " + std::to_string(v.size()) + ", map acts on dimension " + std::to_string(n));
  }

  PolyCBA cba;
  cba.eig_ = eig;
  cba.seed_ = v;
  for (std::size_t i = 0; i < n; ++i) {
    Vector part = eig.idempotent(i) * v;
    if (part.is_zero()) {
      throw Error(ErrorKind::SeedNotGeneric, "E_" + std::to_string(i) + " v = 0 (seed has no theta_" +
                                                 std::to_string(i) + " = " + eig.eigenvalue(i).to_string() +
                                                 " component)");
    }
    cba.seed_parts_.push_back(std::move(part));
  }

  const unsigned d = static_cast<unsigned>(eig.diameter());
  const auto theta = eig.eigenvalues();
  std::vector<Vector> vectors;
  vectors.reserve(location_count(d));
  for (const Location& loc : locations(d)) {
    std::vector<Scalar> roots = eta_roots(theta, loc.r);
    const auto tau = tau_roots(theta, loc.t);
    roots.insert(roots.end(), tau.begin(), tau.end());
    vectors.push_back(poly_apply(eig.matrix(), roots, v));
  }
  cba.array_ = ConcreteArray(d, field, std::move(vectors));
  return cba;
}

Vector default_seed(const EigStructure& eig) {
  Vector v(eig.matrix().rows(), eig.field());
  for (const Matrix& e : eig.idempotents()) v += first_nonzero_column(e);
  return v;
}

// ---------------------------------------------------------------- verification

Report verify_cba(const ConcreteArray& array) {
  Report report;
  const FieldSpec& field = array.field();
  for (const Line& line : maximal_lines(array.diameter())) {
    std::vector<Vector> vs;
    for (const Location& loc : line.members) vs.push_back(array.at(loc));
    const std::size_t r = rank_of(vs, field);
    report.add("line", line.name(), r == vs.size(), rank_detail(r, vs.size()));
  }
  for (const Clique& clique : black_cliques(array.diameter())) {
    const auto& [a, b, c] = clique.members;
    const std::vector<Vector> all = {array.at(a), array.at(b), array.at(c)};
    const std::size_t r = rank_of(all, field);
    std::string detail = rank_detail(r, 2) + "; pair ranks";
    bool pairs_ok = true;
    for (auto [i, j] : {std::pair{0, 1}, std::pair{1, 2}, std::pair{2, 0}}) {
      const std::vector<Vector> pair = {all[i], all[j]};
      const std::size_t pr = rank_of(pair, field);
      pairs_ok = pairs_ok && pr == 2;
      detail += " " + std::to_string(pr);
    }
    report.add("black-clique", a.to_string(), r == 2 && pairs_ok, detail);
  }
  return report;
}

Report black_clique_relation_check(const PolyCBA& cba) {
  Report report;
  const unsigned d = cba.diameter();
  const auto theta = cba.theta();
  const Matrix& a = cba.eig().matrix();
  for (const Clique& clique : black_cliques(d)) {
    const auto& [lambda, mu, nu] = clique.members;
    const Vector& l = cba.at(lambda);
    const Scalar& theta_far = theta[d - lambda.r];
    const Scalar& theta_near = theta[lambda.t];
    const bool mu_ok = cba.at(mu) == a * l - theta_far * l;
    const bool nu_ok = cba.at(nu) == a * l - theta_near * l;
    const bool lambda_ok = l == (theta_near - theta_far).inverse() * (cba.at(mu) - cba.at(nu));
    std::string detail;
    if (!mu_ok) detail += "L_mu != (A - theta_" + std::to_string(d - lambda.r) + ") L_lambda; ";
    if (!nu_ok) detail += "L_nu != (A - theta_" + std::to_string(lambda.t) + ") L_lambda; ";
    if (!lambda_ok) detail += "L_lambda != (L_mu - L_nu)/(theta_t - theta_{d-r}); ";
    report.add("clique-relation", lambda.to_string(), mu_ok && nu_ok && lambda_ok,
               detail.empty() ? "all three identities hold" : detail);
  }
  return report;
}

Report bottom_border_check(const PolyCBA& cba) {
  Report report;
  const unsigned d = cba.diameter();
  const Matrix& a = cba.eig().matrix();
  for (unsigned i = 0; i <= d; ++i) {
    const Location loc{d - i, 0, i};
    const Vector& l = cba.at(loc);
    const bool nonzero = !l.is_zero();
    const bool eigen = a * l == cba.theta()[i] * l;
    report.add("bottom-border", loc.to_string(), nonzero && eigen,
               !nonzero ? "vector is zero"
                        : (eigen ? "in E_" + std::to_string(i) + "V" : "not an eigenvector for theta_" + std::to_string(i)));
  }
  return report;
}

// ---------------------------------------------------------------- labels

const Scalar& EdgeLabeling::at(const Location& from, const Location& to) const {
  const auto it = labels.find({from, to});
  if (it == labels.end()) throw Error(ErrorKind::Schema, "no label on " + from.to_string() + "->" + to.to_string());
  return it->second;
}

EdgeLabeling edge_labels(std::span<const Scalar> theta) {
  const unsigned d = diameter_of(theta);
  EdgeLabeling out;
  out.d = d;
  auto put = [&](const Location& from, const Location& to, const Scalar& value) {
    const auto [it, inserted] = out.labels.emplace(std::pair{from, to}, value);
    if (!inserted && it->second != value) {
      throw Error(ErrorKind::InconsistentLabels, "edge " + from.to_string() + "->" + to.to_string() +
                                                     " labeled both " + it->second.to_string() + " and " +
                                                     value.to_string());
    }
  };
  for (const Clique& clique : black_cliques(d)) {
    const auto& [lambda, mu, nu] = clique.members;
    const Scalar gap = theta[d - lambda.r] - theta[lambda.t];
    const Scalar minus_one = -Scalar::one(gap.field());
    put(lambda, mu, gap.inverse());
    put(mu, lambda, gap);
    put(mu, nu, minus_one);
    put(nu, mu, minus_one);
    put(nu, lambda, -gap);
    put(lambda, nu, (-gap).inverse());
  }
  return out;
}

Report edge_labeling_axioms(const EdgeLabeling& labels) {
  Report report;
  for (const auto& [a, b] : edges(labels.d)) {
    const std::string subject = a.to_string() + "-" + b.to_string();
    const auto forward = labels.labels.find({a, b});
    const auto backward = labels.labels.find({b, a});
    if (forward == labels.labels.end() || backward == labels.labels.end()) {
      report.add("label-total", subject, false, "edge is unlabeled");
      continue;
    }
    const bool nonzero = !forward->second.is_zero() && !backward->second.is_zero();
    report.add("label-nonzero", subject, nonzero);
    report.add("label-reciprocal", subject, (forward->second * backward->second).is_one(),
               forward->second.to_string() + " * " + backward->second.to_string());
  }
  const std::size_t expected = 2 * edges(labels.d).size();
  report.add("label-total", "all edges", labels.labels.size() == expected,
             std::to_string(labels.labels.size()) + " ordered pairs, expected " + std::to_string(expected));
  for (const Clique& clique : black_cliques(labels.d)) {
    const auto& [lambda, mu, nu] = clique.members;
    if (!labels.labels.contains({lambda, mu}) || !labels.labels.contains({mu, nu}) ||
        !labels.labels.contains({nu, lambda})) {
      report.add("label-black-product", lambda.to_string(), false, "clique is not fully labeled");
      continue;
    }
    const Scalar product = labels.at(lambda, mu) * labels.at(mu, nu) * labels.at(nu, lambda);
    report.add("label-black-product", lambda.to_string(), product.is_one(), "product " + product.to_string());
  }
  return report;
}

Report dependency_check(const ConcreteArray& array, const EdgeLabeling& labels) {
  Report report;
  for (const Clique& clique : black_cliques(array.diameter())) {
    const auto& [lambda, mu, nu] = clique.members;
    if (!labels.labels.contains({lambda, mu}) || !labels.labels.contains({lambda, nu})) {
      report.add("label-dependency", lambda.to_string(), false, "clique is not fully labeled");
      continue;
    }
    const Vector combination =
        array.at(lambda) + labels.at(lambda, mu) * array.at(mu) + labels.at(lambda, nu) * array.at(nu);
    report.add("label-dependency", lambda.to_string(), combination.is_zero(),
               combination.is_zero() ? "" : "residual " + combination.to_string());
  }
  return report;
}

// ---------------------------------------------------------------- values

namespace {

ValueFunction oriented_values(const EdgeLabeling& labels, bool clockwise) {
  ValueFunction out;
  out.d = labels.d;
  for (const auto& [loc, clique] : white_cliques(labels.d)) {
    const auto& [lambda, mu, nu] = clique.members;
    const Scalar value = clockwise ? labels.at(lambda, mu) * labels.at(mu, nu) * labels.at(nu, lambda)
                                   : labels.at(lambda, nu) * labels.at(nu, mu) * labels.at(mu, lambda);
    out.values.emplace(loc, value);
  }
  return out;
}

}  // namespace

ValueFunction value_function(const EdgeLabeling& labels) { return oriented_values(labels, true); }

ValueFunction counterclockwise_value_function(const EdgeLabeling& labels) { return oriented_values(labels, false); }

Scalar closed_form_value(std::span<const Scalar> theta, const Location& loc) {
  const unsigned d = diameter_of(theta);
  if (d < 2 || loc.diameter() != d - 2) {
    throw Error(ErrorKind::DimensionMismatch,
                "location " + loc.to_string() + " is not in Delta_{d-2} for d = " + std::to_string(d));
  }
  const Scalar den = theta[d - loc.r] - theta[loc.t + 1];
  if (den.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "theta_" + std::to_string(d - loc.r) + " = theta_" +
                                                std::to_string(loc.t + 1) + " at " + loc.to_string());
  }
  return (theta[d - loc.r - 1] - theta[loc.t]) / den;
}

ValueFunction closed_form_value_function(std::span<const Scalar> theta) {
  ValueFunction out;
  out.d = diameter_of(theta);
  if (out.d < 2) return out;
  for (const Location& loc : locations(out.d - 2)) out.values.emplace(loc, closed_form_value(theta, loc));
  return out;
}

Report compare_value_functions(const ValueFunction& computed, const ValueFunction& expected) {
  Report report;
  if (computed.d != expected.d) {
    report.add("value", "diameter", false,
               "diameters " + std::to_string(computed.d) + " vs " + std::to_string(expected.d));
    return report;
  }
  for (const auto& [loc, want] : expected.values) {
    const auto it = computed.values.find(loc);
    if (it == computed.values.end()) {
      report.add("value", loc.to_string(), false, "missing; expected " + want.to_string());
      continue;
    }
    const bool ok = it->second == want && !want.is_zero();
    report.add("value", loc.to_string(), ok, it->second.to_string() + (ok ? " == " : " != ") + want.to_string());
  }
  if (computed.values.size() != expected.values.size()) {
    report.add("value", "domain", false, "computed function has extra locations");
  }
  return report;
}

}  // namespace billiard
