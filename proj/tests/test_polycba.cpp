#include "doctest.h"

#include <random>
#include <set>

#include "billiard/leonard.hpp"
#include "billiard/polycba.hpp"
#include "support/generators.hpp"

using namespace billiard;

namespace {

const FieldSpec Q = FieldSpec::rational();

std::vector<Scalar> ints(std::initializer_list<long> values, const FieldSpec& f = Q) {
  std::vector<Scalar> out;
  for (long v : values) out.emplace_back(f, v);
  return out;
}

Scalar frac(long num, long den) { return Scalar(Q, mpz_class(num), mpz_class(den)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

PolyCBA diagonal_example() {
  const auto theta = ints({0, 1, 2});
  return build_poly_cba(primitive_idempotents(Matrix::diagonal(theta, Q), theta), Vector::from_ints({1, 1, 1}, Q));
}

// eta_r(x) tau_t(x) as a plain product over the roots, no library helpers.
Scalar scalar_poly(const std::vector<Scalar>& theta, const Location& loc, const Scalar& x) {
  const std::size_t d = theta.size() - 1;
  Scalar out = Scalar::one(x.field());
  for (std::size_t k = 0; k < loc.r; ++k) out *= x - theta[d - k];
  for (std::size_t k = 0; k < loc.t; ++k) out *= x - theta[k];
  return out;
}

// For A = P diag(theta) P^{-1}: L(loc) = P diag(eta_r tau_t (theta_i)) P^{-1} v.
Vector spectral_oracle(const testing::RandomMap& map, const Vector& v, const Location& loc) {
  std::vector<Scalar> diag;
  for (const Scalar& th : map.theta) diag.push_back(scalar_poly(map.theta, loc, th));
  const FieldSpec& f = v.field();
  return map.conjugator * (Matrix::diagonal(diag, f) * (inverse(map.conjugator) * v));
}

std::set<std::string> failed_subjects(const Report& report, const std::string& check) {
  std::set<std::string> out;
  for (const CheckResult& c : report.failed())
    if (c.check == check) out.insert(c.subject);
  return out;
}

}  // namespace

TEST_CASE("worked d=2 example reproduces the six vectors") {
  const PolyCBA cba = diagonal_example();
  CHECK(cba.at({0, 2, 0}) == Vector::from_ints({1, 1, 1}, Q));
  CHECK(cba.at({1, 1, 0}) == Vector::from_ints({-2, -1, 0}, Q));
  CHECK(cba.at({0, 1, 1}) == Vector::from_ints({0, 1, 2}, Q));
  CHECK(cba.at({2, 0, 0}) == Vector::from_ints({2, 0, 0}, Q));
  CHECK(cba.at({1, 0, 1}) == Vector::from_ints({0, -1, 0}, Q));
  CHECK(cba.at({0, 0, 2}) == Vector::from_ints({0, 0, 2}, Q));
  // Oracle: entry i of L(r,s,t) is eta_r(i) tau_t(i) for A = diag(0,1,2), v = (1,1,1).
  const auto theta = ints({0, 1, 2});
  for (const Location& loc : locations(2)) {
    for (std::size_t i = 0; i < 3; ++i) CHECK(cba.at(loc)[i] == scalar_poly(theta, loc, theta[i]));
  }
  CHECK(cba.seed_parts()[1] == Vector::from_ints({0, 1, 0}, Q));

  const Report report = verify_cba(cba);
  CHECK(report.passed());
  CHECK(report.count("line") == 9);
  CHECK(report.count("black-clique") == 3);
}

TEST_CASE("corrupted array fails on line S=1") {
  const PolyCBA cba = diagonal_example();
  const ConcreteArray bad = cba.array().with({1, 1, 0}, cba.at({0, 1, 1}));
  const Report report = verify_cba(bad);
  CHECK_FALSE(report.passed());
  CHECK(failed_subjects(report, "line") == std::set<std::string>{"S=1"});
  // The duplicated vector also makes two black cliques collapse to rank 1 pairs.
  CHECK(failed_subjects(report, "black-clique") == std::set<std::string>{"(0,2,0)", "(1,1,0)"});
}

TEST_CASE("polynomial helpers") {
  const auto theta = ints({5, 7, 11, 13});
  CHECK(tau_roots(theta, 0).empty());
  CHECK(tau_roots(theta, 2) == ints({5, 7}));
  CHECK(eta_roots(theta, 2) == ints({13, 11}));
  CHECK(tau_eval(theta, 2, Scalar(Q, 1L)) == Scalar(Q, 24L));
  CHECK(eta_eval(theta, 3, Scalar(Q, 0L)) == Scalar(Q, -(13L * 11 * 7)));
  CHECK(kind_of([&] { tau_roots(theta, 4); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("tau and eta vanishing pattern") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t d = static_cast<std::size_t>(testing::uniform(rng, 0, 8));
    const auto theta = testing::random_spectrum(rng, d + 1, Q);
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t j = 0; j <= d; ++j) {
        const unsigned k = static_cast<unsigned>(j);
        CHECK(tau_eval(theta, k, theta[i]).is_zero() == (i < j));
        CHECK(eta_eval(theta, k, theta[i]).is_zero() == (i > d - j));
      }
    }
  }
}

TEST_CASE("projection identities E_i tau_j(A) v = tau_j(theta_i) v_i") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned d = static_cast<unsigned>(testing::uniform(rng, 1, 5));
    const auto map = testing::random_multiplicity_free(rng, d);
    const EigStructure eig = primitive_idempotents(map.a, map.theta);
    const PolyCBA cba = build_poly_cba(eig, testing::random_generic_seed(rng, eig));
    for (unsigned j = 0; j <= d; ++j) {
      const Vector tv = poly_apply(map.a, tau_roots(map.theta, j), cba.seed());
      const Vector ev = poly_apply(map.a, eta_roots(map.theta, j), cba.seed());
      for (std::size_t i = 0; i <= d; ++i) {
        CHECK(eig.idempotent(i) * tv == tau_eval(map.theta, j, map.theta[i]) * cba.seed_parts()[i]);
        CHECK(eig.idempotent(i) * ev == eta_eval(map.theta, j, map.theta[i]) * cba.seed_parts()[i]);
      }
    }
  }
}

TEST_CASE("random multiplicity-free maps give concrete billiard arrays") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const unsigned d = static_cast<unsigned>(testing::uniform(rng, 1, 6));
    const auto map = testing::random_multiplicity_free(rng, d);
    const EigStructure eig = primitive_idempotents(map.a, map.theta);
    const Vector v = trial % 2 == 0 ? default_seed(eig) : testing::random_generic_seed(rng, eig);
    const PolyCBA cba = build_poly_cba(eig, v);
    CHECK(cba.at({0, d, 0}) == v);
    for (const Location& loc : locations(d)) CHECK(cba.at(loc) == spectral_oracle(map, v, loc));
    const Report report = verify_cba(cba);
    CHECK(report.passed());
    CHECK(report.count("line") == 3 * (d + 1));
    CHECK(report.count("black-clique") == d * (d + 1) / 2);
    CHECK(black_clique_relation_check(cba).passed());
    CHECK(bottom_border_check(cba).passed());
    const EdgeLabeling labels = edge_labels(cba);
    CHECK(edge_labeling_axioms(labels).passed());
    CHECK(dependency_check(cba.array(), labels).passed());
    const Report values = compare_value_functions(value_function(labels), closed_form_value_function(map.theta));
    CHECK(values.passed());
    CHECK(values.count("value") == (d < 2 ? 0 : (d - 1) * d / 2));
  }
}

TEST_CASE("prime-field arrays verify too") {
  std::mt19937_64 rng(24);
  const FieldSpec f = FieldSpec::prime(1000003);
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned d = static_cast<unsigned>(testing::uniform(rng, 1, 5));
    const auto map = testing::random_multiplicity_free(rng, d, f);
    const EigStructure eig = primitive_idempotents(map.a, map.theta);
    const PolyCBA cba = build_poly_cba(eig, default_seed(eig));
    CHECK(verify_cba(cba).passed());
    CHECK(dependency_check(cba.array(), edge_labels(cba)).passed());
    for (const Location& loc : locations(d)) CHECK(cba.at(loc) == spectral_oracle(map, cba.seed(), loc));
  }
}

TEST_CASE("black clique relations on the worked example") {
  const PolyCBA cba = diagonal_example();
  const Matrix& a = cba.eig().matrix();
  const Vector v = cba.at({0, 2, 0});
  CHECK(cba.at({1, 1, 0}) == a * v - Scalar(Q, 2L) * v);
  CHECK(cba.at({0, 1, 1}) == a * v);
  CHECK(frac(1, -2) * (cba.at({1, 1, 0}) - cba.at({0, 1, 1})) == v);
  const Report report = black_clique_relation_check(cba);
  CHECK(report.passed());
  CHECK(report.count("clique-relation") == 3);
  const Report bottom = bottom_border_check(cba);
  CHECK(bottom.passed());
  CHECK(bottom.count("bottom-border") == 3);
}

TEST_CASE("bottom border vectors are eigenvectors, interior ones are not") {
  const PolyCBA cba = diagonal_example();
  const Matrix& a = cba.eig().matrix();
  const Vector wrong = cba.at({1, 1, 0});
  CHECK_FALSE(a * wrong == cba.theta()[0] * wrong);
  for (unsigned i = 0; i <= 2; ++i) {
    const Vector& l = cba.at({2 - i, 0, i});
    CHECK(a * l == cba.theta()[i] * l);
  }
}

TEST_CASE("edge labels on the worked example") {
  const PolyCBA cba = diagonal_example();
  const EdgeLabeling labels = edge_labels(cba);
  CHECK(labels.at({0, 2, 0}, {1, 1, 0}) == frac(1, 2));
  CHECK(labels.at({1, 1, 0}, {0, 2, 0}) == Scalar(Q, 2L));
  CHECK(labels.at({1, 1, 0}, {0, 1, 1}) == Scalar(Q, -1L));
  CHECK(labels.at({0, 1, 1}, {0, 2, 0}) == Scalar(Q, -2L));
  CHECK(labels.at({0, 2, 0}, {0, 1, 1}) == frac(-1, 2));
  CHECK(labels.labels.size() == 2 * edges(2).size());
  CHECK(kind_of([&] { labels.at({0, 2, 0}, {0, 0, 2}); }) == ErrorKind::Schema);

  // Oracle: the dependency among the three clique vectors solved by hand.
  const Vector combo = cba.at({0, 2, 0}) + frac(1, 2) * cba.at({1, 1, 0}) + frac(-1, 2) * cba.at({0, 1, 1});
  CHECK(combo.is_zero());

  const Report axioms = edge_labeling_axioms(labels);
  CHECK(axioms.passed());
  CHECK(dependency_check(cba.array(), labels).passed());

  // The opposite sign on lambda->mu and nu->lambda breaks the dependency.
  EdgeLabeling flipped = labels;
  for (const Clique& c : black_cliques(2)) {
    const auto [l, m, n] = c.members;
    flipped.labels.at({l, m}) = -flipped.labels.at({l, m});
    flipped.labels.at({m, l}) = -flipped.labels.at({m, l});
    flipped.labels.at({n, l}) = -flipped.labels.at({n, l});
    flipped.labels.at({l, n}) = -flipped.labels.at({l, n});
  }
  CHECK(edge_labeling_axioms(flipped).passed());
  CHECK_FALSE(dependency_check(cba.array(), flipped).passed());
  // Both conventions give the same white-clique value.
  CHECK(value_function(flipped) == value_function(labels));
}

TEST_CASE("edge labeling axioms detect broken labels") {
  EdgeLabeling labels = edge_labels(ints({0, 1, 2, 5}));
  CHECK(edge_labeling_axioms(labels).passed());
  EdgeLabeling broken = labels;
  broken.labels.at({{0, 3, 0}, {1, 2, 0}}) *= Scalar(Q, 2L);
  const Report r = edge_labeling_axioms(broken);
  CHECK_FALSE(r.passed());
  CHECK(failed_subjects(r, "label-reciprocal").size() == 1);
  CHECK(failed_subjects(r, "label-black-product") == std::set<std::string>{"(0,3,0)"});
  EdgeLabeling missing = labels;
  missing.labels.erase(missing.labels.begin());
  CHECK_FALSE(edge_labeling_axioms(missing).passed());
}

TEST_CASE("value function examples") {
  const PolyCBA cba = diagonal_example();
  const ValueFunction vf = value_function(edge_labels(cba));
  REQUIRE(vf.values.size() == 1);
  CHECK(vf.values.at({0, 0, 0}) == Scalar::one(Q));
  // Product of the three labels by hand: (-1) * (1/(theta_2 - theta_1)) * (theta_0 - theta_1).
  CHECK(Scalar(Q, -1L) * frac(1, 1) * Scalar(Q, -1L) == vf.values.at({0, 0, 0}));

  const ValueFunction vf3 = value_function(edge_labels(ints({0, 1, 2, 3})));
  CHECK(vf3.values.size() == 3);
  for (const auto& [loc, value] : vf3.values) CHECK(value.is_one());

  CHECK(closed_form_value(ints({0, 1, 2}), {0, 0, 0}) == Scalar::one(Q));
  const std::vector<Scalar> qr = {Scalar(Q, 2L), frac(5, 2), frac(17, 4)};
  CHECK(closed_form_value(qr, {0, 0, 0}) == frac(2, 7));
  CHECK(value_function(edge_labels(qr)).values.at({0, 0, 0}) == frac(2, 7));

  CHECK(value_function(edge_labels(ints({3, 4}))).values.empty());
  CHECK(edge_labels(ints({3})).labels.empty());
  CHECK(kind_of([] { closed_form_value(ints({0, 1, 2}), {1, 0, 0}); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([] { closed_form_value(ints({0, 1, 1}), {0, 0, 0}); }) == ErrorKind::ZeroDenominator);
}

TEST_CASE("arithmetic progressions have constant value 1") {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned d = static_cast<unsigned>(testing::uniform(rng, 2, 9));
    const Scalar start = testing::random_rational(rng, Q, 10);
    const Scalar step(Q, mpz_class(testing::nonzero(rng, -9, 9)), mpz_class(testing::nonzero(rng, 1, 9)));
    std::vector<Scalar> theta;
    for (unsigned i = 0; i <= d; ++i) theta.push_back(start + Scalar(Q, static_cast<long>(i)) * step);
    for (const auto& [loc, value] : closed_form_value_function(theta).values) CHECK(value.is_one());
  }
}

TEST_CASE("clockwise and counterclockwise values are reciprocal") {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 20; ++trial) {
    const unsigned d = static_cast<unsigned>(testing::uniform(rng, 2, 8));
    const EdgeLabeling labels = edge_labels(testing::random_spectrum(rng, d + 1, Q));
    const ValueFunction cw = value_function(labels);
    const ValueFunction ccw = counterclockwise_value_function(labels);
    REQUIRE(cw.values.size() == ccw.values.size());
    for (const auto& [loc, value] : cw.values) {
      CHECK_FALSE(value.is_zero());
      CHECK((value * ccw.values.at(loc)).is_one());
    }
  }
}

TEST_CASE("compare_value_functions reports mismatches") {
  const auto theta = ints({0, 1, 2, 4});
  ValueFunction computed = closed_form_value_function(theta);
  CHECK(compare_value_functions(computed, closed_form_value_function(theta)).passed());
  computed.values.at({0, 1, 0}) += Scalar::one(Q);
  const Report r = compare_value_functions(computed, closed_form_value_function(theta));
  CHECK(failed_subjects(r, "value") == std::set<std::string>{"(0,1,0)"});
}

TEST_CASE("scaling the seed scales the array and keeps labels") {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned d = static_cast<unsigned>(testing::uniform(rng, 1, 5));
    const auto map = testing::random_multiplicity_free(rng, d);
    const EigStructure eig = primitive_idempotents(map.a, map.theta);
    const Vector v = testing::random_generic_seed(rng, eig);
    const Scalar c(Q, mpz_class(testing::nonzero(rng, -7, 7)), mpz_class(testing::nonzero(rng, 1, 7)));
    const PolyCBA base = build_poly_cba(eig, v);
    const PolyCBA scaled = build_poly_cba(eig, c * v);
    for (const Location& loc : locations(d)) CHECK(scaled.at(loc) == c * base.at(loc));
    CHECK(edge_labels(scaled).labels == edge_labels(base).labels);
    CHECK(value_function(edge_labels(scaled)) == value_function(edge_labels(base)));
    CHECK(verify_cba(scaled) == verify_cba(base));
  }
}

TEST_CASE("small diameters") {
  const auto theta0 = ints({4});
  const PolyCBA d0 = build_poly_cba(primitive_idempotents(Matrix::diagonal(theta0, Q), theta0),
                                    Vector::from_ints({3}, Q));
  CHECK(d0.array().vectors().size() == 1);
  CHECK(d0.at({0, 0, 0}) == Vector::from_ints({3}, Q));
  CHECK(verify_cba(d0).passed());
  CHECK(verify_cba(d0).count("black-clique") == 0);
  CHECK(edge_labels(d0).labels.empty());

  const auto theta1 = ints({1, -1});
  const Matrix a1 = Matrix::from_ints({{0, 1}, {1, 0}}, Q);
  const PolyCBA d1 = build_poly_cba(primitive_idempotents(a1, theta1), Vector::from_ints({1, 0}, Q));
  const Report r1 = verify_cba(d1);
  CHECK(r1.passed());
  CHECK(r1.count("black-clique") == 1);
  // The single clique is {v, (A - theta_1) v, (A - theta_0) v}.
  CHECK(d1.at({1, 0, 0}) == a1 * d1.seed() + d1.seed());
  CHECK(d1.at({0, 0, 1}) == a1 * d1.seed() - d1.seed());
}

TEST_CASE("build errors") {
  const auto theta = ints({0, 1, 2});
  const EigStructure eig = primitive_idempotents(Matrix::diagonal(theta, Q), theta);
  CHECK(kind_of([&] { build_poly_cba(eig, Vector::from_ints({1, 0, 1}, Q)); }) == ErrorKind::SeedNotGeneric);
  CHECK(kind_of([&] { build_poly_cba(eig, Vector::from_ints({1, 1}, Q)); }) == ErrorKind::DimensionMismatch);
  CHECK(kind_of([&] { build_poly_cba(eig, Vector::from_ints({1, 1, 1}, FieldSpec::prime(5))); }) ==
        ErrorKind::FieldMismatch);
  CHECK(kind_of([] { ConcreteArray(2, Q, std::vector<Vector>(5, Vector::from_ints({1}, Q))); }) ==
        ErrorKind::DimensionMismatch);
  const PolyCBA cba = diagonal_example();
  CHECK(kind_of([&] { cba.at({1, 1, 1}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("Krawtchouk array relations and bottom border") {
  const auto k = krawtchouk(2);
  const EigStructure eig = primitive_idempotents(k.a, k.theta);
  const PolyCBA cba = build_poly_cba(eig, Vector::unit(3, 0, Q));
  CHECK(cba.at({2, 0, 0}) == Vector::from_ints({2, 2, 2}, Q));
  CHECK(k.a * cba.at({2, 0, 0}) == Scalar(Q, 2L) * cba.at({2, 0, 0}));
  CHECK(black_clique_relation_check(cba).passed());
  CHECK(bottom_border_check(cba).passed());
  CHECK(verify_cba(cba).passed());
}
