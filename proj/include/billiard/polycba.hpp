#pragma once

/**
 * Polynomial-type concrete billiard arrays.
 *
 * Given a multiplicity-free A with an ordering theta_0..theta_d of its
 * eigenvalues and a seed v whose components E_i v are all nonzero, the array
 * assigns to (r,s,t) the vector
 *
 *     L(r,s,t) = eta_r(A) tau_t(A) v,
 *     tau_k(x) = (x - theta_0)(x - theta_1)...(x - theta_{k-1}),
 *     eta_k(x) = (x - theta_d)(x - theta_{d-1})...(x - theta_{d-k+1}).
 *
 * Everything here is checked exactly; verification functions return a
 * Report rather than throwing.
 */

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "billiard/linalg.hpp"
#include "billiard/report.hpp"
#include "billiard/simplex.hpp"

namespace billiard {

// Any assignment Delta_d -> V. Vectors are stored in picture order.
class ConcreteArray {
 public:
  ConcreteArray() = default;
  // Throws DimensionMismatch unless there is one vector per location and all
  // share a length; FieldMismatch on foreign vectors.
  ConcreteArray(unsigned d, const FieldSpec& field, std::vector<Vector> vectors);

  unsigned diameter() const noexcept { return d_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return vectors_.empty() ? 0 : vectors_.front().size(); }
  const Vector& at(const Location& loc) const;
  std::span<const Vector> vectors() const noexcept { return vectors_; }

  // Copy with one location overwritten.
  ConcreteArray with(const Location& loc, Vector replacement) const;

  friend bool operator==(const ConcreteArray&, const ConcreteArray&) = default;

 private:
  unsigned d_ = 0;
  FieldSpec field_;
  std::vector<Vector> vectors_;
};

// Root lists fed to poly_apply: (theta_0..theta_{k-1}) and
// (theta_d, theta_{d-1}, .., theta_{d-k+1}).
std::vector<Scalar> tau_roots(std::span<const Scalar> theta, unsigned k);
std::vector<Scalar> eta_roots(std::span<const Scalar> theta, unsigned k);

// Scalar evaluations tau_k(x), eta_k(x).
Scalar tau_eval(std::span<const Scalar> theta, unsigned k, const Scalar& x);
Scalar eta_eval(std::span<const Scalar> theta, unsigned k, const Scalar& x);

class PolyCBA {
 public:
  const EigStructure& eig() const noexcept { return eig_; }
  std::span<const Scalar> theta() const noexcept { return eig_.eigenvalues(); }
  const Vector& seed() const noexcept { return seed_; }
  // v_i = E_i v.
  std::span<const Vector> seed_parts() const noexcept { return seed_parts_; }
  const ConcreteArray& array() const noexcept { return array_; }
  const Vector& at(const Location& loc) const { return array_.at(loc); }
  unsigned diameter() const noexcept { return array_.diameter(); }
  const FieldSpec& field() const noexcept { return eig_.field(); }

 private:
  friend PolyCBA build_poly_cba(const EigStructure& eig, const Vector& v);

  EigStructure eig_;
  Vector seed_;
  std::vector<Vector> seed_parts_;
  ConcreteArray array_;
};

// Errors: DimensionMismatch / FieldMismatch on a foreign seed, SeedNotGeneric
// when some E_i v = 0.
PolyCBA build_poly_cba(const EigStructure& eig, const Vector& v);

// Sum over i of the first nonzero column of E_i.
Vector default_seed(const EigStructure& eig);

// Lines: rank equals line length. Black cliques: rank exactly 2 with every
// pair independent.
Report verify_cba(const ConcreteArray& array);
inline Report verify_cba(const PolyCBA& cba) { return verify_cba(cba.array()); }

// On every black clique lambda=(r,s,t), mu=(r+1,s-1,t), nu=(r,s-1,t+1):
//   L_mu = (A - theta_{d-r}) L_lambda,  L_nu = (A - theta_t) L_lambda,
//   L_lambda = (L_mu - L_nu) / (theta_t - theta_{d-r}).
Report black_clique_relation_check(const PolyCBA& cba);

// A L = theta_i L and L != 0 for L at each (d-i, 0, i).
Report bottom_border_check(const PolyCBA& cba);

struct EdgeLabeling {
  unsigned d = 0;
  std::map<std::pair<Location, Location>, Scalar> labels;

  // Throws Schema if (from, to) is not an edge of the labeling.
  const Scalar& at(const Location& from, const Location& to) const;
};

// Labels around each black clique lambda, mu, nu (members in the order of
// black_cliques()):
//   lambda->mu = 1/(theta_{d-r} - theta_t),  mu->nu = -1,
//   nu->lambda = theta_t - theta_{d-r},
// with reciprocals on the reversed pairs. This is the sign convention under
// which L_lambda + b(lambda,mu) L_mu + b(lambda,nu) L_nu = 0 holds. Throws
// InconsistentLabels if two cliques disagree on an edge.
EdgeLabeling edge_labels(std::span<const Scalar> theta);
inline EdgeLabeling edge_labels(const PolyCBA& cba) { return edge_labels(cba.theta()); }

// b(x,y) b(y,x) = 1 on every edge, the black-clique product is 1, no label is
// zero, and every adjacent pair is labeled.
Report edge_labeling_axioms(const EdgeLabeling& labels);

// L_lambda + b(lambda,mu) L_mu + b(lambda,nu) L_nu = 0 on every black clique.
Report dependency_check(const ConcreteArray& array, const EdgeLabeling& labels);

// Indexed by Delta_{d-2}; `d` is the diameter of the labeled triangle.
struct ValueFunction {
  unsigned d = 0;
  std::map<Location, Scalar> values;

  friend bool operator==(const ValueFunction&, const ValueFunction&) = default;
};

// Clockwise product b(lambda,mu) b(mu,nu) b(nu,lambda) with lambda=(r+1,s+1,t),
// mu=(r,s+1,t+1), nu=(r+1,s,t+1). Empty for d < 2.
ValueFunction value_function(const EdgeLabeling& labels);
ValueFunction counterclockwise_value_function(const EdgeLabeling& labels);

// (theta_{d-r-1} - theta_t) / (theta_{d-r} - theta_{t+1}) for (r,s,t) in
// Delta_{d-2}, d = theta.size() - 1.
Scalar closed_form_value(std::span<const Scalar> theta, const Location& loc);
ValueFunction closed_form_value_function(std::span<const Scalar> theta);

// Pointwise comparison, one check per location.
Report compare_value_functions(const ValueFunction& computed, const ValueFunction& expected);

}  // namespace billiard
