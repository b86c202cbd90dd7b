#pragma once

// Leonard systems (A; E_0..E_d; A*; E*_0..E*_d), their split decompositions,
// and how the borders of the polynomial-type array sit inside them.

#include <cstddef>
#include <span>
#include <vector>

#include "billiard/linalg.hpp"
#include "billiard/polycba.hpp"
#include "billiard/report.hpp"
#include "billiard/simplex.hpp"

namespace billiard {

// Raw input: two maps with proposed eigenvalue orderings.
struct LeonardCandidate {
  Matrix a;
  std::vector<Scalar> theta;
  Matrix a_star;
  std::vector<Scalar> theta_star;
};

// Tridiagonal A with subdiagonal 1..d, superdiagonal d..1, zero diagonal;
// A* = diag(d - 2i); theta_i = theta*_i = d - 2i.
LeonardCandidate krawtchouk(unsigned d, const FieldSpec& field = FieldSpec::rational());

class LeonardSystem {
 public:
  const Matrix& a() const noexcept { return eig_.matrix(); }
  const Matrix& a_star() const noexcept { return eig_star_.matrix(); }
  const EigStructure& eig() const noexcept { return eig_; }
  const EigStructure& eig_star() const noexcept { return eig_star_; }
  unsigned diameter() const noexcept { return static_cast<unsigned>(eig_.diameter()); }
  const FieldSpec& field() const noexcept { return eig_.field(); }

  friend bool operator==(const LeonardSystem&, const LeonardSystem&) = default;

 private:
  friend LeonardSystem verify_leonard_system(const Matrix&, std::span<const Scalar>, const Matrix&,
                                             std::span<const Scalar>);
  friend LeonardSystem downarrow(const LeonardSystem&);

  EigStructure eig_;
  EigStructure eig_star_;
};

// Names the first violated tridiagonality condition: Band::AStar concerns
// E_i A* E_j, Band::A concerns E*_i A E*_j.
class LeonardError : public Error {
 public:
  enum class Band { AStar, A };

  LeonardError(Band band, std::size_t i, std::size_t j, const std::string& message)
      : Error(ErrorKind::NotLeonardSystem, message), band_(band), i_(i), j_(j) {}

  Band band() const noexcept { return band_; }
  std::size_t i() const noexcept { return i_; }
  std::size_t j() const noexcept { return j_; }

 private:
  Band band_;
  std::size_t i_;
  std::size_t j_;
};

// Every condition as a report entry. Multiplicity-free failures on either
// side appear as a failing "multiplicity-free" entry and stop the checks.
Report check_leonard_system(const Matrix& a, std::span<const Scalar> theta, const Matrix& a_star,
                            std::span<const Scalar> theta_star);
inline Report check_leonard_system(const LeonardCandidate& c) {
  return check_leonard_system(c.a, c.theta, c.a_star, c.theta_star);
}

// Throws the multiplicity-free Error from primitive_idempotents, or a
// LeonardError for the first (band, i, j) that fails.
LeonardSystem verify_leonard_system(const Matrix& a, std::span<const Scalar> theta, const Matrix& a_star,
                                    std::span<const Scalar> theta_star);
inline LeonardSystem verify_leonard_system(const LeonardCandidate& c) {
  return verify_leonard_system(c.a, c.theta, c.a_star, c.theta_star);
}

// (A; E_d..E_0; A*; E*_0..E*_d), re-verified.
LeonardSystem downarrow(const LeonardSystem& ls);

// U_i = span(spanners[i]).
struct SplitDecomposition {
  std::vector<Vector> spanners;
};

// First nonzero column of E*_0.
Vector star_seed(const LeonardSystem& ls);

// U_i = eta_i(A) E*_0 V, spanned by eta_i(A) star_seed(ls). Throws
// NotLeonardSystem if some spanner vanishes.
SplitDecomposition split_decomposition(const LeonardSystem& ls);

// Independence of the spanners, membership in
// (E*_0V + .. + E*_iV) and (E_0V + .. + E_{d-i}V), U_0 = E*_0V, U_d = E_0V, and
// both partial-sum identities.
Report check_split_decomposition(const LeonardSystem& ls, const SplitDecomposition& split);

// Builds the polynomial-type array of A from a seed in E*_0V and checks the
// left border against the split decomposition, the right border against the
// split decomposition of downarrow(ls), and the bottom border against the
// eigenspaces of A.
Report border_correspondence(const LeonardSystem& ls, const Vector& seed);
inline Report border_correspondence(const LeonardSystem& ls) { return border_correspondence(ls, star_seed(ls)); }

// theta_i = a + b q^i + c q^-i.
class QRacahParams {
 public:
  // Throws InvalidParameters for b = 0, c = 0, q in {0, 1, -1} or mixed
  // fields, and RepeatedEigenvalue if two theta_i coincide.
  QRacahParams(Scalar q, Scalar a, Scalar b, Scalar c, unsigned d);

  const Scalar& q() const noexcept { return q_; }
  const Scalar& a() const noexcept { return a_; }
  const Scalar& b() const noexcept { return b_; }
  const Scalar& c() const noexcept { return c_; }
  unsigned d() const noexcept { return d_; }
  const FieldSpec& field() const noexcept { return q_.field(); }

 private:
  Scalar q_, a_, b_, c_;
  unsigned d_;
};

// Raw evaluation without the distinctness check; throws RepeatedEigenvalue
// when `require_distinct` and a collision exists.
std::vector<Scalar> qracah_eigenvalues(const Scalar& q, const Scalar& a, const Scalar& b, const Scalar& c,
                                       unsigned d, bool require_distinct = true);
std::vector<Scalar> qracah_eigenvalues(const QRacahParams& p);

// q (b q^{d+t-r-1} - c) / (b q^{d+t-r+1} - c) on Delta_{d-2}.
Scalar qracah_value(const QRacahParams& p, const Location& loc);
ValueFunction qracah_value_function(const QRacahParams& p);

}  // namespace billiard
