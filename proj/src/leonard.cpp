#include "billiard/leonard.hpp"

#include <string>

namespace billiard {

namespace {

// E_i M E_j must vanish for |i-j| > 1 and not vanish for |i-j| = 1.
template <typename Sink>
void scan_band(const EigStructure& eig, const Matrix& other, const char* e_name, const char* m_name, Sink&& sink) {
  const std::size_t n = eig.idempotents().size();
  for (std::size_t i = 0; i < n; ++i) {
    const Matrix left = eig.idempotent(i) * other;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t gap = i > j ? i - j : j - i;
      if (gap == 0) continue;
      const bool zero = (left * eig.idempotent(j)).is_zero();
      const bool ok = gap > 1 ? zero : !zero;
      const std::string subject = std::string(e_name) + std::to_string(i) + " " + m_name + " " + e_name +
                                  std::to_string(j);
      std::string detail = ok ? (zero ? "= 0" : "!= 0")
                              : (gap > 1 ? "nonzero but |i-j| > 1" : "zero but |i-j| = 1");
      sink(i, j, subject, ok, detail);
    }
  }
}

}  // namespace

LeonardCandidate krawtchouk(unsigned d, const FieldSpec& field) {
  const std::size_t n = d + 1;
  LeonardCandidate c{Matrix(n, n, field), {}, Matrix(n, n, field), {}};
  for (unsigned i = 0; i < d; ++i) {
    c.a(i, i + 1) = Scalar(field, static_cast<long>(d - i));
    c.a(i + 1, i) = Scalar(field, static_cast<long>(i + 1));
  }
  for (unsigned i = 0; i <= d; ++i) {
    const Scalar value(field, static_cast<long>(d) - 2L * i);
    c.a_star(i, i) = value;
    c.theta.push_back(value);
    c.theta_star.push_back(value);
  }
  return c;
}

Report check_leonard_system(const Matrix& a, std::span<const Scalar> theta, const Matrix& a_star,
                            std::span<const Scalar> theta_star) {
  Report report;
  if (a.rows() != a_star.rows() || a.cols() != a_star.cols()) {
    report.add("shape", "A, A*", false, "A and A* differ in shape");
    return report;
  }
  EigStructure eig, eig_star;
  try {
    eig = primitive_idempotents(a, theta);
    report.add("multiplicity-free", "A", true, "E_0..E_d certified");
  } catch (const Error& e) {
    report.add("multiplicity-free", "A", false, e.what());
    return report;
  }
  try {
    eig_star = primitive_idempotents(a_star, theta_star);
    report.add("multiplicity-free", "A*", true, "E*_0..E*_d certified");
  } catch (const Error& e) {
    report.add("multiplicity-free", "A*", false, e.what());
    return report;
  }
  scan_band(eig, a_star, "E_", "A*", [&](std::size_t, std::size_t, const std::string& subject, bool ok,
                                         const std::string& detail) { report.add("band-Astar", subject, ok, detail); });
  scan_band(eig_star, a, "E*_", "A", [&](std::size_t, std::size_t, const std::string& subject, bool ok,
                                         const std::string& detail) { report.add("band-A", subject, ok, detail); });
  return report;
}

LeonardSystem verify_leonard_system(const Matrix& a, std::span<const Scalar> theta, const Matrix& a_star,
                                    std::span<const Scalar> theta_star) {
  if (a.rows() != a_star.rows() || a.cols() != a_star.cols())
    throw Error(ErrorKind::DimensionMismatch, "A and A* differ in shape");
  LeonardSystem ls;
  ls.eig_ = primitive_idempotents(a, theta);
  ls.eig_star_ = primitive_idempotents(a_star, theta_star);
  using Band = LeonardError::Band;
  auto thrower = [](Band band) {
    return [band](std::size_t i, std::size_t j, const std::string& subject, bool ok, const std::string& detail) {
      if (!ok) {
        throw LeonardError(band, i, j,
                           "not tridiagonal at (" + std::to_string(i) + "," + std::to_string(j) + "): " + subject +
                               " " + detail);
      }
    };
  };
  scan_band(ls.eig_, a_star, "E_", "A*", thrower(Band::AStar));
  scan_band(ls.eig_star_, a, "E*_", "A", thrower(Band::A));
  return ls;
}

LeonardSystem downarrow(const LeonardSystem& ls) {
  const EigStructure reversed = ls.eig_.reversed();
  LeonardSystem out = verify_leonard_system(ls.a(), reversed.eigenvalues(), ls.a_star(), ls.eig_star_.eigenvalues());
  return out;
}

Vector star_seed(const LeonardSystem& ls) { return first_nonzero_column(ls.eig_star().idempotent(0)); }

SplitDecomposition split_decomposition(const LeonardSystem& ls) {
  const unsigned d = ls.diameter();
  const Vector v = star_seed(ls);
  const auto theta = ls.eig().eigenvalues();
  SplitDecomposition split;
  for (unsigned i = 0; i <= d; ++i) {
    Vector u = poly_apply(ls.a(), eta_roots(theta, i), v);
    if (u.is_zero()) {
      throw Error(ErrorKind::NotLeonardSystem,
                  "eta_" + std::to_string(i) + "(A) E*_0 V = 0; U_" + std::to_string(i) + " would not be 1-dimensional");
    }
    split.spanners.push_back(std::move(u));
  }
  return split;
}

namespace {

std::vector<Vector> eigenspace_spanners(const EigStructure& eig, std::size_t first, std::size_t last) {
  std::vector<Vector> out;
  for (std::size_t i = first; i <= last; ++i) out.push_back(first_nonzero_column(eig.idempotent(i)));
  return out;
}

}  // namespace

Report check_split_decomposition(const LeonardSystem& ls, const SplitDecomposition& split) {
  Report report;
  const unsigned d = ls.diameter();
  const FieldSpec& field = ls.field();
  const auto& u = split.spanners;
  if (u.size() != d + 1) {
    report.add("split-count", "U", false, std::to_string(u.size()) + " subspaces for diameter " + std::to_string(d));
    return report;
  }
  for (unsigned i = 0; i <= d; ++i) {
    report.add("split-nonzero", "U_" + std::to_string(i), !u[i].is_zero(), "spanner " + u[i].to_string());
  }
  const std::size_t r = rank_of(u, field);
  report.add("split-direct", "U_0..U_d", r == d + 1,
             "rank " + std::to_string(r) + " of " + std::to_string(d + 1) + " spanners");

  for (unsigned i = 0; i <= d; ++i) {
    const auto star_sum = eigenspace_spanners(ls.eig_star(), 0, i);
    const auto sum = eigenspace_spanners(ls.eig(), 0, d - i);
    const bool in_star = in_span(star_sum, u[i], field);
    const bool in_sum = in_span(sum, u[i], field);
    report.add("split-intersection", "U_" + std::to_string(i), in_star && in_sum,
               std::string(in_star ? "in" : "NOT in") + " E*_0V+..+E*_" + std::to_string(i) + "V; " +
                   (in_sum ? "in" : "NOT in") + " E_0V+..+E_" + std::to_string(d - i) + "V");

    const std::vector<Vector> head(u.begin(), u.begin() + i + 1);
    report.add("split-partial-star", "U_0+..+U_" + std::to_string(i), same_span(head, star_sum, field),
               "compared with E*_0V+..+E*_" + std::to_string(i) + "V");
    const std::vector<Vector> tail(u.begin() + i, u.end());
    report.add("split-partial", "U_" + std::to_string(i) + "+..+U_" + std::to_string(d), same_span(tail, sum, field),
               "compared with E_0V+..+E_" + std::to_string(d - i) + "V");
  }

  const std::vector<Vector> u0 = {u.front()};
  const std::vector<Vector> ud = {u.back()};
  report.add("split-endpoint", "U_0 = E*_0V", same_span(u0, eigenspace_spanners(ls.eig_star(), 0, 0), field));
  report.add("split-endpoint", "U_d = E_0V", same_span(ud, eigenspace_spanners(ls.eig(), 0, 0), field));
  return report;
}

Report border_correspondence(const LeonardSystem& ls, const Vector& seed) {
  Report report;
  const unsigned d = ls.diameter();
  const FieldSpec& field = ls.field();

  const std::vector<Vector> star0 = {star_seed(ls)};
  const bool seed_ok = seed.field() == field && seed.size() == d + 1 && !seed.is_zero() && in_span(star0, seed, field);
  report.add("seed", "v in E*_0V", seed_ok, "v = " + seed.to_string());
  if (!seed_ok) return report;

  PolyCBA cba;
  try {
    cba = build_poly_cba(ls.eig(), seed);
    report.add("seed", "E_i v != 0", true);
  } catch (const Error& e) {
    report.add("seed", "E_i v != 0", false, e.what());
    return report;
  }

  SplitDecomposition split, split_down;
  try {
    split = split_decomposition(ls);
    split_down = split_decomposition(downarrow(ls));
  } catch (const Error& e) {
    report.add("split", "U, U_down", false, e.what());
    return report;
  }

  auto member = [&](const std::string& check, const Location& loc, const Vector& spanner, const std::string& target) {
    const Vector& l = cba.at(loc);
    const std::vector<Vector> basis = {spanner};
    const bool ok = !l.is_zero() && in_span(basis, l, field);
    report.add(check, loc.to_string(), ok, l.to_string() + (ok ? " in " : " NOT in ") + target);
  };
  for (unsigned i = 0; i <= d; ++i) {
    const std::string idx = std::to_string(i);
    member("left-border", {i, d - i, 0}, split.spanners[i], "U_" + idx);
    member("right-border", {0, d - i, i}, split_down.spanners[i], "U_down_" + idx);
    member("bottom-border", {d - i, 0, i}, first_nonzero_column(ls.eig().idempotent(i)), "E_" + idx + "V");
  }
  return report;
}

// ---------------------------------------------------------------- q-Racah

std::vector<Scalar> qracah_eigenvalues(const Scalar& q, const Scalar& a, const Scalar& b, const Scalar& c, unsigned d,
                                       bool require_distinct) {
  std::vector<Scalar> theta;
  for (unsigned i = 0; i <= d; ++i) {
    theta.push_back(a + b * q.pow(static_cast<long>(i)) + c * q.pow(-static_cast<long>(i)));
  }
  if (require_distinct) {
    for (unsigned i = 0; i <= d; ++i) {
      for (unsigned j = i + 1; j <= d; ++j) {
        if (theta[i] == theta[j]) {
          throw Error(ErrorKind::RepeatedEigenvalue, "duplicate eigenvalue: theta_" + std::to_string(i) + " = theta_" +
                                                         std::to_string(j) + " = " + theta[i].to_string());
        }
      }
    }
  }
  return theta;
}

QRacahParams::QRacahParams(Scalar q, Scalar a, Scalar b, Scalar c, unsigned d)
    : q_(std::move(q)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(d) {
  const FieldSpec& field = q_.field();
  if (a_.field() != field || b_.field() != field || c_.field() != field)
    throw Error(ErrorKind::InvalidParameters, "q-Racah parameters live in different fields");
  if (b_.is_zero()) throw Error(ErrorKind::InvalidParameters, "b must be nonzero");
  if (c_.is_zero()) throw Error(ErrorKind::InvalidParameters, "c must be nonzero");
  const Scalar one = Scalar::one(field);
  if (q_.is_zero() || q_ == one || q_ == -one) throw Error(ErrorKind::InvalidParameters, "q must not be 0, 1 or -1");
  (void)qracah_eigenvalues(q_, a_, b_, c_, d_, true);
}

std::vector<Scalar> qracah_eigenvalues(const QRacahParams& p) {
  return qracah_eigenvalues(p.q(), p.a(), p.b(), p.c(), p.d(), true);
}

Scalar qracah_value(const QRacahParams& p, const Location& loc) {
  const unsigned d = p.d();
  if (d < 2 || loc.diameter() != d - 2) {
    throw Error(ErrorKind::DimensionMismatch,
                "location " + loc.to_string() + " is not in Delta_{d-2} for d = " + std::to_string(d));
  }
  const long exponent = static_cast<long>(d + loc.t) - static_cast<long>(loc.r) - 1;
  const Scalar num = p.b() * p.q().pow(exponent) - p.c();
  const Scalar den = p.b() * p.q().pow(exponent + 2) - p.c();
  if (den.is_zero()) {
    throw Error(ErrorKind::ZeroDenominator, "b q^" + std::to_string(exponent + 2) + " = c at " + loc.to_string());
  }
  return p.q() * num / den;
}

ValueFunction qracah_value_function(const QRacahParams& p) {
  ValueFunction out;
  out.d = p.d();
  if (p.d() < 2) return out;
  for (const Location& loc : locations(p.d() - 2)) out.values.emplace(loc, qracah_value(p, loc));
  return out;
}

}  // namespace billiard
