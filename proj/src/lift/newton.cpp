#include "hensel/newton.hpp"

#include <algorithm>

#include "hensel/error.hpp"

namespace hensel {

namespace {

// min(2^m, cap) without overflow.
long capped_power_of_two(long m, long cap) {
  long v = 1;
  for (long i = 0; i < m && v < cap; ++i) v *= 2;
  return std::min(v, cap);
}

long steps_to_reach(long precision) {
  long m = 0;
  while (capped_power_of_two(m, precision) < precision) ++m;
  return m;
}

bool congruent_vectors(const std::vector<Truncated>& a, const std::vector<Truncated>& b, long e) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].congruent(b[i], e)) return false;
  }
  return true;
}

bool congruent_matrices(const Matrix<Truncated>& a, const Matrix<Truncated>& b, long e) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (!a(i, j).congruent(b(i, j), e)) return false;
    }
  }
  return true;
}

bool all_zero_mod(const std::vector<Truncated>& v, long e) {
  return std::all_of(v.begin(), v.end(), [e](const Truncated& x) { return x.reduce(e).is_zero(); });
}

std::vector<Truncated> evaluate_all(const std::vector<MultiPoly<Truncated>>& polys,
                                    const std::vector<Truncated>& point) {
  std::vector<Truncated> out;
  out.reserve(polys.size());
  for (const auto& f : polys) out.push_back(f.eval(point));
  return out;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

}  // namespace

ValidationReport validate(const NewtonSystem& system) {
  ValidationReport report;
  const std::size_t n = system.polys.size();
  report.shape_ok = n > 0 && system.point.size() == n &&
                    std::all_of(system.polys.begin(), system.polys.end(),
                                [n](const MultiPoly<Element>& f) { return f.nvars() == n; });
  if (!report.shape_ok) {
    report.failures.push_back("system is not square: " + std::to_string(n) + " equations, point of arity " +
                              std::to_string(system.point.size()));
    return report;
  }
  report.coefficients_in_v = true;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [m, c] : system.polys[j].terms()) {
      if (!c.in_valuation_ring()) {
        report.coefficients_in_v = false;
        report.failures.push_back("f" + std::to_string(j + 1) + " has coefficient " + c.to_string() +
                                  " outside V");
        break;
      }
    }
  }
  report.point_in_v = std::all_of(system.point.begin(), system.point.end(),
                                  [](const Element& x) { return x.in_valuation_ring(); });
  if (!report.point_in_v) report.failures.push_back("point has a coordinate outside V");

  bool residuals_ok = true;
  for (std::size_t j = 0; j < n; ++j) {
    const ExtValuation v = system.polys[j].eval(system.point).valuation();
    report.residual_valuations.push_back(v);
    if (v < 1) {
      residuals_ok = false;
      report.failures.push_back("f" + std::to_string(j + 1) + "(a) has valuation " + v.to_string() +
                                ", not in m");
    }
  }
  const Element jac = det(evaluate(jacobian(system.polys), system.point));
  bool jac_ok = false;
  if (jac.in_valuation_ring()) {
    report.jacobian_residue = jac.residue();
    jac_ok = !report.jacobian_residue->is_zero();
  }
  if (!jac_ok) {
    report.failures.push_back("Jacobian determinant " + jac.to_string() + " is not a unit (valuation " +
                              jac.valuation().to_string() + ")");
  }
  report.passed = report.coefficients_in_v && report.point_in_v && residuals_ok && jac_ok;
  return report;
}

std::vector<MultiPoly<Truncated>> truncate_system(const NewtonSystem& system, long precision) {
  std::vector<MultiPoly<Truncated>> out;
  out.reserve(system.polys.size());
  for (const auto& f : system.polys) {
    out.push_back(f.map([precision](const Element& c) { return c.truncate(precision); }));
  }
  return out;
}

std::vector<Truncated> truncate_point(const std::vector<Element>& point, long precision) {
  std::vector<Truncated> out;
  out.reserve(point.size());
  for (const auto& x : point) out.push_back(x.truncate(precision));
  return out;
}

LiftCertificate LiftCertificate::reduced(long target) const {
  if (target > precision) {
    throw Error(ErrorCode::PrecisionMismatch, "cannot raise certificate precision");
  }
  LiftCertificate out;
  out.precision = target;
  if (steps.empty()) return out;
  const long keep = std::min<long>(steps_to_reach(target), static_cast<long>(steps.size()) - 1);
  for (long m = 0; m <= keep; ++m) {
    const CertificateStep& s = steps[static_cast<std::size_t>(m)];
    std::vector<Truncated> pt;
    for (const auto& x : s.point) pt.push_back(x.reduce(target));
    out.steps.push_back({s.index, std::move(pt), s.inverse.map([target](const Truncated& x) {
                           return x.reduce(target);
                         })});
  }
  return out;
}

NewtonResult newton_solve(const NewtonSystem& system, long precision, const NewtonOptions& options) {
  if (precision < 1) throw Error(ErrorCode::PreconditionFailed, "precision must be at least 1");
  const ValidationReport report = validate(system);
  if (!report.passed) throw Error(ErrorCode::ValidationFailed, join(report.failures));

  const std::size_t n = system.size();
  const auto polys = truncate_system(system, precision);
  const auto jac = jacobian(polys);
  std::vector<Truncated> a = truncate_point(system.point, precision);
  std::vector<Truncated> fa = evaluate_all(polys, a);

  NewtonResult result{a, LiftCertificate{precision, {}}};
  if (all_zero_mod(fa, precision)) return result;

  Matrix<Truncated> jac_a = evaluate(jac, a);
  Matrix<Truncated> u = lift_residue_matrix(invert_residue_matrix(residue_matrix(jac_a)), system.field, precision);
  if (options.initial_inverse) {
    const Matrix<Truncated>& given = *options.initial_inverse;
    if (given.rows() != n || given.cols() != n || !(given.zero_coeff().precision() == precision) ||
        !congruent_matrices(given * jac_a, Matrix<Truncated>::identity(n, a.front()), 1)) {
      throw Error(ErrorCode::PreconditionFailed, "initial inverse is not an inverse of J(a) modulo m");
    }
    u = given;
  }

  const Matrix<Truncated> two_i = Matrix<Truncated>::identity(n, a.front()).scaled(a.front().from_int(2));
  const long last = steps_to_reach(precision) + std::max(0, options.extra_steps);
  for (long m = 0;; ++m) {
    result.certificate.steps.push_back({m, a, u});
    if (m == last) break;
    const std::vector<Truncated> correction = u * fa;
    for (std::size_t i = 0; i < n; ++i) a[i] -= correction[i];
    u = u * (two_i - evaluate(jac, a) * u);
    fa = evaluate_all(polys, a);
  }
  result.zero = a;
  return result;
}

CertificateCheck verify_certificate(const NewtonSystem& system, const LiftCertificate& certificate) {
  CertificateCheck check;
  auto fail = [&check](std::optional<long> step, std::string family, std::string detail) {
    check.valid = false;
    check.failed_step = step;
    check.family = std::move(family);
    check.detail = std::move(detail);
    return check;
  };

  const long precision = certificate.precision;
  const std::size_t n = system.size();
  if (precision < 1 || n == 0 || system.point.size() != n) {
    return fail(std::nullopt, "schedule", "malformed system or precision");
  }
  std::vector<MultiPoly<Truncated>> polys;
  std::vector<Truncated> seed;
  try {
    polys = truncate_system(system, precision);
    seed = truncate_point(system.point, precision);
  } catch (const Error& e) {
    return fail(std::nullopt, "schedule", e.what());
  }

  if (certificate.steps.empty()) {
    if (!all_zero_mod(evaluate_all(polys, seed), precision)) {
      return fail(std::nullopt, "residual", "empty certificate but f(a) is not zero mod pi^N");
    }
    check.valid = true;
    return check;
  }

  const auto jac = jacobian(polys);
  const Matrix<Truncated> identity = Matrix<Truncated>::identity(n, seed.front());
  const auto& steps = certificate.steps;
  for (std::size_t m = 0; m < steps.size(); ++m) {
    const CertificateStep& s = steps[m];
    const long idx = static_cast<long>(m);
    if (s.index != idx) return fail(idx, "schedule", "step indices are not consecutive from 0");
    if (s.point.size() != n || s.inverse.rows() != n || s.inverse.cols() != n) {
      return fail(idx, "schedule", "step has the wrong dimension");
    }
    for (const auto& x : s.point) {
      if (!(x.field() == system.field) || x.precision() != precision) {
        return fail(idx, "schedule", "point entry at the wrong field or precision");
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Truncated& x = s.inverse(i, j);
        if (!(x.field() == system.field) || x.precision() != precision) {
          return fail(idx, "schedule", "matrix entry at the wrong field or precision");
        }
      }
    }
  }
  if (!congruent_vectors(steps.front().point, seed, precision)) {
    return fail(0, "seed", "a^(0) differs from the system point");
  }
  const long last = static_cast<long>(steps.size()) - 1;
  if (capped_power_of_two(last, precision) < precision) {
    return fail(last, "schedule", "final step does not reach precision N");
  }
  for (long m = 0; m <= last; ++m) {
    const CertificateStep& s = steps[static_cast<std::size_t>(m)];
    const long e = capped_power_of_two(m, precision);
    if (!all_zero_mod(evaluate_all(polys, s.point), e)) {
      return fail(m, "residual", "f(a^(m)) is not 0 mod pi^" + std::to_string(e));
    }
    if (!congruent_matrices(s.inverse * evaluate(jac, s.point), identity, e)) {
      return fail(m, "inverse-jacobian", "U^(m) J(a^(m)) is not I mod pi^" + std::to_string(e));
    }
    if (m < last) {
      const CertificateStep& next = steps[static_cast<std::size_t>(m + 1)];
      if (!congruent_vectors(next.point, s.point, e)) {
        return fail(m, "point-step", "a^(m+1) differs from a^(m) mod pi^" + std::to_string(e));
      }
      if (!congruent_matrices(next.inverse, s.inverse, e)) {
        return fail(m, "inverse-step", "U^(m+1) differs from U^(m) mod pi^" + std::to_string(e));
      }
    }
  }
  check.valid = true;
  return check;
}

bool uniqueness_check(const NewtonSystem& system, const std::vector<Truncated>& z1,
                      const std::vector<Truncated>& z2) {
  const std::size_t n = system.size();
  if (z1.size() != n || z2.size() != n || n == 0) {
    throw Error(ErrorCode::PreconditionFailed, "zero vectors do not match the system dimension");
  }
  auto check_zero = [&](const std::vector<Truncated>& z, const char* name) {
    const long prec = std::min_element(z.begin(), z.end(), [](const Truncated& a, const Truncated& b) {
                        return a.precision() < b.precision();
                      })->precision();
    std::vector<Truncated> zr;
    for (const auto& x : z) zr.push_back(x.reduce(prec));
    const auto polys = truncate_system(system, prec);
    if (!all_zero_mod(evaluate_all(polys, zr), prec)) {
      throw Error(ErrorCode::PreconditionFailed, std::string(name) + " is not a zero mod pi^" + std::to_string(prec));
    }
    if (!congruent_vectors(zr, truncate_point(system.point, prec), 1)) {
      throw Error(ErrorCode::PreconditionFailed, std::string(name) + " is not congruent to the point mod pi");
    }
    return prec;
  };
  const long p1 = check_zero(z1, "z1");
  const long p2 = check_zero(z2, "z2");
  return congruent_vectors(z1, z2, std::min(p1, p2));
}

NewtonSystem translate_to_origin(const NewtonSystem& system) {
  const ValidationReport report = validate(system);
  if (!report.passed) throw Error(ErrorCode::ValidationFailed, join(report.failures));
  NewtonSystem out{system.field, {}, {}};
  for (const auto& f : system.polys) out.polys.push_back(f.translate(system.point));
  out.point.assign(system.size(), Element::integer(system.field, 0));
  return out;
}

}  // namespace hensel
