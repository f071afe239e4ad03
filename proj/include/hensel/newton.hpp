#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hensel/field.hpp"
#include "hensel/linalg.hpp"
#include "hensel/matrix.hpp"
#include "hensel/multipoly.hpp"
#include "hensel/truncated.hpp"

namespace hensel {

/// n polynomials in n variables over V together with a candidate
/// approximate simple zero.
struct NewtonSystem {
  Field field;
  std::vector<MultiPoly<Element>> polys;
  std::vector<Element> point;

  std::size_t size() const { return polys.size(); }
};

struct ValidationReport {
  bool shape_ok = false;
  bool coefficients_in_v = false;
  bool point_in_v = false;
  /// v(f_j(a)) for each equation.
  std::vector<ExtValuation> residual_valuations;
  /// Image of det J(a) in V/m.
  std::optional<Residue> jacobian_residue;
  bool passed = false;
  std::vector<std::string> failures;
};

/// Checks f_j(a) ∈ m for every j and det J(a) ∉ m. Never throws for a
/// malformed system; the report carries every failure.
ValidationReport validate(const NewtonSystem& system);

/// One snapshot (m, a^(m), U^(m)) of the quadratic iteration.
struct CertificateStep {
  long index = 0;
  std::vector<Truncated> point;
  Matrix<Truncated> inverse;
};

/// Per-step witnesses of the congruences
///   a^(m+1) ≡ a^(m),  U^(m+1) ≡ U^(m),  f(a^(m)) ≡ 0,  U^(m) J(a^(m)) ≡ I
/// modulo π^(2^m), all recorded at working precision N.
struct LiftCertificate {
  long precision = 1;
  std::vector<CertificateStep> steps;

  /// Image under V̂/π^N -> V̂/π^M, keeping the steps needed to reach M.
  LiftCertificate reduced(long precision) const;
};

struct NewtonOptions {
  /// U^(0): any inverse of J(a) modulo m, at working precision. Defaults to
  /// the residue-field inverse lifted with zero higher digits.
  std::optional<Matrix<Truncated>> initial_inverse;
  /// Iterations to run past the first m with 2^m >= N.
  int extra_steps = 0;
};

struct NewtonResult {
  std::vector<Truncated> zero;
  LiftCertificate certificate;
};

/// Quadratic Newton lifting at fixed working precision N:
///   a^(m+1) = a^(m) - U^(m) f(a^(m)),   U^(m+1) = U^(m) (2I - J(a^(m+1)) U^(m)),
/// stopping at the first m with 2^m >= N. Throws ValidationFailed when the
/// system is not a Newton system at its point. If f(a) ≡ 0 mod π^N the point
/// is returned with an empty certificate.
NewtonResult newton_solve(const NewtonSystem& system, long precision, const NewtonOptions& options = {});

struct CertificateCheck {
  bool valid = false;
  std::optional<long> failed_step;
  /// "schedule", "seed", "point-step", "inverse-step", "residual" or "inverse-jacobian".
  std::string family;
  std::string detail;

  explicit operator bool() const { return valid; }
};

/// Re-evaluates every congruence family of the certificate against the
/// system using evaluation and modular comparison only.
CertificateCheck verify_certificate(const NewtonSystem& system, const LiftCertificate& certificate);

/// True iff z1 ≡ z2 modulo the common precision. Both inputs must be zeros
/// of the system congruent to its point mod π (PreconditionFailed otherwise).
bool uniqueness_check(const NewtonSystem& system, const std::vector<Truncated>& z1,
                      const std::vector<Truncated>& z2);

/// g_j(X) = f_j(X + a) with point 0. Throws ValidationFailed.
NewtonSystem translate_to_origin(const NewtonSystem& system);

/// The system's polynomials reduced modulo π^N (coefficients must lie in V).
std::vector<MultiPoly<Truncated>> truncate_system(const NewtonSystem& system, long precision);

std::vector<Truncated> truncate_point(const std::vector<Element>& point, long precision);

}  // namespace hensel
