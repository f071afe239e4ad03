#pragma once

#include <string>
#include <vector>

#include "hensel/hensel.hpp"
#include "hensel/newton.hpp"

namespace hensel {

/// Jacobian determinant of a square system as a polynomial.
MultiPoly<Element> jacobian_det_poly(const std::vector<MultiPoly<Element>>& polys);

/// A Newton system at the origin together with the basic étale system
/// obtained by adjoining f_{n+1} = (1 + X_{n+1}) Jac(0)^(-1) Jac(X) - 1.
struct EtaleAugmentation {
  NewtonSystem original;
  NewtonSystem augmented;
  Element jac0;
  MultiPoly<Element> jac_poly;

  /// η = Jac(0)/Jac(ξ) - 1 for a zero ξ of the original system; throws
  /// NotAUnit when Jac(ξ) is not a unit.
  Truncated eta(const std::vector<Truncated>& xi) const;
};

/// Throws NotAtOrigin for a nonzero point and Jac0NotUnit when Jac(0) ∉ V^×.
EtaleAugmentation etale_augment(const NewtonSystem& system);

/// Trace form of B = K[X]/<f> in the basis 1, x, ..., x^(d-1):
/// T_ij = s_(i+j) with s_k the k-th power sum of the roots of f.
struct TraceFormData {
  ExactPoly f;
  std::vector<Element> power_sums;
  Matrix<Element> trace_matrix;
};

/// Power sums s_0..s_m from the coefficients of monic f (Newton's identities).
std::vector<Element> power_sums(const ExactPoly& f, std::size_t count);

/// Throws NotMonic.
TraceFormData trace_matrix(const ExactPoly& f);

/// det(trace matrix) != 0. Throws NotMonic.
bool strictly_etale_univariate(const ExactPoly& f);

struct SeparabilityReport {
  long precision = 1;
  /// The Newton zero in the original coordinates.
  std::vector<Truncated> zero;
  /// Jac(ξ) modulo π^N and whether it is a unit.
  Truncated jacobian_at_zero;
  bool jacobian_unit = false;
  /// η and the augmented data at (ξ, η).
  Truncated eta;
  bool augmented_equation_vanishes = false;
  Truncated augmented_jacobian;
  bool augmented_jacobian_unit = false;
  bool certified = false;
  std::vector<std::string> notes;
};

/// Solves the system to precision N, adjoins the étale equation, and checks
/// that the Jacobian data at the computed zero are units mod π^N. Systems not
/// at the origin are translated first. Throws ValidationFailed.
SeparabilityReport certify_separable_system(const NewtonSystem& system, long precision);

}  // namespace hensel
