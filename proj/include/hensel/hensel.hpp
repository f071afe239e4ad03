#pragma once

#include <optional>
#include <vector>

#include "hensel/field.hpp"
#include "hensel/newton.hpp"
#include "hensel/truncated.hpp"
#include "hensel/unipoly.hpp"

namespace hensel {

using ExactPoly = UniPoly<Element>;

/// A polynomial over V with an approximate simple root: f(a) ∈ m and
/// f'(a) ∈ V^×. The classical notion asks for monic f; uniqueness of
/// the lifted root does not, so monicity is only reported.
struct HenselCode {
  ExactPoly f;
  Element a;

  bool monic() const { return f.is_monic(); }
};

/// Throws NotAHenselCode naming the failed invariant and its valuation.
void check_hensel_code(const HenselCode& code);

/// The root α ≡ a mod π with f(α) ≡ 0 mod π^N, computed by the quadratic
/// Newton iteration in one variable.
Truncated hensel_lift(const HenselCode& code, long precision, const NewtonOptions& options = {});

/// As hensel_lift, also returning the iteration certificate.
NewtonResult hensel_lift_certified(const HenselCode& code, long precision, const NewtonOptions& options = {});

/// h(X) = X^n - X^(n-1) + Σ_{k<n-1} a_k X^k with every a_k ∈ m.
class SpecialPolynomial {
 public:
  /// Throws DegreeTooSmall for n < 2 and ConstantNotInM if some a_k ∉ m.
  SpecialPolynomial(std::size_t degree, std::vector<Element> low_coeffs);

  std::size_t degree() const { return degree_; }
  const std::vector<Element>& low_coeffs() const { return low_; }
  ExactPoly to_poly() const;

 private:
  std::size_t degree_;
  std::vector<Element> low_;
};

/// δ = 1 + α, v(α) >= 1, with h(δ) ≡ 0 mod π^N.
Truncated special_zero(const SpecialPolynomial& h, long precision);

/// For f = Σ a_k X^k with a_0 ∈ m and a_1 ∈ V^×, the special polynomial
///   g(X) = X^n - X^(n-1) + a_0 Σ_{j=2..n} (-1)^j a_j a_0^(j-2) a_1^(-j) X^(n-j),
/// which satisfies a_0 g(X) = X^n f(-a_0 a_1^(-1) / X).
SpecialPolynomial build_herve_polynomial(const ExactPoly& f);

struct IdentityCheck {
  bool holds = false;
  /// Index of the first coefficient where the two sides differ.
  std::optional<std::size_t> first_mismatch;
  explicit operator bool() const { return holds; }
};

/// Compares the coefficient lists of a_0·g(X) and Σ_k a_k (-a_0/a_1)^k X^(n-k).
IdentityCheck herve_identity_check(const ExactPoly& f, const ExactPoly& g);

/// The root γ = -a_0 (a_1 δ)^(-1) of f in a_0·V̂, where δ is the special zero
/// of the Hervé polynomial. Linear f is solved directly.
Truncated herve_lift(const ExactPoly& f, long precision);

/// For F with a_1 != 0 and v(a_0) > 2 v(a_1): the root ξ = a_1 ζ, ζ the
/// Hervé root of F(a_1 X)/a_1^2. Throws CriterionFailed otherwise.
Truncated hensel_newton(const ExactPoly& f, long precision);

/// Refines an approximate root a of a separable f with v(f(a)) > 2 v(f'(a))
/// to ξ = a + α, α the Hensel–Newton root of f(X + a).
Truncated refine_root(const ExactPoly& f, const Element& a, long precision);

/// gcd(f, f') is constant. Throws ZeroPolynomial on f = 0.
bool separable(const ExactPoly& f);

}  // namespace hensel
