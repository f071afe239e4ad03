#include "hensel/hensel.hpp"

#include "hensel/error.hpp"

namespace hensel {

namespace {

void require_integral(const ExactPoly& f) {
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    if (!f.coeffs()[k].in_valuation_ring()) {
      throw Error(ErrorCode::NegativeValuation, "coefficient a" + std::to_string(k) + " = " +
                                                    f.coeffs()[k].to_string() + " is not in V");
    }
  }
}

NewtonSystem as_system(const HenselCode& code) {
  const Field& field = code.a.field();
  return NewtonSystem{field, {MultiPoly<Element>::from_uni(code.f)}, {code.a}};
}

}  // namespace

void check_hensel_code(const HenselCode& code) {
  if (code.f.is_zero()) throw Error(ErrorCode::NotAHenselCode, "f is the zero polynomial");
  for (const auto& c : code.f.coeffs()) {
    if (!c.in_valuation_ring()) {
      throw Error(ErrorCode::NotAHenselCode, "coefficient " + c.to_string() + " has valuation " +
                                                 c.valuation().to_string() + " < 0");
    }
  }
  const ExtValuation va = code.a.valuation();
  if (va < 0) throw Error(ErrorCode::NotAHenselCode, "v(a) = " + va.to_string() + " < 0");
  const ExtValuation v0 = code.f.eval(code.a).valuation();
  if (v0 < 1) throw Error(ErrorCode::NotAHenselCode, "f(a) not in m: v(f(a)) = " + v0.to_string());
  const ExtValuation v1 = code.f.derivative().eval(code.a).valuation();
  if (v1 != 0) throw Error(ErrorCode::NotAHenselCode, "f'(a) not a unit: v(f'(a)) = " + v1.to_string());
}

NewtonResult hensel_lift_certified(const HenselCode& code, long precision, const NewtonOptions& options) {
  check_hensel_code(code);
  return newton_solve(as_system(code), precision, options);
}

Truncated hensel_lift(const HenselCode& code, long precision, const NewtonOptions& options) {
  return hensel_lift_certified(code, precision, options).zero.front();
}

SpecialPolynomial::SpecialPolynomial(std::size_t degree, std::vector<Element> low_coeffs)
    : degree_(degree), low_(std::move(low_coeffs)) {
  if (degree_ < 2) throw Error(ErrorCode::DegreeTooSmall, "special polynomials have degree >= 2");
  if (low_.size() != degree_ - 1) {
    throw Error(ErrorCode::ArityMismatch, "expected " + std::to_string(degree_ - 1) + " low coefficients");
  }
  for (std::size_t k = 0; k < low_.size(); ++k) {
    if (!low_[k].in_maximal_ideal()) {
      throw Error(ErrorCode::ConstantNotInM, "a" + std::to_string(k) + " = " + low_[k].to_string() +
                                                 " has valuation " + low_[k].valuation().to_string());
    }
  }
}

ExactPoly SpecialPolynomial::to_poly() const {
  std::vector<Element> c(low_);
  c.push_back(-low_.front().one());
  c.push_back(low_.front().one());
  return ExactPoly(low_.front(), std::move(c));
}

Truncated special_zero(const SpecialPolynomial& h, long precision) {
  const Element one = h.low_coeffs().front().one();
  return hensel_lift(HenselCode{h.to_poly(), one}, precision);
}

SpecialPolynomial build_herve_polynomial(const ExactPoly& f) {
  const long n = f.degree();
  if (n < 2) throw Error(ErrorCode::DegreeTooSmall, "degree " + std::to_string(n) + " < 2; solve linearly");
  require_integral(f);
  const Element& a0 = f.coeff(0);
  const Element& a1 = f.coeff(1);
  if (!a0.in_maximal_ideal()) {
    throw Error(ErrorCode::ConstantNotInM, "v(a0) = " + a0.valuation().to_string() + " < 1");
  }
  if (!a1.is_unit()) throw Error(ErrorCode::A1NotUnit, "v(a1) = " + a1.valuation().to_string() + " != 0");

  // low[n - j] = a0 · (-1)^j a_j a0^(j-2) a1^(-j), j = 2..n.
  const Element a1_inv = a1.inverse();
  std::vector<Element> low(static_cast<std::size_t>(n - 1), a0.zero());
  Element a0_pow = a0.one();
  Element a1_inv_pow = a1_inv * a1_inv;
  for (long j = 2; j <= n; ++j) {
    Element term = a0 * f.coeff(static_cast<std::size_t>(j)) * a0_pow * a1_inv_pow;
    if (j % 2 != 0) term = -term;
    low[static_cast<std::size_t>(n - j)] = term;
    a0_pow *= a0;
    a1_inv_pow *= a1_inv;
  }
  return SpecialPolynomial(static_cast<std::size_t>(n), std::move(low));
}

IdentityCheck herve_identity_check(const ExactPoly& f, const ExactPoly& g) {
  IdentityCheck out;
  const long n = f.degree();
  if (n < 1 || f.coeff(1).is_zero()) return out;
  const Element& a0 = f.coeff(0);
  const Element c = -(a0 / f.coeff(1));

  // Right-hand side: coefficient of X^(n-k) is a_k c^k.
  std::vector<Element> rhs(static_cast<std::size_t>(n + 1), a0.zero());
  Element c_pow = a0.one();
  for (long k = 0; k <= n; ++k) {
    rhs[static_cast<std::size_t>(n - k)] = f.coeff(static_cast<std::size_t>(k)) * c_pow;
    c_pow *= c;
  }
  const ExactPoly lhs = g.scaled(a0);
  const std::size_t len = std::max(rhs.size(), lhs.coeffs().size());
  for (std::size_t i = 0; i < len; ++i) {
    const Element r = i < rhs.size() ? rhs[i] : a0.zero();
    if (!(lhs.coeff(i) == r)) {
      out.first_mismatch = i;
      return out;
    }
  }
  out.holds = true;
  return out;
}

Truncated herve_lift(const ExactPoly& f, long precision) {
  if (f.degree() < 1) throw Error(ErrorCode::DegreeTooSmall, "constant polynomial has no root to lift");
  require_integral(f);
  const Element& a0 = f.coeff(0);
  const Element& a1 = f.coeff(1);
  if (!a0.in_maximal_ideal()) {
    throw Error(ErrorCode::ConstantNotInM, "v(a0) = " + a0.valuation().to_string() + " < 1");
  }
  if (!a1.is_unit()) throw Error(ErrorCode::A1NotUnit, "v(a1) = " + a1.valuation().to_string() + " != 0");
  if (f.degree() == 1 || a0.is_zero()) return (-(a0 / a1)).truncate(precision);

  const Truncated delta = special_zero(build_herve_polynomial(f), precision);
  const Truncated denom = a1.truncate(precision) * delta;
  return -(a0.truncate(precision) * denom.invert());
}

Truncated hensel_newton(const ExactPoly& f, long precision) {
  if (precision < 1) throw Error(ErrorCode::PreconditionFailed, "precision must be at least 1");
  require_integral(f);
  const Element& a0 = f.coeff(0);
  const Element& a1 = f.coeff(1);
  const ExtValuation v0 = a0.valuation();
  const ExtValuation v1 = a1.valuation();
  if (a1.is_zero() || !(v0 > v1 + v1)) {
    throw Error(ErrorCode::CriterionFailed,
                "v(a0) = " + v0.to_string() + " is not > 2 v(a1) = " + (v1 + v1).to_string());
  }
  if (a0.is_zero()) return a0.truncate(precision);

  // f(X) = F(a1 X) / a1^2 has coefficients a0/a1^2, 1, a_k a1^(k-2).
  const Element a1_sq_inv = (a1 * a1).inverse();
  std::vector<Element> scaled;
  Element a1_pow = a1.one();
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    scaled.push_back(f.coeffs()[k] * a1_pow * a1_sq_inv);
    a1_pow *= a1;
  }
  // ζ mod π^N' gives F(a1 ζ) = a1^2 f(ζ) mod π^(N' + 2 v(a1)); N' = N + 2 v(a1)
  // keeps ξ = a1 ζ determined mod π^N with room to spare.
  const long working = precision + 2 * v1.value();
  const Truncated zeta = herve_lift(ExactPoly(a0, std::move(scaled)), working);
  return (a1.truncate(working) * zeta).reduce(precision);
}

Truncated refine_root(const ExactPoly& f, const Element& a, long precision) {
  if (!separable(f)) throw Error(ErrorCode::NotSeparable, "gcd(f, f') is not constant");
  require_integral(f);
  if (!a.in_valuation_ring()) {
    throw Error(ErrorCode::NegativeValuation, "approximation a = " + a.to_string() + " is not in V");
  }
  const ExtValuation v0 = f.eval(a).valuation();
  const ExtValuation v1 = f.derivative().eval(a).valuation();
  if (!(v0 > v1 + v1)) {
    throw Error(ErrorCode::CriterionFailed, "v(f(a)) = " + v0.to_string() + " is not > 2 v(f'(a)) = " +
                                                (v1 + v1).to_string() + "; supply a closer approximation");
  }
  const Truncated alpha = hensel_newton(f.translate(a), precision);
  return a.truncate(precision) + alpha;
}

bool separable(const ExactPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "separability of the zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace hensel
