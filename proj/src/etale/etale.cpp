#include "hensel/etale.hpp"

#include <algorithm>

#include "hensel/error.hpp"

namespace hensel {

MultiPoly<Element> jacobian_det_poly(const std::vector<MultiPoly<Element>>& polys) {
  return det(jacobian(polys));
}

Truncated EtaleAugmentation::eta(const std::vector<Truncated>& xi) const {
  if (xi.empty()) throw Error(ErrorCode::ArityMismatch, "empty zero");
  const long n = xi.front().precision();
  const auto jac_t = jac_poly.map([n](const Element& c) { return c.truncate(n); });
  const Truncated jac_xi = jac_t.eval(xi);
  return jac0.truncate(n) * jac_xi.invert() - jac_xi.one();
}

EtaleAugmentation etale_augment(const NewtonSystem& system) {
  const std::size_t n = system.size();
  if (system.point.size() != n || n == 0) throw Error(ErrorCode::NotSquare, "system is not square");
  if (!std::all_of(system.point.begin(), system.point.end(), [](const Element& x) { return x.is_zero(); })) {
    throw Error(ErrorCode::NotAtOrigin, "augmentation needs the point 0; translate the system first");
  }
  MultiPoly<Element> jac = jacobian_det_poly(system.polys);
  Element jac0 = jac.constant_term();
  if (!jac0.is_unit()) {
    throw Error(ErrorCode::Jac0NotUnit, "Jac(0) = " + jac0.to_string() + " has valuation " +
                                            jac0.valuation().to_string());
  }
  const Element one = jac0.one();
  const auto x_new = MultiPoly<Element>::variable(n + 1, n, one);
  const auto f_extra = (MultiPoly<Element>::constant(n + 1, one) + x_new) *
                           jac.with_nvars(n + 1).scaled(jac0.inverse()) -
                       MultiPoly<Element>::constant(n + 1, one);

  NewtonSystem augmented{system.field, {}, std::vector<Element>(n + 1, one.zero())};
  for (const auto& f : system.polys) augmented.polys.push_back(f.with_nvars(n + 1));
  augmented.polys.push_back(f_extra);
  return EtaleAugmentation{system, std::move(augmented), std::move(jac0), std::move(jac)};
}

std::vector<Element> power_sums(const ExactPoly& f, std::size_t count) {
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "power sums need a monic polynomial");
  const long d = f.degree();
  std::vector<Element> s;
  s.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const long kk = static_cast<long>(k);
    if (k == 0) {
      s.push_back(f.zero_coeff().from_int(d));
      continue;
    }
    // s_k = -Σ_{i=1}^{min(k-1, d)} c_{d-i} s_{k-i} - [k <= d] k c_{d-k}
    Element acc = f.zero_coeff();
    for (long i = 1; i <= std::min(kk - 1, d); ++i) acc += f.coeff(static_cast<std::size_t>(d - i)) * s[k - i];
    if (kk <= d) acc += f.zero_coeff().from_int(kk) * f.coeff(static_cast<std::size_t>(d - kk));
    s.push_back(-acc);
  }
  return s;
}

TraceFormData trace_matrix(const ExactPoly& f) {
  if (!f.is_monic()) throw Error(ErrorCode::NotMonic, "trace form needs a monic polynomial");
  const long d = f.degree();
  if (d < 1) throw Error(ErrorCode::NotMonic, "trace form needs degree >= 1");
  const std::size_t dd = static_cast<std::size_t>(d);
  std::vector<Element> s = power_sums(f, 2 * dd - 1);
  Matrix<Element> t(dd, dd, f.zero_coeff());
  for (std::size_t i = 0; i < dd; ++i) {
    for (std::size_t j = 0; j < dd; ++j) t(i, j) = s[i + j];
  }
  return TraceFormData{f, std::move(s), std::move(t)};
}

bool strictly_etale_univariate(const ExactPoly& f) { return !det(trace_matrix(f).trace_matrix).is_zero(); }

SeparabilityReport certify_separable_system(const NewtonSystem& system, long precision) {
  const ValidationReport report = validate(system);
  if (!report.passed) {
    std::string detail;
    for (const auto& f : report.failures) detail += (detail.empty() ? "" : "; ") + f;
    throw Error(ErrorCode::ValidationFailed, detail);
  }
  const bool at_origin =
      std::all_of(system.point.begin(), system.point.end(), [](const Element& x) { return x.is_zero(); });
  const NewtonSystem origin = at_origin ? system : translate_to_origin(system);
  const std::vector<Truncated> zeta = newton_solve(origin, precision).zero;

  const EtaleAugmentation aug = etale_augment(origin);
  const auto jac_t = aug.jac_poly.map([precision](const Element& c) { return c.truncate(precision); });
  const Truncated jac_zeta = jac_t.eval(zeta);

  SeparabilityReport out{precision, {}, jac_zeta, false, jac_zeta.zero(), false, jac_zeta.zero(), false, false, {}};
  for (std::size_t i = 0; i < zeta.size(); ++i) out.zero.push_back(zeta[i] + system.point[i].truncate(precision));
  out.jacobian_unit = !jac_zeta.residue().is_zero();
  if (out.jacobian_unit) {
    out.eta = aug.eta(zeta);
    std::vector<Truncated> ext(zeta);
    ext.push_back(out.eta);
    const auto polys_t = truncate_system(aug.augmented, precision);
    out.augmented_equation_vanishes = polys_t.back().eval(ext).is_zero();
    const auto jac1 = jacobian_det_poly(aug.augmented.polys).map([precision](const Element& c) {
      return c.truncate(precision);
    });
    out.augmented_jacobian = jac1.eval(ext);
    out.augmented_jacobian_unit = !out.augmented_jacobian.residue().is_zero();
  }
  out.certified = out.jacobian_unit && out.augmented_equation_vanishes && out.augmented_jacobian_unit;
  out.notes = {
      "Jacobian units at the lifted zero of the etale-augmented system witness that the quotient algebra is "
      "unramified at this zero, modulo pi^N",
      "strict etale certification of the multivariate quotient algebra is not attempted",
      "no claim is made about the degree of the extension generated by the zero",
  };
  return out;
}

}  // namespace hensel
