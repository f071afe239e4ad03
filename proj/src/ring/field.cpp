#include "hensel/field.hpp"

#include "hensel/error.hpp"
#include "hensel/truncated.hpp"

namespace hensel {

namespace {

RatFunc monic_den(const TPoly& num, const TPoly& den) {
  const mpq_class lc_inv = den.base().inv(den.leading());
  return {num.scaled(lc_inv), den.scaled(lc_inv)};
}

TPoly exact_quotient(const TPoly& a, const TPoly& b) {
  if (b.degree() == 0) return a.scaled(b.base().inv(b.leading()));
  TPoly q(a.base()), r(a.base());
  a.divmod(b, q, r);
  return q;
}

RatFunc canonical(const TPoly& num, const TPoly& den) {
  if (den.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function with zero denominator");
  const BaseField& k = den.base();
  if (num.is_zero()) return {TPoly(k), TPoly::constant(k, 1)};
  if (den.degree() == 0 || num.degree() == 0) return monic_den(num, den);
  const TPoly g = TPoly::gcd(num, den);
  if (g.degree() == 0) return monic_den(num, den);
  return monic_den(exact_quotient(num, g), exact_quotient(den, g));
}

// Common factor of a and b, skipping the gcd when either is constant.
TPoly common_factor(const TPoly& a, const TPoly& b) {
  if (a.degree() <= 0 || b.degree() <= 0) return TPoly::constant(a.base(), 1);
  return TPoly::gcd(a, b);
}

long padic_order(const mpz_class& x, long p) {
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), prime.get_mpz_t()));
}

}  // namespace

Field Field::padic(long p) {
  if (!is_prime(p)) throw Error(ErrorCode::InvalidField, "p = " + std::to_string(p) + " is not prime");
  return Field(FieldKind::PAdic, p, BaseField::prime_field(p));
}

Field Field::tadic(BaseField constants) { return Field(FieldKind::TAdic, 0, constants); }

BaseField Field::residue_field() const { return constants_; }

std::string Field::descriptor() const {
  if (is_padic()) return "p-adic:" + std::to_string(p_);
  return "t-adic:" + constants_.name();
}

Element Element::integer(const Field& field, const mpz_class& value) {
  return rational(field, mpq_class(value));
}

Element Element::rational(const Field& field, const mpq_class& value) {
  if (field.is_padic()) {
    mpq_class v(value);
    v.canonicalize();
    return Element(field, v);
  }
  const BaseField& k = field.constants();
  return Element(field, RatFunc{TPoly::constant(k, k.normalize(value)), TPoly::constant(k, 1)});
}

Element Element::uniformizer(const Field& field) {
  if (field.is_padic()) return integer(field, field.prime());
  const BaseField& k = field.constants();
  return Element(field, RatFunc{TPoly::monomial(k, 1, 1), TPoly::constant(k, 1)});
}

Element Element::ratfunc(const Field& field, const TPoly& num, const TPoly& den) {
  if (field.is_padic() || !(num.base() == field.constants()) || !(den.base() == field.constants())) {
    throw Error(ErrorCode::FieldMismatch, "rational function over the wrong constant field");
  }
  return Element(field, canonical(num, den));
}

void Element::check_same_field(const Element& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::FieldMismatch,
                "operands live in " + field_.descriptor() + " and " + o.field_.descriptor());
  }
}

bool Element::is_zero() const {
  if (field_.is_padic()) return as_rational() == 0;
  return as_ratfunc().num.is_zero();
}

Element Element::operator+(const Element& o) const {
  check_same_field(o);
  if (field_.is_padic()) return Element(field_, as_rational() + o.as_rational());
  const RatFunc& a = as_ratfunc();
  const RatFunc& b = o.as_ratfunc();
  if (a.den == b.den) return Element(field_, canonical(a.num + b.num, a.den));
  const TPoly g = common_factor(a.den, b.den);
  const TPoly ad = exact_quotient(a.den, g);
  const TPoly bd = exact_quotient(b.den, g);
  const TPoly num = a.num * bd + b.num * ad;
  // Only factors of g can cancel.
  if (g.degree() <= 0) return Element(field_, monic_den(num, ad * b.den));
  return Element(field_, canonical(num, ad * b.den));
}

Element Element::operator-() const {
  if (field_.is_padic()) return Element(field_, mpq_class(-as_rational()));
  const RatFunc& a = as_ratfunc();
  return Element(field_, RatFunc{-a.num, a.den});
}

Element Element::operator-(const Element& o) const { return *this + (-o); }

Element Element::operator*(const Element& o) const {
  check_same_field(o);
  if (field_.is_padic()) return Element(field_, as_rational() * o.as_rational());
  const RatFunc& a = as_ratfunc();
  const RatFunc& b = o.as_ratfunc();
  if (a.num.is_zero() || b.num.is_zero()) return zero();
  // With a, b reduced, cross-cancelling leaves a reduced product.
  const TPoly g1 = common_factor(a.num, b.den);
  const TPoly g2 = common_factor(b.num, a.den);
  return Element(field_, monic_den(exact_quotient(a.num, g1) * exact_quotient(b.num, g2),
                                   exact_quotient(a.den, g2) * exact_quotient(b.den, g1)));
}

Element Element::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (field_.is_padic()) return Element(field_, mpq_class(1 / as_rational()));
  const RatFunc& a = as_ratfunc();
  return Element(field_, canonical(a.den, a.num));
}

Element Element::operator/(const Element& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

Element Element::pow(unsigned long k) const {
  Element result = one();
  Element base = *this;
  while (k > 0) {
    if (k & 1UL) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

ExtValuation Element::valuation() const {
  if (is_zero()) return ExtValuation::infinity();
  if (field_.is_padic()) {
    const mpq_class& q = as_rational();
    return padic_order(q.get_num(), field_.prime()) - padic_order(q.get_den(), field_.prime());
  }
  const RatFunc& a = as_ratfunc();
  return a.num.order() - a.den.order();
}

Residue Element::residue() const {
  const ExtValuation v = valuation();
  if (v < 0) throw Error(ErrorCode::NegativeValuation, "residue of " + to_string() + " outside V");
  if (field_.is_padic()) return truncate(1).residue();
  const BaseField& k = field_.constants();
  const RatFunc& a = as_ratfunc();
  return Residue(k, k.mul(a.num.coeff(0), k.inv(a.den.coeff(0))));
}

Truncated Element::truncate(long precision) const {
  if (precision < 1) throw Error(ErrorCode::PreconditionFailed, "precision must be at least 1");
  if (valuation() < 0) {
    throw Error(ErrorCode::NegativeValuation, "cannot truncate " + to_string() + ": valuation " +
                                                  valuation().to_string() + " < 0");
  }
  if (field_.is_padic()) {
    mpz_class modulus;
    mpz_ui_pow_ui(modulus.get_mpz_t(), static_cast<unsigned long>(field_.prime()),
                  static_cast<unsigned long>(precision));
    const mpq_class& q = as_rational();
    mpz_class den_inv;
    mpz_class den = q.get_den();
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    mpz_class r = q.get_num() * den_inv;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
    return Truncated::from_integer(field_, precision, r);
  }
  const RatFunc& a = as_ratfunc();
  return Truncated::from_digits(field_, precision,
                                a.num.series_quotient(a.den, static_cast<std::size_t>(precision)));
}

std::string Element::to_string() const {
  if (field_.is_padic()) return as_rational().get_str();
  const RatFunc& a = as_ratfunc();
  if (a.den.is_one()) return a.num.to_string();
  return "(" + a.num.to_string() + ")/(" + a.den.to_string() + ")";
}

}  // namespace hensel
