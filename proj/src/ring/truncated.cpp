#include "hensel/truncated.hpp"

#include <algorithm>

#include "hensel/error.hpp"

namespace hensel {

namespace {

mpz_class prime_power(long p, long n) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(n));
  return r;
}

void check_precision(long precision) {
  if (precision < 1) throw Error(ErrorCode::PreconditionFailed, "precision must be at least 1");
}

}  // namespace

mpz_class Truncated::modulus() const { return prime_power(field_.prime(), precision_); }

Truncated Truncated::from_integer(const Field& field, long precision, const mpz_class& value) {
  check_precision(precision);
  if (!field.is_padic()) return from_digits(field, precision, {mpq_class(value)});
  Truncated t(field, precision);
  const mpz_class m = t.modulus();
  mpz_fdiv_r(t.int_.get_mpz_t(), value.get_mpz_t(), m.get_mpz_t());
  return t;
}

Truncated Truncated::from_digits(const Field& field, long precision, const std::vector<mpq_class>& digits) {
  check_precision(precision);
  if (static_cast<long>(digits.size()) > precision) {
    throw Error(ErrorCode::PrecisionMismatch, std::to_string(digits.size()) + " digits exceed precision " +
                                                  std::to_string(precision));
  }
  Truncated t(field, precision);
  if (field.is_padic()) {
    const mpz_class p(field.prime());
    mpz_class place(1);
    for (const mpq_class& d : digits) {
      if (d.get_den() != 1 || d < 0 || d >= p) {
        throw Error(ErrorCode::SchemaError, "p-adic digit " + d.get_str() + " outside [0, p)");
      }
      t.int_ += d.get_num() * place;
      place *= p;
    }
    return t;
  }
  const BaseField& k = field.constants();
  t.series_.assign(static_cast<std::size_t>(precision), mpq_class(0));
  for (std::size_t i = 0; i < digits.size(); ++i) t.series_[i] = k.normalize(digits[i]);
  return t;
}

Truncated Truncated::from_residue(const Field& field, long precision, const Residue& r) {
  return from_digits(field, precision, {r.value()});
}

Truncated Truncated::from_int(long v) const {
  if (field_.is_padic()) return from_integer(field_, precision_, v);
  return from_digits(field_, precision_, {field_.constants().from_int(v)});
}

void Truncated::check_compatible(const Truncated& o) const {
  if (!(field_ == o.field_)) {
    throw Error(ErrorCode::FieldMismatch, "truncated operands from " + field_.descriptor() + " and " +
                                              o.field_.descriptor());
  }
  if (precision_ != o.precision_) {
    throw Error(ErrorCode::PrecisionMismatch, "precisions " + std::to_string(precision_) + " and " +
                                                  std::to_string(o.precision_) + " differ");
  }
}

bool Truncated::is_zero() const {
  if (field_.is_padic()) return int_ == 0;
  return std::all_of(series_.begin(), series_.end(), [](const mpq_class& c) { return c == 0; });
}

Truncated Truncated::operator+(const Truncated& o) const {
  check_compatible(o);
  Truncated r(field_, precision_);
  if (field_.is_padic()) {
    r.int_ = int_ + o.int_;
    const mpz_class m = modulus();
    if (r.int_ >= m) r.int_ -= m;
    return r;
  }
  const BaseField& k = field_.constants();
  r.series_.resize(series_.size());
  for (std::size_t i = 0; i < series_.size(); ++i) r.series_[i] = k.add(series_[i], o.series_[i]);
  return r;
}

Truncated Truncated::operator-() const {
  Truncated r(field_, precision_);
  if (field_.is_padic()) {
    r.int_ = int_ == 0 ? mpz_class(0) : mpz_class(modulus() - int_);
    return r;
  }
  const BaseField& k = field_.constants();
  r.series_.resize(series_.size());
  for (std::size_t i = 0; i < series_.size(); ++i) r.series_[i] = k.neg(series_[i]);
  return r;
}

Truncated Truncated::operator-(const Truncated& o) const {
  check_compatible(o);
  return *this + (-o);
}

Truncated Truncated::operator*(const Truncated& o) const {
  check_compatible(o);
  Truncated r(field_, precision_);
  if (field_.is_padic()) {
    r.int_ = int_ * o.int_;
    const mpz_class m = modulus();
    mpz_fdiv_r(r.int_.get_mpz_t(), r.int_.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  r.series_ = series_multiply(field_.constants(), series_, o.series_, series_.size());
  return r;
}

Truncated Truncated::invert() const {
  if (residue().is_zero()) {
    throw Error(ErrorCode::NotAUnit, "cannot invert " + to_string() + ": residue is zero");
  }
  Truncated r(field_, precision_);
  if (field_.is_padic()) {
    const mpz_class m = modulus();
    mpz_invert(r.int_.get_mpz_t(), int_.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  r.series_ = series_divide(field_.constants(), {mpq_class(1)}, series_, series_.size());
  return r;
}

Residue Truncated::residue() const {
  if (field_.is_padic()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), int_.get_mpz_t(), static_cast<unsigned long>(field_.prime()));
    return Residue(field_.residue_field(), mpq_class(r));
  }
  return Residue(field_.residue_field(), series_[0]);
}

long Truncated::order() const {
  if (field_.is_padic()) {
    if (int_ == 0) return precision_;
    mpz_class rest;
    const mpz_class p(field_.prime());
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), int_.get_mpz_t(), p.get_mpz_t()));
  }
  for (std::size_t i = 0; i < series_.size(); ++i) {
    if (series_[i] != 0) return static_cast<long>(i);
  }
  return precision_;
}

Truncated Truncated::reduce(long precision) const {
  check_precision(precision);
  if (precision > precision_) {
    throw Error(ErrorCode::PrecisionMismatch, "cannot raise precision " + std::to_string(precision_) +
                                                  " to " + std::to_string(precision));
  }
  Truncated r(field_, precision);
  if (field_.is_padic()) {
    const mpz_class m = r.modulus();
    mpz_fdiv_r(r.int_.get_mpz_t(), int_.get_mpz_t(), m.get_mpz_t());
    return r;
  }
  r.series_.assign(series_.begin(), series_.begin() + precision);
  return r;
}

bool Truncated::congruent(const Truncated& o, long modulus_exponent) const {
  if (!(field_ == o.field_)) return false;
  const long m = std::min({modulus_exponent, precision_, o.precision_});
  return reduce(m) == o.reduce(m);
}

std::vector<mpq_class> Truncated::digits() const {
  if (!field_.is_padic()) return series_;
  std::vector<mpq_class> out;
  out.reserve(static_cast<std::size_t>(precision_));
  mpz_class rest = int_;
  const mpz_class p(field_.prime());
  for (long i = 0; i < precision_; ++i) {
    mpz_class d;
    mpz_fdiv_qr(rest.get_mpz_t(), d.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
    out.emplace_back(d);
  }
  return out;
}

Element Truncated::to_exact() const {
  if (field_.is_padic()) return Element::integer(field_, int_);
  const BaseField& k = field_.constants();
  return Element::ratfunc(field_, TPoly(k, series_), TPoly::constant(k, 1));
}

std::string Truncated::to_string() const {
  if (field_.is_padic()) return int_.get_str();
  return TPoly(field_.constants(), series_).to_string();
}

std::pair<Truncated, Truncated> align(const Truncated& a, const Truncated& b) {
  const long n = std::min(a.precision(), b.precision());
  return {a.reduce(n), b.reduce(n)};
}

}  // namespace hensel
