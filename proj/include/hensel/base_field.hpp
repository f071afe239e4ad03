#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hensel {

/// A discrete field of constants: either Q (characteristic 0) or F_p.
/// Values are carried as mpq_class; in F_p they are integers in [0, p).
class BaseField {
 public:
  static BaseField rationals() { return BaseField(0); }
  /// Throws InvalidField if p is not prime.
  static BaseField prime_field(long p);

  long characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }

  mpq_class normalize(const mpq_class& x) const;
  mpq_class from_int(long v) const { return normalize(mpq_class(v)); }
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return normalize(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return normalize(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return normalize(a * b); }
  mpq_class neg(const mpq_class& a) const { return normalize(-a); }
  /// Throws DivisionByZero on zero.
  mpq_class inv(const mpq_class& a) const;

  /// "Q" or "F_p".
  std::string name() const;
  /// Canonical text of a value: "3", "-1/8" over Q; "0".."p-1" over F_p.
  static std::string format(const mpq_class& x);

  bool operator==(const BaseField&) const = default;

 private:
  explicit BaseField(long p) : p_(p) {}
  long p_;
};

bool is_prime(long p);

/// Dense polynomial in t over a BaseField, trimmed so the last coefficient
/// is nonzero. Used for the numerators and denominators of t-adic elements.
class TPoly {
 public:
  explicit TPoly(BaseField base) : base_(base) {}
  TPoly(BaseField base, std::vector<mpq_class> coeffs);

  static TPoly constant(BaseField base, const mpq_class& c);
  static TPoly monomial(BaseField base, const mpq_class& c, std::size_t degree);

  const BaseField& base() const { return base_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  /// Coefficient of t^i (zero past the degree).
  mpq_class coeff(std::size_t i) const;
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  const mpq_class& leading() const { return c_.back(); }
  /// Index of the lowest nonzero coefficient (the t-adic order); -1 for zero.
  long order() const;

  TPoly operator+(const TPoly& o) const;
  TPoly operator-(const TPoly& o) const;
  TPoly operator*(const TPoly& o) const;
  TPoly operator-() const;
  TPoly scaled(const mpq_class& c) const;
  /// Drops the factor t^k; requires k <= order().
  TPoly shifted_down(std::size_t k) const;

  /// Euclidean division; throws DivisionByZero on zero divisor.
  void divmod(const TPoly& divisor, TPoly& quotient, TPoly& remainder) const;
  TPoly monic() const;
  static TPoly gcd(TPoly a, TPoly b);

  /// Power-series coefficients c_0..c_{n-1} of this / den (den(0) != 0).
  std::vector<mpq_class> series_quotient(const TPoly& den, std::size_t n) const;

  /// Ascending-order text, e.g. "1 + 1/2*t - 1/8*t^2".
  std::string to_string() const;

  bool operator==(const TPoly& o) const { return base_ == o.base_ && c_ == o.c_; }

 private:
  void trim();
  BaseField base_;
  std::vector<mpq_class> c_;
};

/// Power-series quotient of coefficient lists over `base`, truncated to n terms.
std::vector<mpq_class> series_divide(const BaseField& base, const std::vector<mpq_class>& num,
                                     const std::vector<mpq_class>& den, std::size_t n);

/// Product of two coefficient lists truncated to n terms.
std::vector<mpq_class> series_multiply(const BaseField& base, const std::vector<mpq_class>& a,
                                       const std::vector<mpq_class>& b, std::size_t n);

}  // namespace hensel
