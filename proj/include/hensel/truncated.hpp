#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hensel/field.hpp"

namespace hensel {

/// An element of the completion V̂ known modulo π^N (absolute precision N).
///
/// p-adic residues are integers in [0, p^N); t-adic residues are coefficient
/// lists of length N. Binary operations require equal precision and throw
/// PrecisionMismatch otherwise; lower one side with `reduce` first.
class Truncated {
 public:
  /// Class of an integer modulo p^N (p-adic fields only).
  static Truncated from_integer(const Field& field, long precision, const mpz_class& value);
  /// Digit list (base p, or t-coefficients), least significant first. Lists
  /// shorter than N are zero-padded; longer lists are rejected.
  static Truncated from_digits(const Field& field, long precision, const std::vector<mpq_class>& digits);
  /// Residue-field value with all higher digits zero.
  static Truncated from_residue(const Field& field, long precision, const Residue& r);

  const Field& field() const { return field_; }
  long precision() const { return precision_; }

  bool is_zero() const;
  Truncated zero() const { return from_digits(field_, precision_, {}); }
  Truncated one() const { return from_digits(field_, precision_, {mpq_class(1)}); }
  Truncated from_int(long v) const;

  Truncated operator+(const Truncated& o) const;
  Truncated operator-(const Truncated& o) const;
  Truncated operator*(const Truncated& o) const;
  Truncated operator-() const;
  Truncated& operator+=(const Truncated& o) { return *this = *this + o; }
  Truncated& operator-=(const Truncated& o) { return *this = *this - o; }
  Truncated& operator*=(const Truncated& o) { return *this = *this * o; }
  /// Multiplication by an exact element of V.
  Truncated operator*(const Element& x) const { return *this * x.truncate(precision_); }

  /// b with a·b ≡ 1 mod π^N; throws NotAUnit when the residue vanishes.
  Truncated invert() const;

  Residue residue() const;
  /// Index of the lowest nonzero digit, or N when the class is zero.
  long order() const;
  /// Image modulo π^M for M <= N.
  Truncated reduce(long precision) const;
  /// Equality of the images modulo π^M (M <= both precisions).
  bool congruent(const Truncated& o, long modulus_exponent) const;

  /// Digits least significant first, always N of them.
  std::vector<mpq_class> digits() const;
  /// Canonical representative as an exact element of V.
  Element to_exact() const;
  /// Decimal residue (p-adic) or the representative polynomial (t-adic).
  std::string to_string() const;

  /// p-adic payload: the residue in [0, p^N).
  const mpz_class& integer_residue() const { return int_; }

  bool operator==(const Truncated& o) const {
    return field_ == o.field_ && precision_ == o.precision_ && int_ == o.int_ && series_ == o.series_;
  }

 private:
  Truncated(Field field, long precision) : field_(field), precision_(precision) {}
  void check_compatible(const Truncated& o) const;
  mpz_class modulus() const;

  Field field_;
  long precision_;
  mpz_class int_;
  std::vector<mpq_class> series_;
};

/// Lowers both operands to the smaller precision.
std::pair<Truncated, Truncated> align(const Truncated& a, const Truncated& b);

}  // namespace hensel
