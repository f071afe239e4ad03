#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <variant>

#include "hensel/base_field.hpp"
#include "hensel/valuation.hpp"

namespace hensel {

class Truncated;

enum class FieldKind { PAdic, TAdic };

/// A computational valued discrete field with normalized valuation v(π) = 1.
///
/// Two families are housed:
///  - p-adic: K = Q with the p-adic valuation, V = Z localized at p, π = p,
///    residue field F_p;
///  - t-adic: K = k(t) for k = Q or F_p, V = k[t] localized at t, π = t,
///    residue field k.
class Field {
 public:
  /// Throws InvalidField for composite p.
  static Field padic(long p);
  static Field tadic(BaseField constants = BaseField::rationals());

  FieldKind kind() const { return kind_; }
  bool is_padic() const { return kind_ == FieldKind::PAdic; }
  /// The prime p of a p-adic field.
  long prime() const { return p_; }
  /// The constant field k of a t-adic field.
  const BaseField& constants() const { return constants_; }
  /// V/m: F_p for p-adic fields, k for t-adic fields.
  BaseField residue_field() const;

  /// Short descriptor: "p-adic:7", "t-adic:Q", "t-adic:F_5".
  std::string descriptor() const;

  bool operator==(const Field&) const = default;

 private:
  Field(FieldKind kind, long p, BaseField constants) : kind_(kind), p_(p), constants_(constants) {}

  FieldKind kind_;
  long p_;
  BaseField constants_;
};

/// An element of the residue field V/m.
class Residue {
 public:
  Residue(BaseField field, const mpq_class& value) : field_(field), value_(field.normalize(value)) {}

  const BaseField& field() const { return field_; }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return value_ == 0; }
  Residue zero() const { return Residue(field_, 0); }
  Residue one() const { return Residue(field_, 1); }
  Residue from_int(long v) const { return Residue(field_, v); }

  Residue operator+(const Residue& o) const { return Residue(field_, value_ + o.value_); }
  Residue operator-(const Residue& o) const { return Residue(field_, value_ - o.value_); }
  Residue operator*(const Residue& o) const { return Residue(field_, value_ * o.value_); }
  Residue operator-() const { return Residue(field_, -value_); }
  /// Throws DivisionByZero on zero.
  Residue inverse() const { return Residue(field_, field_.inv(value_)); }

  bool operator==(const Residue& o) const { return field_ == o.field_ && value_ == o.value_; }
  std::string to_string() const { return value_.get_str(); }

 private:
  BaseField field_;
  mpq_class value_;
};

/// Canonical quotient of coprime t-polynomials with monic denominator.
struct RatFunc {
  TPoly num;
  TPoly den;
  bool operator==(const RatFunc&) const = default;
};

/// An exact element of K in canonical reduced form.
class Element {
 public:
  static Element integer(const Field& field, const mpz_class& value);
  /// A rational constant: an element of Q for p-adic fields, of k ⊂ k(t) otherwise.
  static Element rational(const Field& field, const mpq_class& value);
  /// The regular parameter π (p or t).
  static Element uniformizer(const Field& field);
  /// num/den in k(t); throws DivisionByZero for a zero denominator.
  static Element ratfunc(const Field& field, const TPoly& num, const TPoly& den);

  const Field& field() const { return field_; }

  bool is_zero() const;
  Element zero() const { return integer(field_, 0); }
  Element one() const { return integer(field_, 1); }
  Element from_int(long v) const { return integer(field_, v); }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator/(const Element& o) const;
  Element operator-() const;
  Element& operator+=(const Element& o) { return *this = *this + o; }
  Element& operator-=(const Element& o) { return *this = *this - o; }
  Element& operator*=(const Element& o) { return *this = *this * o; }
  Element pow(unsigned long k) const;
  /// Throws DivisionByZero on zero.
  Element inverse() const;

  /// k in the decomposition x = u·π^k; infinity iff x = 0.
  ExtValuation valuation() const;
  bool in_valuation_ring() const { return valuation() >= 0; }
  bool in_maximal_ideal() const { return valuation() >= 1; }
  bool is_unit() const { return valuation() == 0; }

  /// Image in V/m; throws NegativeValuation when x ∉ V.
  Residue residue() const;
  /// Class of x modulo π^N; throws NegativeValuation when x ∉ V.
  Truncated truncate(long precision) const;

  bool operator==(const Element& o) const { return field_ == o.field_ && value_ == o.value_; }

  /// p-adic: "98/3"; t-adic: "1 + t" or "(t^2 + t^3)/(1 + t)".
  std::string to_string() const;

  /// p-adic payload.
  const mpq_class& as_rational() const { return std::get<mpq_class>(value_); }
  /// t-adic payload.
  const RatFunc& as_ratfunc() const { return std::get<RatFunc>(value_); }

 private:
  Element(Field field, std::variant<mpq_class, RatFunc> value)
      : field_(field), value_(std::move(value)) {}
  void check_same_field(const Element& o) const;

  Field field_;
  std::variant<mpq_class, RatFunc> value_;
};

inline std::ostream& operator<<(std::ostream& os, const Element& x) { return os << x.to_string(); }

}  // namespace hensel
