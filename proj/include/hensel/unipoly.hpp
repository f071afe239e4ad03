#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hensel/ring.hpp"

namespace hensel {

/// Dense univariate polynomial c_0 + c_1 X + ... + c_d X^d.
///
/// Coefficients that test `is_zero()` are trimmed from the top, so for
/// truncated coefficients the degree is the degree of the image mod π^N.
template <RingElement R>
class UniPoly {
 public:
  explicit UniPoly(const R& proto) : zero_(proto.zero()) {}
  UniPoly(const R& proto, std::vector<R> coeffs) : zero_(proto.zero()), c_(std::move(coeffs)) { trim(); }

  static UniPoly monomial(const R& c, std::size_t k) {
    std::vector<R> v(k + 1, c.zero());
    v[k] = c;
    return UniPoly(c, std::move(v));
  }

  const R& zero_coeff() const { return zero_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& coeff(std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const R& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == zero_.one(); }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
    return UniPoly(zero_, std::move(r));
  }

  UniPoly operator-(const UniPoly& o) const {
    std::vector<R> r(std::max(c_.size(), o.c_.size()), zero_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
    return UniPoly(zero_, std::move(r));
  }

  UniPoly operator-() const {
    std::vector<R> r;
    r.reserve(c_.size());
    for (const R& c : c_) r.push_back(-c);
    return UniPoly(zero_, std::move(r));
  }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(zero_);
    std::vector<R> r(c_.size() + o.c_.size() - 1, zero_);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return UniPoly(zero_, std::move(r));
  }

  UniPoly scaled(const R& s) const {
    std::vector<R> r;
    r.reserve(c_.size());
    for (const R& c : c_) r.push_back(c * s);
    return UniPoly(zero_, std::move(r));
  }

  /// Horner evaluation.
  R eval(const R& x) const {
    R acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(zero_);
    std::vector<R> r;
    r.reserve(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * zero_.from_int(static_cast<long>(k)));
    return UniPoly(zero_, std::move(r));
  }

  /// g(X) = f(X + a), by repeated synthetic division (Taylor shift).
  UniPoly translate(const R& a) const {
    std::vector<R> r(c_);
    const std::size_t n = r.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = n - 1; j > i; --j) r[j - 1] = r[j - 1] + a * r[j];
    }
    return UniPoly(zero_, std::move(r));
  }

  template <class F>
  auto map(F&& fn) const {
    using S = std::decay_t<decltype(fn(zero_))>;
    std::vector<S> r;
    r.reserve(c_.size());
    for (const R& c : c_) r.push_back(fn(c));
    return UniPoly<S>(fn(zero_), std::move(r));
  }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  /// Descending order, e.g. "X^2 + 6*X + 7". Needs R::to_string().
  std::string to_string(const std::string& var = "X") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      const std::string c = c_[k].to_string();
      if (k == 0) {
        os << c;
        continue;
      }
      if (!(c_[k] == zero_.one())) os << "(" << c << ")*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  R zero_;
  std::vector<R> c_;
};

}  // namespace hensel
