#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "hensel/error.hpp"
#include "hensel/ring.hpp"
#include "hensel/unipoly.hpp"

namespace hensel {

using Monomial = std::vector<unsigned>;

inline unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0U); }

/// Graded lexicographic order, largest first.
struct GrLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = total_degree(a);
    const unsigned db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
  }
};

/// Sparse polynomial in a fixed number of variables; zero coefficients are
/// never stored.
template <RingElement R>
class MultiPoly {
 public:
  using TermMap = std::map<Monomial, R, GrLexGreater>;

  MultiPoly(std::size_t nvars, const R& proto) : nvars_(nvars), zero_(proto.zero()) {}

  static MultiPoly constant(std::size_t nvars, const R& c) {
    MultiPoly p(nvars, c);
    p.add_term(Monomial(nvars, 0), c);
    return p;
  }

  static MultiPoly variable(std::size_t nvars, std::size_t i, const R& proto) {
    MultiPoly p(nvars, proto);
    Monomial m(nvars, 0);
    m.at(i) = 1;
    p.add_term(std::move(m), proto.one());
    return p;
  }

  static MultiPoly from_uni(const UniPoly<R>& f) {
    MultiPoly p(1, f.zero_coeff());
    for (std::size_t k = 0; k < f.coeffs().size(); ++k) p.add_term({static_cast<unsigned>(k)}, f.coeffs()[k]);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  const R& zero_coeff() const { return zero_; }

  R coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? zero_ : it->second;
  }

  void add_term(Monomial m, const R& c) {
    if (m.size() != nvars_) {
      throw Error(ErrorCode::ArityMismatch, "monomial of length " + std::to_string(m.size()) + " in " +
                                                std::to_string(nvars_) + " variables");
    }
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(std::move(m), c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  bool is_zero() const { return terms_.empty(); }
  MultiPoly zero() const { return MultiPoly(nvars_, zero_); }
  MultiPoly one() const { return constant(nvars_, zero_.one()); }
  MultiPoly from_int(long k) const { return constant(nvars_, zero_.from_int(k)); }

  unsigned total_degree() const {
    return terms_.empty() ? 0U : hensel::total_degree(terms_.begin()->first);
  }
  R constant_term() const { return coeff(Monomial(nvars_, 0)); }

  MultiPoly operator+(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r(*this);
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r(nvars_, zero_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

  MultiPoly operator*(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r(nvars_, zero_);
    for (const auto& [ma, ca] : terms_) {
      for (const auto& [mb, cb] : o.terms_) {
        Monomial m(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(std::move(m), ca * cb);
      }
    }
    return r;
  }

  MultiPoly scaled(const R& s) const {
    MultiPoly r(nvars_, zero_);
    for (const auto& [m, c] : terms_) r.add_term(m, c * s);
    return r;
  }

  bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Term-by-term evaluation with cached powers of each coordinate.
  R eval(std::span<const R> point) const {
    if (point.size() != nvars_) {
      throw Error(ErrorCode::ArityMismatch, "point of arity " + std::to_string(point.size()) +
                                                " for a polynomial in " + std::to_string(nvars_) + " variables");
    }
    std::vector<std::vector<R>> powers(nvars_);
    R acc = zero_;
    for (const auto& [m, c] : terms_) {
      R term = c;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(point[i].one());
        while (pw.size() <= m[i]) pw.push_back(pw.back() * point[i]);
        term = term * pw[m[i]];
      }
      acc = acc + term;
    }
    return acc;
  }

  R eval(const std::vector<R>& point) const { return eval(std::span<const R>(point)); }

  MultiPoly partial(std::size_t i) const {
    if (i >= nvars_) throw Error(ErrorCode::ArityMismatch, "variable index out of range");
    MultiPoly r(nvars_, zero_);
    for (const auto& [m, c] : terms_) {
      if (m[i] == 0) continue;
      Monomial d(m);
      d[i] -= 1;
      r.add_term(std::move(d), c * zero_.from_int(static_cast<long>(m[i])));
    }
    return r;
  }

  /// g(X) = f(X + a) by exact substitution X_i -> X_i + a_i.
  MultiPoly translate(std::span<const R> shift) const {
    if (shift.size() != nvars_) {
      throw Error(ErrorCode::ArityMismatch, "shift of arity " + std::to_string(shift.size()) +
                                                " for a polynomial in " + std::to_string(nvars_) + " variables");
    }
    std::vector<std::vector<MultiPoly>> powers(nvars_);
    MultiPoly r(nvars_, zero_);
    for (const auto& [m, c] : terms_) {
      MultiPoly term = constant(nvars_, c);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(one());
        const MultiPoly linear = variable(nvars_, i, zero_) + constant(nvars_, shift[i]);
        while (pw.size() <= m[i]) pw.push_back(pw.back() * linear);
        term = term * pw[m[i]];
      }
      r = r + term;
    }
    return r;
  }

  MultiPoly translate(const std::vector<R>& shift) const { return translate(std::span<const R>(shift)); }

  /// Same polynomial viewed in `n >= nvars()` variables (new ones appended).
  MultiPoly with_nvars(std::size_t n) const {
    if (n < nvars_) throw Error(ErrorCode::ArityMismatch, "cannot drop variables");
    MultiPoly r(n, zero_);
    for (const auto& [m, c] : terms_) {
      Monomial e(m);
      e.resize(n, 0);
      r.terms_.emplace(std::move(e), c);
    }
    return r;
  }

  /// Univariate view; requires nvars() == 1.
  UniPoly<R> to_uni() const {
    if (nvars_ != 1) throw Error(ErrorCode::ArityMismatch, "not a univariate polynomial");
    std::vector<R> c(terms_.empty() ? 0 : terms_.begin()->first[0] + 1, zero_);
    for (const auto& [m, v] : terms_) c[m[0]] = v;
    return UniPoly<R>(zero_, std::move(c));
  }

  template <class F>
  auto map(F&& fn) const {
    using S = std::decay_t<decltype(fn(zero_))>;
    MultiPoly<S> r(nvars_, fn(zero_));
    for (const auto& [m, c] : terms_) r.add_term(m, fn(c));
    return r;
  }

  /// Graded-lex text such as "x1*x2 + x2^2 - 2". Coefficients print through
  /// R::to_string(); non-integer coefficients are parenthesized.
  std::string to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      std::string text = c.to_string();
      bool negative = false;
      if (!text.empty() && text[0] == '-' && is_plain_number(text.substr(1))) {
        negative = true;
        text = text.substr(1);
      }
      if (first) {
        if (negative) os << "-";
      } else {
        os << (negative ? " - " : " + ");
      }
      first = false;
      const bool is_constant = hensel::total_degree(m) == 0;
      const bool unit_coefficient = text == "1";
      if (is_constant) {
        os << (is_plain_number(text) ? text : "(" + text + ")");
        continue;
      }
      if (!unit_coefficient) {
        os << (is_plain_number(text) ? text : "(" + text + ")") << "*";
      } else if (negative && os.tellp() == 1) {
        // A leading "-x^2" would bind as (-x)^2.
        os << "1*";
      }
      bool first_var = true;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (m[i] == 0) continue;
        if (!first_var) os << "*";
        first_var = false;
        os << names.at(i);
        if (m[i] > 1) os << "^" << m[i];
      }
    }
    return os.str();
  }

 private:
  static bool is_plain_number(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  }

  void check_arity(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) {
      throw Error(ErrorCode::ArityMismatch, "polynomials in " + std::to_string(nvars_) + " and " +
                                                std::to_string(o.nvars_) + " variables");
    }
  }

  std::size_t nvars_;
  R zero_;
  TermMap terms_;
};

}  // namespace hensel
