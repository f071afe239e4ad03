#include "hensel/base_field.hpp"

#include <algorithm>
#include <sstream>

#include "hensel/error.hpp"

namespace hensel {

bool is_prime(long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long d = 3; d <= p / d; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

BaseField BaseField::prime_field(long p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "characteristic " + std::to_string(p) + " is not prime");
  }
  return BaseField(p);
}

mpq_class BaseField::normalize(const mpq_class& x) const {
  if (p_ == 0) {
    mpq_class r(x);
    r.canonicalize();
    return r;
  }
  mpz_class modulus(p_);
  mpz_class den = x.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0) {
    throw Error(ErrorCode::DivisionByZero, "denominator vanishes in F_" + std::to_string(p_));
  }
  mpz_class r = x.get_num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), modulus.get_mpz_t());
  return mpq_class(r);
}

mpq_class BaseField::inv(const mpq_class& a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + name());
  return normalize(1 / a);
}

std::string BaseField::name() const {
  return p_ == 0 ? std::string("Q") : "F_" + std::to_string(p_);
}

std::string BaseField::format(const mpq_class& x) { return x.get_str(); }

TPoly::TPoly(BaseField base, std::vector<mpq_class> coeffs) : base_(base), c_(std::move(coeffs)) {
  for (auto& c : c_) c = base_.normalize(c);
  trim();
}

TPoly TPoly::constant(BaseField base, const mpq_class& c) { return TPoly(base, {c}); }

TPoly TPoly::monomial(BaseField base, const mpq_class& c, std::size_t degree) {
  std::vector<mpq_class> v(degree + 1, mpq_class(0));
  v[degree] = c;
  return TPoly(base, std::move(v));
}

void TPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpq_class TPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }

bool TPoly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

long TPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] != 0) return static_cast<long>(i);
  }
  return -1;
}

TPoly TPoly::operator+(const TPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) + o.coeff(i);
  return TPoly(base_, std::move(r));
}

TPoly TPoly::operator-(const TPoly& o) const {
  std::vector<mpq_class> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff(i) - o.coeff(i);
  return TPoly(base_, std::move(r));
}

TPoly TPoly::operator*(const TPoly& o) const {
  if (is_zero() || o.is_zero()) return TPoly(base_);
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return TPoly(base_, std::move(r));
}

TPoly TPoly::operator-() const {
  std::vector<mpq_class> r(c_);
  for (auto& c : r) c = -c;
  return TPoly(base_, std::move(r));
}

TPoly TPoly::scaled(const mpq_class& c) const {
  std::vector<mpq_class> r(c_);
  for (auto& x : r) x *= c;
  return TPoly(base_, std::move(r));
}

TPoly TPoly::shifted_down(std::size_t k) const {
  if (k >= c_.size()) return TPoly(base_);
  return TPoly(base_, std::vector<mpq_class>(c_.begin() + static_cast<long>(k), c_.end()));
}

void TPoly::divmod(const TPoly& divisor, TPoly& quotient, TPoly& remainder) const {
  if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<mpq_class> rem(c_);
  const long dd = divisor.degree();
  const mpq_class lead_inv = base_.inv(divisor.leading());
  std::vector<mpq_class> quo(rem.size() >= divisor.c_.size() ? rem.size() - divisor.c_.size() + 1 : 0,
                             mpq_class(0));
  for (long k = static_cast<long>(rem.size()) - 1; k >= dd; --k) {
    mpq_class q = base_.mul(rem[k], lead_inv);
    if (q == 0) continue;
    quo[k - dd] = q;
    for (long i = 0; i <= dd; ++i) rem[k - dd + i] = base_.sub(rem[k - dd + i], q * divisor.c_[i]);
  }
  quotient = TPoly(base_, std::move(quo));
  remainder = TPoly(base_, std::move(rem));
}

TPoly TPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(base_.inv(leading()));
}

namespace {

// Integer coefficients with content 1 and positive leading coefficient.
std::vector<mpz_class> primitive_part(const std::vector<mpq_class>& c) {
  mpz_class l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> z(c.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    z[i] = c[i].get_num() * (l / c[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (!z.empty() && z.back() < 0) g = -g;
  for (auto& x : z) x /= g;
  return z;
}

// Pseudo-remainder of a by b over Z, reduced to its primitive part.
std::vector<mpz_class> primitive_prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const mpz_class lead = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= b.back();
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] -= lead * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  if (a.empty()) return a;
  std::vector<mpq_class> q(a.begin(), a.end());
  return primitive_part(q);
}

}  // namespace

TPoly TPoly::gcd(TPoly a, TPoly b) {
  if (a.base_.is_rationals() && !a.is_zero() && !b.is_zero()) {
    if (a.degree() < b.degree()) std::swap(a, b);
    std::vector<mpz_class> x = primitive_part(a.c_);
    std::vector<mpz_class> y = primitive_part(b.c_);
    while (!y.empty()) {
      std::vector<mpz_class> r = primitive_prem(std::move(x), y);
      x = std::move(y);
      y = std::move(r);
    }
    return TPoly(a.base_, std::vector<mpq_class>(x.begin(), x.end())).monic();
  }
  while (!b.is_zero()) {
    TPoly q(a.base_), r(a.base_);
    a.divmod(b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::vector<mpq_class> series_multiply(const BaseField& base, const std::vector<mpq_class>& a,
                                       const std::vector<mpq_class>& b, std::size_t n) {
  std::vector<mpq_class> r(n, mpq_class(0));
  for (std::size_t i = 0; i < std::min(a.size(), n); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  for (auto& c : r) c = base.normalize(c);
  return r;
}

std::vector<mpq_class> series_divide(const BaseField& base, const std::vector<mpq_class>& num,
                                     const std::vector<mpq_class>& den, std::size_t n) {
  if (den.empty() || den[0] == 0) {
    throw Error(ErrorCode::NotAUnit, "series divisor has zero constant term");
  }
  const mpq_class d0_inv = base.inv(den[0]);
  std::vector<mpq_class> q(n, mpq_class(0));
  for (std::size_t k = 0; k < n; ++k) {
    mpq_class acc = k < num.size() ? num[k] : mpq_class(0);
    for (std::size_t j = 1; j <= k && j < den.size(); ++j) acc -= den[j] * q[k - j];
    q[k] = base.mul(acc, d0_inv);
  }
  return q;
}

std::vector<mpq_class> TPoly::series_quotient(const TPoly& den, std::size_t n) const {
  return series_divide(base_, c_, den.c_, n);
}

std::string TPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpq_class c = c_[i];
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) {
      os << c.get_str() << "*";
    } else if (negative && i > 1 && os.tellp() == 1) {
      // A leading "-t^2" would parse as (-t)^2.
      os << "1*";
    }
    os << "t";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace hensel
