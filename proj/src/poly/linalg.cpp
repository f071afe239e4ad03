#include "hensel/linalg.hpp"

#include "hensel/error.hpp"

namespace hensel {

Element det(const Matrix<Element>& m) {
  if (!m.is_square()) {
    throw Error(ErrorCode::NotSquare, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  }
  const std::size_t n = m.rows();
  if (n <= 4) {
    std::vector<std::optional<Element>> memo(1UL << n);
    return detail::laplace_minor(m, (1UL << n) - 1, memo);
  }
  Matrix<Element> a(m);
  Element result = m.zero_coeff().one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return m.zero_coeff();
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      result = -result;
    }
    result *= a(col, col);
    const Element inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const Element factor = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= factor * a(col, j);
    }
  }
  return result;
}

Matrix<Residue> residue_matrix(const Matrix<Truncated>& m) {
  return m.map([](const Truncated& x) { return x.residue(); });
}

Matrix<Residue> invert_residue_matrix(const Matrix<Residue>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "cannot invert a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<Residue> a(m);
  Matrix<Residue> inv = Matrix<Residue>::identity(n, m.zero_coeff());
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularModM, "residue matrix is singular (determinant in m)");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Residue scale = a(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) = a(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col).is_zero()) continue;
      const Residue factor = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) = a(i, j) - factor * a(col, j);
        inv(i, j) = inv(i, j) - factor * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix<Truncated> lift_residue_matrix(const Matrix<Residue>& m, const Field& field, long precision) {
  return m.map([&](const Residue& r) { return Truncated::from_residue(field, precision, r); });
}

Matrix<Truncated> invert_matrix_mod(const Matrix<Truncated>& m) {
  if (!m.is_square()) throw Error(ErrorCode::NotSquare, "cannot invert a non-square matrix");
  const Truncated& proto = m.zero_coeff();
  const long n_prec = proto.precision();
  Matrix<Truncated> u = lift_residue_matrix(invert_residue_matrix(residue_matrix(m)), proto.field(), n_prec);
  const Matrix<Truncated> two = Matrix<Truncated>::identity(m.rows(), proto).scaled(proto.from_int(2));
  for (long accuracy = 1; accuracy < n_prec; accuracy *= 2) u = u * (two - m * u);
  return u;
}

std::pair<UniPoly<Element>, UniPoly<Element>> divmod(const UniPoly<Element>& f, const UniPoly<Element>& g) {
  if (g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const Element& zero = f.zero_coeff();
  std::vector<Element> rem(f.coeffs());
  const long dg = g.degree();
  const Element lead_inv = g.leading().inverse();
  std::vector<Element> quo(f.degree() >= dg ? static_cast<std::size_t>(f.degree() - dg + 1) : 0, zero);
  for (long k = f.degree(); k >= dg; --k) {
    if (rem[k].is_zero()) continue;
    const Element q = rem[k] * lead_inv;
    quo[k - dg] = q;
    for (long i = 0; i <= dg; ++i) rem[k - dg + i] -= q * g.coeffs()[i];
  }
  return {UniPoly<Element>(zero, std::move(quo)), UniPoly<Element>(zero, std::move(rem))};
}

UniPoly<Element> gcd(const UniPoly<Element>& f, const UniPoly<Element>& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd(0, 0) is undefined");
  UniPoly<Element> a = f;
  UniPoly<Element> b = g;
  while (!b.is_zero()) {
    UniPoly<Element> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.scaled(a.leading().inverse());
}

Element resultant(const UniPoly<Element>& f, const UniPoly<Element>& g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "resultant of two zero polynomials");
  const Element& zero = f.zero_coeff();
  if (f.is_zero() || g.is_zero()) {
    const UniPoly<Element>& other = f.is_zero() ? g : f;
    return other.degree() == 0 ? zero.one() : zero;
  }
  // res(A, B) = (-1)^(deg A · deg B) · lc(B)^(deg A - deg R) · res(B, R), R = A mod B.
  UniPoly<Element> a = f;
  UniPoly<Element> b = g;
  Element acc = zero.one();
  while (true) {
    const long m = a.degree();
    const long n = b.degree();
    if (n == 0) return acc * b.leading().pow(static_cast<unsigned long>(m));
    UniPoly<Element> r = divmod(a, b).second;
    if (r.is_zero()) return zero;
    if ((m * n) % 2 != 0) acc = -acc;
    acc *= b.leading().pow(static_cast<unsigned long>(m - r.degree()));
    a = std::move(b);
    b = std::move(r);
  }
}

Element discriminant(const UniPoly<Element>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "discriminant of the zero polynomial");
  const long d = f.degree();
  if (d == 0) return f.zero_coeff().one();
  const UniPoly<Element> df = f.derivative();
  if (df.is_zero()) return f.zero_coeff();
  Element r = resultant(f, df) / f.leading();
  if ((d * (d - 1) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace hensel
