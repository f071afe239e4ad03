#pragma once

#include "hensel/field.hpp"
#include "hensel/matrix.hpp"
#include "hensel/truncated.hpp"
#include "hensel/unipoly.hpp"

namespace hensel {

/// Exact determinant over K: cofactor expansion for n <= 4, Gaussian
/// elimination otherwise.
Element det(const Matrix<Element>& m);

Matrix<Residue> residue_matrix(const Matrix<Truncated>& m);

/// Gauss–Jordan inverse over the residue field; throws SingularModM.
Matrix<Residue> invert_residue_matrix(const Matrix<Residue>& m);

/// Entry-wise lift of a residue matrix with all higher digits zero.
Matrix<Truncated> lift_residue_matrix(const Matrix<Residue>& m, const Field& field, long precision);

/// U with M·U ≡ U·M ≡ I mod π^N. Starts from the residue-field inverse and
/// applies U <- U(2I - MU) until the accuracy 2^k reaches N.
Matrix<Truncated> invert_matrix_mod(const Matrix<Truncated>& m);

/// Euclidean division in K[X]; throws ZeroPolynomial for a zero divisor.
std::pair<UniPoly<Element>, UniPoly<Element>> divmod(const UniPoly<Element>& f, const UniPoly<Element>& g);

/// Monic gcd in K[X]; throws ZeroPolynomial when both inputs vanish.
UniPoly<Element> gcd(const UniPoly<Element>& f, const UniPoly<Element>& g);

/// Resultant through the Euclidean remainder sequence. Zero when exactly one
/// input is zero and the other has positive degree; throws ZeroPolynomial
/// when both are zero.
Element resultant(const UniPoly<Element>& f, const UniPoly<Element>& g);

/// disc(f) = (-1)^(d(d-1)/2) · res(f, f') / lc(f); throws ZeroPolynomial on f = 0.
Element discriminant(const UniPoly<Element>& f);

}  // namespace hensel
