#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hensel/field.hpp"
#include "hensel/multipoly.hpp"

namespace hensel::cli {

/// Parses a polynomial over the integers (and t, in t-adic fields):
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := int | var | '-' base | '(' expr ')'
///
/// Implicit multiplication is rejected. Note that `-x^2` reads as (-x)^2 in
/// this grammar; write `-1*x^2` or `0 - x^2` for the negation.
/// Throws SyntaxError (with position) or UnknownVariable.
MultiPoly<Element> parse_poly(std::string_view text, const std::vector<std::string>& vars, const Field& field);

/// Parses an element of K: the polynomial grammar without variables, with
/// '/' allowed in terms, e.g. "98/3", "1 + t/2", "(t^2 + t^3)/(1 + t)".
Element parse_element(std::string_view text, const Field& field);

/// "p-adic:7", "t-adic:Q" or "t-adic:F_5". Throws SchemaError / InvalidField.
Field parse_field(std::string_view descriptor);

/// Text accepted by parse_poly whenever every coefficient is a polynomial
/// in t with integer coefficients.
std::string print_poly(const MultiPoly<Element>& f, const std::vector<std::string>& vars);

/// Checks variable names: identifiers, pairwise distinct, and not 't' in
/// t-adic fields. Throws SchemaError.
void check_variables(const std::vector<std::string>& vars, const Field& field);

}  // namespace hensel::cli
