#include "hensel/cli/parser.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "hensel/error.hpp"

namespace hensel::cli {

namespace {

constexpr unsigned long kMaxExponent = 100000;

using Poly = MultiPoly<Element>;

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, const Field& field, bool allow_division)
      : text_(text), vars_(vars), field_(field), allow_division_(allow_division) {}

  Poly parse() {
    skip_space();
    if (at_end()) fail("expression", "empty input");
    Poly result = expr();
    skip_space();
    if (!at_end()) fail(allow_division_ ? "'+', '-', '*', '/' or end of input" : "'+', '-', '*' or end of input",
                        std::string("unexpected '") + peek() + "'");
    return result;
  }

 private:
  Poly expr() {
    Poly acc = term();
    while (true) {
      skip_space();
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      skip_space();
      if (accept('*')) {
        acc = acc * factor();
      } else if (allow_division_ && peek() == '/') {
        const int line = line_;
        const int column = column_;
        advance();
        Poly divisor = factor();
        if (divisor.total_degree() != 0 || divisor.is_zero()) {
          throw SyntaxError(line, column, "nonzero constant divisor", "division by zero or by a non-constant");
        }
        acc = acc.scaled(divisor.constant_term().inverse());
      } else {
        return acc;
      }
    }
  }

  Poly factor() {
    Poly b = base();
    skip_space();
    if (accept('^')) {
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("natural-number exponent", at_end() ? "end of input" : std::string("unexpected '") + peek() + "'");
      }
      const int line = line_;
      const int column = column_;
      const std::string digits = read_digits();
      if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) {
        throw SyntaxError(line, column, "exponent <= " + std::to_string(kMaxExponent), "exponent too large");
      }
      b = power(b, std::stoul(digits));
    }
    return b;
  }

  Poly base() {
    skip_space();
    if (at_end()) fail("integer, variable, '-' or '('", "end of input");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const mpz_class value(read_digits());
      return Poly::constant(vars_.size(), Element::integer(field_, value));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const int line = line_;
      const int column = column_;
      std::string name;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        name += peek();
        advance();
      }
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it != vars_.end()) {
        return Poly::variable(vars_.size(), static_cast<std::size_t>(it - vars_.begin()), one());
      }
      if (name == "t" && !field_.is_padic()) {
        return Poly::constant(vars_.size(), Element::uniformizer(field_));
      }
      throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "' at line " + std::to_string(line) +
                                                  ", column " + std::to_string(column));
    }
    if (accept('-')) return -base();
    if (accept('(')) {
      Poly inner = expr();
      skip_space();
      if (!accept(')')) fail("')'", at_end() ? "end of input" : std::string("unexpected '") + peek() + "'");
      return inner;
    }
    fail("integer, variable, '-' or '('", std::string("unexpected '") + c + "'");
  }

  Element one() const { return Element::integer(field_, 1); }

  std::string read_digits() {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return digits;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  bool accept(char c) {
    if (peek() != c || at_end()) return false;
    advance();
    return true;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }

  [[noreturn]] void fail(const std::string& expected, const std::string& found) const {
    throw SyntaxError(line_, column_, expected,
                      "syntax error at line " + std::to_string(line_) + ", column " + std::to_string(column_) +
                          ": expected " + expected + ", found " + found);
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  Field field_;
  bool allow_division_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

void check_variables(const std::vector<std::string>& vars, const Field& field) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!is_identifier(v)) throw Error(ErrorCode::SchemaError, "'" + v + "' is not a valid variable name");
    if (v == "t" && !field.is_padic()) {
      throw Error(ErrorCode::SchemaError, "'t' is reserved for the uniformizer in t-adic fields");
    }
    if (!seen.insert(v).second) throw Error(ErrorCode::SchemaError, "variable '" + v + "' declared twice");
  }
}

MultiPoly<Element> parse_poly(std::string_view text, const std::vector<std::string>& vars, const Field& field) {
  check_variables(vars, field);
  return Parser(text, vars, field, false).parse();
}

Element parse_element(std::string_view text, const Field& field) {
  static const std::vector<std::string> no_vars;
  return Parser(text, no_vars, field, true).parse().constant_term();
}

Field parse_field(std::string_view descriptor) {
  const std::string d(descriptor);
  auto parse_prime = [&d](const std::string& digits) {
    if (digits.empty() || digits.size() > 10 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorCode::SchemaError, "bad prime in field descriptor '" + d + "'");
    }
    return std::stol(digits);
  };
  if (d.rfind("p-adic:", 0) == 0) return Field::padic(parse_prime(d.substr(7)));
  if (d == "t-adic:Q" || d == "t-adic") return Field::tadic(BaseField::rationals());
  if (d.rfind("t-adic:F_", 0) == 0) return Field::tadic(BaseField::prime_field(parse_prime(d.substr(9))));
  throw Error(ErrorCode::SchemaError, "unknown field descriptor '" + d + "' (use p-adic:P, t-adic:Q or t-adic:F_P)");
}

std::string print_poly(const MultiPoly<Element>& f, const std::vector<std::string>& vars) {
  return f.to_string(vars);
}

}  // namespace hensel::cli
