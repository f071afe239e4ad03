#include "hensel/error.hpp"

namespace hensel {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeValuation: return "NEGATIVE_VALUATION";
    case ErrorCode::PrecisionMismatch: return "PRECISION_MISMATCH";
    case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::NotAUnit: return "NOT_A_UNIT";
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::InvalidField: return "INVALID_FIELD";
    case ErrorCode::ArityMismatch: return "ARITY_MISMATCH";
    case ErrorCode::NotSquare: return "NOT_SQUARE";
    case ErrorCode::SingularModM: return "SINGULAR_MOD_M";
    case ErrorCode::ZeroPolynomial: return "ZERO_POLYNOMIAL";
    case ErrorCode::NotAHenselCode: return "NOT_A_HENSEL_CODE";
    case ErrorCode::DegreeTooSmall: return "DEGREE_TOO_SMALL";
    case ErrorCode::ConstantNotInM: return "CONSTANT_NOT_IN_M";
    case ErrorCode::A1NotUnit: return "A1_NOT_UNIT";
    case ErrorCode::CriterionFailed: return "CRITERION_FAILED";
    case ErrorCode::NotSeparable: return "NOT_SEPARABLE";
    case ErrorCode::ValidationFailed: return "VALIDATION_FAILED";
    case ErrorCode::PreconditionFailed: return "PRECONDITION_FAILED";
    case ErrorCode::NotAtOrigin: return "NOT_AT_ORIGIN";
    case ErrorCode::Jac0NotUnit: return "JAC0_NOT_UNIT";
    case ErrorCode::NotMonic: return "NOT_MONIC";
    case ErrorCode::SyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::UnknownVariable: return "UNKNOWN_VARIABLE";
    case ErrorCode::SchemaError: return "SCHEMA_ERROR";
  }
  return "UNKNOWN";
}

}  // namespace hensel
