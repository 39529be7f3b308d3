#pragma once

#include <stdexcept>
#include <string>

namespace ineq {

// Every failure mode the engine can report. Callers that need to react to a
// specific condition match on the kind; the message is for humans.
enum class ErrorKind {
    // numerics
    DivisionByZero,
    DivisionByIntervalContainingZero,
    NegativeRadicand,
    ZeroToNegativePower,
    NotExactlyRepresentable,
    DomainError,
    // expressions
    SyntaxError,
    UnsupportedExponent,
    DomainViolation,
    // polynomials
    DomainMismatch,
    DivisionByZeroPoly,
    EndpointNotRepresentable,
    // surrogates
    NoSolutionInDomain,
    NonAlgebraicCondition,
    InconsistentConditions,
    SingularSystem,
    NonPositiveWeight,
    // rewriting
    NotRationalStructure,
    NoSingleRadicalDecomposition,
    ExponentNotClearedByQ,
    // composition
    MixedConstraintFunctions,
    SlopeMismatch,
    NonpositiveLeadingCoefficient,
    NonpositiveExponent,
    WitnessViolatesConstraint,
    ZeroSetNotExact,
    // i/o
    InputError,
};

const char* error_kind_name(ErrorKind k);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    Error(ErrorKind kind, std::string message, std::size_t position)
        : std::runtime_error(std::string(error_kind_name(kind)) + " at position " +
                             std::to_string(position) + ": " + message),
          kind_(kind), position_(position) {}

    ErrorKind kind() const { return kind_; }
    // Byte offset into the input for parse errors; npos otherwise.
    std::size_t position() const { return position_; }

private:
    ErrorKind kind_;
    std::size_t position_ = std::string::npos;
};

inline const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::DivisionByIntervalContainingZero: return "DivisionByIntervalContainingZero";
        case ErrorKind::NegativeRadicand: return "NegativeRadicand";
        case ErrorKind::ZeroToNegativePower: return "ZeroToNegativePower";
        case ErrorKind::NotExactlyRepresentable: return "NotExactlyRepresentable";
        case ErrorKind::DomainError: return "DomainError";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnsupportedExponent: return "UnsupportedExponent";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case ErrorKind::EndpointNotRepresentable: return "EndpointNotRepresentable";
        case ErrorKind::NoSolutionInDomain: return "NoSolutionInDomain";
        case ErrorKind::NonAlgebraicCondition: return "NonAlgebraicCondition";
        case ErrorKind::InconsistentConditions: return "InconsistentConditions";
        case ErrorKind::SingularSystem: return "SingularSystem";
        case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
        case ErrorKind::NotRationalStructure: return "NotRationalStructure";
        case ErrorKind::NoSingleRadicalDecomposition: return "NoSingleRadicalDecomposition";
        case ErrorKind::ExponentNotClearedByQ: return "ExponentNotClearedByQ";
        case ErrorKind::MixedConstraintFunctions: return "MixedConstraintFunctions";
        case ErrorKind::SlopeMismatch: return "SlopeMismatch";
        case ErrorKind::NonpositiveLeadingCoefficient: return "NonpositiveLeadingCoefficient";
        case ErrorKind::NonpositiveExponent: return "NonpositiveExponent";
        case ErrorKind::WitnessViolatesConstraint: return "WitnessViolatesConstraint";
        case ErrorKind::ZeroSetNotExact: return "ZeroSetNotExact";
        case ErrorKind::InputError: return "InputError";
    }
    return "UnknownError";
}

} // namespace ineq
