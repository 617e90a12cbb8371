#pragma once

#include <stdexcept>
#include <string>

namespace pirlab {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonPrimeP : Error {
    explicit NonPrimeP(const std::string& what) : Error(what) {}
};

struct UnsupportedOrder : Error {
    explicit UnsupportedOrder(const std::string& what) : Error(what) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& what) : Error(what) {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

struct LengthExceedsField : Error {
    explicit LengthExceedsField(const std::string& what) : Error(what) {}
};

struct TooFewRows : Error {
    explicit TooFewRows(const std::string& what) : Error(what) {}
};

struct InconsistentSymbols : Error {
    explicit InconsistentSymbols(const std::string& what) : Error(what) {}
};

struct TooManyErrors : Error {
    explicit TooManyErrors(const std::string& what) : Error(what) {}
};

struct AmbiguousDecoding : Error {
    explicit AmbiguousDecoding(const std::string& what) : Error(what) {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& what) : Error(what) {}
};

struct FieldTooSmall : Error {
    explicit FieldTooSmall(const std::string& what) : Error(what) {}
};

struct UnsupportedParameters : Error {
    explicit UnsupportedParameters(const std::string& what) : Error(what) {}
};

struct ConstructionCheckFailed : Error {
    explicit ConstructionCheckFailed(const std::string& what) : Error(what) {}
};

struct Undecodable : Error {
    explicit Undecodable(const std::string& what) : Error(what) {}
};

struct BudgetTooSmall : Error {
    explicit BudgetTooSmall(const std::string& what) : Error(what) {}
};

struct AnyTrialFailed : Error {
    explicit AnyTrialFailed(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace pirlab
