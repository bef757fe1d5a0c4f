#pragma once

#include <stdexcept>
#include <string>

namespace hahn {

// Exit-code classes used by the CLI: 2 syntax, 3 precondition,
// 4 no-convergence, 5 inconclusive.
enum class ErrorClass { Syntax = 2, Precondition = 3, NoConvergence = 4, Inconclusive = 5 };

struct EngineError : std::runtime_error {
    EngineError(ErrorClass cls, const std::string& what) : std::runtime_error(what), cls(cls) {}
    ErrorClass cls;
};

struct ContextMismatch : EngineError {
    explicit ContextMismatch(const std::string& w = "operands belong to different generator contexts")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct ZeroDivision : EngineError {
    explicit ZeroDivision(const std::string& w = "division by zero series")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct NotInfinitesimal : EngineError {
    explicit NotInfinitesimal(const std::string& w = "series is not infinitesimal")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct ZeroWeightStep : EngineError {
    explicit ZeroWeightStep(const std::string& w = "series has a term of nonpositive weight; truncated summation cannot terminate")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct NonPositive : EngineError {
    explicit NonPositive(const std::string& w = "series must have positive sign")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct IrrationalScalarPower : EngineError {
    explicit IrrationalScalarPower(const std::string& w = "scalar power is not rational")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct IrrationalRoot : EngineError {
    explicit IrrationalRoot(const std::string& w = "root is not rational")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct PreconditionFailed : EngineError {
    explicit PreconditionFailed(const std::string& w) : EngineError(ErrorClass::Precondition, w) {}
};

struct CMinusOne : EngineError {
    explicit CMinusOne(const std::string& w = "exponent c = -1 is excluded")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct NonPositiveC : EngineError {
    explicit NonPositiveC(const std::string& w = "parameter c must be a positive rational")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct DegenerateY : EngineError {
    explicit DegenerateY(const std::string& w = "y must avoid 0 and -1")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct MissingSpec : EngineError {
    explicit MissingSpec(const std::string& w = "context has no derivation data")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct MissingRule : EngineError {
    explicit MissingRule(const std::string& w = "germ assignment lacks a rule for a generator")
        : EngineError(ErrorClass::Precondition, w) {}
};

struct NoConvergence : EngineError {
    explicit NoConvergence(const std::string& w = "fixed-point iteration hit its cap with a nonvanishing residual")
        : EngineError(ErrorClass::NoConvergence, w) {}
};

struct Inconclusive : EngineError {
    explicit Inconclusive(const std::string& w = "comparison depends on terms beyond a reliability bound")
        : EngineError(ErrorClass::Inconclusive, w) {}
};

struct SyntaxError : EngineError {
    SyntaxError(std::size_t pos, const std::string& w)
        : EngineError(ErrorClass::Syntax, w + " at position " + std::to_string(pos)), pos(pos) {}
    std::size_t pos;
};

struct UnknownSymbol : EngineError {
    explicit UnknownSymbol(const std::string& name)
        : EngineError(ErrorClass::Syntax, "unknown symbol '" + name + "'") {}
};

} // namespace hahn
