#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hahn/series.hpp"

namespace hahn {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Parse tree for the CLI expression language. `^` takes a rational literal
/// exponent; `e^(q x)` is recognized as a monomial of the exponential
/// generator.
struct Expr {
    enum class Kind {
        Number, // value
        Symbol, // name: generator or sugar symbol
        ExpX,   // exponent: e^(exponent * x)
        Add, Sub, Mul, Div, Neg,
        Pow,    // args[0] ^ exponent
        Abs, Exp, Log1p, Inv,
        Derive, // D(...)
        LogD,   // logd(...)
    };
    Kind kind;
    Rational value;
    std::string name;
    Rational exponent;
    std::vector<ExprPtr> args;
};

ExprPtr parse(const std::string& src);

/// Evaluate over a context at working depth N. Symbols resolve to declared
/// generator names plus the sugar `x` (inverse-displayed generator) and
/// `exp1` (e^x).
Series eval_expr(const ExprPtr& e, const ContextPtr& ctx, const Rational& N);

Series eval_expr(const std::string& src, const ContextPtr& ctx, const Rational& N);

} // namespace hahn
