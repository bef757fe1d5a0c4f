#pragma once

#include <string>

#include "hahn/series.hpp"

namespace hahn {

struct Session {
    ContextPtr ctx;
    Rational depth = 8;
    bool json_output = false;
};

/// Transseries grid for the order-1 construction: generators
/// e^{-x/(c+1)} and x^-1 with logarithmic derivatives -1/(c+1) and -x^-1.
ContextPtr make_transseries_context(const Rational& c);

/// Default CLI session: the transseries grid for the given c plus a free
/// infinitesimal t (treated as constant by the derivation).
Session make_default_session(const Rational& c = 1);

/// Key-value config: `depth N`, `output text|json`, and per line
/// `generator <name> weight=<rat> [logderiv=<expr>] [display=exp:<rat>|inv:<base>]`
/// in dominance order. Logderiv expressions are parsed over the full
/// generator list in a second pass.
Session load_config(const std::string& path);

} // namespace hahn
