#pragma once

#include "hahn/series.hpp"

namespace hahn {

/// Derivation induced by the declared generator logarithmic derivatives:
/// d(c * g1^a1...gk^ak) = (sum a_i * logderiv(g_i)) * c * g1^a1...gk^ak,
/// extended additively; rational coefficients are constants.
Series derive(const Series& f);

/// f' applied n times.
Series derive_n(const Series& f, unsigned n);

/// f^dagger = f'/f, expanded below the weight bound N.
Series log_derivative(const Series& f, const Rational& N);

} // namespace hahn
