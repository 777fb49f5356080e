#pragma once

// Legendre-form Frey families built from the quadratic factors
// f_j(a, b) = a^2 + (zeta^j + zeta^-j) ab + b^2 of (a^13 + b^13)/(a + b),
// descended to the quadratic and cubic subfields. These generate the shipped
// data/*.model files.

#include "frey/freycurves.hpp"

namespace frey::models {

/// omega_j = zeta^j + zeta^-j; omega_0 = 2.
CyclotomicInt omega(unsigned j);

/// f_j(a, b); f_0 = (a + b)^2.
BivariatePoly quadratic_factor(unsigned j);

/// Over Q(sqrt13): Y^2 = X(X - A)(X + B) with A = (w3 - w4) f1, B = (w4 - w1) f3,
/// translated so that sigma_3 permutes the roots and scaled by 9 (no twist).
FreyCurveModel quadratic_family();

/// Over the cubic field: A = (w1 - w5)(a + b)^2, B = (w5 - 2) f1, roots moved to
/// {-2A, 2A, -2A - 4B} so that sigma_5 fixes the cubic.
FreyCurveModel cubic_family();

} // namespace frey::models
