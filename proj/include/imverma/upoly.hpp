#pragma once

#include <vector>

#include "imverma/rational.hpp"

namespace imverma {

/// Dense univariate polynomials in v over Q, coefficient of v^i at index i.
/// Trailing zeros trimmed; the zero polynomial is the empty vector.
/// Internal support for Scalar's denominators and series arithmetic.
using UPoly = std::vector<Rational>;

void upoly_trim(UPoly& p);
bool upoly_is_zero(const UPoly& p);
bool upoly_is_one(const UPoly& p);
int upoly_deg(const UPoly& p);  // -1 for zero
UPoly upoly_add(const UPoly& a, const UPoly& b);
UPoly upoly_sub(const UPoly& a, const UPoly& b);
UPoly upoly_mul(const UPoly& a, const UPoly& b);
UPoly upoly_scale(const UPoly& a, const Rational& s);

/// Quotient and remainder; divisor must be nonzero.
void upoly_divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);

/// True and sets q = a/b when b divides a exactly.
bool upoly_divides(const UPoly& b, const UPoly& a, UPoly& q);

/// Monic gcd (leading coefficient 1); gcd(0,0) = 0.
UPoly upoly_gcd(UPoly a, UPoly b);

/// First n coefficients of 1/p as a power series; requires p[0] != 0.
UPoly upoly_series_inverse(const UPoly& p, int n);

Rational upoly_eval(const UPoly& p, const Rational& x);

}  // namespace imverma
