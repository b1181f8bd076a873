#pragma once

#include "geoprove/polynomial.hpp"

#include <vector>

namespace geoprove {

/// Exact division: sets quotient and returns true when d divides p, in any
/// ring; false leaves quotient untouched.
bool try_divide(const Polynomial& p, const Polynomial& d, Polynomial& quotient);

/// gcd of two bivariate polynomials (primitive PRS on the first variable,
/// contents handled separately), normalized to primitive integer form.
/// Constant gcds come back as 1.
Polynomial bivariate_gcd(const Polynomial& a, const Polynomial& b);

/// Product of the distinct irreducible factors of p (up to scalar).
Polynomial squarefree_part(const Polynomial& p);

/// True when p has no repeated factor.
bool is_squarefree(const Polynomial& p);

/// Ascending coefficients of a polynomial that uses only `var`; throws when
/// another variable occurs.
std::vector<Rational> coeffs_in(const Polynomial& p, std::size_t var);

/// All rational roots of the univariate polynomial with the given ascending
/// coefficients.  Exact; the divisor enumeration falls back to a bounded
/// height sweep when the end coefficients resist factoring, so a root of
/// extreme height may be missed.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

} // namespace geoprove
