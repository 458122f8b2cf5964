#pragma once

// Internal: high-precision complex root isolation for integer polynomials
// and continued-fraction reconstruction of rationals from mpf values.
// Everything reported from here is re-verified exactly by callers.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "cubeprog/arith.hpp"

namespace cubeprog::detail {

struct Cplx {
    mpf_class re, im;
};

// All complex roots of a squarefree integer polynomial (coeffs[i] on x^i,
// leading nonzero, degree >= 1), Durand-Kerner at the given precision.
// Throws std::runtime_error if the iteration fails to settle.
std::vector<Cplx> complex_roots(const std::vector<Integer>& coeffs, unsigned prec_bits);

// Best rational with denominator <= max_den approximating v to within
// 2^-tol_bits, via continued fractions; nothing if no convergent fits.
std::optional<Rational> reconstruct_rational(const mpf_class& v, const Integer& max_den,
                                             long tol_bits);

}  // namespace cubeprog::detail
