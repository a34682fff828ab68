#pragma once
// Fit an integer polynomial in Q through exact sample points.
//
// Counting problems over finite fields F_Q are evaluated at several primes Q
// and the (provably polynomial) count is recovered by Lagrange interpolation
// over the rationals.  The fit must come out with integer coefficients and
// respect the caller's degree bound; both are hard errors otherwise.

#include <vector>

#include "qfock/laurent.hpp"

namespace qfock {

// points: (Q, count).  Needs at least degree_bound+1 points.
// Returns the polynomial with Q renamed to v (exponents >= 0).
Laurent fit_polynomial_in_q(const std::vector<std::pair<long, mpz_class>>& points,
                            int degree_bound);

}  // namespace qfock
