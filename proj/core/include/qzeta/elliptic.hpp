// Fourier expansions of the normalized propagator functions, the
// Weierstrass functions, and the J-blocks, as two-variable windows ready for
// constant-term extraction.  All transcendental prefactors are dropped; each
// classical identity then holds up to one rational scalar, which the tests
// compute once and pin.
#pragma once

#include "qzeta/biseries.hpp"

namespace qzeta {

// sum_{n>=1} ( n^{k-1} z^n q^n/(1-q^n) + (-1)^k n^{k-1} z^{-n}/(1-q^n) ),
// plus the constant 1/2 when k = 1.  Positive side decays with slope 1; the
// negative side has flat (slope 0) valuation, so pairings with decaying
// factors bound its usable window.
ZetaSeries p_function(long k, long N);

// -g_hat(2) at z^0 plus sum_{n>=1} n (z^n q^n + z^{-n})/(1-q^n)
ZetaSeries weierstrass_p(long N);

// z d/dz of weierstrass_p; equals p_function(3) entrywise
ZetaSeries weierstrass_p_prime(long N);

// sum_{n>=1} q^n P_ell(q^n) (z^n + (-1)^ell z^{-n}) / (1-q^n)^ell with P_ell
// the Euler polynomial; both sides decay with slope 1
ZetaSeries j_tilde(long ell, long N);

// sum_{n>=1} q^{kn} (z^n + z^{-n}) / (1-q^n)^{2k}; both sides decay with
// slope k
ZetaSeries q_block(long k, long N);

}  // namespace qzeta
