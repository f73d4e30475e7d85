// Small exact number-theoretic helpers: binomials, Bernoulli numbers,
// and the numerator polynomials of sum_{n>=1} n^{m-1} x^n.
#pragma once

#include <vector>

#include "qzeta/rational.hpp"

namespace qzeta {

Int binomial(long n, long k);
Int factorial(long n);

// B_0 = 1, B_1 = -1/2, B_2 = 1/6, ... (B_1 negative convention).
Rat bernoulli(long k);

// Coefficients a_0..a_{m-2} of the polynomial P_m with
//   sum_{n>=1} n^{m-1} x^n = x P_m(x) / (1-x)^m,   m >= 2.
// Row sums equal (m-1)!.
std::vector<Int> euler_polynomial(long m);

}  // namespace qzeta
