// Multiple q-zeta values in the star, strict, and standard models, and
// q-zeta values attached to a root system: sums over dominant integral
// weights with the pairing <lambda+rho, alpha>.
#pragma once

#include <vector>

#include "qzeta/qseries.hpp"

namespace qzeta {

// sum over n_1 >= n_2 >= ... >= n_k >= 1 of q^{n_1} / prod (1-q^{n_i})^{a_i}
QSeries zq_star(const std::vector<long>& a, long N);
// same shape with strict inequalities n_1 > ... > n_k >= 1
QSeries zq_strict(const std::vector<long>& a, long N);
// standard model: strict variables, numerator q^{(a_1-1)n_1+...+(a_k-1)n_k},
// requires a_1 >= 2 so the sum converges coefficientwise
QSeries zq_standard(const std::vector<long>& a, long N);

// Positive roots as 0/1 coefficient vectors over the simple roots, with the
// pairing normalized so <alpha, alpha> = 2 for every root.  For type A_n the
// positive roots are the intervals [i,j]; make(n) lists them in lexicographic
// order [1,1], [1,2], ..., [1,n], [2,2], ..., [n,n], which is also the order
// the per-root exponent vectors follow everywhere below.
struct RootSystemA {
    long rank = 0;
    std::vector<std::vector<long>> positive_roots;

    static RootSystemA make(long n);
    // index of interval [i,j] in the lexicographic list, 1-based bounds
    static long interval_index(long n, long i, long j);
};

// sum over dominant weights lambda = sum m_s omega_s, m_s >= 0, of
//   q^{(1/2) sum_alpha k_alpha <lambda+rho, alpha>}
//     / prod_alpha (1 - q^{<lambda+rho, alpha>})^{k_alpha},
// where <lambda+rho, alpha> = sum of (m_s + 1) over the support of alpha.
QSeries zeta_g(const RootSystemA& roots, const std::vector<long>& kvec, long N);

// Type A only: the same sum with every k_alpha = k and the extra factor
// prod_alpha <lambda+rho, alpha>^s in the numerator (the interval products
// M_{[i,j]} = m_i + ... + m_j over shifted variables m >= 1, no Weyl
// denominator).  s = 0 recovers zeta_g with the constant exponent vector.
QSeries zeta_g_s(const RootSystemA& roots, long s, long k, long N);

// Per-interval exponents: product over intervals of
//   M^{s_int} q^{(1/2) k_int M} / (1 - q^M)^{k_int}
// summed over m_1..m_n >= 1.  kmat/smat follow the interval order of
// RootSystemA::make(n).  Specializing k_int = k, s_int = k+2 reproduces
// zeta_g_s(k+2, k) through a genuinely different accumulation path.
QSeries bibracket_sl(long n, const std::vector<long>& kmat,
                     const std::vector<long>& smat, long N);

// sum over all |Delta_+|! assignments sigma of kvals to the positive roots
// (with multiplicity, so equal entries still contribute their full orbit)
QSeries symmetrized_sum(const RootSystemA& roots, const std::vector<long>& kvals, long N);

}  // namespace qzeta
