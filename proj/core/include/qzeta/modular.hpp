// Eisenstein series, quasi-modular generator sets, and exact recognition of
// a target series as a polynomial in the generators.  Everything is kept
// rational: transcendental prefactors are dropped, and G_{2k} is represented
// by g_hat(2k) = -(B_{2k}/(2k)!) E_{2k}.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qzeta/qseries.hpp"

namespace qzeta {

struct WeightedGenerator {
  QSeries series;
  long weight = 0;
  std::string label;
};

// Certificate for target = sum over monomials of c * prod gens^e.  Pivot
// rows end by index fitted_up_to; every row after that (and any dependent
// row in between) is checked against the fit, never consumed by it, so
// found implies the combination reproduces the target on at least the
// configured margin of unfitted coefficients, verified_through rows total.
struct Recognition {
  std::vector<std::pair<std::vector<long>, Rat>> monomials;
  long fitted_up_to = 0;
  long verified_through = 0;
  bool found = false;
};

// E_{2k} = 1 - (4k/B_{2k}) sum_{n>=1} n^{2k-1} q^n/(1-q^n), exact through q^N
QSeries eisenstein(long two_k, long N);
// -(B_{2k}/(2k)!) E_{2k}, the rational normalization of G_{2k}
QSeries g_hat(long two_k, long N);

// theta nullwerte with the q^{n^2/2} convention, taken to the fourth power:
// theta3^4 = (sum_{n in Z} q^{n^2/2})^4, theta2^4 = (sum q^{(2n+1)^2/8})^4.
// theta2^4 starts at 16 q^{1/2}; both live on the half-integer grid.
QSeries theta2_pow4(long N);
QSeries theta3_pow4(long N);

// level 1: E2, E4, E6.  level 2: E2, Th2 := theta2^4, Th3 := theta3^4 (each
// weight 2).  level m >= 3: E2,E4,E6 and their dilations E2(mt),E4(mt),E6(mt).
std::vector<WeightedGenerator> qm_generators(long level, long N);

// Enumerate monomials in the generators with total weight in
// [weight_min, weight_max] (weight 0 is the constant monomial), then run
// exact elimination over the coefficient rows in order: a row either pins
// down a new pivot or is a prediction the current fit must reproduce.
// Dilated generators agree below q^level, so the fit grows until the rows
// determine it rather than stopping at a fixed count.  Throws if fewer than
// `margin` rows remain past the last pivot; a row the fit fails to
// reproduce comes back found=false with no monomials, never partial.
Recognition recognize(const QSeries& target, const std::vector<WeightedGenerator>& gens,
                      long weight_min, long weight_max, long margin);

// "E2^2*E4^1" style label for one exponent vector; "1" for the constant
std::string monomial_label(const std::vector<WeightedGenerator>& gens,
                           const std::vector<long>& exponents);

}  // namespace qzeta
