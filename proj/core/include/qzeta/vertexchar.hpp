// Characters built from the Lie-algebra zeta sums: the level-k W-algebra
// characters for sl(rank+1), and the supercharacters of the U^(m) family
// extracted as constant terms of a theta quotient.  Unspecified scalar
// prefactors are fixed once by normalizing leading coefficients to 1; all
// arithmetic stays rational.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qzeta/biseries.hpp"
#include "qzeta/modular.hpp"
#include "qzeta/qseries.hpp"

namespace qzeta {

// A character presented as an eta quotient times a q-expansion.  The series
// offset carries the stripped eta factors, so it is a multiple of 1/24, plus
// a multiple of level/24 whenever a dilated eta enters the bookkeeping.
struct CharacterResult {
  QSeries series;
  long eta_power = 0;  // series * eta(tau)^{eta_power} clears the eta(tau) part
  long level = 1;      // dilation level of the generator ring relevant downstream
  std::optional<Recognition> recognition;
};

// Character of the level-k algebra attached to sl(rank+1), k >= 3:
// eta(tau)^{-m} times the dimension-weighted zeta sum with dim-power k and
// root exponent k-2, where m = dim(g) k - (k-2) rank(g).
CharacterResult arakawa_char(long rank, long k, long N);

// The index-zero Jacobi quotient eta(tau)^{m+1} theta(m z, m tau) /
// theta(z, tau)^m expanded in the annulus 1 < |zeta| < |q|^{-1}, for odd
// m >= 3 (even m would force half-integer zeta-exponents).  Entries at
// positive zeta-exponent e have q-valuation at least e plus the overall
// q^{(m+1)/24}; negative exponents only carry the overall power.
ZetaSeries fm_zeta(long m, long N);

// Constant term of fm_zeta(m), leading coefficient normalized to 1.  This is
// the supercharacter of U^(m); eta_power = 2m-1 and level = m record the
// eta(m tau)^3 / eta(tau)^{2m-1} shape of its closed form.
CharacterResult sch_u(long m, long N);

// The explicit eta-quotient-times-Eisenstein closed forms, m in {3, 5}.
QSeries sch_u_closed(long m, long N);

// Strips eta(m tau)^3 / eta(tau)^{2m-1} from sch_u(m) and certifies what is
// left as a homogeneous weight-(m-1) polynomial in the level-m quasi-modular
// generators, with the given number of verified-only coefficient rows.
Recognition fm_recognize(long m, long N, long margin = 10);

// The Weierstrass window evaluated at the order-3 torsion point z = 1/3,
// i.e. zeta a primitive cube root of unity, computed in Q[w]/(w^2+w+1) with
// the divergent tail Abel-summed; throws if any coefficient keeps an
// imaginary residue.  With this module's sign conventions the result equals
// -(3/2) Ghat_2(tau) + (9/2) Ghat_2(3 tau).
QSeries torsion_p_third(long N);

// One quasi-modularity experiment: build the named series, attempt exact
// recognition, and report the outcome.  Probes never assert; when the
// recognizer cannot run or cannot certify, the reason lands in `comment`.
struct ProbeReport {
  std::string name;
  long rank = 0;
  std::vector<long> params;
  bool found = false;
  std::string comment;
  std::vector<std::string> labels;  // printable monomials when found
  std::optional<Recognition> recognition;
};

// Probe names: "arakawa-qm" (params = {k}; is eta^m ch quasi-modular?),
// "zeta-g-even" (params = one even exponent per positive root, or a single
// value broadcast), "symmetrized" (params = even exponents, summed over all
// permutations).  Unknown names and malformed parameters throw.
ProbeReport conjecture_probe(const std::string& name, long rank,
                             const std::vector<long>& kvals, long N,
                             long margin = 10);

}  // namespace qzeta
