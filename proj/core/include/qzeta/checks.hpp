#pragma once

// Named identity suites tying the modules together.  Each check states a
// mathematical identity, builds both sides independently, and compares
// exactly through the configured order; failures carry the first differing
// coefficient.  Suites never assert: callers decide what a failure means.

#include <string>
#include <vector>

#include "qzeta/qseries.hpp"

namespace qzeta {

struct CheckResult {
  std::string id;         // stable short name, unique within a suite
  std::string statement;  // the identity being checked, in plain notation
  bool pass = false;
  std::string detail;     // first differing coefficient, or a note
};

// One exact comparison through the largest order both sides reach, reported
// with the suites' conventions; the building block every suite entry uses.
CheckResult check_compare(std::string id, std::string statement, const QSeries& lhs,
                          const QSeries& rhs);

struct CheckOptions {
  long order = 25;  // q-order for the comparisons
  long kmax = 4;    // family depth where a check is parametrized by k
};

// Graph series closed forms, the pentagon-chain and spider families, the
// matched-star realization of non-strict multiple q-zeta values, the
// bivariate summation lemmas, and edge-algebra Hilbert series.
std::vector<CheckResult> check_graph_identities(const CheckOptions& opts);

// Multiple q-zeta relations (stuffle, cyclic sum rule), Lie-algebra zeta
// values against Eisenstein combinations, Weierstrass constant terms, and
// the block decompositions of the two-variable expansions.
std::vector<CheckResult> check_zeta_identities(const CheckOptions& opts);

// Supercharacter coefficients and closed forms, quasimodular recognitions,
// the order-3 torsion value, and the character round trips.  Recognition
// checks need a minimum order and raise the working order to it when the
// configured one is lower (noted in the result detail).
std::vector<CheckResult> check_character_identities(const CheckOptions& opts);

// All three suites concatenated.
std::vector<CheckResult> check_all(const CheckOptions& opts);

}  // namespace qzeta
