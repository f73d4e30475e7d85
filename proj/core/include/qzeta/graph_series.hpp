// Graph series H_{Gamma,b}(q) = sum over n in N_0^r of
// q^{(1/2) n A n^T + b.n} / ((q)_{n_1} ... (q)_{n_r}) by pruned lattice
// enumeration, the multi-sum closed form for the pentagon-chain family,
// the Hilbert t-expansion read off the lattice, and the small-graph census.
#pragma once

#include <vector>

#include "qzeta/graph.hpp"
#include "qzeta/qseries.hpp"

namespace qzeta {

// Framing entries must all be >= 1; then the exponent dominates sum n_i and
// branches are cut exactly once the partial exponent exceeds the order.
QSeries graph_series(const Graph& g, const std::vector<long>& framing, long order);
// All-ones framing.
QSeries graph_series(const Graph& g, long order);

// The (k+1)-fold sum form of the pentagon-chain series:
//   (q)_inf^{-(k+1)} sum over w in N_0^{k+1} of
//     q^{w_0+...+w_k} / prod_{j=1}^{k} (1 - q^{1 + S_j}),
// where S_j = w_{k-j} + ... + w_k is the suffix sum of the last j+1
// variables.  Equals graph_series on the k-th pentagon chain; the two sides
// are computed by unrelated enumerations, so agreement is a real check.
QSeries gamma_multisum(long k, long N);

// t-expansion of the edge-algebra Hilbert series obtained from the graph
// series lattice: points whose quadratic part vanishes (support an
// independent set) contribute t^{sum n_i}.  Returns coefficients of
// t^0 .. t^T.  Independent of graphs::hilbert_series, which goes through the
// independence profile and a rational function.
std::vector<Int> hilbert_via_ct(const Graph& g, long T);

// For each vertex count n = 1..nmax: the number of isomorphism classes of
// simple graphs on exactly n vertices, and how many distinct truncated
// series (all-ones framing, through q^order) those classes produce.
// Truncation can only merge classes, so distinct_series <= graph_classes.
struct CensusRow {
    long vertices = 0;
    long graph_classes = 0;
    long distinct_series = 0;
};
std::vector<CensusRow> census(long nmax, long order, long threads = 1);

}  // namespace qzeta
