#pragma once

// Simple undirected graphs on up to 64 vertices, the named graph families
// (pentagon chains Gamma_{3k+2}, spider trees T_{2k+2}, matched star stacks
// Z_{a_1..a_k}), and Hilbert series of the associated edge algebras
// k[x_1..x_n]/(x_i x_j : ij an edge).
//
// Vertices are 0-indexed internally; the JSON interchange format and the
// textual shorthands ("gamma:3", "T:2 + pt", ...) use 1-indexed vertices to
// match the usual figure labellings.

#include "qzeta/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace qzeta {

class Graph {
public:
    Graph() = default;
    explicit Graph(long n);

    long n() const { return n_; }
    void add_edge(long i, long j);
    bool has_edge(long i, long j) const;
    // Bitmask of neighbours of vertex i.
    std::uint64_t neighbors(long i) const { return adj_.at(i); }
    long degree(long i) const;
    long edge_count() const;
    // Edge list with i < j, sorted.
    std::vector<std::pair<long, long>> edges() const;

    bool operator==(const Graph&) const = default;

private:
    long n_ = 0;
    std::vector<std::uint64_t> adj_;
};

enum class BasicKind { point, path, cycle, simple_star };

// point ignores size (always 1 vertex); path(n) has n vertices; cycle(n)
// needs n >= 3; simple_star(legs) is the star K_{1,legs} with legs >= 1.
Graph build_basic(BasicKind kind, long size);

// Gamma_{3k+2}, k >= 1: a pentagon on 1..5 extended by a path 5-6-...-(3k+2),
// chords {1,4}~(3t+2) for 2 <= t <= k, and chords (3s+1)~(3l+5) for
// 2 <= s <= l <= k-1.  Gamma_5 is the pentagon itself.
Graph build_gamma(long k);

// T_{2k+2}, k >= 2: a spider with k legs of length two and one leg of length
// one.  Center is vertex 1, legs are (1,2i,2i+1), the short leg is (1,2k+2).
// T_6 is the E6 Dynkin tree.
Graph build_T(long k);

// Z_{a_1..a_k}: base perfect matching i~i' on {1..k, 1'..k'}; group i carries
// a_i gadgets, each a new center adjacent to base vertices 1..(k-i+1) plus a
// private leaf.  Gadget pairs (center, leaf) take ids k+1, k+2, ... in group
// order; the primed base vertices are numbered last.  Always bipartite, with
// 2k + 2*sum(a) vertices.
Graph build_Z(const std::vector<long>& a);

Graph disjoint_union(const Graph& g1, const Graph& g2);

// Relabels: vertex i of the result is vertex perm[i] of g.
Graph permuted(const Graph& g, const std::vector<long>& perm);

bool is_bipartite(const Graph& g);

// ind_j = number of independent vertex sets of size j, j = 0..alpha(g).
// Exhaustive (branching) enumeration, requires n <= 32.
std::vector<Int> independence_profile(const Graph& g);
long independence_number(const Graph& g);

// Hilbert series of the edge algebra as h(t)/(1-t)^d.  Computed from the
// face-ring formula sum_j ind_j t^j/(1-t)^j, so d is the independence number
// and h(1) = ind_d > 0 (never divisible by 1-t).
struct HilbertRF {
    std::vector<Int> numerator;  // h(t) coefficients, constant term first
    long pole_order = 0;         // d

    bool operator==(const HilbertRF&) const = default;
};

HilbertRF hilbert_series(const Graph& g);

// Coefficients of t^0..t^T in the expansion of h(t)/(1-t)^d.
std::vector<Int> hilbert_expand(const HilbertRF& rf, long T);

// Closed form for Gamma_{3k+2}: (1+t)^(k-1) (1+(2+k)t+t^2) / (1-t)^(k+1).
HilbertRF hilbert_gamma_closed(long k);

std::string hilbert_to_string(const HilbertRF& rf);

// Exact determinant of the adjacency matrix (fraction-free elimination).
Int adjacency_determinant(const Graph& g);

// Lexicographically minimal upper-triangle encoding over all vertex
// relabelings; equal byte strings iff isomorphic.  Brute force, n <= 8.
std::string canonical_form(const Graph& g);

// The same data packed into 64 bits (n <= 7 guarantees it fits).
std::uint64_t canonical_key(const Graph& g);

// "gamma:k", "T:k", "Z:a1,a2,...", "cycle:n", "path:n", "star:legs", "pt",
// joined with '+' for disjoint unions, or a JSON object {"n":..,"edges":[..]}.
Graph parse_graph_spec(const std::string& spec);

std::string graph_to_json_string(const Graph& g);
Graph graph_from_json_string(const std::string& text);

}  // namespace qzeta
