#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qzeta/graph.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

using namespace qzeta;

namespace {

// independent profile by raw subset enumeration, n <= 16
std::vector<Int> profile_brute(const Graph& g) {
    std::vector<Int> out;
    for (std::uint64_t s = 0; s < (1ull << g.n()); ++s) {
        bool ok = true;
        for (long v = 0; ok && v < g.n(); ++v)
            if ((s >> v) & 1u)
                if (g.neighbors(v) & s) ok = false;
        if (!ok) continue;
        long size = std::popcount(s);
        if (static_cast<long>(out.size()) < size + 1)
            out.resize(static_cast<std::size_t>(size + 1));
        out[static_cast<std::size_t>(size)] += 1;
    }
    return out;
}

}  // namespace

TEST_CASE("basic builders") {
    Graph c5 = build_basic(BasicKind::cycle, 5);
    CHECK(c5.n() == 5);
    CHECK(c5.edge_count() == 5);
    for (long v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK(build_basic(BasicKind::point, 1).n() == 1);
    CHECK(build_basic(BasicKind::point, 1).edge_count() == 0);

    Graph k2 = build_basic(BasicKind::path, 2);
    CHECK(k2.edge_count() == 1);
    CHECK(k2.has_edge(0, 1));

    Graph star = build_basic(BasicKind::simple_star, 3);
    CHECK(star.n() == 4);
    CHECK(star.degree(0) == 3);

    CHECK_THROWS_AS(build_basic(BasicKind::cycle, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_basic(BasicKind::path, 0), std::invalid_argument);
}

TEST_CASE("pentagon chain family") {
    for (long k = 1; k <= 6; ++k) {
        Graph g = build_gamma(k);
        CHECK(g.n() == 3 * k + 2);
        CHECK(g.edge_count() == 5 * k + (k - 2) * (k - 1) / 2);
        Int det = adjacency_determinant(g);
        Int expected = (k + 1) * ((k % 2 == 1) ? 1 : -1);
        CHECK(det == expected);
        CHECK(independence_number(g) == k + 1);
    }
    CHECK(canonical_form(build_gamma(1)) ==
          canonical_form(build_basic(BasicKind::cycle, 5)));

    // spot edges of the k=4 member, 1-indexed: 7~11, 7~14, 1~14, 10~14
    Graph g14 = build_gamma(4);
    CHECK(g14.has_edge(6, 10));
    CHECK(g14.has_edge(6, 13));
    CHECK(g14.has_edge(0, 13));
    CHECK(g14.has_edge(9, 13));
    CHECK(!g14.has_edge(6, 12));
    CHECK_THROWS_AS(build_gamma(0), std::invalid_argument);
}

TEST_CASE("spider tree family") {
    for (long k = 2; k <= 6; ++k) {
        Graph t = build_T(k);
        CHECK(t.n() == 2 * k + 2);
        CHECK(t.edge_count() == t.n() - 1);  // tree
        CHECK(is_bipartite(t));
        CHECK(t.degree(0) == k + 1);
        long leaves = 0;
        for (long v = 0; v < t.n(); ++v)
            if (t.degree(v) == 1) ++leaves;
        CHECK(leaves == k + 1);
    }
    // center of the k=4 member adjacent to 2,4,6,8,10 (1-indexed)
    Graph t10 = build_T(4);
    for (long v : {1l, 3l, 5l, 7l, 9l}) CHECK(t10.has_edge(0, v));
    CHECK_THROWS_AS(build_T(1), std::invalid_argument);
}

TEST_CASE("matched star stacks") {
    Graph z = build_Z({1, 1, 1, 2, 2});
    CHECK(z.n() == 24);
    CHECK(is_bipartite(z));
    // node 6 adjacent to 1..5 and its leaf 7 (1-indexed)
    CHECK(z.degree(5) == 6);
    for (long v = 0; v < 5; ++v) CHECK(z.has_edge(5, v));
    CHECK(z.has_edge(5, 6));
    // nodes 16 and 18 adjacent to node 1 plus their own leaf
    CHECK(z.degree(15) == 2);
    CHECK(z.has_edge(15, 0));
    CHECK(z.has_edge(15, 16));
    CHECK(z.degree(17) == 2);
    CHECK(z.has_edge(17, 0));
    CHECK(z.has_edge(17, 18));

    for (auto& a : std::vector<std::vector<long>>{{2}, {1, 2}, {3, 1}, {2, 2}}) {
        Graph g = build_Z(a);
        long total = 0;
        for (long ai : a) total += ai;
        CHECK(g.n() == 2 * static_cast<long>(a.size()) + 2 * total);
        CHECK(is_bipartite(g));
    }

    // single-group stacks are the spider trees
    for (long r = 2; r <= 3; ++r)
        CHECK(canonical_form(build_Z({r})) == canonical_form(build_T(r)));

    CHECK_THROWS_AS(build_Z({}), std::invalid_argument);
    CHECK_THROWS_AS(build_Z({0, 1}), std::invalid_argument);
}

TEST_CASE("disjoint union") {
    Graph c5 = build_basic(BasicKind::cycle, 5);
    Graph pt = build_basic(BasicKind::point, 1);
    Graph u = disjoint_union(c5, pt);
    CHECK(u.n() == 6);
    CHECK(u.edge_count() == 5);
    CHECK(canonical_form(disjoint_union(pt, c5)) == canonical_form(u));
}

TEST_CASE("independence profiles") {
    CHECK(independence_profile(build_basic(BasicKind::point, 1)) ==
          std::vector<Int>{1, 1});
    CHECK(independence_profile(build_basic(BasicKind::path, 2)) ==
          std::vector<Int>{1, 2});
    CHECK(independence_profile(build_basic(BasicKind::cycle, 5)) ==
          std::vector<Int>{1, 5, 5});

    // the k=2 pentagon chain has 18 independent pairs
    auto g8 = independence_profile(build_gamma(2));
    CHECK(g8[2] == 18);

    // the 6-vertex spider has 5 maximum independent sets
    auto t6 = independence_profile(build_T(2));
    CHECK(t6.size() == 4);
    CHECK(t6[3] == 5);

    // brute-force agreement on assorted small graphs
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        long n = 1 + static_cast<long>(rng() % 7);
        Graph g(n);
        for (long i = 0; i < n; ++i)
            for (long j = i + 1; j < n; ++j)
                if (rng() % 2) g.add_edge(i, j);
        CHECK(independence_profile(g) == profile_brute(g));
    }
    CHECK(independence_profile(build_gamma(2)) == profile_brute(build_gamma(2)));
    CHECK(independence_profile(build_T(3)) == profile_brute(build_T(3)));
}

TEST_CASE("hilbert series") {
    HilbertRF c5 = hilbert_series(build_basic(BasicKind::cycle, 5));
    CHECK(c5.numerator == std::vector<Int>{1, 3, 1});
    CHECK(c5.pole_order == 2);

    // the 6-vertex spider carries the same numerator one pole higher,
    // matching its product relation with pentagon + point
    HilbertRF t6 = hilbert_series(build_T(2));
    CHECK(t6.numerator == std::vector<Int>{1, 3, 1});
    CHECK(t6.pole_order == 3);
    HilbertRF c5pt = hilbert_series(
        disjoint_union(build_basic(BasicKind::cycle, 5), build_basic(BasicKind::point, 1)));
    CHECK(c5pt == t6);

    // closed form for the pentagon chain family
    for (long k = 1; k <= 5; ++k)
        CHECK(hilbert_series(build_gamma(k)) == hilbert_gamma_closed(k));

    // numerator at t=1 is the count of maximum independent sets, positive
    for (long k = 1; k <= 4; ++k) {
        HilbertRF rf = hilbert_series(build_gamma(k));
        Int at1 = 0;
        for (const Int& c : rf.numerator) at1 += c;
        CHECK(at1 > 0);
    }

    CHECK(hilbert_expand(hilbert_series(build_basic(BasicKind::point, 1)), 4) ==
          std::vector<Int>{1, 1, 1, 1, 1});
    CHECK(hilbert_expand(c5, 3) == std::vector<Int>{1, 5, 10, 15});
    CHECK(hilbert_to_string(c5) == "(1 + 3t + t^2)/(1-t)^2");
}

TEST_CASE("adjacency determinants") {
    CHECK(adjacency_determinant(build_basic(BasicKind::point, 1)) == 0);
    CHECK(adjacency_determinant(build_basic(BasicKind::path, 2)) == -1);
    CHECK(adjacency_determinant(build_basic(BasicKind::cycle, 5)) == 2);
    // block diagonal multiplies
    Graph two = disjoint_union(build_basic(BasicKind::path, 2),
                               build_basic(BasicKind::path, 2));
    CHECK(adjacency_determinant(two) == 1);
}

TEST_CASE("canonical forms") {
    Graph c5 = build_basic(BasicKind::cycle, 5);
    std::mt19937 rng(99);
    std::vector<long> perm{0, 1, 2, 3, 4};
    for (int t = 0; t < 10; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(canonical_form(permuted(c5, perm)) == canonical_form(c5));
    }
    CHECK(canonical_form(build_basic(BasicKind::path, 3)) ==
          canonical_form(build_basic(BasicKind::simple_star, 2)));

    // all labeled graphs on 4 vertices reduce to 11 classes
    std::set<std::string> forms;
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g(4);
        unsigned bit = 0;
        for (long i = 0; i < 4; ++i)
            for (long j = i + 1; j < 4; ++j, ++bit)
                if ((mask >> bit) & 1u) g.add_edge(i, j);
        forms.insert(canonical_form(g));
    }
    CHECK(forms.size() == 11);

    std::set<std::uint64_t> keys;
    for (unsigned mask = 0; mask < 64; ++mask) {
        Graph g(4);
        unsigned bit = 0;
        for (long i = 0; i < 4; ++i)
            for (long j = i + 1; j < 4; ++j, ++bit)
                if ((mask >> bit) & 1u) g.add_edge(i, j);
        keys.insert(canonical_key(g));
    }
    CHECK(keys.size() == 11);

    CHECK_THROWS_AS(canonical_form(Graph(9)), std::invalid_argument);
}

TEST_CASE("bipartiteness") {
    CHECK(!is_bipartite(build_basic(BasicKind::cycle, 5)));
    CHECK(is_bipartite(build_basic(BasicKind::cycle, 6)));
    CHECK(is_bipartite(build_T(4)));
    CHECK(is_bipartite(build_Z({2, 1})));
    CHECK(!is_bipartite(build_gamma(3)));
}

TEST_CASE("graph spec parsing and JSON") {
    CHECK(parse_graph_spec("gamma:2").n() == 8);
    CHECK(parse_graph_spec("T:3").n() == 8);
    CHECK(parse_graph_spec("Z:1,2").n() == 10);
    CHECK(parse_graph_spec("pt").n() == 1);
    Graph u = parse_graph_spec("cycle:5 + pt");
    CHECK(u.n() == 6);
    CHECK(u.edge_count() == 5);
    Graph u2 = parse_graph_spec("T:2+path:3");
    CHECK(u2.n() == 9);
    CHECK_THROWS_AS(parse_graph_spec("frob:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec(""), std::invalid_argument);

    Graph z = build_Z({1, 2});
    Graph back = graph_from_json_string(graph_to_json_string(z));
    CHECK(back == z);
    Graph j = parse_graph_spec("{\"n\": 3, \"edges\": [[1,2],[2,3]]}");
    CHECK(j.n() == 3);
    CHECK(j.has_edge(0, 1));
    CHECK(j.has_edge(1, 2));
    CHECK(!j.has_edge(0, 2));
    CHECK_THROWS_AS(parse_graph_spec("{\"n\": 2, \"edges\": [[1,3]]}"),
                    std::invalid_argument);
}
