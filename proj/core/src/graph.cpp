#include "qzeta/graph.hpp"

#include "qzeta/numbers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qzeta {

Graph::Graph(long n) : n_(n) {
    if (n < 0 || n > 64)
        throw std::invalid_argument("Graph: vertex count must be in 0..64");
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(long i, long j) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (i == j)
        throw std::invalid_argument("add_edge: loops not allowed");
    adj_[static_cast<std::size_t>(i)] |= 1ull << j;
    adj_[static_cast<std::size_t>(j)] |= 1ull << i;
}

bool Graph::has_edge(long i, long j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw std::invalid_argument("has_edge: vertex out of range");
    return (adj_[static_cast<std::size_t>(i)] >> j) & 1u;
}

long Graph::degree(long i) const {
    return std::popcount(neighbors(i));
}

long Graph::edge_count() const {
    long total = 0;
    for (long i = 0; i < n_; ++i) total += degree(i);
    return total / 2;
}

std::vector<std::pair<long, long>> Graph::edges() const {
    std::vector<std::pair<long, long>> out;
    for (long i = 0; i < n_; ++i)
        for (long j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

Graph build_basic(BasicKind kind, long size) {
    switch (kind) {
        case BasicKind::point:
            return Graph(1);
        case BasicKind::path: {
            if (size < 1) throw std::invalid_argument("path needs size >= 1");
            Graph g(size);
            for (long i = 0; i + 1 < size; ++i) g.add_edge(i, i + 1);
            return g;
        }
        case BasicKind::cycle: {
            if (size < 3) throw std::invalid_argument("cycle needs size >= 3");
            Graph g(size);
            for (long i = 0; i < size; ++i) g.add_edge(i, (i + 1) % size);
            return g;
        }
        case BasicKind::simple_star: {
            if (size < 1) throw std::invalid_argument("star needs >= 1 leg");
            Graph g(size + 1);
            for (long i = 1; i <= size; ++i) g.add_edge(0, i);
            return g;
        }
    }
    throw std::invalid_argument("build_basic: unknown kind");
}

Graph build_gamma(long k) {
    if (k < 1) throw std::invalid_argument("build_gamma needs k >= 1");
    long n = 3 * k + 2;
    if (n > 64) throw std::invalid_argument("build_gamma: too many vertices");
    Graph g(n);
    auto edge1 = [&g](long i, long j) { g.add_edge(i - 1, j - 1); };
    // pentagon on 1..5
    edge1(1, 2);
    edge1(2, 3);
    edge1(3, 4);
    edge1(4, 5);
    edge1(5, 1);
    // tail path 5-6-...-(3k+2)
    for (long i = 5; i <= 3 * k + 1; ++i) edge1(i, i + 1);
    // chords from 1 and 4 into the tail
    for (long t = 2; t <= k; ++t) {
        edge1(1, 3 * t + 2);
        edge1(4, 3 * t + 2);
    }
    // cross chords within the tail
    for (long s = 2; s <= k - 1; ++s)
        for (long l = s; l <= k - 1; ++l) edge1(3 * s + 1, 3 * l + 5);
    return g;
}

Graph build_T(long k) {
    if (k < 2) throw std::invalid_argument("build_T needs k >= 2");
    long n = 2 * k + 2;
    if (n > 64) throw std::invalid_argument("build_T: too many vertices");
    Graph g(n);
    auto edge1 = [&g](long i, long j) { g.add_edge(i - 1, j - 1); };
    for (long i = 1; i <= k; ++i) {
        edge1(1, 2 * i);
        edge1(2 * i, 2 * i + 1);
    }
    edge1(1, 2 * k + 2);
    return g;
}

Graph build_Z(const std::vector<long>& a) {
    long k = static_cast<long>(a.size());
    if (k < 1) throw std::invalid_argument("build_Z needs at least one group");
    long total_gadgets = 0;
    for (long ai : a) {
        if (ai < 1) throw std::invalid_argument("build_Z: all a_i must be >= 1");
        total_gadgets += ai;
    }
    long n = 2 * k + 2 * total_gadgets;
    if (n > 64) throw std::invalid_argument("build_Z: too many vertices");
    Graph g(n);
    auto edge1 = [&g](long i, long j) { g.add_edge(i - 1, j - 1); };
    // gadget pairs take ids k+1, k+2, ... in group order; primed base
    // vertices come last as n-k+1 .. n
    long next = k + 1;
    for (long i = 1; i <= k; ++i) {
        for (long c = 0; c < a[static_cast<std::size_t>(i - 1)]; ++c) {
            long center = next++;
            long leaf = next++;
            for (long b = 1; b <= k - i + 1; ++b) edge1(center, b);
            edge1(center, leaf);
        }
    }
    for (long i = 1; i <= k; ++i) edge1(i, next++);
    return g;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
    long n = g1.n() + g2.n();
    if (n > 64) throw std::invalid_argument("disjoint_union: too many vertices");
    Graph g(n);
    for (auto [i, j] : g1.edges()) g.add_edge(i, j);
    for (auto [i, j] : g2.edges()) g.add_edge(g1.n() + i, g1.n() + j);
    return g;
}

Graph permuted(const Graph& g, const std::vector<long>& perm) {
    long n = g.n();
    if (static_cast<long>(perm.size()) != n)
        throw std::invalid_argument("permuted: wrong permutation length");
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (long v : perm) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permuted: not a permutation");
        seen[static_cast<std::size_t>(v)] = true;
    }
    Graph out(n);
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j)
            if (g.has_edge(perm[static_cast<std::size_t>(i)],
                           perm[static_cast<std::size_t>(j)]))
                out.add_edge(i, j);
    return out;
}

bool is_bipartite(const Graph& g) {
    long n = g.n();
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    std::vector<long> stack;
    for (long s = 0; s < n; ++s) {
        if (color[static_cast<std::size_t>(s)] != -1) continue;
        color[static_cast<std::size_t>(s)] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            long v = stack.back();
            stack.pop_back();
            for (std::uint64_t m = g.neighbors(v); m; m &= m - 1) {
                long w = std::countr_zero(m);
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] =
                        1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

namespace {

// Counts independent sets by size inside the induced subgraph on avail,
// branching on a max-degree vertex; once the remainder is edge-free the
// profile is binomial.  depth = vertices already committed.
void profile_rec(const std::vector<std::uint64_t>& adj, std::uint64_t avail,
                 long depth, std::vector<Int>& out) {
    long best = -1;
    long best_deg = 0;
    for (std::uint64_t m = avail; m; m &= m - 1) {
        long v = std::countr_zero(m);
        long d = std::popcount(adj[static_cast<std::size_t>(v)] & avail);
        if (d > best_deg) {
            best_deg = d;
            best = v;
        }
    }
    if (best < 0) {
        long m = std::popcount(avail);
        if (static_cast<long>(out.size()) < depth + m + 1)
            out.resize(static_cast<std::size_t>(depth + m + 1));
        for (long j = 0; j <= m; ++j)
            out[static_cast<std::size_t>(depth + j)] += binomial(m, j);
        return;
    }
    std::uint64_t bit = 1ull << best;
    profile_rec(adj, avail & ~bit, depth, out);
    profile_rec(adj, avail & ~(adj[static_cast<std::size_t>(best)] | bit),
                depth + 1, out);
}

}  // namespace

std::vector<Int> independence_profile(const Graph& g) {
    long n = g.n();
    if (n > 32)
        throw std::invalid_argument("independence_profile: limited to n <= 32");
    std::vector<std::uint64_t> adj;
    adj.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) adj.push_back(g.neighbors(i));
    std::uint64_t avail = (n == 0) ? 0 : ((1ull << n) - 1);
    std::vector<Int> out;
    profile_rec(adj, avail, 0, out);
    return out;
}

long independence_number(const Graph& g) {
    return static_cast<long>(independence_profile(g).size()) - 1;
}

HilbertRF hilbert_series(const Graph& g) {
    std::vector<Int> ind = independence_profile(g);
    long alpha = static_cast<long>(ind.size()) - 1;
    std::vector<Int> num(static_cast<std::size_t>(alpha + 1), 0);
    for (long j = 0; j <= alpha; ++j) {
        // ind_j t^j (1-t)^(alpha-j)
        for (long i = 0; i <= alpha - j; ++i) {
            Int c = ind[static_cast<std::size_t>(j)] * binomial(alpha - j, i);
            if (i % 2) c = -c;
            num[static_cast<std::size_t>(j + i)] += c;
        }
    }
    while (num.size() > 1 && num.back() == 0) num.pop_back();
    return HilbertRF{std::move(num), alpha};
}

std::vector<Int> hilbert_expand(const HilbertRF& rf, long T) {
    if (T < 0) throw std::invalid_argument("hilbert_expand: T must be >= 0");
    std::vector<Int> out(static_cast<std::size_t>(T + 1), 0);
    long d = rf.pole_order;
    for (long i = 0; i <= T; ++i) {
        // coefficient of t^i in 1/(1-t)^d
        Int rec = (d == 0) ? Int(i == 0 ? 1 : 0) : binomial(i + d - 1, d - 1);
        if (rec == 0) continue;
        for (long j = 0; j < static_cast<long>(rf.numerator.size()); ++j) {
            if (i + j > T) break;
            out[static_cast<std::size_t>(i + j)] +=
                rec * rf.numerator[static_cast<std::size_t>(j)];
        }
    }
    return out;
}

HilbertRF hilbert_gamma_closed(long k) {
    if (k < 1) throw std::invalid_argument("hilbert_gamma_closed needs k >= 1");
    std::vector<Int> num{1};
    auto mul = [&num](const std::vector<Int>& f) {
        std::vector<Int> res(num.size() + f.size() - 1, 0);
        for (std::size_t i = 0; i < num.size(); ++i)
            for (std::size_t j = 0; j < f.size(); ++j) res[i + j] += num[i] * f[j];
        num = std::move(res);
    };
    for (long i = 0; i < k - 1; ++i) mul({1, 1});
    mul({1, Int(2 + k), 1});
    return HilbertRF{std::move(num), k + 1};
}

std::string hilbert_to_string(const HilbertRF& rf) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (long j = 0; j < static_cast<long>(rf.numerator.size()); ++j) {
        Int c = rf.numerator[static_cast<std::size_t>(j)];
        if (c == 0 && rf.numerator.size() > 1) continue;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        Int ac = abs(c);
        if (ac != 1 || j == 0) os << ac.get_str();
        if (j == 1) os << "t";
        if (j >= 2) os << "t^" << j;
    }
    os << ")";
    if (rf.pole_order == 1) os << "/(1-t)";
    if (rf.pole_order >= 2) os << "/(1-t)^" << rf.pole_order;
    return os.str();
}

Int adjacency_determinant(const Graph& g) {
    long n = g.n();
    if (n == 0) return 1;
    std::vector<std::vector<Int>> m(static_cast<std::size_t>(n),
                                    std::vector<Int>(static_cast<std::size_t>(n), 0));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j)
            if (i != j && g.has_edge(i, j)) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    // Bareiss fraction-free elimination
    int sign = 1;
    Int prev = 1;
    for (long c = 0; c + 1 < n; ++c) {
        auto uc = static_cast<std::size_t>(c);
        if (m[uc][uc] == 0) {
            long p = -1;
            for (long i = c + 1; i < n; ++i)
                if (m[static_cast<std::size_t>(i)][uc] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[uc], m[static_cast<std::size_t>(p)]);
            sign = -sign;
        }
        for (long i = c + 1; i < n; ++i) {
            auto ui = static_cast<std::size_t>(i);
            for (long j = c + 1; j < n; ++j) {
                auto uj = static_cast<std::size_t>(j);
                m[ui][uj] = (m[ui][uj] * m[uc][uc] - m[ui][uc] * m[uc][uj]) / prev;
            }
        }
        prev = m[uc][uc];
    }
    return sign * m[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
}

namespace {

std::string encode_upper_triangle(const Graph& g, const std::vector<long>& perm) {
    long n = g.n();
    long bits = n * (n - 1) / 2;
    std::string enc(static_cast<std::size_t>(1 + (bits + 7) / 8), '\0');
    enc[0] = static_cast<char>(n);
    long pos = 0;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j) {
            if (g.has_edge(perm[static_cast<std::size_t>(i)],
                           perm[static_cast<std::size_t>(j)]))
                enc[static_cast<std::size_t>(1 + pos / 8)] |=
                    static_cast<char>(1 << (pos % 8));
            ++pos;
        }
    return enc;
}

}  // namespace

std::string canonical_form(const Graph& g) {
    long n = g.n();
    if (n > 8)
        throw std::invalid_argument("canonical_form: brute force limited to n <= 8");
    std::vector<long> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0l);
    std::string best;
    do {
        std::string enc = encode_upper_triangle(g, perm);
        if (best.empty() || enc < best) best = std::move(enc);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (best.empty()) best = std::string(1, '\0');
    return best;
}

std::uint64_t canonical_key(const Graph& g) {
    std::string form = canonical_form(g);
    if (form.size() > 8)
        throw std::invalid_argument("canonical_key: graph too large for 64 bits");
    std::uint64_t key = 0;
    for (char c : form) key = (key << 8) | static_cast<unsigned char>(c);
    return key;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

long parse_long(const std::string& s) {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

Graph parse_atom(const std::string& atom) {
    if (atom == "pt" || atom == "point") return build_basic(BasicKind::point, 1);
    std::size_t colon = atom.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("unknown graph spec: '" + atom + "'");
    std::string head = atom.substr(0, colon);
    std::string arg = atom.substr(colon + 1);
    if (head == "path") return build_basic(BasicKind::path, parse_long(arg));
    if (head == "cycle") return build_basic(BasicKind::cycle, parse_long(arg));
    if (head == "star") return build_basic(BasicKind::simple_star, parse_long(arg));
    if (head == "gamma") return build_gamma(parse_long(arg));
    if (head == "T" || head == "t") return build_T(parse_long(arg));
    if (head == "Z" || head == "z") {
        std::vector<long> a;
        std::stringstream ss(arg);
        std::string piece;
        while (std::getline(ss, piece, ',')) a.push_back(parse_long(trim(piece)));
        return build_Z(a);
    }
    throw std::invalid_argument("unknown graph spec: '" + atom + "'");
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    std::string s = trim(spec);
    if (s.empty()) throw std::invalid_argument("empty graph spec");
    if (s.front() == '{') return graph_from_json_string(s);
    Graph out;
    bool have = false;
    std::stringstream ss(s);
    std::string piece;
    while (std::getline(ss, piece, '+')) {
        Graph g = parse_atom(trim(piece));
        out = have ? disjoint_union(out, g) : g;
        have = true;
    }
    return out;
}

std::string graph_to_json_string(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n();
    auto arr = nlohmann::ordered_json::array();
    for (auto [a, b] : g.edges())
        arr.push_back(nlohmann::ordered_json::array({a + 1, b + 1}));
    j["edges"] = std::move(arr);
    return j.dump();
}

Graph graph_from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph JSON needs fields \"n\" and \"edges\"");
    long n = j.at("n").get<long>();
    Graph g(n);
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("graph JSON edge must be a pair");
        long a = e.at(0).get<long>();
        long b = e.at(1).get<long>();
        if (a < 1 || b < 1 || a > n || b > n)
            throw std::invalid_argument("graph JSON edge vertex out of range");
        g.add_edge(a - 1, b - 1);
    }
    return g;
}

}  // namespace qzeta
