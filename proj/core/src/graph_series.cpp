#include "qzeta/graph_series.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>

namespace qzeta {

namespace {

// Integer polynomial truncated at q^N, dense.
using Poly = std::vector<Int>;

QSeries poly_to_series(const Poly& c, long N) {
    std::vector<Rat> out(static_cast<std::size_t>(N + 1));
    for (long i = 0; i <= N; ++i) out[static_cast<std::size_t>(i)] = Rat(c[static_cast<std::size_t>(i)]);
    return QSeries::from_parts(0, 1, std::move(out));
}

struct LatticeWalk {
    const Graph* g;
    const std::vector<long>* framing;
    long N;
    std::vector<long> vorder;  // visit order, high degree first
    std::vector<long> value;   // assigned n_v, indexed by vertex id
    Poly acc;

    void run() {
        long r = g->n();
        vorder.resize(static_cast<std::size_t>(r));
        std::iota(vorder.begin(), vorder.end(), 0l);
        std::stable_sort(vorder.begin(), vorder.end(), [&](long a, long b) {
            return g->degree(a) > g->degree(b);
        });
        value.assign(static_cast<std::size_t>(r), 0);
        acc.assign(static_cast<std::size_t>(N + 1), Int(0));
        Poly one(static_cast<std::size_t>(N + 1), Int(0));
        one[0] = 1;
        descend(0, one, 0);
    }

    // cur is the poly for the assignment so far; minexp its lowest exponent.
    void descend(long depth, const Poly& cur, long minexp) {
        if (depth == g->n()) {
            for (long i = minexp; i <= N; ++i)
                acc[static_cast<std::size_t>(i)] += cur[static_cast<std::size_t>(i)];
            return;
        }
        long v = vorder[static_cast<std::size_t>(depth)];
        // exponent gained per unit of n_v: framing plus couplings to the
        // already assigned neighbors (each edge is charged exactly once,
        // when its second endpoint gets a value)
        long delta = (*framing)[static_cast<std::size_t>(v)];
        for (long d2 = 0; d2 < depth; ++d2) {
            long u = vorder[static_cast<std::size_t>(d2)];
            if (g->has_edge(u, v)) delta += value[static_cast<std::size_t>(u)];
        }

        value[static_cast<std::size_t>(v)] = 0;
        descend(depth + 1, cur, minexp);

        // raise n_v one step at a time: multiply by q^delta / (1 - q^m);
        // minexp tracks the current lowest exponent, so one more step fits
        // exactly when minexp + delta <= N
        Poly t = cur;
        for (long m = 1; minexp + delta <= N; ++m) {
            for (long i = N; i >= minexp + delta; --i)
                t[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(i - delta)];
            for (long i = std::min(N, minexp + delta - 1); i >= minexp; --i)
                t[static_cast<std::size_t>(i)] = 0;
            minexp += delta;
            for (long i = minexp + m; i <= N; ++i)
                t[static_cast<std::size_t>(i)] += t[static_cast<std::size_t>(i - m)];
            value[static_cast<std::size_t>(v)] = m;
            descend(depth + 1, t, minexp);
        }
    }
};

}  // namespace

QSeries graph_series(const Graph& g, const std::vector<long>& framing, long order) {
    if (static_cast<long>(framing.size()) != g.n())
        throw std::invalid_argument("framing length must match the vertex count");
    for (long b : framing)
        if (b < 1) throw std::invalid_argument("framing entries must be >= 1");
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    LatticeWalk walk{&g, &framing, order, {}, {}, {}};
    walk.run();
    return poly_to_series(walk.acc, order);
}

QSeries graph_series(const Graph& g, long order) {
    return graph_series(g, std::vector<long>(static_cast<std::size_t>(g.n()), 1), order);
}

QSeries gamma_multisum(long k, long N) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    long r = k + 1;
    Poly acc(static_cast<std::size_t>(N + 1), Int(0));
    std::vector<long> w(static_cast<std::size_t>(r), 0);
    Poly term(static_cast<std::size_t>(N + 1), Int(0));
    // odometer over w with sum <= N
    long depth = 0;
    long total = 0;
    while (true) {
        if (depth == r) {
            std::fill(term.begin(), term.end(), Int(0));
            term[static_cast<std::size_t>(total)] = 1;
            // denominators (1 - q^{1+S_j}), S_j the suffix sum of j+1 entries
            long suffix = w[static_cast<std::size_t>(r - 1)];
            for (long j = 1; j <= k; ++j) {
                suffix += w[static_cast<std::size_t>(r - 1 - j)];
                long step = 1 + suffix;
                for (long i = total + step; i <= N; ++i)
                    term[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i - step)];
            }
            for (long i = total; i <= N; ++i)
                acc[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
            --depth;
            if (depth < 0) break;
            ++w[static_cast<std::size_t>(depth)];
            ++total;
            continue;
        }
        if (total > N) {
            total -= w[static_cast<std::size_t>(depth)];
            w[static_cast<std::size_t>(depth)] = 0;
            --depth;
            if (depth < 0) break;
            ++w[static_cast<std::size_t>(depth)];
            ++total;
            continue;
        }
        ++depth;
    }
    return poly_to_series(acc, N) * euler_product(N).powed(-(k + 1));
}

namespace {

void hilbert_descend(const Graph& g, long T, long depth, long sum,
                     std::uint64_t blocked, std::vector<Int>& out) {
    if (depth == g.n()) {
        out[static_cast<std::size_t>(sum)] += 1;
        return;
    }
    hilbert_descend(g, T, depth + 1, sum, blocked, out);
    if ((blocked >> depth) & 1u) return;
    std::uint64_t nb = blocked | g.neighbors(depth);
    for (long m = 1; sum + m <= T; ++m)
        hilbert_descend(g, T, depth + 1, sum + m, nb, out);
}

}  // namespace

std::vector<Int> hilbert_via_ct(const Graph& g, long T) {
    if (T < 0) throw std::invalid_argument("T must be >= 0");
    std::vector<Int> out(static_cast<std::size_t>(T + 1), Int(0));
    hilbert_descend(g, T, 0, 0, 0, out);
    return out;
}

namespace {

std::string series_fingerprint(const QSeries& s, long order) {
    std::string key;
    for (long i = 0; i <= order; ++i) {
        key += s.coeff_at(i).get_str();
        key += ',';
    }
    return key;
}

Graph graph_of_mask(long n, std::uint64_t mask) {
    Graph g(n);
    unsigned bit = 0;
    for (long i = 0; i < n; ++i)
        for (long j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u) g.add_edge(i, j);
    return g;
}

// canonical key -> lowest labeled mask realizing it, over all graphs on
// exactly n vertices; keeping the lowest mask makes the merge deterministic
std::map<std::uint64_t, std::uint64_t> classes_on(long n, long threads) {
    long pairs = n * (n - 1) / 2;
    std::uint64_t total = 1ull << pairs;
    long workers = std::max(1l, std::min(threads, static_cast<long>(total)));
    std::vector<std::map<std::uint64_t, std::uint64_t>> found(
        static_cast<std::size_t>(workers));
    auto sweep = [&](long wid) {
        auto& mine = found[static_cast<std::size_t>(wid)];
        for (std::uint64_t mask = static_cast<std::uint64_t>(wid); mask < total;
             mask += static_cast<std::uint64_t>(workers)) {
            std::uint64_t key = canonical_key(graph_of_mask(n, mask));
            auto it = mine.find(key);
            if (it == mine.end())
                mine.emplace(key, mask);
            else if (mask < it->second)
                it->second = mask;
        }
    };
    if (workers == 1) {
        sweep(0);
    } else {
        std::vector<std::thread> pool;
        for (long wkr = 0; wkr < workers; ++wkr) pool.emplace_back(sweep, wkr);
        for (auto& th : pool) th.join();
    }
    std::map<std::uint64_t, std::uint64_t> all;
    for (auto& part : found)
        for (auto& [key, mask] : part) {
            auto it = all.find(key);
            if (it == all.end())
                all.emplace(key, mask);
            else if (mask < it->second)
                it->second = mask;
        }
    return all;
}

}  // namespace

std::vector<CensusRow> census(long nmax, long order, long threads) {
    if (nmax < 1 || nmax > 6) throw std::invalid_argument("census supports 1 <= nmax <= 6");
    if (order < 12) throw std::invalid_argument("census order must be >= 12");
    if (threads < 1) throw std::invalid_argument("threads must be >= 1");
    std::vector<CensusRow> rows;
    for (long n = 1; n <= nmax; ++n) {
        std::map<std::uint64_t, std::uint64_t> keys = classes_on(n, threads);
        std::vector<Graph> reps;
        for (auto& [key, mask] : keys) reps.push_back(graph_of_mask(n, mask));

        std::vector<std::string> prints(reps.size());
        std::atomic<std::size_t> next{0};
        auto compute = [&]() {
            while (true) {
                std::size_t i = next.fetch_add(1);
                if (i >= reps.size()) return;
                prints[i] = series_fingerprint(graph_series(reps[i], order), order);
            }
        };
        long workers = std::max(1l, std::min(threads, static_cast<long>(reps.size())));
        if (workers == 1) {
            compute();
        } else {
            std::vector<std::thread> pool;
            for (long wkr = 0; wkr < workers; ++wkr) pool.emplace_back(compute);
            for (auto& th : pool) th.join();
        }
        std::set<std::string> distinct(prints.begin(), prints.end());
        rows.push_back(CensusRow{n, static_cast<long>(reps.size()),
                                 static_cast<long>(distinct.size())});
    }
    return rows;
}

}  // namespace qzeta
