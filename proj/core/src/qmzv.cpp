#include "qzeta/qmzv.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qzeta {

namespace {

using Poly = std::vector<Int>;

void check_composition(const std::vector<long>& a) {
    if (a.empty()) throw std::invalid_argument("composition must be nonempty");
    for (long ai : a)
        if (ai < 1) throw std::invalid_argument("composition entries must be positive");
}

QSeries poly_to_series(const Poly& c, long scale, long N) {
    std::vector<Rat> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) out[i] = Rat(c[i]);
    (void)N;
    return QSeries::from_parts(0, scale, std::move(out));
}

// in place multiply by 1/(1-q^step)^count on a dense grid
void divide_pochhammer(Poly& c, long step, long count, long lo) {
    long top = static_cast<long>(c.size()) - 1;
    for (long rep = 0; rep < count; ++rep)
        for (long i = lo + step; i <= top; ++i)
            c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - step)];
}

// shared walker for the three nested models
struct NestedWalk {
    const std::vector<long>* a;
    long N;
    bool strict;
    bool standard_numerator;
    Poly acc;

    void run() {
        acc.assign(static_cast<std::size_t>(N + 1), Int(0));
        Poly one(static_cast<std::size_t>(N + 1), Int(0));
        one[0] = 1;
        descend(0, N + 1, 0, one);
    }

    void descend(std::size_t depth, long prev, long minexp, const Poly& cur) {
        if (depth == a->size()) {
            for (long i = minexp; i <= N; ++i)
                acc[static_cast<std::size_t>(i)] += cur[static_cast<std::size_t>(i)];
            return;
        }
        long ai = (*a)[depth];
        long hi = strict ? prev - 1 : prev;
        for (long n = 1; n <= hi; ++n) {
            // numerator: q^{n_1} for the star/strict models, q^{(a_i-1)n_i}
            // per level for the standard model
            long gain = 0;
            if (standard_numerator)
                gain = (ai - 1) * n;
            else if (depth == 0)
                gain = n;
            if (minexp + gain > N) {
                if (gain > 0) break;  // grows with n, nothing further fits
                // gain == 0 cannot exceed the order; keep scanning
            }
            Poly t(static_cast<std::size_t>(N + 1), Int(0));
            for (long i = minexp; i <= N - gain; ++i)
                t[static_cast<std::size_t>(i + gain)] = cur[static_cast<std::size_t>(i)];
            divide_pochhammer(t, n, ai, minexp + gain);
            descend(depth + 1, n, minexp + gain, t);
        }
    }
};

}  // namespace

QSeries zq_star(const std::vector<long>& a, long N) {
    check_composition(a);
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    NestedWalk w{&a, N, false, false, {}};
    w.run();
    return poly_to_series(w.acc, 1, N);
}

QSeries zq_strict(const std::vector<long>& a, long N) {
    check_composition(a);
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    NestedWalk w{&a, N, true, false, {}};
    w.run();
    return poly_to_series(w.acc, 1, N);
}

QSeries zq_standard(const std::vector<long>& a, long N) {
    check_composition(a);
    if (a[0] < 2) throw std::invalid_argument("leading entry must be >= 2 in the standard model");
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    NestedWalk w{&a, N, true, true, {}};
    w.run();
    return poly_to_series(w.acc, 1, N);
}

RootSystemA RootSystemA::make(long n) {
    if (n < 1) throw std::invalid_argument("rank must be >= 1");
    RootSystemA r;
    r.rank = n;
    for (long i = 1; i <= n; ++i)
        for (long j = i; j <= n; ++j) {
            std::vector<long> coeff(static_cast<std::size_t>(n), 0);
            for (long s = i; s <= j; ++s) coeff[static_cast<std::size_t>(s - 1)] = 1;
            r.positive_roots.push_back(std::move(coeff));
        }
    return r;
}

long RootSystemA::interval_index(long n, long i, long j) {
    if (i < 1 || j < i || j > n) throw std::invalid_argument("bad interval");
    // intervals [1,1]..[1,n] come first, then [2,2]..[2,n], ...
    return (i - 1) * n - (i - 1) * (i - 2) / 2 + (j - i);
}

namespace {

void check_roots(const RootSystemA& roots) {
    if (roots.rank < 1) throw std::invalid_argument("rank must be >= 1");
    if (roots.positive_roots.empty()) throw std::invalid_argument("no positive roots");
    for (auto& c : roots.positive_roots) {
        if (static_cast<long>(c.size()) != roots.rank)
            throw std::invalid_argument("root coefficient vector has wrong length");
        bool nonzero = false;
        for (long v : c) {
            if (v != 0 && v != 1) throw std::invalid_argument("root coefficients must be 0/1");
            if (v == 1) nonzero = true;
        }
        if (!nonzero) throw std::invalid_argument("zero root vector");
    }
}

bool is_interval_system(const RootSystemA& roots) {
    RootSystemA ref = RootSystemA::make(roots.rank);
    return roots.positive_roots == ref.positive_roots;
}

// Walk over the shifted coordinates p_s = m_s + 1 >= 1.  The doubled grid
// (exponents in half-integers) makes odd exponent sums exact.  dim_pow
// multiplies each term by prod_alpha M_alpha^dim_pow.
Poly weight_cone_sum(const RootSystemA& roots, const std::vector<long>& kvec,
                     long dim_pow, long N) {
    long n = roots.rank;
    long top2 = 2 * N;  // doubled grid
    Poly acc(static_cast<std::size_t>(top2 + 1), Int(0));
    std::vector<long> p(static_cast<std::size_t>(n), 1);

    // doubled numerator exponent: sum_alpha k_alpha M_alpha; raising p_s by 1
    // raises it by weight2[s] = sum of k_alpha over roots containing s
    std::vector<long> weight2(static_cast<std::size_t>(n), 0);
    for (std::size_t r = 0; r < roots.positive_roots.size(); ++r)
        for (long s = 0; s < n; ++s)
            if (roots.positive_roots[r][static_cast<std::size_t>(s)])
                weight2[static_cast<std::size_t>(s)] += kvec[r];
    for (long s = 0; s < n; ++s)
        if (weight2[static_cast<std::size_t>(s)] < 1)
            throw std::invalid_argument("every simple root needs positive total exponent weight");

    long base = 0;  // exponent at the current p with all later choices minimal
    for (long s = 0; s < n; ++s) base += weight2[static_cast<std::size_t>(s)];

    // odometer over p with pruning on the doubled exponent
    while (true) {
        if (base <= top2) {
            Poly term(static_cast<std::size_t>(top2 + 1), Int(0));
            term[static_cast<std::size_t>(base)] = 1;
            Int dim = 1;
            for (std::size_t r = 0; r < roots.positive_roots.size(); ++r) {
                long m = 0;
                for (long s = 0; s < n; ++s)
                    if (roots.positive_roots[r][static_cast<std::size_t>(s)])
                        m += p[static_cast<std::size_t>(s)];
                divide_pochhammer(term, 2 * m, kvec[r], base);
                for (long rep = 0; rep < dim_pow; ++rep) dim *= m;
            }
            if (dim != 1)
                for (long i = base; i <= top2; ++i)
                    term[static_cast<std::size_t>(i)] *= dim;
            for (long i = base; i <= top2; ++i)
                acc[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
            // advance the innermost coordinate
            ++p[static_cast<std::size_t>(n - 1)];
            base += weight2[static_cast<std::size_t>(n - 1)];
        } else {
            // roll over: find the rightmost coordinate we can reset
            long s = n - 1;
            while (s >= 0) {
                base -= (p[static_cast<std::size_t>(s)] - 1) * weight2[static_cast<std::size_t>(s)];
                p[static_cast<std::size_t>(s)] = 1;
                --s;
                if (s < 0) return acc;
                ++p[static_cast<std::size_t>(s)];
                base += weight2[static_cast<std::size_t>(s)];
                if (base <= top2) break;
            }
        }
    }
}

}  // namespace

QSeries zeta_g(const RootSystemA& roots, const std::vector<long>& kvec, long N) {
    check_roots(roots);
    if (kvec.size() != roots.positive_roots.size())
        throw std::invalid_argument("one exponent per positive root required");
    for (long k : kvec)
        if (k < 1) throw std::invalid_argument("exponents must be >= 1");
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    return poly_to_series(weight_cone_sum(roots, kvec, 0, N), 2, N);
}

QSeries zeta_g_s(const RootSystemA& roots, long s, long k, long N) {
    check_roots(roots);
    if (!is_interval_system(roots))
        throw std::invalid_argument("dimension-weighted sums need the type A interval system");
    if (s < 0) throw std::invalid_argument("s must be >= 0");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (N < 1) throw std::invalid_argument("N must be >= 1");
    std::vector<long> kvec(roots.positive_roots.size(), k);
    return poly_to_series(weight_cone_sum(roots, kvec, s, N), 2, N);
}

QSeries bibracket_sl(long n, const std::vector<long>& kmat,
                     const std::vector<long>& smat, long N) {
    RootSystemA roots = RootSystemA::make(n);
    long r = static_cast<long>(roots.positive_roots.size());
    if (static_cast<long>(kmat.size()) != r || smat.size() != kmat.size())
        throw std::invalid_argument("one k and one s per interval required");
    for (long k : kmat)
        if (k < 1) throw std::invalid_argument("k entries must be >= 1");
    for (long s : smat)
        if (s < 0) throw std::invalid_argument("s entries must be >= 0");
    if (N < 1) throw std::invalid_argument("N must be >= 1");

    long top2 = 2 * N;
    Poly acc(static_cast<std::size_t>(top2 + 1), Int(0));
    std::vector<long> m(static_cast<std::size_t>(n), 1);

    // doubled exponent with coordinates d..n-1 held at their minimum 1
    auto floor_exponent = [&](long d) {
        long e2 = 0;
        for (long rr = 0; rr < r; ++rr) {
            long msum = 0;
            for (long s = 0; s < n; ++s)
                if (roots.positive_roots[static_cast<std::size_t>(rr)][static_cast<std::size_t>(s)])
                    msum += (s < d) ? m[static_cast<std::size_t>(s)] : 1;
            e2 += kmat[static_cast<std::size_t>(rr)] * msum;
        }
        return e2;
    };

    // accumulate interval by interval rather than from a precomputed global
    // weight table, so this path shares no structure with the zeta_g walk
    auto emit = [&]() {
        long e2 = floor_exponent(n);
        Poly term(static_cast<std::size_t>(top2 + 1), Int(0));
        term[static_cast<std::size_t>(e2)] = 1;
        Int scal = 1;
        for (long rr = 0; rr < r; ++rr) {
            long msum = 0;
            for (long s = 0; s < n; ++s)
                if (roots.positive_roots[static_cast<std::size_t>(rr)][static_cast<std::size_t>(s)])
                    msum += m[static_cast<std::size_t>(s)];
            divide_pochhammer(term, 2 * msum, kmat[static_cast<std::size_t>(rr)], e2);
            for (long rep = 0; rep < smat[static_cast<std::size_t>(rr)]; ++rep) scal *= msum;
        }
        if (scal != 1)
            for (long i = e2; i <= top2; ++i)
                term[static_cast<std::size_t>(i)] *= scal;
        for (long i = e2; i <= top2; ++i)
            acc[static_cast<std::size_t>(i)] += term[static_cast<std::size_t>(i)];
    };

    auto descend = [&](auto&& self, long d) -> void {
        if (floor_exponent(d) > top2) return;
        if (d == n) {
            emit();
            return;
        }
        for (m[static_cast<std::size_t>(d)] = 1;; ++m[static_cast<std::size_t>(d)]) {
            if (floor_exponent(d + 1) > top2) break;
            self(self, d + 1);
        }
        m[static_cast<std::size_t>(d)] = 1;
    };
    descend(descend, 0);
    return poly_to_series(acc, 2, N);
}

QSeries symmetrized_sum(const RootSystemA& roots, const std::vector<long>& kvals, long N) {
    check_roots(roots);
    if (kvals.size() != roots.positive_roots.size())
        throw std::invalid_argument("need one value per positive root");
    std::vector<std::size_t> idx(kvals.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::map<std::vector<long>, long> assignments;
    do {
        std::vector<long> kvec(kvals.size());
        for (std::size_t i = 0; i < kvals.size(); ++i) kvec[i] = kvals[idx[i]];
        ++assignments[kvec];
    } while (std::next_permutation(idx.begin(), idx.end()));
    QSeries total = QSeries::zero(N);
    for (auto& [kvec, mult] : assignments)
        total = total + zeta_g(roots, kvec, N) * QSeries::constant(mult, N);
    return total;
}

}  // namespace qzeta
