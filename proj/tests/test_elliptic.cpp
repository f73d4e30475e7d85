#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qzeta/elliptic.hpp"
#include "qzeta/modular.hpp"
#include "qzeta/qmzv.hpp"

#include <stdexcept>
#include <vector>

using namespace qzeta;

namespace {

bool entries_agree(const ZetaSeries& a, const ZetaSeries& b, long nmax, const Rat& through) {
    for (long e = -nmax; e <= nmax; ++e)
        if (!QSeries::agree(a.entry(e), b.entry(e), through)) return false;
    return true;
}

}  // namespace

TEST_CASE("propagator windows") {
    const long N = 16;
    ZetaSeries p1 = p_function(1, N);
    CHECK(QSeries::agree(p1.entry(0), QSeries::constant(rat(1, 2), N), rat(N)));
    for (long n = 1; n <= 6; ++n) {
        QSeries inv = reciprocal_power(n, 1, N);
        CHECK(QSeries::agree(p1.entry(n), QSeries::monomial(1, rat(n), N) * inv, rat(N)));
        CHECK(QSeries::agree(p1.entry(-n), inv.scaled(-1), rat(N)));
    }
    CHECK(QSeries::agree(ct_product({p1}, rat(N)), QSeries::constant(rat(1, 2), N), rat(N)));

    ZetaSeries p2 = p_function(2, N);
    CHECK(ct_product({p2}, rat(N)).is_zero());
    CHECK(QSeries::agree(p2.entry(-3), reciprocal_power(3, 1, N).scaled(3), rat(N)));
    CHECK_THROWS_AS(p1.entry(1000), std::domain_error);
}

TEST_CASE("weierstrass constant terms") {
    const long N = 40;
    ZetaSeries wp = weierstrass_p(N);
    CHECK(QSeries::agree(ct_product({wp}, rat(N)), g_hat(2, N).scaled(-1), rat(N)));
    // the square pairs each z^n against z^{-n}; the result is quasi-modular
    QSeries sq = ct_product({wp, wp}, rat(N + 1));
    CHECK(QSeries::agree(sq, g_hat(4, N).scaled(5), rat(N + 1)));
    CHECK(QSeries::agree(sq, eisenstein(4, N).scaled(rat(1, 144)), rat(N + 1)));
}

TEST_CASE("weierstrass derivative is the third propagator") {
    const long N = 14;
    ZetaSeries wpp = weierstrass_p_prime(N);
    ZetaSeries p3 = p_function(3, N);
    CHECK(entries_agree(wpp, p3, 8, rat(N)));
    // odd z-symmetry: every constant term of an odd power vanishes
    CHECK(ct_product({wpp}, rat(N)).is_zero());
    CHECK(ct_product({wpp, wpp, wpp}, rat(N)).is_zero());
}

TEST_CASE("j blocks") {
    const long N = 18;
    CHECK(entries_agree(j_tilde(2, N), q_block(1, N), N / 2, rat(N + 1)));
    ZetaSeries j3 = j_tilde(3, N);
    for (long n = 1; n <= 5; ++n)
        CHECK(QSeries::agree(j3.entry(-n), j3.entry(n).scaled(-1), rat(N)));
    // sum n^2 q^n/(1-q^n)^3 picks up the degree one Euler polynomial 1 + x
    QSeries expect = (QSeries::monomial(1, 1, N) + QSeries::monomial(1, 2, N)) *
                     reciprocal_power(1, 3, N);
    CHECK(QSeries::agree(j3.entry(1), expect, rat(N)));
    CHECK_THROWS_AS(j_tilde(1, N), std::invalid_argument);
}

TEST_CASE("q block decomposition into j blocks") {
    const long N = 24;
    ZetaSeries lhs = q_block(3, N);
    ZetaSeries rhs = j_tilde(6, N).scaled(rat(1, 120)) + j_tilde(4, N).scaled(rat(-1, 24)) +
                     j_tilde(2, N).scaled(rat(1, 30));
    for (long e = -lhs.rad_neg(); e <= lhs.rad_pos(); ++e)
        CHECK(QSeries::agree(lhs.entry(e), rhs.entry(e), rat(N + 1)));
    // beyond the narrow window the combination cancels to high valuation
    for (long n = N / 3 + 1; n <= N; ++n) {
        CHECK(rhs.entry(n).is_zero());
        CHECK(rhs.entry(-n).is_zero());
    }
}

TEST_CASE("cubic constant terms match the rank two zeta sums") {
    // ct(q_block(k)^3) counts the three interval roots of sl3 with equal
    // exponents 2k, once per ordering of the z-pairing
    for (long k = 1; k <= 2; ++k) {
        const long N = 25;
        ZetaSeries b = q_block(k, N);
        QSeries ct = ct_product({b, b, b}, rat(N));
        QSeries zg = zeta_g(RootSystemA::make(2), {2 * k, 2 * k, 2 * k}, N);
        CHECK(QSeries::agree(ct, zg.scaled(6), rat(N)));
    }
}

TEST_CASE("constant term extraction is symmetric and multilinear") {
    const long N = 12;
    ZetaSeries a = q_block(1, N);
    ZetaSeries b = j_tilde(4, N);
    ZetaSeries c = q_block(2, N);
    CHECK(QSeries::agree(ct_product({a, b}, rat(N)), ct_product({b, a}, rat(N)), rat(N)));
    QSeries split = ct_product({a, c}, rat(N)) + ct_product({b, c}, rat(N));
    CHECK(QSeries::agree(ct_product({a + b, c}, rat(N)), split, rat(N)));
    CHECK(QSeries::agree(ct_product({a.scaled(rat(3, 7)), c}, rat(N)),
                         ct_product({a, c}, rat(N)).scaled(rat(3, 7)), rat(N)));
    // total z-derivatives drop out of the constant term
    QSeries left = ct_product({a.dz(), b}, rat(N));
    QSeries right = ct_product({a, b.dz()}, rat(N)).scaled(-1);
    CHECK(QSeries::agree(left, right, rat(N)));
    CHECK(ct_product({(a + b).dz()}, rat(N)).is_zero());
}

TEST_CASE("dtau acts entrywise") {
    const long N = 10;
    ZetaSeries d = p_function(1, N).dtau();
    CHECK(QSeries::agree(d.entry(2), p_function(1, N).entry(2).q_derived(), rat(N)));
    CHECK(d.entry(0).is_zero());
}

TEST_CASE("tail promises gate the truncation") {
    // a flat side paired against a decaying side is certified only as far as
    // the decaying window reaches
    ZetaSeries wp = weierstrass_p(10);
    CHECK_THROWS_AS(ct_product({wp, wp}, rat(40)), std::domain_error);
    ZetaSeries p2 = p_function(2, 10);
    QSeries ok = ct_product({p2, p2}, rat(10));
    CHECK(ok.bound() >= rat(10));
}