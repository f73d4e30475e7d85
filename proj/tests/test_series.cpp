#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qzeta/biseries.hpp"
#include "qzeta/numbers.hpp"
#include "qzeta/qseries.hpp"
#include "qzeta/series_json.hpp"

#include "oracles.hpp"

#include <stdexcept>

using namespace qzeta;

namespace {

QSeries from_oracle(const oracle::Poly& p) {
    std::vector<Rat> c(p.begin(), p.end());
    return QSeries::from_parts(Rat(0), 1, c);
}

}  // namespace

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == rat(-1, 2));
    CHECK(bernoulli(2) == rat(1, 6));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(4) == rat(-1, 30));
    CHECK(bernoulli(6) == rat(1, 42));
    CHECK(bernoulli(12) == rat(-691, 2730));
}

TEST_CASE("euler polynomial rows") {
    CHECK(euler_polynomial(2) == std::vector<Int>{1});
    CHECK(euler_polynomial(3) == std::vector<Int>{1, 1});
    CHECK(euler_polynomial(5) == std::vector<Int>{1, 11, 11, 1});
    CHECK(euler_polynomial(6) == std::vector<Int>{1, 26, 66, 26, 1});
    CHECK(euler_polynomial(7) == std::vector<Int>{1, 57, 302, 302, 57, 1});
    CHECK(euler_polynomial(8) == std::vector<Int>{1, 120, 1191, 2416, 1191, 120, 1});
    CHECK_THROWS_AS(euler_polynomial(1), std::invalid_argument);
}

TEST_CASE("polynomial identities in QSeries") {
    QSeries one = QSeries::constant(1, 10);
    QSeries q = QSeries::monomial(1, 1, 10);
    QSeries a = (one + q) * (one - q);
    CHECK(a.coeff_at(0) == 1);
    CHECK(a.coeff_at(1) == 0);
    CHECK(a.coeff_at(2) == -1);
    CHECK(a.coeff_at(3) == 0);

    QSeries half = QSeries::monomial(1, rat(1, 2), 10);
    QSeries sq = half * half;
    CHECK(sq.coeff_at(1) == 1);
    CHECK(sq.coeff_at(rat(1, 2)) == 0);
    CHECK((half + q).scale() == 2);
}

TEST_CASE("euler product has pentagonal coefficients") {
    QSeries e = euler_product(30);
    std::vector<long> expected{1, -1, -1, 0, 0, 1, 0, 1, 0, 0, 0, 0, -1};
    for (long n = 0; n < static_cast<long>(expected.size()); ++n)
        CHECK(e.coeff_at(n) == expected[static_cast<std::size_t>(n)]);
    CHECK(e.coeff_at(15) == -1);  // pentagonal 15 = 5*(3*5+1)/2... generalized index -3
    CHECK(e.coeff_at(22) == 1);
    CHECK(e.coeff_at(26) == 1);
}

TEST_CASE("inverse euler product counts partitions") {
    QSeries inv = euler_product(40).inverted();
    auto p = oracle::partitions(40);
    for (long n = 0; n <= 40; ++n)
        CHECK(inv.coeff_at(n) == p[static_cast<std::size_t>(n)]);
    // and the product recovers 1
    QSeries prod = inv * euler_product(40);
    CHECK(prod.coeff_at(0) == 1);
    for (long n = 1; n <= 40; ++n) CHECK(prod.coeff_at(n) == 0);
}

TEST_CASE("negative powers via powed") {
    QSeries e = euler_product(16);
    QSeries invsq = e.powed(-2);
    std::vector<long> expected{1, 2, 5, 10, 20, 36, 65};
    for (long n = 0; n < static_cast<long>(expected.size()); ++n)
        CHECK(invsq.coeff_at(n) == expected[static_cast<std::size_t>(n)]);
    CHECK(from_oracle(oracle::mul(oracle::euler_inv(16), oracle::euler_inv(16)))
              .truncated(17) == invsq.truncated(17));
}

TEST_CASE("pochhammer and reciprocal powers against oracles") {
    for (long n : {0l, 1l, 2l, 5l, 9l}) {
        QSeries p = pochhammer(n, 20);
        QSeries o = from_oracle(oracle::pochhammer(n, 20));
        CHECK(QSeries::agree(p, o, 20));
    }
    for (long a : {1l, 2l, 3l}) {
        for (long k : {1l, 2l, 4l}) {
            QSeries r = reciprocal_power(a, k, 24);
            QSeries o = from_oracle(oracle::geometric_pow(a, k, 24));
            CHECK(QSeries::agree(r, o, 24));
        }
    }
    CHECK(reciprocal_power(3, 0, 10) == QSeries::constant(1, 10));
}

TEST_CASE("q-derivative and dilation") {
    QSeries inv = euler_product(20).inverted();
    QSeries d = inv.q_derived();
    auto p = oracle::partitions(20);
    for (long n = 1; n <= 20; ++n)
        CHECK(d.coeff_at(n) == Rat(n) * p[static_cast<std::size_t>(n)]);

    QSeries e2 = euler_product(10).dilated(2);
    for (long n = 0; n <= 20; ++n) {
        if (n % 2) CHECK(e2.coeff_at(n) == 0);
        else CHECK(e2.coeff_at(n) == euler_product(10).coeff_at(n / 2));
    }
}

TEST_CASE("bound bookkeeping is honest") {
    QSeries e = euler_product(10);
    CHECK(e.bound() == 11);
    CHECK(e.knows(10));
    CHECK(e.knows(rat(21, 2)));
    CHECK(!e.knows(11));
    CHECK_THROWS_AS(e.coeff_at(11), std::domain_error);

    QSeries t = e.truncated(rat(7, 2));
    CHECK(t.knows(3));
    CHECK(!t.knows(4));

    // agreement requires both sides to know the requested range
    CHECK_THROWS_AS(QSeries::agree(t, e, 10), std::domain_error);
    CHECK(QSeries::agree(t, e, rat(7, 2)));

    // multiplying by zero keeps knowledge finite
    QSeries z = QSeries::zero_through(5) * e;
    CHECK(z.is_zero());
    CHECK(z.knows(rat(9, 2)));
    CHECK(!z.knows(6));
}

TEST_CASE("eta series bookkeeping") {
    QSeries eta = eta_series(1, 20);
    CHECK(eta.offset() == rat(1, 24));
    CHECK(eta.coeff_at(rat(1, 24)) == 1);
    CHECK(eta.coeff_at(rat(1, 24) + 1) == -1);
    CHECK(eta.coeff_at(rat(1, 24) + 2) == -1);
    CHECK(eta.coeff_at(rat(1, 24) + 5) == 1);

    QSeries eta3 = eta_series(3, 15);
    CHECK(eta3.offset() == rat(3, 24));
    CHECK(eta3.coeff_at(rat(1, 8)) == 1);
    CHECK(eta3.coeff_at(rat(1, 8) + 3) == -1);
    CHECK(eta3.coeff_at(rat(1, 8) + 1) == 0);
}

TEST_CASE("series JSON round trip") {
    // mixed integer and half-integer support keeps the grid at scale 2
    QSeries s = QSeries::monomial(1, rat(1, 2), 12) + euler_product(12);
    auto j = series_to_json(s);
    CHECK(series_from_json(j) == s);
    CHECK(j.contains("scale"));

    // support on a shifted integer grid: the shift lives in the offset and
    // the scale reduces away
    QSeries shifted = eta_series(1, 12) * euler_product(12);
    auto j3 = series_to_json(shifted);
    CHECK(!j3.contains("scale"));
    CHECK(series_from_json(j3) == shifted);

    QSeries plain = euler_product(8);
    auto j2 = series_to_json(plain);
    CHECK(!j2.contains("scale"));
    CHECK(series_from_json(j2) == plain);

    QSeries z = QSeries::zero_through(7);
    CHECK(series_from_json(series_to_json(z)) == z);
}

TEST_CASE("zeta series window discipline") {
    ZetaSeries f(Rat(10), 2, 2, Rat(1), Rat(1));
    f.set_entry(1, QSeries::monomial(1, 1, 9));
    f.set_entry(-1, QSeries::monomial(2, 1, 9));
    CHECK(f.entry(1).coeff_at(1) == 1);
    // absent entries inside the window are exact zeros through qbound
    CHECK(f.entry(2).is_zero());
    CHECK(f.entry(2).knows(9));
    CHECK_THROWS_AS(f.entry(3), std::domain_error);
    // valuation promise: entry at exponent 2 must have valuation >= 2
    CHECK_THROWS_AS(f.set_entry(2, QSeries::monomial(1, 1, 9)), std::invalid_argument);
    // bound promise: entries must be known through qbound
    CHECK_THROWS_AS(f.set_entry(2, QSeries::monomial(1, 2, 3)), std::invalid_argument);

    ZetaSeries g = f + f;
    CHECK(g.entry(1).coeff_at(1) == 2);
    CHECK(g.entry(-1).coeff_at(1) == 4);

    ZetaSeries h = f.scaled(rat(1, 2));
    CHECK(h.entry(-1).coeff_at(1) == 1);

    ZetaSeries d = f.dz();
    CHECK(d.entry(1).coeff_at(1) == 1);
    CHECK(d.entry(-1).coeff_at(1) == -2);

    ZetaSeries t = f.dtau();
    CHECK(t.entry(1).coeff_at(1) == 1);
    CHECK(t.entry(-1).coeff_at(1) == 2);
}

TEST_CASE("scaled_q shifts the valuation promise") {
    ZetaSeries f(Rat(10), 1, 1, Rat(1), Rat(1));
    f.set_entry(1, QSeries::monomial(1, 1, 9));
    f.set_entry(-1, QSeries::monomial(1, 1, 9));
    ZetaSeries g = f.scaled_q(QSeries::monomial(1, 2, 30));
    CHECK(g.val_shift() == 2);
    CHECK(g.entry(1).coeff_at(3) == 1);
    CHECK(g.qbound() >= 11);
}

TEST_CASE("constant term of explicit small products") {
    // window radius 8 with entries only at +-1: the remaining slots are
    // exact zeros, and slope 1 makes anything beyond the window irrelevant
    // for a bound of 8
    ZetaSeries f(Rat(10), 8, 8, Rat(1), Rat(1));
    f.set_entry(1, QSeries::monomial(1, 1, 9));
    f.set_entry(-1, QSeries::monomial(1, 1, 9));

    // CT of f^2: the (+1,-1) and (-1,+1) pairings give 2 q^2
    QSeries ct2 = ct_product({f, f}, Rat(8));
    CHECK(ct2.coeff_at(2) == 2);
    for (long n = 0; n <= 7; ++n)
        if (n != 2) CHECK(ct2.coeff_at(n) == 0);

    // odd products of an odd-symmetric factor have empty CT
    ZetaSeries o(Rat(10), 8, 8, Rat(1), Rat(1));
    o.set_entry(1, QSeries::monomial(1, 1, 9));
    o.set_entry(-1, QSeries::monomial(-1, 1, 9));
    QSeries ct3 = ct_product({o, o, o}, Rat(8));
    CHECK(ct3.is_zero());
    CHECK(ct3.knows(rat(15, 2)));

    // single factor: CT is the stored zero exponent entry
    ZetaSeries c(Rat(6), 0, 0, Rat(-1), Rat(-1));
    c.set_entry(0, QSeries::constant(rat(1, 2), 5));
    QSeries ct1 = ct_product({c}, Rat(6));
    CHECK(ct1.coeff_at(0) == rat(1, 2));
}

TEST_CASE("constant term engine rejects unknowable requests") {
    ZetaSeries f(Rat(5), 1, 1, Rat(1), Rat(1));
    f.set_entry(1, QSeries::monomial(1, 1, 4));
    f.set_entry(-1, QSeries::monomial(1, 1, 4));
    CHECK_THROWS_AS(ct_product({f, f}, Rat(10)), std::domain_error);

    // one-sided factors are fine: no pairing can reach exponent zero,
    // so the result is an exact zero
    ZetaSeries pos(Rat(10), 2, 0, Rat(1), Rat(-1));
    pos.set_entry(1, QSeries::monomial(1, 1, 9));
    pos.set_entry(2, QSeries::monomial(1, 2, 9));
    QSeries z = ct_product({pos, pos}, Rat(9));
    CHECK(z.is_zero());
}

TEST_CASE("ct matches a direct two-factor convolution") {
    // factors with several entries; reference computed entry-by-entry
    ZetaSeries a(Rat(12), 5, 5, Rat(1), Rat(1));
    ZetaSeries b(Rat(12), 5, 5, Rat(1), Rat(1));
    for (long e = 1; e <= 3; ++e) {
        a.set_entry(e, QSeries::monomial(e, e, 11));
        a.set_entry(-e, QSeries::monomial(1, e + 1, 11));
        b.set_entry(e, QSeries::monomial(2, e, 11));
        b.set_entry(-e, QSeries::monomial(3, e, 11));
    }
    QSeries got = ct_product({a, b}, Rat(10));
    QSeries want = QSeries::zero_through(10);
    for (long e = -3; e <= 3; ++e) {
        if (e == 0) continue;
        want = want + (a.entry(e) * b.entry(-e)).truncated(10);
    }
    CHECK(QSeries::agree(got, want, 10));
}

TEST_CASE("bivariate truncations") {
    const Rat N = rat(10);
    BiSeries a(3, N), b(3, N);
    a.set_slice(0, QSeries::constant(1, 10));
    a.set_slice(1, QSeries::monomial(1, 1, 10));
    b.set_slice(0, QSeries::constant(1, 10));
    b.set_slice(1, QSeries::monomial(-1, 1, 10));

    BiSeries prod = a * b;  // (1 + xq)(1 - xq) = 1 - x^2 q^2
    CHECK(prod.xorder() == 3);
    CHECK(QSeries::agree(prod.slice(0), QSeries::constant(1, 10), N));
    CHECK(prod.slice(1).is_zero());
    CHECK(QSeries::agree(prod.slice(2), QSeries::monomial(-1, 2, 10), N));
    CHECK(prod.slice(3).is_zero());

    // multiplying by the geometric partner telescopes inside the window
    BiSeries geom(3, N);
    for (long j = 0; j <= 3; ++j) geom.set_slice(j, QSeries::monomial(1, j, 10));
    BiSeries tele = b * geom;
    CHECK(QSeries::agree(tele.slice(0), QSeries::constant(1, 10), N));
    for (long j = 1; j <= 3; ++j) CHECK(tele.slice(j).is_zero());

    // x order of a product is the smaller of the two
    BiSeries shallow(1, N);
    shallow.set_slice(0, QSeries::constant(1, 10));
    CHECK((a * shallow).xorder() == 1);

    BiSeries sum = a + b;
    CHECK(QSeries::agree(sum.slice(0), QSeries::constant(2, 10), N));
    CHECK(sum.slice(1).is_zero());
    CHECK(BiSeries::agree(a - a, BiSeries(3, N), N));
    CHECK(!BiSeries::agree(a, b, N));

    BiSeries half = a.scaled_q(QSeries::monomial(1, rat(1, 2), 10));
    CHECK(half.slice(1).coeff_at(rat(3, 2)) == 1);

    CHECK_THROWS_AS(a.set_slice(4, QSeries::constant(1, 10)), std::out_of_range);
    CHECK_THROWS_AS(a.set_slice(0, QSeries::constant(1, 5)), std::domain_error);
    CHECK_THROWS_AS(BiSeries::agree(a, shallow, N), std::invalid_argument);
    CHECK_THROWS_AS(BiSeries(-1, N), std::invalid_argument);
}
