#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qzeta/modular.hpp"
#include "qzeta/numbers.hpp"
#include "qzeta/qmzv.hpp"

#include <stdexcept>

#include "oracles.hpp"

using namespace qzeta;

TEST_CASE("eisenstein series") {
    const long N = 20;
    QSeries e2 = eisenstein(2, N), e4 = eisenstein(4, N), e6 = eisenstein(6, N);
    CHECK(e2.coeff_at(0) == 1);
    CHECK(e2.coeff_at(1) == -24);
    CHECK(e2.coeff_at(2) == -72);
    CHECK(e2.coeff_at(3) == -96);
    CHECK(e2.coeff_at(4) == -168);
    for (long n = 1; n <= N; ++n) {
        CHECK(e4.coeff_at(rat(n)) == Rat(240 * oracle::sigma(3, n)));
        CHECK(e6.coeff_at(rat(n)) == Rat(-504 * oracle::sigma(5, n)));
    }
    // classical relations in the weight 8 and 10 graded pieces
    CHECK(QSeries::agree(eisenstein(8, N), e4 * e4, rat(N)));
    CHECK(QSeries::agree(eisenstein(10, N), e4 * e6, rat(N)));
    CHECK(eisenstein(12, N).coeff_at(0) == 1);
    CHECK_THROWS_AS(eisenstein(3, N), std::invalid_argument);
    CHECK_THROWS_AS(eisenstein(0, N), std::invalid_argument);
}

TEST_CASE("g hat normalization") {
    CHECK(g_hat(2, 10).coeff_at(0) == rat(-1, 12));
    CHECK(g_hat(4, 10).coeff_at(0) == rat(1, 720));
    CHECK(g_hat(6, 10).coeff_at(0) == rat(-1, 30240));
    CHECK(QSeries::agree(g_hat(2, 12), eisenstein(2, 12).scaled(rat(-1, 12)), rat(12)));
    CHECK(QSeries::agree(g_hat(4, 12).scaled(5), eisenstein(4, 12).scaled(rat(1, 144)), rat(12)));
}

TEST_CASE("theta fourth powers") {
    const long N = 10;
    QSeries t3 = theta3_pow4(N);
    for (long n = 0; n <= 2 * N; ++n)
        CHECK(t3.coeff_at(rat(n, 2)) == Rat(oracle::r4(n)));

    QSeries t2 = theta2_pow4(N);
    CHECK(t2.offset() == rat(1, 2));
    // representations by four odd squares: exponent (sum of squares)/8
    for (long half = 1; half <= 2 * N; ++half) {
        long count = 0;
        for (long a = -9; a <= 9; a += 2)
            for (long b = -9; b <= 9; b += 2)
                for (long c = -9; c <= 9; c += 2)
                    for (long d = -9; d <= 9; d += 2)
                        if (a * a + b * b + c * c + d * d == 4 * half) ++count;
        CHECK(t2.coeff_at(rat(half, 2)) == Rat(count));
    }
}

TEST_CASE("generator sets") {
    auto lvl1 = qm_generators(1, 12);
    REQUIRE(lvl1.size() == 3);
    CHECK(lvl1[0].label == "E2");
    CHECK(lvl1[1].weight == 4);
    CHECK(lvl1[2].weight == 6);

    auto lvl2 = qm_generators(2, 12);
    REQUIRE(lvl2.size() == 3);
    CHECK(lvl2[1].label == "Th2");
    CHECK(lvl2[1].weight == 2);
    CHECK(QSeries::agree(lvl2[2].series, theta3_pow4(12), rat(12)));

    auto lvl3 = qm_generators(3, 12);
    REQUIRE(lvl3.size() == 6);
    CHECK(lvl3[3].label == "E2(3t)");
    CHECK(lvl3[3].series.coeff_at(1) == 0);
    CHECK(lvl3[3].series.coeff_at(2) == 0);
    CHECK(lvl3[3].series.coeff_at(3) == -24);
    CHECK(lvl3[4].series.coeff_at(3) == 240);
    for (auto& g : lvl3) CHECK(g.series.bound() >= rat(13));

    CHECK_THROWS_AS(qm_generators(0, 12), std::invalid_argument);
}

TEST_CASE("recognition of a divisor sum") {
    QSeries target = zq_star({2}, 30);  // sum sigma_1(n) q^n
    auto gens = qm_generators(1, 30);
    Recognition rec = recognize(target, gens, 0, 2, 10);
    REQUIRE(rec.found);
    REQUIRE(rec.monomials.size() == 2);
    // 1/24 - E2/24
    CHECK(rec.monomials[0].first == std::vector<long>{0, 0, 0});
    CHECK(rec.monomials[0].second == rat(1, 24));
    CHECK(rec.monomials[1].first == std::vector<long>{1, 0, 0});
    CHECK(rec.monomials[1].second == rat(-1, 24));
    CHECK(monomial_label(gens, rec.monomials[0].first) == "1");
    CHECK(monomial_label(gens, rec.monomials[1].first) == "E2^1");
    CHECK(rec.verified_through - rec.fitted_up_to >= 10);
}

TEST_CASE("recognition of eisenstein products") {
    auto gens = qm_generators(1, 30);
    Recognition rec = recognize(eisenstein(4, 30) * eisenstein(6, 30), gens, 10, 10, 10);
    REQUIRE(rec.found);
    REQUIRE(rec.monomials.size() == 1);
    CHECK(rec.monomials[0].first == std::vector<long>{0, 1, 1});
    CHECK(rec.monomials[0].second == 1);
    CHECK(monomial_label(gens, rec.monomials[0].first) == "E4^1*E6^1");

    Recognition rec8 = recognize(eisenstein(8, 30), gens, 0, 8, 10);
    REQUIRE(rec8.found);
    REQUIRE(rec8.monomials.size() == 1);
    CHECK(rec8.monomials[0].first == std::vector<long>{0, 2, 0});
}

TEST_CASE("recognition refuses to guess") {
    auto gens = qm_generators(1, 40);
    // q is not quasi-modular of bounded weight
    Recognition rec = recognize(QSeries::monomial(1, 1, 40), gens, 0, 12, 10);
    CHECK(!rec.found);
    CHECK(rec.monomials.empty());

    // too little data for the requested weight range
    CHECK_THROWS_AS(recognize(QSeries::monomial(1, 1, 12), gens, 0, 12, 10),
                    std::invalid_argument);

    // a corrupted coefficient beyond the fitted rows must fail verification
    QSeries e4 = eisenstein(4, 30);
    std::vector<Rat> c;
    for (long n = 0; n <= 30; ++n) c.push_back(e4.coeff_at(rat(n)));
    c[25] += 1;
    QSeries corrupted = QSeries::from_parts(0, 1, std::move(c));
    Recognition bad = recognize(corrupted, qm_generators(1, 30), 4, 4, 10);
    CHECK(!bad.found);
    CHECK(bad.monomials.empty());
}

TEST_CASE("recognition across mixed grids") {
    // theta2^4 + theta3^4 lives on the half integer grid; level 2 handles it
    QSeries target = theta2_pow4(24) + theta3_pow4(24).scaled(3);
    Recognition rec = recognize(target, qm_generators(2, 24), 2, 2, 8);
    REQUIRE(rec.found);
    REQUIRE(rec.monomials.size() == 2);
    // monomials come back sorted by weight then lexicographically
    CHECK(rec.monomials[0].first == std::vector<long>{0, 0, 1});
    CHECK(rec.monomials[0].second == 3);
    CHECK(rec.monomials[1].first == std::vector<long>{0, 1, 0});
    CHECK(rec.monomials[1].second == 1);
}
