#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qzeta/checks.hpp"

#include <set>
#include <string>

using namespace qzeta;

namespace {

void expect_all_pass(const std::vector<CheckResult>& results) {
    REQUIRE(!results.empty());
    for (const auto& r : results) {
        INFO(r.id, ": ", r.statement, " -- ", r.detail);
        CHECK(r.pass);
    }
}

}  // namespace

TEST_CASE("graph suite passes at smoke order") {
    expect_all_pass(check_graph_identities({12, 3}));
}

TEST_CASE("zeta suite passes at smoke order") {
    expect_all_pass(check_zeta_identities({12, 3}));
}

TEST_CASE("character suite passes at smoke order") {
    expect_all_pass(check_character_identities({12, 3}));
}

TEST_CASE("suite ids are unique and populated") {
    auto all = check_all({10, 2});
    std::set<std::string> ids;
    for (const auto& r : all) {
        CHECK(!r.id.empty());
        CHECK(!r.statement.empty());
        CHECK(ids.insert(r.id).second);
    }
    CHECK(all.size() >= 40);
}

TEST_CASE("a failure reports the first differing coefficient") {
    QSeries a = QSeries::monomial(3, 2, 10) + QSeries::monomial(1, 5, 10);
    QSeries b = QSeries::monomial(3, 2, 10) + QSeries::monomial(4, 5, 10);
    CheckResult r = check_compare("probe", "planted difference", a, b);
    CHECK(!r.pass);
    CHECK(r.detail == "first difference at q^5: lhs 1, rhs 4");

    CheckResult ok = check_compare("probe2", "identical", a, a);
    CHECK(ok.pass);
    CHECK(ok.detail.empty());
}
