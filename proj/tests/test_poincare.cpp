#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "singcurve/errors.hpp"
#include "singcurve/fixture.hpp"
#include "singcurve/poincare.hpp"

using namespace singcurve;

namespace {

FixtureBundle load(const char* name) {
    return load_fixture(std::string(FIXTURE_DIR) + "/" + name + ".json");
}

}  // namespace

TEST_CASE("laurent window and p_prime on the node") {
    auto curve = *load("node").curve;
    MultiIndex lo{-2, -2}, hi{3, 3};
    auto lw = build_laurent_window(curve, lo, hi);
    CHECK(lw.at(MultiIndex{0, 0}) == 1);
    CHECK(lw.at(MultiIndex{-1, -1}) == 0);

    auto pp = p_prime(lw);
    // P' = P * (t1 - 1)(t2 - 1) ... = 1 * (t1 t2 - 1) after the diagonal
    // cancellation; concretely the support is {0, (1,1)} with signs -1, +1.
    IntPolynomial want(2);
    want.add_term(MultiIndex{0, 0}, -1);
    want.add_term(MultiIndex{1, 1}, 1);
    CHECK(pp == want);
}

TEST_CASE("poincare polynomials from jets") {
    auto check = [](const char* name, const IntPolynomial& want) {
        auto b = load(name);
        auto hi = default_window(*b.graph);
        auto lw = build_laurent_window(*b.curve, MultiIndex::constant(hi.arity(), -2), hi);
        auto p = poincare_from_jets(lw);
        REQUIRE(p.poly.has_value());
        CHECK(*p.poly == want);
    };

    check("node", IntPolynomial::one(2));

    IntPolynomial tac = IntPolynomial::one(2);
    tac.add_term(MultiIndex{1, 1}, 1);
    check("tacnode", tac);

    IntPolynomial three = IntPolynomial::one(3);
    three.add_term(MultiIndex{1, 1, 1}, -1);
    check("three_lines", three);
}

TEST_CASE("poincare series from jets for one branch") {
    auto b = load("cusp");
    MultiIndex hi{10};
    auto lw = build_laurent_window(*b.curve, MultiIndex{-2}, hi);
    auto p = poincare_from_jets(lw);
    REQUIRE(p.series.has_value());
    auto sg = enumerate_semigroup({2, 3}, 10);
    TruncatedSeries want(1, hi);
    for (long long e : sg.elements) want.add_term(MultiIndex{e}, 1);
    CHECK(p.series->agrees_with(want));
}

TEST_CASE("undersized window is refused, not silently truncated") {
    auto curve = *load("tacnode").curve;
    CHECK_THROWS_AS(p_prime(build_laurent_window(curve, MultiIndex{-2, -2}, MultiIndex{0, 0})),
                    MarginError);
}

TEST_CASE("x_series equals the poincare object") {
    for (const char* name : {"node", "tacnode", "three_lines"}) {
        auto b = load(name);
        auto hi = default_window(*b.graph);
        auto x = x_series(*b.curve, hi);
        auto lw = build_laurent_window(*b.curve, MultiIndex::constant(hi.arity(), -2), hi);
        auto p = poincare_from_jets(lw);
        REQUIRE(x.poly.has_value());
        CHECK(*x.poly == *p.poly);
    }
}

TEST_CASE("euler integral modes") {
    auto b = load("tacnode");
    auto hi = default_window(*b.graph);
    auto multi = euler_integral(*b.curve, hi, IntegralMode::multivariate);
    auto x = x_series(*b.curve, hi);
    REQUIRE(multi.poly.has_value());
    CHECK(*multi.poly == *x.poly);

    auto diag = euler_integral(*b.curve, hi, IntegralMode::diagonal);
    REQUIRE(diag.series.has_value());
    CHECK(diag.series->agrees_with(specialize_diagonal(x.poly->truncate(hi))));
}

TEST_CASE("default window dominates branch multiplicities") {
    auto b = load("cusp_line");
    auto hi = default_window(*b.graph);
    REQUIRE(hi.arity() == 2);
    auto mult = solve_multiplicities(*b.graph);
    for (int br = 0; br < 2; ++br) {
        long long m = 0;
        for (const auto& row : mult.per_branch) m = std::max(m, row[br]);
        CHECK(hi[br] >= m + 2);
    }
}

TEST_CASE("verify_curve cross-checks the paired fixtures") {
    for (const char* name : {"cusp", "node", "tacnode", "cusp_line", "three_lines"}) {
        auto b = load(name);
        REQUIRE(b.curve.has_value());
        REQUIRE(b.graph.has_value());
        auto report = verify_curve(*b.curve, *b.graph);
        INFO(name, ": ", report.to_string());
        CHECK(report.all_pass());
    }
}
