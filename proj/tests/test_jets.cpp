#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "singcurve/errors.hpp"
#include "singcurve/fixture.hpp"
#include "singcurve/jets.hpp"

using namespace singcurve;

namespace {

CurveModel load_curve(const char* name) {
    auto b = load_fixture(std::string(FIXTURE_DIR) + "/" + name + ".json");
    REQUIRE(b.curve.has_value());
    return *b.curve;
}

// random polynomial germ with terms of total degree <= deg
Germ random_germ(std::mt19937& rng, long long deg) {
    std::uniform_int_distribution<long long> c_dist(-4, 4);
    Germ g;
    for (long long i = 0; i <= deg; ++i)
        for (long long j = 0; i + j <= deg; ++j) g.add_term(i, j, static_cast<long>(c_dist(rng)));
    return g;
}

}  // namespace

TEST_CASE("valuation along the cusp branch") {
    BranchParam cusp({{2, 1}}, {{3, 1}});
    CHECK(cusp.param_order() == 2);

    auto vx = order_and_leading(Germ::monomial(1, 0), cusp, 64);
    CHECK(vx.order == 2);
    CHECK(vx.leading == 1);

    auto vy = order_and_leading(Germ::monomial(0, 1), cusp, 64);
    CHECK(vy.order == 3);

    auto vsum = order_and_leading(Germ::monomial(1, 0) + Germ::monomial(0, 1), cusp, 64);
    CHECK(vsum.order == 2);

    // y^2 - x^3 vanishes identically on the branch
    Germ f = Germ::monomial(0, 2) + Germ::monomial(3, 0, -1);
    auto vf = order_and_leading(f, cusp, 64);
    CHECK(vf.order == kInfinity);
}

TEST_CASE("valuation is additive and semigroup-valued") {
    BranchParam b({{4, 1}}, {{6, 1}, {7, 1}});  // (4,6,7) branch
    auto sg = enumerate_semigroup({4, 6, 13}, 80);
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 60; ++trial) {
        Germ f = random_germ(rng, 3), g = random_germ(rng, 3);
        if (f.is_zero() || g.is_zero()) continue;
        auto vf = order_and_leading(f, b, 256);
        auto vg = order_and_leading(g, b, 256);
        if (vf.order == kInfinity || vg.order == kInfinity) continue;
        CHECK(sg.contains(vf.order));
        auto vfg = order_and_leading(f * g, b, 256);
        CHECK(vfg.order == vf.order + vg.order);
        CHECK(vfg.leading == vf.leading * vg.leading);
    }
}

TEST_CASE("precision refusal near the certainty bound") {
    BranchParam cusp({{2, 1}}, {{3, 1}});
    Germ f = Germ::monomial(0, 2) + Germ::monomial(3, 0, -1) + Germ::monomial(20, 0);
    // order is 40; a tiny bound cannot certify it
    CHECK_THROWS_AS(order_and_leading(f, cusp, 8), PrecisionError);
    CHECK(order_and_leading(f, cusp, 128).order == 40);
}

TEST_CASE("jet subspace dimensions: node") {
    auto node = load_curve("node");
    // deg <= 2 jets: 6 monomials; one independent constraint at v = (1,1)
    CHECK(jet_subspace_dim(node, MultiIndex{1, 1}, 2) == 5);
    CHECK(jet_subspace_dim(node, MultiIndex{0, 0}, 2) == 6);
    // v = (2,1): constant and x-coefficient must vanish on branch 1
    CHECK(jet_subspace_dim(node, MultiIndex{2, 1}, 2) == 4);
}

TEST_CASE("dimensions are monotone") {
    auto curve = load_curve("tacnode");
    for (long long n = 2; n <= 6; ++n) {
        CHECK(jet_subspace_dim(curve, MultiIndex{2, 2}, n) <=
              jet_subspace_dim(curve, MultiIndex{2, 2}, n + 1));
        CHECK(jet_subspace_dim(curve, MultiIndex{2, 2}, n) <=
              jet_subspace_dim(curve, MultiIndex{1, 2}, n));
        CHECK(jet_subspace_dim(curve, MultiIndex{1, 2}, n) <=
              jet_subspace_dim(curve, MultiIndex{1, 1}, n));
    }
}

TEST_CASE("c(v) for the cusp matches semigroup membership") {
    auto cusp = load_curve("cusp");
    auto sg = enumerate_semigroup({2, 3}, 12);
    for (long long v = 0; v <= 12; ++v) {
        long long c = c_of_v(cusp, MultiIndex{v});
        CHECK((c == 0 || c == 1));
        CHECK(c == (sg.contains(v) ? 1 : 0));
    }
    CHECK(c_of_v(cusp, MultiIndex{1}) == 0);
    CHECK(c_of_v(cusp, MultiIndex{2}) == 1);
}

TEST_CASE("c(v) for negative arguments") {
    auto node = load_curve("node");
    CHECK(c_of_v(node, MultiIndex{0, 0}) == 1);
    CHECK(c_of_v(node, MultiIndex{-1, 0}) == 1);
    // all components strictly negative: v and v+1 impose the same constraints
    CHECK(c_of_v(node, MultiIndex{-1, -1}) == 0);
    CHECK(c_of_v(node, MultiIndex{-3, -5}) == 0);
}

TEST_CASE("fiber report for the node") {
    auto node = load_curve("node");
    auto rep = fiber_report(node, MultiIndex{1, 1});
    CHECK(rep.cv == c_of_v(node, MultiIndex{1, 1}));
    CHECK(rep.chi_pf == 0);
    // subset dims are monotone in the subset
    CHECK(rep.dims.at({}) >= rep.dims.at({0}));
    CHECK(rep.dims.at({0}) >= rep.dims.at({0, 1}));

    auto rep0 = fiber_report(node, MultiIndex{0, 0});
    CHECK(rep0.chi_pf == 1);
}

TEST_CASE("precision cap surfaces as PrecisionError") {
    auto cusp = load_curve("cusp");
    JetConfig tight;
    tight.jet_cap = 2;
    CHECK_THROWS_AS(c_of_v(cusp, MultiIndex{40}, tight), PrecisionError);
}

TEST_CASE("jet determinacy") {
    auto cusp = load_curve("cusp");
    Germ g = Germ::monomial(3, 0);  // order 6 along the branch
    CHECK(jet_determinacy_check(cusp, g, MultiIndex{6}));

    auto node = load_curve("node");
    // x + y has order 1 on both axes; x*y would vanish identically on each
    Germ diag = Germ::monomial(1, 0) + Germ::monomial(0, 1);
    CHECK(jet_determinacy_check(node, diag, MultiIndex{1, 1}));
}
