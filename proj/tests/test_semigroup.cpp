#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "singcurve/errors.hpp"
#include "singcurve/fixture.hpp"
#include "singcurve/semigroup.hpp"

using namespace singcurve;

TEST_CASE("enumerate_semigroup <2,3>") {
    auto s = enumerate_semigroup({2, 3}, 10);
    CHECK(s.conductor == 2);
    CHECK(s.gaps() == std::vector<long long>{1});
    CHECK(s.elements == std::vector<long long>{0, 2, 3, 4, 5, 6, 7, 8, 9, 10});
    CHECK(s.contains(0));
    CHECK(!s.contains(1));
}

TEST_CASE("enumerate_semigroup <4,6,13>") {
    auto s = enumerate_semigroup({4, 6, 13}, 40);
    CHECK(s.conductor == 16);
    CHECK(s.gaps() == std::vector<long long>{1, 2, 3, 5, 7, 9, 11, 15});
}

TEST_CASE("enumerate_semigroup rejects non-cofinite input") {
    CHECK_THROWS_AS(enumerate_semigroup({4, 6}, 50), NotCofinite);
    CHECK_THROWS_AS(enumerate_semigroup({}, 50), NotCofinite);
    CHECK_THROWS_AS(enumerate_semigroup({0, 3}, 50), NotCofinite);
}

TEST_CASE("semigroup closure and symmetry properties") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<long long> g_dist(2, 15);
    int produced = 0;
    while (produced < 20) {
        long long a = g_dist(rng), b = g_dist(rng), c = g_dist(rng);
        if (std::gcd(a, std::gcd(b, c)) != 1) continue;
        ++produced;
        auto s = enumerate_semigroup({a, b, c}, 4 * (a + b + c));
        // closed under addition inside the bound
        for (long long x : s.elements)
            for (long long y : s.elements)
                if (x + y <= s.bound) CHECK(s.contains(x + y));
        // certified conductor: c-1 is a gap (or c == 0), everything >= c is in
        if (s.conductor > 0) CHECK(!s.contains(s.conductor - 1));
        for (long long v = s.conductor; v <= s.bound; ++v) CHECK(s.contains(v));
    }
}

TEST_CASE("branch data for (2,3)") {
    auto data = branch_data_from_char_exponents(CharExponents{{2, 3}});
    CHECK(data.gens == std::vector<long long>{2, 3});
    CHECK(data.star == std::vector<long long>{6});
    CHECK(data.n == std::vector<long long>{1});
    CHECK(data.conductor == 2);
}

TEST_CASE("branch data for (4,6,7)") {
    auto data = branch_data_from_char_exponents(CharExponents{{4, 6, 7}});
    CHECK(data.gens == std::vector<long long>{4, 6, 13});
    CHECK(data.star == std::vector<long long>{12, 26});
    CHECK(data.n == std::vector<long long>{1, 1});
    CHECK(data.conductor == 16);
}

TEST_CASE("branch data for (6,9,10)") {
    auto data = branch_data_from_char_exponents(CharExponents{{6, 9, 10}});
    CHECK(data.gens == std::vector<long long>{6, 9, 19});
    CHECK(data.n == std::vector<long long>{1, 2});
    // symmetry: v in S iff conductor-1-v not in S
    auto s = enumerate_semigroup(data.gens, 2 * data.conductor);
    for (long long v = 0; v < data.conductor; ++v)
        CHECK(s.contains(v) != s.contains(data.conductor - 1 - v));
}

TEST_CASE("characteristic exponent validation") {
    CHECK_THROWS_AS(branch_data_from_char_exponents(CharExponents{{4, 6}}),
                    InvalidCharExponents);  // gcd chain never reaches 1
    CHECK_THROWS_AS(branch_data_from_char_exponents(CharExponents{{4, 4, 7}}),
                    InvalidCharExponents);  // not strictly increasing
    CHECK_THROWS_AS(branch_data_from_char_exponents(CharExponents{{4, 8, 9}}),
                    InvalidCharExponents);  // gcd does not drop at step 1
    CHECK_THROWS_AS(branch_data_from_char_exponents(CharExponents{{}}), InvalidCharExponents);
    CHECK_NOTHROW(branch_data_from_char_exponents(CharExponents{{1}}));
}

TEST_CASE("closed form expands to the membership series") {
    for (const auto& beta :
         {std::vector<long long>{1}, {2, 3}, {2, 5}, {3, 4}, {4, 6, 7}, {6, 9, 10}}) {
        auto data = branch_data_from_char_exponents(CharExponents{beta});
        long long bound = std::max<long long>(2 * data.conductor, 20);
        auto series = expand_product_form(poincare_closed_form(data), MultiIndex{bound});
        auto s = enumerate_semigroup(data.gens, bound);
        TruncatedSeries want(1, MultiIndex{bound});
        for (long long e : s.elements) want.add_term(MultiIndex{e}, 1);
        CHECK(series.agrees_with(want));
    }
}

TEST_CASE("unique representation") {
    auto data = branch_data_from_char_exponents(CharExponents{{4, 6, 7}});
    auto s = enumerate_semigroup(data.gens, 60);
    for (long long v = 0; v <= 60; ++v) {
        auto rep = unique_representation(v, data);
        CHECK(rep.has_value() == s.contains(v));
        if (rep) {
            REQUIRE(rep->size() == data.gens.size());
            long long sum = 0;
            for (size_t j = 0; j < data.gens.size(); ++j) {
                sum += (*rep)[j] * data.gens[j];
                if (j >= 1) CHECK((*rep)[j] <= data.n[j - 1]);
            }
            CHECK(sum == v);
        }
    }
}

TEST_CASE("poincare at infinity: delta = (2,3)") {
    auto res = poincare_at_infinity(SemigroupAtInfinity{{2, 3}}, 30);
    CHECK(res.conductor == 2);
    CHECK(res.q == IntPolynomial::one(1));
    auto s = enumerate_semigroup({2, 3}, 30);
    TruncatedSeries want(1, MultiIndex{30});
    for (long long e : s.elements) want.add_term(MultiIndex{e}, 1);
    CHECK(res.series.agrees_with(want));
    REQUIRE(res.closed.has_value());
    CHECK(expand_product_form(*res.closed, MultiIndex{30}).agrees_with(want));
}

TEST_CASE("poincare at infinity: delta = (4,6,13) is free") {
    auto res = poincare_at_infinity(SemigroupAtInfinity{{4, 6, 13}}, 60);
    CHECK(res.conductor == 16);
    REQUIRE(res.closed.has_value());
    CHECK(expand_product_form(*res.closed, MultiIndex{60}).agrees_with(res.series));
    // series = q + t^c/(1-t)
    ProductForm tail(1);
    tail.set_prefactor(1, MultiIndex{res.conductor});
    tail.push_factor(MultiIndex{1}, -1);
    auto rhs = expand_product_form(tail, MultiIndex{60});
    auto q_series = res.q.truncate(MultiIndex{60});
    TruncatedSeries sum(1, MultiIndex{60});
    for (const auto& [k, c] : rhs.coeffs()) sum.add_term(k, c);
    for (const auto& [k, c] : q_series.coeffs()) sum.add_term(k, c);
    CHECK(sum.agrees_with(res.series));
}

TEST_CASE("poincare at infinity: trivial sequence (1)") {
    auto res = poincare_at_infinity(SemigroupAtInfinity{{1}}, 20);
    CHECK(res.conductor == 0);
    CHECK(res.q.is_zero());
    for (long long v = 0; v <= 20; ++v) CHECK(res.series.coeff(MultiIndex{v}) == 1);
}

TEST_CASE("semigroup fixtures load") {
    auto b = load_fixture(std::string(FIXTURE_DIR) + "/b467.json");
    REQUIRE(b.char_exponents.has_value());
    CHECK(b.char_exponents->beta == std::vector<long long>{4, 6, 7});
    REQUIRE(b.curve.has_value());
    CHECK(b.curve->branch_count() == 1);

    CHECK_THROWS_AS(load_fixture(std::string(FIXTURE_DIR) + "/no_such_file.json"), FixtureError);
}
