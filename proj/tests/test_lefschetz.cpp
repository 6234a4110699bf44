#include <doctest.h>

#include <random>

#include "k3fix/lefschetz.hpp"
#include "oracles.hpp"

using namespace k3fix;

namespace {

constexpr double kTol = 1e-12;

bool near(const Cyc6& x, oracle::C y) { return std::abs(to_complex(x) - y) < kTol * std::max(1.0, std::abs(y)); }

Cyc6 c(Rational a, Rational b) { return {std::move(a), std::move(b)}; }

}  // namespace

TEST_CASE("point terms") {
    const auto p25 = point_term(PointType::order6(2, 5));
    const auto p34 = point_term(PointType::order6(3, 4));
    CHECK(p25 == c(make_rational(2, 3), make_rational(-1, 3)));
    CHECK(p34 == c(make_rational(1, 3), make_rational(-1, 6)));
    CHECK(near(p25, oracle::point_term(6, 2, 5)));
    CHECK(near(p34, oracle::point_term(6, 3, 4)));
    const auto p22 = point_term(PointType(3, 2, 2, 1));
    CHECK(near(p22, oracle::point_term(3, 2, 2)));
    CHECK(p22 == inv(pow(1 - root_of_unity(3, 2), 2)));
    CHECK_THROWS_AS(point_term(PointType::order6(0, 1)), std::invalid_argument);
}

TEST_CASE("curve terms") {
    CHECK(curve_term(1, 6) == Cyc6());
    CHECK(curve_term(0, 6) == c(-2, 1));
    CHECK(curve_term(2, 6) == c(2, -1));
    for (int order : {3, 6}) {
        for (int g = 0; g < 8; ++g) CHECK(near(curve_term(g, order), oracle::curve_term(g, order)));
    }
    CHECK_THROWS_AS(curve_term(-1, 6), std::invalid_argument);
}

TEST_CASE("holomorphic sums") {
    CHECK(holomorphic_target(6) == c(2, -1));
    CHECK(holomorphic_target(3) == 1 + root_of_unity(3, 2));
    CHECK(holomorphic_target(3) == c(1, -1));

    const FixedLocus6 g1{0, 3, 0, {1}};
    CHECK(holomorphic_sum(g1) == c(2, -1));
    CHECK(verify_holomorphic(g1));
    CHECK(holomorphic_sum(FixedLocus6{}) == Cyc6());
    const FixedLocus6 row1{12, 0, 1, {}};
    CHECK(holomorphic_sum(row1) == c(2, -1));
    CHECK_FALSE(verify_holomorphic(FixedLocus6{1, 0, 0, {}}));

    CHECK(verify_holomorphic(FixedLocus3{0, 2, 5}));
    CHECK(near(holomorphic_sum(FixedLocus3{0, 2, 5}), oracle::target(3)));
    CHECK_FALSE(verify_holomorphic(FixedLocus3{1, 2, 5}));
    CHECK(verify_holomorphic(FixedLocus3{3, 0, std::nullopt}));
}

TEST_CASE("order-3 components") {
    const auto comp = components(FixedLocus3{4, 3, 2});
    CHECK(comp.order == 3);
    CHECK(comp.points.size() == 4);
    CHECK(comp.curve_genera == std::vector<int>{0, 0, 2});
    CHECK(components(FixedLocus3{3, 0, std::nullopt}).curve_genera.empty());
    CHECK_THROWS_AS(FixedLocus3({1, 0, 2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(FixedLocus3({-1, 1, 2}).validate(), std::invalid_argument);
}

TEST_CASE("locus validation") {
    CHECK_THROWS_AS(FixedLocus6({-1, 0, 0, {}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(FixedLocus6({0, 0, 0, {1, 1}}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(FixedLocus6({0, 0, 0, {0}}).validate(), std::invalid_argument);
    CHECK(FixedLocus6({0, 0, 0, {}}).g_max() == 1);
    CHECK(FixedLocus6({0, 0, 0, {3}}).g_max() == 3);
}

TEST_CASE("sum is additive over disjoint unions") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> d(0, 9);
    for (int i = 0; i < 200; ++i) {
        const FixedLocus6 a{d(rng), d(rng), d(rng) % 4, {}};
        const FixedLocus6 b{d(rng), d(rng), d(rng) % 4, {d(rng) + 1}};
        CHECK(holomorphic_sum(a + b) == holomorphic_sum(a) + holomorphic_sum(b));
    }
}

TEST_CASE("integer identity and exact identity agree on random profiles") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> p34(0, 14), p25(0, 10), l(0, 4), g(0, 4);
    int holds = 0;
    for (int i = 0; i < 10000; ++i) {
        FixedLocus6 locus{p34(rng), p25(rng), l(rng), {}};
        if (const int genus = g(rng); genus > 0) locus.genus_list.push_back(genus);
        const bool exact = verify_holomorphic(locus);
        CHECK(exact == satisfies_integer_identity(locus));
        const bool numeric = std::abs(oracle::order6_sum(locus.p34, locus.p25, locus.rational_curves,
                                                         locus.genus_list) - oracle::target(6)) < 1e-9;
        CHECK(exact == numeric);
        holds += exact ? 1 : 0;
    }
    CHECK(holds > 0);
}

TEST_CASE("enumeration") {
    const auto all = enumerate_loci();
    std::vector<std::pair<int, int>> points_only;
    for (const auto& p : all) {
        CHECK(verify_holomorphic(p.locus));
        CHECK(p.locus.genus_list.size() <= 1);
        if (p.locus.rational_curves == 0 && p.locus.genus_list.empty()) {
            points_only.emplace_back(p.locus.p34, p.locus.p25);
        }
    }
    CHECK(points_only == std::vector<std::pair<int, int>>{{6, 0}, {4, 1}, {2, 2}, {0, 3}});
    CHECK(std::any_of(all.begin(), all.end(), [](const LocusProfile& p) {
        return p.locus == FixedLocus6{12, 0, 1, {}};
    }));
    CHECK(enumerate_loci({0, 0, 0, 0}).empty());
    CHECK(enumerate_loci() == enumerate_loci());

    const auto wide = enumerate_loci({12, 9, 3, 3});
    const auto flagged = std::count_if(wide.begin(), wide.end(), [](const LocusProfile& p) {
        return p.excluded_by_genus_bound;
    });
    CHECK(flagged > 0);
    for (const auto& p : wide) CHECK(p.excluded_by_genus_bound == (p.locus.g_max() >= 2));
}

TEST_CASE("locus json") {
    const FixedLocus6 l{3, 3, 1, {}};
    CHECK(to_json(l).dump() == R"({"genus":[],"l":1,"p25":3,"p34":3})");
    CHECK(fixed_locus6_from_json(to_json(l)) == l);
    const FixedLocus6 g{0, 3, 0, {1}};
    CHECK(fixed_locus6_from_json(to_json(g)) == g);
}
