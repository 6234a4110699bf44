#include <doctest.h>

#include <random>

#include "k3fix/classify.hpp"
#include "k3fix/elliptic.hpp"

using namespace k3fix;

namespace {

FiberMultiset fm(int ii, int iv, int ivstar, int iistar) {
    FiberMultiset m;
    m.ii = ii;
    m.iv = iv;
    m.ivstar = ivstar;
    m.iistar = iistar;
    return m;
}

std::vector<FiberPair> pairs(const std::vector<InvolutionDecomposition>& ds) {
    std::vector<FiberPair> out;
    for (const auto& d : ds) out.push_back(d.pair);
    return out;
}

// random composition of 12 into parts 1, 2, 4, 5 whose Euler numbers add to 24
RootProfile random_k3_profile(std::mt19937& rng) {
    static const int parts[] = {1, 2, 4, 5};
    while (true) {
        RootProfile r;
        int sum = 0;
        int euler = 0;
        while (sum < 12) {
            const int m = parts[std::uniform_int_distribution<int>(0, 3)(rng)];
            if (sum + m > 12) break;
            r.multiplicities.push_back(m);
            sum += m;
            euler += m == 1 ? 2 : m == 2 ? 4 : m == 4 ? 8 : 10;
        }
        if (sum == 12 && euler == kK3Euler) return r;
    }
}

}  // namespace

TEST_CASE("fibers from root multiplicities") {
    const auto six_iv = fibers_from_profile({{2, 2, 2, 2, 2, 2}});
    CHECK(six_iv.iv == 6);
    CHECK(six_iv.euler() == 24);
    CHECK(fibers_from_profile({std::vector<int>(12, 1)}).ii == 12);
    const auto row15 = fibers_from_profile({{5, 4, 1, 1, 1}});
    CHECK(row15 == fm(3, 0, 1, 1));
    CHECK(row15.euler() == 24);

    const auto with_star = fibers_from_profile({{3, 3, 2, 2, 1, 1}});
    CHECK(with_star.has_unsupported());
    CHECK(with_star.count(kI0star) == 2);
    CHECK(with_star.euler() == 24);

    CHECK_THROWS_AS(fibers_from_profile({{2, 2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(fibers_from_profile({{13, -1}}), std::invalid_argument);
    CHECK_THROWS_AS(fibers_from_profile({{7, 5}}), std::invalid_argument);
    // a sextuple root leaves Euler number 12
    CHECK_THROWS_AS(fibers_from_profile({{6, 1, 1, 1, 1, 1, 1}}), std::domain_error);
}

TEST_CASE("fiber counts from order-3 data") {
    CHECK(fiber_counts_from_nk(4, 4) == fm(7, 0, 0, 1));
    CHECK(fiber_counts_from_nk(0, 2) == fm(12, 0, 0, 0));
    CHECK(fiber_counts_from_nk(9, 6) == fm(0, 1, 0, 2));
    CHECK(fiber_counts_from_nk(3, 3) == fm(8, 0, 1, 0));
    CHECK(fiber_counts_from_nk(8, 5) == fm(1, 1, 1, 1));
    CHECK_THROWS_AS(fiber_counts_from_nk(3, 7), std::invalid_argument);
    CHECK_THROWS_AS(fiber_counts_from_nk(3, 1), std::invalid_argument);
    CHECK_THROWS_AS(fiber_counts_from_nk(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(fiber_counts_from_nk(13, 2), std::invalid_argument);
}

TEST_CASE("profile round trip on every elliptic seed") {
    int rows = 0;
    for (const auto& seed : order3_seed()) {
        if (!seed.elliptic) continue;
        const auto counts = fiber_counts_from_nk(seed.locus.n, seed.locus.k);
        CHECK(counts.euler() == kK3Euler);
        CHECK(fibers_from_profile(profile_for(counts)) == counts);
        ++rows;
    }
    CHECK(rows == 18);
}

TEST_CASE("Euler budget on random profiles") {
    std::mt19937 rng(555);
    for (int i = 0; i < 1000; ++i) {
        const auto r = random_k3_profile(rng);
        const auto m = fibers_from_profile(r);
        CHECK(m.euler() == kK3Euler);
        CHECK(2 * m.ii + 4 * m.iv + 8 * m.ivstar + 10 * m.iistar == 24);
        CHECK_FALSE(m.has_unsupported());
    }
}

TEST_CASE("involution decompositions") {
    const auto row3 = involution_decompositions(fm(8, 2, 0, 0));
    CHECK(pairs(row3) == std::vector<FiberPair>{{kI0, kI0}, {kIV, kIV}});
    CHECK(row3[1].remainder == fm(8, 0, 0, 0));
    CHECK(involution_decompositions(fm(7, 0, 0, 1)).empty());
    CHECK(pairs(involution_decompositions(fm(2, 3, 1, 0))) == std::vector<FiberPair>{{kIV, kIVstar}});
    CHECK(pairs(involution_decompositions(fm(0, 1, 0, 2))) == std::vector<FiberPair>{{kI0, kIV}});
    FiberMultiset star = fm(4, 2, 0, 0);
    star.unsupported.push_back(kI0star);
    CHECK_THROWS_AS(involution_decompositions(star), std::invalid_argument);

    std::mt19937 rng(8);
    for (int i = 0; i < 300; ++i) {
        const auto m = fibers_from_profile(random_k3_profile(rng));
        const auto ds = involution_decompositions(m);
        for (std::size_t j = 0; j < ds.size(); ++j) {
            const auto& r = ds[j].remainder;
            CHECK(r.ii % 2 == 0);
            CHECK(r.iv % 2 == 0);
            CHECK(r.ivstar % 2 == 0);
            CHECK(r.iistar % 2 == 0);
            CHECK(ds[j].pair.first <= ds[j].pair.second);
            if (j) CHECK(ds[j - 1].pair < ds[j].pair);
        }
    }
}

TEST_CASE("weighted automorphisms") {
    CHECK(omega_character({0, 0, 1}) == 1);
    CHECK(omega_character({0, 0, 0}) == 0);
    CHECK(omega_character({4, 3, 0}) == 1);
    CHECK(omega_character(compose({4, 3, 0}, {4, 3, 0})) == 2);
    CHECK_FALSE(WeightedAutomorphism{1, 0, 0}.preserves_weierstrass());
    CHECK_THROWS_AS(omega_character({1, 0, 0}), std::invalid_argument);
    // additive under composition
    for (int x = 0; x < 6; x += 2) {
        for (int y = 0; y < 6; y += 3) {
            for (int t = 0; t < 6; ++t) {
                const WeightedAutomorphism a{x, y, t};
                if (!a.preserves_weierstrass()) continue;
                const WeightedAutomorphism b{(x + 2) % 6, (y + 3) % 6, (t + 1) % 6};
                REQUIRE(b.preserves_weierstrass());
                CHECK(omega_character(compose(a, b)) == (omega_character(a) + omega_character(b)) % 6);
            }
        }
    }
}

TEST_CASE("moduli strata") {
    const auto generic = moduli_stratum(0, 0);
    CHECK(generic.specializations == std::vector<ModuliStratum>{{1, 0}});
    CHECK(generic.generalizations.empty());
    CHECK(moduli_stratum(2, 1).maximal());
    const auto m10 = moduli_stratum(1, 0);
    CHECK(std::find(m10.specializations.begin(), m10.specializations.end(), ModuliStratum{2, 0}) != m10.specializations.end());
    CHECK(std::find(m10.specializations.begin(), m10.specializations.end(), ModuliStratum{1, 1}) != m10.specializations.end());
    CHECK(moduli_stratum(0, 1).stratum == ModuliStratum{1, 0});
    CHECK_THROWS_AS(moduli_stratum(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(moduli_stratum(3, 0), std::invalid_argument);
    CHECK(stratum_of({kIV, kIVstar}) == ModuliStratum{2, 1});
    CHECK(stratum_of({kI0, kI0}) == ModuliStratum{0, 0});
    CHECK_THROWS_AS(stratum_of({kII, kI0}), std::invalid_argument);
}

TEST_CASE("profile json") {
    CHECK(root_profile_from_json(nlohmann::json::parse(R"({"mults":[2,2,2,2,2,2]})")).multiplicities ==
          std::vector<int>(6, 2));
    CHECK_THROWS(root_profile_from_json(nlohmann::json::parse(R"({"roots":[1]})")));
    CHECK(to_json(fm(3, 0, 1, 1)).at("euler") == 24);
}
