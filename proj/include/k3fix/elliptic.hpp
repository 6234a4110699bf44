#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "k3fix/kodaira.hpp"

namespace k3fix {

/// Root multiplicities of p12 on P^1 (the point at infinity carries 12 - deg p).
struct RootProfile {
    std::vector<int> multiplicities;

    /// Throws std::invalid_argument unless entries are positive and sum to 12.
    void validate() const;
};

/// Singular fibers of y^2 = x^3 + p12(t) by type. `smooth` counts roots of multiplicity 6,
/// which become I0 after a model shift; `unsupported` collects I0* fibers.
struct FiberMultiset {
    int ii = 0;
    int iv = 0;
    int ivstar = 0;
    int iistar = 0;
    int smooth = 0;
    std::vector<KodairaFiberType> unsupported;

    int euler() const;
    int count(KodairaFiberType f) const;
    bool has_unsupported() const { return !unsupported.empty(); }

    friend bool operator==(const FiberMultiset&, const FiberMultiset&) = default;
};

inline constexpr int kK3Euler = 24;

/// Fiber types over the roots: 1 -> II, 2 -> IV, 3 -> I0* (unsupported), 4 -> IV*,
/// 5 -> II*, 6 -> I0. Throws std::invalid_argument on invalid profiles and
/// std::domain_error when the Euler numbers do not add up to 24 (a 6-fold root leaves a
/// rational elliptic surface).
FiberMultiset fibers_from_profile(const RootProfile& r);

/// Fiber counts of the j = 0 fibration attached to an order-3 fixed locus with n points
/// and k curves; ii is filled in from the Euler budget.
FiberMultiset fiber_counts_from_nk(int n, int k);

/// A root profile realizing the multiset (II -> 1, IV -> 2, IV* -> 4, II* -> 5).
RootProfile profile_for(const FiberMultiset& fm);

/// Unordered pair of fibers over the two fixed points of the base involution.
struct FiberPair {
    KodairaFiberType first;   // first <= second in fiber order I0 < IV < IV*
    KodairaFiberType second;

    friend bool operator==(const FiberPair&, const FiberPair&) = default;
    friend auto operator<=>(const FiberPair&, const FiberPair&) = default;
};

struct InvolutionDecomposition {
    FiberPair pair;
    FiberMultiset remainder;
};

/// Every way to take two fibers from {I0, IV, IV*} (I0 always available) so that the
/// remaining types all have even multiplicity. Sorted by pair; empty when none exists.
/// Throws std::invalid_argument if the multiset has unsupported fibers.
std::vector<InvolutionDecomposition> involution_decompositions(const FiberMultiset& fm);

/// Diagonal action (x, y, t) -> (xi6^x x, xi6^y y, xi6^t t).
struct WeightedAutomorphism {
    int x_exponent = 0;
    int y_exponent = 0;
    int t_exponent = 0;

    /// 2y = 3x (mod 6), i.e. y^2 - x^3 is preserved up to the t-part.
    bool preserves_weierstrass() const;

    friend WeightedAutomorphism compose(const WeightedAutomorphism& a, const WeightedAutomorphism& b);
    friend bool operator==(const WeightedAutomorphism&, const WeightedAutomorphism&) = default;
};

WeightedAutomorphism compose(const WeightedAutomorphism& a, const WeightedAutomorphism& b);

/// Exponent of the action on dx^dt/dy. Throws std::invalid_argument when the
/// automorphism does not preserve the Weierstrass form.
int omega_character(const WeightedAutomorphism& a);

/// Stratum of even p12 with roots of order 2m at 0 and 2n at infinity.
struct ModuliStratum {
    int m = 0;
    int n = 0;

    friend bool operator==(const ModuliStratum&, const ModuliStratum&) = default;
    friend auto operator<=>(const ModuliStratum&, const ModuliStratum&) = default;
};

struct StratumNeighbors {
    ModuliStratum stratum;
    std::vector<ModuliStratum> generalizations;  // strata this one lies in the closure of
    std::vector<ModuliStratum> specializations;  // strata in its closure

    bool maximal() const { return specializations.empty(); }
};

/// Normalizes (m, n) with m >= n and returns the adjacent strata. Throws
/// std::invalid_argument outside {(0,0),(1,0),(2,0),(1,1),(2,1)}.
StratumNeighbors moduli_stratum(int m, int n);

/// Stratum of a fiber pair: I0 -> 0, IV -> 1, IV* -> 2.
ModuliStratum stratum_of(const FiberPair& p);

nlohmann::json to_json(const FiberMultiset& fm);
nlohmann::json to_json(const FiberPair& p);
nlohmann::json to_json(const ModuliStratum& s);
RootProfile root_profile_from_json(const nlohmann::json& j);

}  // namespace k3fix
