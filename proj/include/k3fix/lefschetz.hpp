#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "k3fix/cyclotomic.hpp"
#include "k3fix/localact.hpp"

namespace k3fix {

/// Fixed locus of a primitive order-6 automorphism: isolated points of the two
/// possible types, smooth rational curves, and the genera of non-rational curves.
struct FixedLocus6 {
    int p34 = 0;
    int p25 = 0;
    int rational_curves = 0;
    std::vector<int> genus_list;

    /// max(1, largest genus)
    int g_max() const;
    /// Throws std::invalid_argument on negative counts, genus < 1, or more than one such curve.
    void validate() const;

    friend FixedLocus6 operator+(const FixedLocus6& a, const FixedLocus6& b);
    friend bool operator==(const FixedLocus6&, const FixedLocus6&) = default;
};

/// Fixed locus of an order-3 non-symplectic automorphism: n points of type 1/3(2,2),
/// k curves in total of which the highest-genus one has genus g (absent when k = 0).
struct FixedLocus3 {
    int n = 0;
    int k = 0;
    std::optional<int> g;

    void validate() const;

    friend bool operator==(const FixedLocus3&, const FixedLocus3&) = default;
};

/// Local data entering the fixed-point formula for an automorphism of a given order.
struct LocusComponents {
    int order = 6;
    std::vector<PointType> points;
    std::vector<int> curve_genera;
};

LocusComponents components(const FixedLocus6& locus);
/// k - 1 rational curves plus one genus-g curve when g is present.
LocusComponents components(const FixedLocus3& locus);

/// 1 / ((1 - xi^k)(1 - xi^k')). Throws std::invalid_argument for non-isolated types.
Cyc6 point_term(const PointType& t);

/// (1 - g)/(1 - xi) - xi (2g - 2)/(1 - xi)^2, the contribution of a fixed genus-g curve
/// (self-intersection 2g - 2).
Cyc6 curve_term(int genus, int order);

Cyc6 holomorphic_sum(const LocusComponents& c);
Cyc6 holomorphic_sum(const FixedLocus6& locus);
Cyc6 holomorphic_sum(const FixedLocus3& locus);

/// 1 + conj(xi_order), the alternating trace on structure-sheaf cohomology.
Cyc6 holomorphic_target(int order);

bool verify_holomorphic(const LocusComponents& c);
bool verify_holomorphic(const FixedLocus6& locus);
bool verify_holomorphic(const FixedLocus3& locus);

/// Integer form of the identity: p34 + 2 p25 - 6 l + 6 g_max = 12.
bool satisfies_integer_identity(const FixedLocus6& locus);

struct EnumerationBounds {
    int max_p34 = 12;
    int max_p25 = 9;
    int max_l = 3;
    int max_g = 1;
};

struct LocusProfile {
    FixedLocus6 locus;
    /// Admitted by the formula but carries a curve of genus >= 2, which cannot occur.
    bool excluded_by_genus_bound = false;

    friend bool operator==(const LocusProfile&, const LocusProfile&) = default;
};

/// Every profile within bounds satisfying the identity, ordered by
/// (genus, rational curves, p25, p34).
std::vector<LocusProfile> enumerate_loci(const EnumerationBounds& bounds = {});

nlohmann::json to_json(const FixedLocus6& l);
FixedLocus6 fixed_locus6_from_json(const nlohmann::json& j);
nlohmann::json to_json(const FixedLocus3& l);
nlohmann::json to_json(const LocusProfile& p);

}  // namespace k3fix
