#include "k3fix/lefschetz.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace k3fix {

int FixedLocus6::g_max() const {
    int g = 1;
    for (int x : genus_list) g = std::max(g, x);
    return g;
}

void FixedLocus6::validate() const {
    if (p34 < 0 || p25 < 0 || rational_curves < 0) throw std::invalid_argument("negative fixed-locus count");
    if (genus_list.size() > 1) throw std::invalid_argument("at most one fixed curve of positive genus");
    for (int g : genus_list) {
        if (g < 1) throw std::invalid_argument("genus_list holds positive genera only");
    }
}

FixedLocus6 operator+(const FixedLocus6& a, const FixedLocus6& b) {
    FixedLocus6 out{a.p34 + b.p34, a.p25 + b.p25, a.rational_curves + b.rational_curves, a.genus_list};
    out.genus_list.insert(out.genus_list.end(), b.genus_list.begin(), b.genus_list.end());
    return out;
}

void FixedLocus3::validate() const {
    if (n < 0 || k < 0) throw std::invalid_argument("negative order-3 fixed-locus count");
    if (g && (*g < 0 || k < 1)) throw std::invalid_argument("order-3 genus needs at least one curve");
    if (!g && k != 0) throw std::invalid_argument("order-3 locus with curves needs a highest genus");
}

LocusComponents components(const FixedLocus6& locus) {
    locus.validate();
    LocusComponents c;
    c.order = 6;
    c.points.insert(c.points.end(), static_cast<std::size_t>(locus.p34), PointType::order6(3, 4));
    c.points.insert(c.points.end(), static_cast<std::size_t>(locus.p25), PointType::order6(2, 5));
    c.curve_genera.assign(static_cast<std::size_t>(locus.rational_curves), 0);
    c.curve_genera.insert(c.curve_genera.end(), locus.genus_list.begin(), locus.genus_list.end());
    return c;
}

LocusComponents components(const FixedLocus3& locus) {
    locus.validate();
    LocusComponents c;
    c.order = 3;
    c.points.assign(static_cast<std::size_t>(locus.n), PointType(3, 2, 2));
    if (locus.g) {
        c.curve_genera.assign(static_cast<std::size_t>(locus.k - 1), 0);
        c.curve_genera.push_back(*locus.g);
    }
    return c;
}

Cyc6 point_term(const PointType& t) {
    if (!t.isolated()) throw std::invalid_argument("point_term: " + t.label() + " lies on a fixed curve");
    const Cyc6 one(1);
    return inv((one - root_of_unity(t.order(), t.k())) * (one - root_of_unity(t.order(), t.k_prime())));
}

Cyc6 curve_term(int genus, int order) {
    if (genus < 0) throw std::invalid_argument("curve_term: negative genus");
    if (order != 2 && order != 3 && order != 6) throw std::invalid_argument("curve_term: order must be 2, 3 or 6");
    const Cyc6 xi = root_of_unity(order, 1);
    const Cyc6 d = inv(Cyc6(1) - xi);
    return Cyc6(1 - genus) * d - xi * Cyc6(2 * genus - 2) * d * d;
}

Cyc6 holomorphic_sum(const LocusComponents& c) {
    Cyc6 sum;
    for (const auto& p : c.points) {
        if (p.order() != c.order) throw std::invalid_argument("point type order differs from the automorphism order");
        sum += point_term(p);
    }
    for (int g : c.curve_genera) sum += curve_term(g, c.order);
    return sum;
}

Cyc6 holomorphic_sum(const FixedLocus6& locus) { return holomorphic_sum(components(locus)); }
Cyc6 holomorphic_sum(const FixedLocus3& locus) { return holomorphic_sum(components(locus)); }

Cyc6 holomorphic_target(int order) { return Cyc6(1) + conj(root_of_unity(order, 1)); }

bool verify_holomorphic(const LocusComponents& c) { return holomorphic_sum(c) == holomorphic_target(c.order); }
bool verify_holomorphic(const FixedLocus6& locus) { return verify_holomorphic(components(locus)); }
bool verify_holomorphic(const FixedLocus3& locus) { return verify_holomorphic(components(locus)); }

bool satisfies_integer_identity(const FixedLocus6& locus) {
    return locus.p34 + 2 * locus.p25 - 6 * locus.rational_curves + 6 * locus.g_max() == 12;
}

std::vector<LocusProfile> enumerate_loci(const EnumerationBounds& bounds) {
    std::vector<LocusProfile> out;
    for (int g = 0; g <= bounds.max_g; ++g) {
        for (int l = 0; l <= bounds.max_l; ++l) {
            for (int p25 = 0; p25 <= bounds.max_p25; ++p25) {
                for (int p34 = 0; p34 <= bounds.max_p34; ++p34) {
                    FixedLocus6 locus{p34, p25, l, {}};
                    if (g > 0) locus.genus_list.push_back(g);
                    if (satisfies_integer_identity(locus)) out.push_back({locus, g >= 2});
                }
            }
        }
    }
    return out;
}

nlohmann::json to_json(const FixedLocus6& l) {
    return {{"p34", l.p34}, {"p25", l.p25}, {"l", l.rational_curves}, {"genus", l.genus_list}};
}

FixedLocus6 fixed_locus6_from_json(const nlohmann::json& j) {
    FixedLocus6 l{j.value("p34", 0), j.value("p25", 0), j.value("l", 0),
                  j.value("genus", std::vector<int>{})};
    l.validate();
    return l;
}

nlohmann::json to_json(const FixedLocus3& l) {
    nlohmann::json g = l.g ? nlohmann::json(*l.g) : nlohmann::json(nullptr);
    return {{"g", g}, {"n", l.n}, {"k", l.k}};
}

nlohmann::json to_json(const LocusProfile& p) {
    nlohmann::json j = to_json(p.locus);
    j["excluded_by_genus_bound"] = p.excluded_by_genus_bound;
    return j;
}

}  // namespace k3fix
