#include "k3fix/elliptic.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace k3fix {

void RootProfile::validate() const {
    for (int m : multiplicities) {
        if (m <= 0) throw std::invalid_argument("root multiplicities must be positive");
        if (m > 6) throw std::invalid_argument("root of multiplicity > 6 gives a non-minimal Weierstrass model");
    }
    const int total = std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
    if (total != 12) {
        throw std::invalid_argument("root multiplicities sum to " + std::to_string(total) + ", expected 12");
    }
}

int FiberMultiset::euler() const {
    int e = euler_number(kII) * ii + euler_number(kIV) * iv + euler_number(kIVstar) * ivstar +
            euler_number(kIIstar) * iistar;
    for (const auto& f : unsupported) e += euler_number(f);
    return e;
}

int FiberMultiset::count(KodairaFiberType f) const {
    if (f == kII) return ii;
    if (f == kIV) return iv;
    if (f == kIVstar) return ivstar;
    if (f == kIIstar) return iistar;
    if (f == kI0) return smooth;
    return static_cast<int>(std::count(unsupported.begin(), unsupported.end(), f));
}

FiberMultiset fibers_from_profile(const RootProfile& r) {
    r.validate();
    FiberMultiset fm;
    for (int m : r.multiplicities) {
        switch (m) {
            case 1: ++fm.ii; break;
            case 2: ++fm.iv; break;
            case 3: fm.unsupported.push_back(kI0star); break;
            case 4: ++fm.ivstar; break;
            case 5: ++fm.iistar; break;
            default: ++fm.smooth; break;
        }
    }
    if (fm.euler() != kK3Euler) {
        throw std::domain_error("fiber Euler numbers add up to " + std::to_string(fm.euler()) +
                                ", not 24: the profile does not define a K3 surface");
    }
    return fm;
}

FiberMultiset fiber_counts_from_nk(int n, int k) {
    FiberMultiset fm;
    switch (k) {
        case 2: fm.iv = n; break;
        case 3: fm.iv = n - 3; fm.ivstar = 1; break;
        case 4: fm.iv = n - 4; fm.iistar = 1; break;
        case 5: fm.iv = n - 7; fm.ivstar = 1; fm.iistar = 1; break;
        case 6: fm.iv = n - 8; fm.iistar = 2; break;
        default: throw std::invalid_argument("fiber counts need 2 <= k <= 6, got k=" + std::to_string(k));
    }
    if (fm.iv < 0) throw std::invalid_argument("negative IV count for (n,k)");
    const int rest = kK3Euler - fm.euler();
    if (rest < 0 || rest % euler_number(kII) != 0) {
        throw std::invalid_argument("Euler budget leaves no integral number of II fibers");
    }
    fm.ii = rest / euler_number(kII);
    return fm;
}

RootProfile profile_for(const FiberMultiset& fm) {
    if (fm.has_unsupported()) throw std::invalid_argument("profile_for: unsupported fibers");
    RootProfile r;
    r.multiplicities.insert(r.multiplicities.end(), static_cast<std::size_t>(fm.iistar), 5);
    r.multiplicities.insert(r.multiplicities.end(), static_cast<std::size_t>(fm.ivstar), 4);
    r.multiplicities.insert(r.multiplicities.end(), static_cast<std::size_t>(fm.iv), 2);
    r.multiplicities.insert(r.multiplicities.end(), static_cast<std::size_t>(fm.ii), 1);
    r.multiplicities.insert(r.multiplicities.end(), static_cast<std::size_t>(fm.smooth), 6);
    return r;
}

std::vector<InvolutionDecomposition> involution_decompositions(const FiberMultiset& fm) {
    if (fm.has_unsupported()) throw std::invalid_argument("involution_decompositions: unsupported fibers present");
    static constexpr std::array<KodairaFiberType, 3> kSlots{kI0, kIV, kIVstar};
    std::vector<InvolutionDecomposition> out;
    for (std::size_t i = 0; i < kSlots.size(); ++i) {
        for (std::size_t j = i; j < kSlots.size(); ++j) {
            FiberMultiset rest = fm;
            bool available = true;
            for (KodairaFiberType f : {kSlots[i], kSlots[j]}) {
                if (f == kIV) available &= rest.iv-- > 0;
                else if (f == kIVstar) available &= rest.ivstar-- > 0;
            }
            if (!available) continue;
            const bool even = rest.ii % 2 == 0 && rest.iv % 2 == 0 && rest.ivstar % 2 == 0 && rest.iistar % 2 == 0;
            if (even) out.push_back({{kSlots[i], kSlots[j]}, rest});
        }
    }
    return out;
}

bool WeightedAutomorphism::preserves_weierstrass() const {
    return (((2 * y_exponent - 3 * x_exponent) % 6) + 6) % 6 == 0;
}

WeightedAutomorphism compose(const WeightedAutomorphism& a, const WeightedAutomorphism& b) {
    return {(a.x_exponent + b.x_exponent) % 6, (a.y_exponent + b.y_exponent) % 6,
            (a.t_exponent + b.t_exponent) % 6};
}

int omega_character(const WeightedAutomorphism& a) {
    if (!a.preserves_weierstrass()) {
        throw std::invalid_argument("automorphism does not preserve y^2 = x^3 + p(t)");
    }
    return (((a.x_exponent + a.t_exponent - a.y_exponent) % 6) + 6) % 6;
}

namespace {

const std::vector<ModuliStratum>& allowed_strata() {
    static const std::vector<ModuliStratum> s{{0, 0}, {1, 0}, {2, 0}, {1, 1}, {2, 1}};
    return s;
}

bool allowed(const ModuliStratum& s) {
    const auto& a = allowed_strata();
    return std::find(a.begin(), a.end(), s) != a.end();
}

}  // namespace

StratumNeighbors moduli_stratum(int m, int n) {
    ModuliStratum s{std::max(m, n), std::min(m, n)};
    if (!allowed(s)) {
        throw std::invalid_argument("no stratum M^{" + std::to_string(m) + "," + std::to_string(n) + "}");
    }
    // colliding one more pair of roots at 0 or infinity raises m or n by one
    StratumNeighbors out{s, {}, {}};
    for (const ModuliStratum& t : allowed_strata()) {
        const int dm = t.m - s.m;
        const int dn = t.n - s.n;
        if ((dm == 1 && dn == 0) || (dm == 0 && dn == 1)) out.specializations.push_back(t);
        if ((dm == -1 && dn == 0) || (dm == 0 && dn == -1)) out.generalizations.push_back(t);
    }
    return out;
}

ModuliStratum stratum_of(const FiberPair& p) {
    auto order = [](KodairaFiberType f) {
        if (f == kI0) return 0;
        if (f == kIV) return 1;
        if (f == kIVstar) return 2;
        throw std::invalid_argument("fiber over a base fixed point must be I0, IV or IV*");
    };
    const int a = order(p.first);
    const int b = order(p.second);
    return {std::max(a, b), std::min(a, b)};
}

nlohmann::json to_json(const FiberMultiset& fm) {
    nlohmann::json unsupported = nlohmann::json::array();
    for (const auto& f : fm.unsupported) unsupported.push_back(token(f));
    return {{"ii", fm.ii},         {"iv", fm.iv},         {"iistar", fm.iistar},
            {"ivstar", fm.ivstar}, {"smooth", fm.smooth}, {"unsupported", unsupported},
            {"euler", fm.euler()}};
}

nlohmann::json to_json(const FiberPair& p) { return nlohmann::json::array({token(p.first), token(p.second)}); }

nlohmann::json to_json(const ModuliStratum& s) { return nlohmann::json::array({s.m, s.n}); }

RootProfile root_profile_from_json(const nlohmann::json& j) {
    RootProfile r{j.at("mults").get<std::vector<int>>()};
    r.validate();
    return r;
}

}  // namespace k3fix
