#include "k3fix/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

#include "k3fix/lattice.hpp"
#include "k3fix/localact.hpp"

namespace k3fix {

std::vector<OrderThreeSeed> order3_seed() {
    // (g, n, k)
    static const int kElliptic[18][3] = {{5, 0, 2}, {4, 1, 2}, {3, 2, 2}, {2, 3, 2}, {3, 3, 3}, {1, 4, 2},
                                         {2, 4, 3}, {3, 4, 4}, {0, 5, 2}, {1, 5, 3}, {2, 5, 4}, {0, 6, 3},
                                         {1, 6, 4}, {0, 7, 4}, {1, 7, 5}, {0, 8, 5}, {1, 8, 6}, {0, 9, 6}};
    std::vector<OrderThreeSeed> seeds;
    for (const auto& r : kElliptic) seeds.push_back({FixedLocus3{r[1], r[2], r[0]}, true, std::nullopt});
    seeds.push_back({FixedLocus3{0, 1, 4}, false, std::nullopt});
    seeds.push_back({FixedLocus3{1, 1, 3}, false, std::nullopt});
    seeds.push_back({FixedLocus3{2, 1, 2}, false, std::nullopt});
    seeds.push_back({FixedLocus3{3, 0, std::nullopt}, false, std::nullopt});
    seeds.push_back({FixedLocus3{3, 1, 1}, false, "U(3)+A2^3"});
    seeds.push_back({FixedLocus3{4, 1, 0}, false, std::nullopt});
    return seeds;
}

Integer multisection_degree(const std::string& picard) {
    const IntegralLattice l = lattice_by_name(picard);
    if (l.rank() == 0 || l.gram()[0][0] != 0) {
        throw std::invalid_argument(picard + ": first basis vector is not isotropic");
    }
    Integer g = 0;
    for (const auto& x : l.gram()[0]) g = gcd(g, x);
    return g;
}

std::string to_string(TriageRule r) {
    switch (r) {
        case TriageRule::NAtLeastP25: return "n>=p25";
        case TriageRule::Parity: return "parity";
        case TriageRule::NeedsFixedCurve: return "needs-fixed-curve";
        case TriageRule::Involution2Points: return "involution-2-points";
        case TriageRule::Oddness: return "oddness";
    }
    return "unknown";
}

namespace {

std::string genus_label(const std::optional<int>& g) { return g ? std::to_string(*g) : "∅"; }

}  // namespace

std::string TriageCandidate::label() const {
    return "(" + std::to_string(p34) + "," + std::to_string(p25) + ";" + std::to_string(seed.locus.n) + "," +
           std::to_string(seed.locus.k) + "," + genus_label(seed.locus.g) + ")";
}

std::vector<TriageCandidate> TriageReport::survivors() const {
    std::vector<TriageCandidate> out;
    std::copy_if(candidates.begin(), candidates.end(), std::back_inserter(out),
                 [](const TriageCandidate& c) { return c.survives(); });
    return out;
}

int TriageReport::rejected_count(TriageRule r) const {
    return static_cast<int>(std::count_if(candidates.begin(), candidates.end(),
                                          [r](const TriageCandidate& c) { return c.rejected_by == r; }));
}

TriageReport triage_nonelliptic() {
    // isolated points only: the identity with no fixed curve
    std::vector<std::pair<int, int>> point_pairs;
    for (const auto& p : enumerate_loci()) {
        if (p.locus.rational_curves == 0 && p.locus.genus_list.empty()) {
            point_pairs.emplace_back(p.locus.p34, p.locus.p25);
        }
    }
    std::sort(point_pairs.begin(), point_pairs.end(), std::greater<>());

    // the local facts the rules rest on
    const bool p25_isolated = std::holds_alternative<PointType>(power_type(PointType::order6(2, 5), 2));
    const bool p34_on_curve = std::holds_alternative<OnFixedCurve>(power_type(PointType::order6(3, 4), 2));
    if (!p25_isolated || !p34_on_curve) throw std::logic_error("unexpected local type under zeta^2");

    TriageReport report;
    for (const auto& [p34, p25] : point_pairs) {
        for (const auto& seed : order3_seed()) {
            if (seed.elliptic) continue;
            TriageCandidate c{p34, p25, seed, std::nullopt};
            const FixedLocus3& s = seed.locus;
            if (s.n < p25) c.rejected_by = TriageRule::NAtLeastP25;
            else if ((s.n - p25) % 2 != 0) c.rejected_by = TriageRule::Parity;
            else if (p34 > 0 && s.k == 0) c.rejected_by = TriageRule::NeedsFixedCurve;
            else if (s.g == 0 && p34 > 2 * s.k) c.rejected_by = TriageRule::Involution2Points;
            report.candidates.push_back(std::move(c));
        }
    }
    return report;
}

TriageReport apply_oddness_rule(TriageReport report) {
    for (auto& c : report.candidates) {
        if (!c.survives()) continue;
        const FixedLocus3& s = c.seed.locus;
        // no (3,4) point on the elliptic curve: zeta moves it freely, so it meets any
        // invariant multisection in an even number of points
        const bool free_on_elliptic = s.g == 1 && s.k == 1 && c.p34 == 0;
        if (free_on_elliptic && c.seed.picard && multisection_degree(*c.seed.picard) % 2 != 0) {
            c.rejected_by = TriageRule::Oddness;
        }
    }
    return report;
}

namespace {

FixedLocus6 as_locus(const LocalFixedData& d) { return {d.p34, d.p25, d.fixed_rational_curves, {}}; }

LocalFixedData fiber_sum(const FiberMultiset& fm, BaseAction base) {
    LocalFixedData total;
    const std::pair<KodairaFiberType, int> parts[] = {
        {kII, fm.ii}, {kIV, fm.iv}, {kIVstar, fm.ivstar}, {kIIstar, fm.iistar}};
    for (const auto& [type, count] : parts) {
        if (count > 0) total += count * fiber_fixed_locus(type, base);
    }
    return total;
}

std::string prime_suffix(std::size_t i) { return std::string(i, '\''); }

}  // namespace

std::vector<ClassRow> build_table1() {
    std::vector<ClassRow> rows;
    int index = 0;
    for (const auto& seed : order3_seed()) {
        if (!seed.elliptic) continue;
        ClassRow row;
        row.id = std::to_string(++index);
        row.kind = RowKind::Elliptic;
        row.order3 = seed.locus;
        const FiberMultiset fm = fiber_counts_from_nk(seed.locus.n, seed.locus.k);
        row.fiber_counts = fm;

        // trivial base action: the fibers' contributions plus the fixed section
        LocalFixedData trivial = fiber_sum(fm, BaseAction::Trivial);
        trivial.fixed_rational_curves += 1;
        row.trivial_fixed = as_locus(trivial);

        // base involution: everything lies in the two fibers over the fixed points
        for (const auto& d : involution_decompositions(fm)) {
            const LocalFixedData loc =
                fiber_fixed_locus(d.pair.first, BaseAction::Involution) +
                fiber_fixed_locus(d.pair.second, BaseAction::Involution);
            row.involution_options.push_back({d.pair, as_locus(loc), stratum_of(d.pair)});
        }
        row.moduli_component = "closure of M_{0,2}";
        if (row.involution_options.size() > 1) {
            row.notes.push_back("options differ by the choice of the two base fixed points");
        }
        rows.push_back(std::move(row));
    }

    for (auto& row : rows) {
        for (const auto& other : rows) {
            if (other.id != row.id && other.trivial_fixed == row.trivial_fixed) {
                row.shares_trivial_locus_with.push_back(other.id);
            }
        }
    }
    for (auto& row : rows) {
        if (row.id == "6") {
            row.notes.push_back(
                "composing the base involutions of 6 and 6' gives a further action, topologically equivalent to 6'");
        }
    }
    return rows;
}

namespace {

std::string projective_model(int p34, int p25, const FixedLocus3& s) {
    const auto key = std::make_tuple(p34, p25, s.n, s.k, s.g.value_or(-1));
    static const std::map<std::tuple<int, int, int, int, int>, std::string> kModels{
        {{6, 0, 0, 1, 4},
         "P^4: F2(x0^2,x1,x2,x3) = F3(x0^2,x1,x2,x3) + b x4^3 = 0; "
         "zeta: (x0,x1,x2,x3,x4) -> (-x0,x1,x2,x3,xi3^2 x4)"},
        {{4, 1, 1, 1, 3},
         "P^3: F4(x0^2,x1,x2) + F1(x0,x1,x2) x3^3 = 0; zeta: (x0,x1,x2,x3) -> (-x0,x1,x2,xi3^2 x3)"},
        {{6, 0, 2, 1, 2},
         "double plane: y^2 = F6(x0,x1) + F3(x0,x1) x2^3 + b x2^6; "
         "zeta: (x0,x1,x2;y) -> (x0,x1,xi3^2 x2;-y)"},
        {{2, 2, 2, 1, 2},
         "double plane: y^2 = F6(x0^2,x1) + F3(x0^2,x1) x2^3 + b x2^6; zeta: (x0,x1,x2) -> (-x0,x1,xi3^2 x2)"},
        {{0, 3, 3, 0, -1},
         "P^4: F2(x0^2,x1) + b x2 x3 + c x2 x4 = F3(x0^2,x1) + d x2^3 + G3(x3,x4) + x2 G1(x1) G1(x3,x4) = 0; "
         "zeta: (x0,x1,x2,x3,x4) -> (-x0,x1,xi3 x2,xi3^2 x3,xi3^2 x4)"},
        {{4, 1, 3, 1, 1},
         "P^4: x4 G1(x0,x1,x2) = F3(x0^2,x1,x2) + G3(x3^2,x4) = 0; "
         "zeta: (x0,x1,x2,x3,x4) -> (-x0,x1,x2,-xi3^2 x3,xi3^2 x4)"},
        {{2, 2, 4, 1, 0},
         "P^3: F4(x0^2,x1) + F3(x2^2,x3) F1(x1) = 0; zeta: (x0,x1,x2,x3) -> (-x0,x1,-xi3^2 x2,xi3^2 x3)"},
    };
    auto it = kModels.find(key);
    return it == kModels.end() ? std::string() : it->second;
}

}  // namespace

std::vector<ClassRow> build_table2() {
    const TriageReport report = apply_oddness_rule(triage_nonelliptic());
    std::vector<ClassRow> base;
    std::vector<ClassRow> primed;
    int index = 0;
    for (const auto& seed : order3_seed()) {
        if (seed.elliptic) continue;
        ++index;
        std::vector<TriageCandidate> hits;
        for (const auto& c : report.survivors()) {
            if (c.seed.locus == seed.locus) hits.push_back(c);
        }
        std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.p34 > b.p34; });
        for (std::size_t i = 0; i < hits.size(); ++i) {
            ClassRow row;
            row.id = std::to_string(index) + prime_suffix(i);
            row.kind = RowKind::NonElliptic;
            row.order3 = seed.locus;
            row.trivial_fixed = FixedLocus6{hits[i].p34, hits[i].p25, 0, {}};
            row.moduli_component = seed.locus.k == 0 ? "closure of M_{3,0}" : "closure of M_{0,1}";
            row.projective_model = projective_model(hits[i].p34, hits[i].p25, seed.locus);
            if (seed.locus == FixedLocus3{2, 1, 2}) {
                // the order-3 automorphism of the double plane always extends here
                row.canonical_factorization = hits[i].p34 == 6;
            }
            (i == 0 ? base : primed).push_back(std::move(row));
        }
    }
    base.insert(base.end(), primed.begin(), primed.end());
    return base;
}

Genus1Witness genus1_witness() {
    Genus1Witness w;
    w.profile = RootProfile{{2, 2, 2, 2, 2, 2}};
    w.action = WeightedAutomorphism{0, 0, 1};
    w.omega = omega_character(w.action);
    w.fibers = fibers_from_profile(w.profile);
    return w;
}

ClassRow genus1_case() {
    ClassRow row;
    row.id = "g1";
    row.kind = RowKind::Genus1;
    // zeta^2 has the same fixed locus: the elliptic curve and three 1/3(2,2) points
    row.order3 = FixedLocus3{3, 1, 1};
    row.trivial_fixed = FixedLocus6{0, 3, 0, {1}};
    row.moduli_component = "closure of M_{0,1}";
    row.notes = {
        "zeta^3 fixes the elliptic curve and a second elliptic curve through the three points",
        "the fibration |C0| has base action of order 6 fixing the image of C0 and one point Q",
        "fiber over Q has Euler number divisible by 6 (total 24): I_{6N} or I*_{6N}",
        "only I0 carries no fixed rational curve, so the fiber over Q is smooth",
    };
    return row;
}

std::string to_string(RowKind k) {
    switch (k) {
        case RowKind::Elliptic: return "elliptic";
        case RowKind::NonElliptic: return "non-elliptic";
        case RowKind::Genus1: return "genus1";
    }
    return "unknown";
}

nlohmann::json to_json(const ClassRow& row) {
    nlohmann::json j{{"id", row.id},
                     {"kind", to_string(row.kind)},
                     {"order3", to_json(row.order3)},
                     {"trivial_fixed", to_json(row.trivial_fixed)},
                     {"moduli_component", row.moduli_component}};
    if (row.fiber_counts) j["fiber_counts"] = to_json(*row.fiber_counts);
    nlohmann::json options = nlohmann::json::array();
    for (const auto& o : row.involution_options) {
        options.push_back({{"fibers", to_json(o.fibers)}, {"locus", to_json(o.locus)}, {"stratum", to_json(o.stratum)}});
    }
    j["involution_options"] = options;
    if (!row.shares_trivial_locus_with.empty()) j["shares_trivial_locus_with"] = row.shares_trivial_locus_with;
    if (row.canonical_factorization) j["canonical_factorization"] = *row.canonical_factorization;
    if (!row.projective_model.empty()) j["projective_model"] = row.projective_model;
    if (!row.notes.empty()) j["notes"] = row.notes;
    return j;
}

}  // namespace k3fix
