// One line per acceptance criterion; exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "k3fix/golden.hpp"
#include "k3fix/lattice.hpp"
#include "oracles.hpp"

using namespace k3fix;

namespace {

constexpr double kMaxTable1Seconds = 1.0;
constexpr double kNumericTolerance = 1e-9;
constexpr int kRandomProfiles = 1000;
constexpr int kRandomTrees = 1000;
constexpr int kRandomMatrices = 1000;

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            if (!passed) detail << "; ";
            else detail.str("");
            passed = false;
            detail << what;
        }
    }
};

nlohmann::json embedded(int table) { return load_json(data_dir() / ("table" + std::to_string(table) + ".json")); }

void criterion1(Outcome& o) {
    const auto start = std::chrono::steady_clock::now();
    const auto generated = table1_lines(build_table1());
    const auto emb = parse_table1(embedded(1));
    const auto report = compare_tables(generated, emb, {}, {});
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    int base = 0;
    int primed = 0;
    for (const auto& l : generated) (l.id.find('\'') == std::string::npos ? base : primed)++;
    o.require(base == 18 && primed == 2, "expected 18 base and 2 primed lines");
    o.require(report.failures() == 0, std::to_string(report.failures()) + " mismatching cells");
    o.require(report.errata() == 1 && report.diffs.size() == 1 && report.diffs[0].row == "18" &&
                  report.diffs[0].column == "F0/Finf",
              "expected exactly the row 18 F0/Finf erratum");
    o.require(secs < kMaxTable1Seconds, "took " + std::to_string(secs) + " s");
    if (o.passed) {
        o.detail << report.cells_compared << " cells, 0 mismatches, 1 known erratum (row 18 F0/Finf), "
                 << std::fixed << std::setprecision(2) << secs * 1000 << " ms";
    }
}

void criterion2(Outcome& o) {
    const auto generated = table2_lines(build_table2());
    const auto emb = parse_table2(embedded(2));
    o.require(generated.size() == 7, std::to_string(generated.size()) + " rows");
    o.require(table2_json(generated).dump() == table2_json(emb).dump(), "normalized JSON differs");
    o.require(compare_tables({}, {}, generated, emb).diffs.empty(), "cell differences");
    if (o.passed) o.detail << "7 rows identical after normalization";
}

void criterion3(Outcome& o) {
    const auto r = triage_nonelliptic();
    const int a = r.rejected_count(TriageRule::NAtLeastP25);
    const int b = r.rejected_count(TriageRule::Parity);
    const int c = r.rejected_count(TriageRule::NeedsFixedCurve);
    const int d = r.rejected_count(TriageRule::Involution2Points);
    const auto survivors = r.survivors().size();
    const auto after = apply_oddness_rule(r).survivors().size();
    std::ostringstream ledger;
    ledger << r.candidates.size() << "-" << a << "-" << b << "-" << c << "-" << d << "=" << survivors
           << ", oddness leaves " << after;
    o.require(r.candidates.size() == 24 && a == 6 && b == 8 && c == 1 && d == 1 && survivors == 8,
              "ledger " + ledger.str());
    o.require(after == 7, "oddness leaves " + std::to_string(after));
    if (o.passed) o.detail << ledger.str();
}

void criterion4(Outcome& o) {
    std::vector<FixedLocus6> loci6;
    std::vector<FixedLocus3> loci3;
    for (const auto& r : build_table1()) {
        loci6.push_back(r.trivial_fixed);
        for (const auto& opt : r.involution_options) loci6.push_back(opt.locus);
        loci3.push_back(r.order3);
    }
    for (const auto& r : build_table2()) {
        loci6.push_back(r.trivial_fixed);
        loci3.push_back(r.order3);
    }
    const auto g1 = genus1_case();
    loci6.push_back(g1.trivial_fixed);
    loci3.push_back(g1.order3);
    for (const auto& s : order3_seed()) loci3.push_back(s.locus);

    double worst = 0;
    for (const auto& l : loci6) {
        o.require(holomorphic_sum(l) == holomorphic_target(6), "order-6 identity fails");
        const double err = std::abs(oracle::order6_sum(l.p34, l.p25, l.rational_curves, l.genus_list) -
                                    oracle::target(6));
        worst = std::max(worst, err);
        worst = std::max(worst, std::abs(to_complex(holomorphic_sum(l)) - oracle::target(6)));
    }
    for (const auto& l : loci3) {
        o.require(holomorphic_sum(l) == holomorphic_target(3), "order-3 identity fails");
        // n points 1/3(2,2), k - 1 rational curves, one genus-g curve
        oracle::C s = double(l.n) * oracle::point_term(3, 2, 2);
        if (l.g) s += double(l.k - 1) * oracle::curve_term(0, 3) + oracle::curve_term(*l.g, 3);
        worst = std::max(worst, std::abs(s - oracle::target(3)));
    }
    o.require(worst < kNumericTolerance, "numeric deviation " + std::to_string(worst));
    if (o.passed) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1e", worst);
        o.detail << loci6.size() << " order-6 and " << loci3.size() << " order-3 loci exact; numeric max error "
                 << buf;
    }
}

RootProfile random_k3_profile(std::mt19937& rng) {
    static const int parts[] = {1, 2, 4, 5};
    static const int euler[] = {2, 4, 8, 10};
    while (true) {
        RootProfile r;
        int sum = 0;
        int e = 0;
        while (sum < 12) {
            const int i = std::uniform_int_distribution<int>(0, 3)(rng);
            if (sum + parts[i] > 12) break;
            r.multiplicities.push_back(parts[i]);
            sum += parts[i];
            e += euler[i];
        }
        if (sum == 12 && e == 24) return r;
    }
}

void criterion5(Outcome& o) {
    int rows = 0;
    for (const auto& r : build_table1()) {
        o.require(r.fiber_counts->euler() == kK3Euler, "row " + r.id + " Euler " + std::to_string(r.fiber_counts->euler()));
        ++rows;
    }
    std::mt19937 rng(1729);
    for (int i = 0; i < kRandomProfiles; ++i) {
        const auto fm = fibers_from_profile(random_k3_profile(rng));
        o.require(fm.euler() == kK3Euler, "random profile Euler " + std::to_string(fm.euler()));
    }
    if (o.passed) o.detail << rows << " rows and " << kRandomProfiles << " random profiles sum to 24";
}

void criterion6(Outcome& o) {
    const std::vector<PointType> block{PointType::order6(2, 5), PointType::order6(3, 4), PointType::order6(3, 4),
                                      PointType::order6(2, 5), PointType::order6(1, 0), PointType::order6(1, 0)};
    o.require(chain_sequence(2, 6) == block, "chain sequence");
    const std::vector<std::pair<KodairaFiberType, BaseAction>> cases{
        {kIVstar, BaseAction::Trivial}, {kIVstar, BaseAction::Involution}, {kIIstar, BaseAction::Trivial}};
    for (const auto& [f, b] : cases) {
        const auto g = kodaira_graph(f);
        o.require(propagate(g, section_anchor(g, b)).fixed_data() == fiber_catalog(f, b),
                  token(f) + " " + to_string(b) + " catalog");
    }

    std::mt19937 rng(99);
    int trees = 0;
    int attempts = 0;
    while (trees < kRandomTrees && attempts < 100 * kRandomTrees) {
        ++attempts;
        const int n = std::uniform_int_distribution<int>(2, 10)(rng);
        std::vector<GramNode> nodes;
        for (int i = 0; i < n; ++i) nodes.push_back({i, std::uniform_int_distribution<int>(1, 3)(rng)});
        const GramGraph g(nodes, oracle::random_tree(n, rng));
        const auto& [u, v] = g.edges()[std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng)];
        ActionAssignment a;
        try {
            a = propagate(g, {u, std::uniform_int_distribution<int>(0, 5)(rng), v});
        } catch (const PropagationError&) {
            continue;
        }
        ++trees;
        for (const auto& e : a.edges) {
            o.require(propagate(g, {e.u, e.along_u, e.v}) == a && propagate(g, {e.v, e.along_v, e.u}) == a,
                      "re-anchoring changed the assignment");
        }
    }
    o.require(trees == kRandomTrees, "only " + std::to_string(trees) + " random trees propagated");
    if (o.passed) o.detail << "period-6 chain, IV*/II* catalogs, " << trees << " random trees anchor-independent";
}

void criterion7(Outcome& o) {
    o.require(discriminant_group(lattice_by_name("A2")).divisors == std::vector<Integer>{3}, "A2");
    o.require(discriminant_group(lattice_by_name("U(3)+A2^3")).divisors == std::vector<Integer>(5, Integer(3)),
              "U(3)+A2^3");
    std::set<std::size_t> accepted;
    IntegralLattice l = lattice_by_name("U");
    for (int k = 0; k <= 3; ++k) {
        if (classify_fixed_picard(l).ok()) accepted.insert(l.rank());
        l = direct_sum(l, lattice_by_name("E8"));
    }
    o.require(accepted == std::set<std::size_t>{2, 10, 18}, "accepted ranks");
    const auto u = lattice_by_name("U");
    const auto ue8 = lattice_by_name("U+E8");
    o.require(mirror_pair(u, lattice_by_name("U+E8^2")), "(U, U+E8^2)");
    o.require(mirror_pair(ue8, ue8), "(U+E8, U+E8)");
    o.require(!mirror_pair(u, ue8), "(U, U+E8) accepted");

    std::mt19937 rng(6174);
    std::uniform_int_distribution<long> entry(-9, 9);
    int agree = 0;
    for (int t = 0; t < kRandomMatrices; ++t) {
        std::vector<std::vector<long>> m(6, std::vector<long>(6));
        for (auto& row : m)
            for (auto& x : row) x = entry(rng);
        agree += smith_invariants(to_int_matrix(m)) == oracle::smith_by_minors(m) ? 1 : 0;
    }
    o.require(agree == kRandomMatrices, std::to_string(kRandomMatrices - agree) + " SNF disagreements");
    if (o.passed) o.detail << "discriminants, ranks {2,10,18}, mirror pairs, SNF agrees on " << agree << " matrices";
}

void criterion8(Outcome& o) {
    auto ok = [](int n, const FixedLocus6& l) { return n >= l.p25 && (n - l.p25) % 2 == 0; };
    std::set<int> blank;
    int checked = 0;
    for (const auto& r : build_table1()) {
        o.require(ok(r.order3.n, r.trivial_fixed), "row " + r.id + " trivial");
        for (const auto& opt : r.involution_options) o.require(ok(r.order3.n, opt.locus), "row " + r.id + " involution");
        if (r.fiber_counts->ii % 2 == 1) o.require(r.involution_options.empty(), "row " + r.id + " odd II");
        if (r.involution_options.empty()) blank.insert(std::stoi(r.id));
        ++checked;
    }
    for (const auto& r : build_table2()) {
        o.require(ok(r.order3.n, r.trivial_fixed), "table 2 row " + r.id);
        ++checked;
    }
    const auto g1 = genus1_case();
    o.require(ok(g1.order3.n, g1.trivial_fixed), "genus-1 row");
    o.require(blank == std::set<int>{8, 11, 13, 14, 15, 16}, "blank rows");
    if (o.passed) o.detail << checked + 1 << " rows; blank involution rows {8,11,13,14,15,16}";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
        {"Table 1 regeneration", criterion1}, {"Table 2 regeneration", criterion2},
        {"non-elliptic triage", criterion3},  {"exact Lefschetz identity", criterion4},
        {"Euler budget", criterion5},         {"propagation", criterion6},
        {"lattice suite", criterion7},        {"parity and ordering", criterion8},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("threw: ") + e.what());
        }
        std::cout << (o.passed ? "[PASS]" : "[FAIL]") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail.str() << ")\n";
        failed += o.passed ? 0 : 1;
    }
    return failed;
}
