#include "k3fix/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "k3fix/classify.hpp"
#include "k3fix/lattice.hpp"
#include "k3fix/localact.hpp"

namespace k3fix {

namespace {

class Suite {
public:
    Suite(std::string name, std::vector<CheckResult>& out) : name_(std::move(name)), out_(out) {}

    void check(const std::string& what, bool ok, const std::string& detail = {}) {
        out_.push_back({name_, what, ok, detail});
    }

    // exceptions count as a failed check, not an abort
    template <typename F>
    void guarded(const std::string& what, F&& f) {
        try {
            f();
        } catch (const std::exception& e) {
            check(what, false, std::string("threw: ") + e.what());
        }
    }

private:
    std::string name_;
    std::vector<CheckResult>& out_;
};

std::string locus_label(const FixedLocus6& l) {
    std::ostringstream os;
    os << "(" << l.p34 << "," << l.p25 << "," << l.rational_curves;
    for (int g : l.genus_list) os << ";g" << g;
    os << ")";
    return os.str();
}

std::vector<FixedLocus6> all_order6_loci(const std::vector<ClassRow>& t1, const std::vector<ClassRow>& t2,
                                         const ClassRow& g1) {
    std::vector<FixedLocus6> out;
    for (const auto& r : t1) {
        out.push_back(r.trivial_fixed);
        for (const auto& o : r.involution_options) out.push_back(o.locus);
    }
    for (const auto& r : t2) out.push_back(r.trivial_fixed);
    out.push_back(g1.trivial_fixed);
    return out;
}

void lefschetz_suite(std::vector<CheckResult>& out, const std::vector<ClassRow>& t1,
                     const std::vector<ClassRow>& t2, const ClassRow& g1) {
    Suite s("lefschetz", out);
    s.guarded("order-6 identity", [&] {
        std::vector<std::string> bad;
        const auto loci = all_order6_loci(t1, t2, g1);
        for (const auto& l : loci) {
            if (!verify_holomorphic(l) || !satisfies_integer_identity(l)) bad.push_back(locus_label(l));
        }
        s.check("order-6 identity", bad.empty(),
                std::to_string(loci.size()) + " loci" + (bad.empty() ? "" : ", failing " + bad.front()));
    });
    s.guarded("order-3 identity", [&] {
        int bad = 0;
        const auto seeds = order3_seed();
        for (const auto& seed : seeds) bad += verify_holomorphic(seed.locus) ? 0 : 1;
        s.check("order-3 identity", bad == 0, std::to_string(seeds.size()) + " seeds");
    });
}

void euler_suite(std::vector<CheckResult>& out, const std::vector<ClassRow>& t1) {
    Suite s("elliptic", out);
    s.guarded("euler budget", [&] {
        bool ok = true;
        for (const auto& r : t1) {
            const auto& fm = *r.fiber_counts;
            ok = ok && fm.euler() == kK3Euler;
            ok = ok && fibers_from_profile(profile_for(fm)) == fm;
        }
        s.check("euler budget", ok, std::to_string(t1.size()) + " rows, profile round trip");
    });
    s.guarded("decomposition remainders even", [&] {
        bool ok = true;
        for (const auto& r : t1) {
            for (const auto& d : involution_decompositions(*r.fiber_counts)) {
                const auto& m = d.remainder;
                ok = ok && m.ii % 2 == 0 && m.iv % 2 == 0 && m.ivstar % 2 == 0 && m.iistar % 2 == 0;
            }
        }
        s.check("decomposition remainders even", ok);
    });
    s.guarded("genus-1 witness", [&] {
        const auto w = genus1_witness();
        s.check("genus-1 witness", w.omega == 1 && w.fibers.iv == 6 && w.fibers.euler() == kK3Euler);
    });
}

void parity_suite(std::vector<CheckResult>& out, const std::vector<ClassRow>& t1, const std::vector<ClassRow>& t2,
                  const ClassRow& g1) {
    Suite s("parity", out);
    auto ok_for = [](int n, const FixedLocus6& l) { return n >= l.p25 && (n - l.p25) % 2 == 0; };
    bool ok = true;
    std::string first_bad;
    auto note = [&](const ClassRow& r, const FixedLocus6& l) {
        if (!ok_for(r.order3.n, l)) {
            ok = false;
            if (first_bad.empty()) first_bad = r.id + " " + locus_label(l);
        }
    };
    for (const auto& r : t1) {
        note(r, r.trivial_fixed);
        for (const auto& o : r.involution_options) note(r, o.locus);
    }
    for (const auto& r : t2) note(r, r.trivial_fixed);
    note(g1, g1.trivial_fixed);
    s.check("n >= p25 and n = p25 mod 2", ok, first_bad);

    std::set<int> blank;
    bool odd_ok = true;
    for (const auto& r : t1) {
        if (r.involution_options.empty()) blank.insert(std::stoi(r.id));
        if (r.fiber_counts->ii % 2 == 1 && !r.involution_options.empty()) odd_ok = false;
    }
    s.check("odd II count has no involution option", odd_ok);
    const std::set<int> expected{8, 11, 13, 14, 15, 16};
    std::string listed;
    for (int id : blank) listed += (listed.empty() ? "" : ",") + std::to_string(id);
    s.check("blank involution rows", blank == expected, "{" + listed + "}");
}

void triage_suite(std::vector<CheckResult>& out) {
    Suite s("classify", out);
    s.guarded("triage ledger", [&] {
        const auto report = triage_nonelliptic();
        const bool ok = report.candidates.size() == 24 && report.rejected_count(TriageRule::NAtLeastP25) == 6 &&
                        report.rejected_count(TriageRule::Parity) == 8 &&
                        report.rejected_count(TriageRule::NeedsFixedCurve) == 1 &&
                        report.rejected_count(TriageRule::Involution2Points) == 1 && report.survivors().size() == 8;
        const auto odd = apply_oddness_rule(report);
        s.check("triage ledger", ok && odd.survivors().size() == 7,
                std::to_string(report.survivors().size()) + " then " + std::to_string(odd.survivors().size()));
    });
    s.guarded("every seed yields a row", [&] {
        const auto t1 = build_table1();
        const auto t2 = build_table2();
        std::vector<FixedLocus3> covered;
        for (const auto& r : t1) covered.push_back(r.order3);
        for (const auto& r : t2) covered.push_back(r.order3);
        covered.push_back(genus1_case().order3);
        int missing = 0;
        for (const auto& seed : order3_seed()) {
            missing += std::find(covered.begin(), covered.end(), seed.locus) == covered.end() ? 1 : 0;
        }
        s.check("every seed yields a row", missing == 0, std::to_string(missing) + " missing");
    });
}

void propagation_suite(std::vector<CheckResult>& out) {
    Suite s("localact", out);
    s.guarded("chain sequence", [&] {
        const auto seq = chain_sequence(2, 6);
        const std::vector<PointType> expected{PointType::order6(2, 5), PointType::order6(3, 4),
                                              PointType::order6(3, 4), PointType::order6(2, 5),
                                              PointType::order6(0, 1), PointType::order6(0, 1)};
        s.check("chain sequence", seq == expected);
    });
    const std::vector<std::pair<KodairaFiberType, BaseAction>> cases{
        {kIVstar, BaseAction::Trivial}, {kIVstar, BaseAction::Involution}, {kIIstar, BaseAction::Trivial}};
    for (const auto& [f, b] : cases) {
        const std::string what = "catalog " + token(f) + " " + to_string(b);
        s.guarded(what, [&] {
            const auto g = kodaira_graph(f);
            s.check(what, propagate(g, section_anchor(g, b)).fixed_data() == fiber_catalog(f, b));
        });
    }
}

void lattice_suite(std::vector<CheckResult>& out) {
    Suite s("lattice", out);
    s.guarded("discriminant groups", [&] {
        const auto a2 = discriminant_group(lattice_by_name("A2"));
        const auto u3 = discriminant_group(lattice_by_name("U(3)+A2^3"));
        s.check("discriminant groups", a2.divisors == std::vector<Integer>{3} &&
                                            u3.divisors == std::vector<Integer>(5, Integer(3)));
    });
    s.guarded("fixed picard ranks", [&] {
        bool ok = classify_fixed_picard(lattice_by_name("U")).ok() &&
                  classify_fixed_picard(lattice_by_name("U+E8")).ok() &&
                  classify_fixed_picard(lattice_by_name("U+E8^2")).ok() &&
                  !classify_fixed_picard(lattice_by_name("K3")).ok();
        s.check("fixed picard ranks", ok);
    });
    s.guarded("mirror pairs", [&] {
        const auto u = lattice_by_name("U");
        const auto ue8 = lattice_by_name("U+E8");
        const auto ue8e8 = lattice_by_name("U+E8^2");
        s.check("mirror pairs", mirror_pair(u, ue8e8) && mirror_pair(ue8, ue8) && !mirror_pair(u, ue8));
    });
    s.guarded("multisection degree", [&] { s.check("multisection degree", multisection_degree("U(3)+A2^3") == 3); });
}

}  // namespace

std::vector<CheckResult> run_invariant_suites() {
    std::vector<CheckResult> out;
    std::vector<ClassRow> t1;
    std::vector<ClassRow> t2;
    ClassRow g1;
    try {
        t1 = build_table1();
        t2 = build_table2();
        g1 = genus1_case();
    } catch (const std::exception& e) {
        out.push_back({"classify", "build tables", false, e.what()});
        return out;
    }
    lefschetz_suite(out, t1, t2, g1);
    euler_suite(out, t1);
    parity_suite(out, t1, t2, g1);
    triage_suite(out);
    propagation_suite(out);
    lattice_suite(out);
    return out;
}

}  // namespace k3fix
