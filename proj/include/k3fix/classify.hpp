#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3fix/elliptic.hpp"
#include "k3fix/lefschetz.hpp"

namespace k3fix {

/// Fixed locus (g, n, k) of zeta^2 on which a classification row is built.
struct OrderThreeSeed {
    FixedLocus3 locus;
    bool elliptic = false;
    /// Picard lattice recorded for seeds where a lattice argument is used.
    std::optional<std::string> picard;
};

/// The 18 elliptic seeds followed by the 6 non-elliptic ones, in table order.
std::vector<OrderThreeSeed> order3_seed();

/// Degree of the multisection of the genus-1 fibration defined by the isotropic first
/// basis vector of the lattice: gcd of that vector's products with the basis.
Integer multisection_degree(const std::string& picard);

enum class TriageRule {
    NAtLeastP25,        // (2,5) points stay isolated under zeta^2
    Parity,             // zeta is an involution on the isolated points of zeta^2
    NeedsFixedCurve,    // (3,4) points lie on curves fixed by zeta^2
    Involution2Points,  // an involution of P^1 fixes two points
    Oddness,            // free involution on the elliptic curve vs odd multisection
};

std::string to_string(TriageRule r);

struct TriageCandidate {
    int p34 = 0;
    int p25 = 0;
    OrderThreeSeed seed;
    std::optional<TriageRule> rejected_by;

    bool survives() const { return !rejected_by.has_value(); }
    /// "(p34,p25;n,k,g)"
    std::string label() const;
};

struct TriageReport {
    std::vector<TriageCandidate> candidates;

    std::vector<TriageCandidate> survivors() const;
    int rejected_count(TriageRule r) const;
};

/// Points-only fixed loci crossed with the non-elliptic seeds, filtered by the
/// four local rules.
TriageReport triage_nonelliptic();

/// Additionally rejects candidates where zeta must act freely on the fixed elliptic
/// curve of zeta^2 while the fibration it defines has an odd multisection.
TriageReport apply_oddness_rule(TriageReport report);

enum class RowKind { Elliptic, NonElliptic, Genus1 };

struct InvolutionOption {
    FiberPair fibers;
    FixedLocus6 locus;
    ModuliStratum stratum;
};

struct ClassRow {
    std::string id;
    RowKind kind = RowKind::Elliptic;
    FixedLocus3 order3;
    std::optional<FiberMultiset> fiber_counts;
    /// Fixed locus of zeta with trivial base action; for non-elliptic and genus-1 rows,
    /// the fixed locus itself.
    FixedLocus6 trivial_fixed;
    std::vector<InvolutionOption> involution_options;

    // metadata
    std::string moduli_component;
    std::vector<std::string> shares_trivial_locus_with;
    std::optional<bool> canonical_factorization;
    std::string projective_model;
    std::vector<std::string> notes;

    bool elliptic() const { return kind == RowKind::Elliptic; }
};

/// Zeta-elliptic rows, one per elliptic seed; a row with several base-involution
/// options is printed as several table lines (3 and 3', 6 and 6').
std::vector<ClassRow> build_table1();

/// Survivors of the non-elliptic triage in printed order (primed rows last).
std::vector<ClassRow> build_table2();

/// The case of a fixed elliptic curve.
ClassRow genus1_case();

struct Genus1Witness {
    RootProfile profile;             // p12 = (t^6 - 1)^2
    WeightedAutomorphism action;     // t -> xi6 t
    int omega = 0;
    FiberMultiset fibers;
};

Genus1Witness genus1_witness();

nlohmann::json to_json(const ClassRow& row);
std::string to_string(RowKind k);

}  // namespace k3fix
