#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "k3fix/classify.hpp"
#include "k3fix/golden.hpp"
#include "k3fix/lattice.hpp"
#include "k3fix/render.hpp"
#include "k3fix/verify.hpp"

using namespace k3fix;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string section(const std::string& title, const std::string& body, OutputFormat fmt) {
    if (fmt == OutputFormat::Markdown) return "### " + title + "\n\n" + body;
    return body;
}

int cmd_classify(bool elliptic, bool non_elliptic, bool genus1, bool all, const std::string& format) {
    const OutputFormat fmt = parse_format(format);
    if (!elliptic && !non_elliptic && !genus1) all = true;
    if (all) elliptic = non_elliptic = genus1 = true;

    if (fmt == OutputFormat::Json) {
        json out = json::object();
        if (elliptic) out["elliptic"] = table1_json(table1_lines(build_table1()));
        if (non_elliptic) out["non_elliptic"] = table2_json(table2_lines(build_table2()));
        if (genus1) out["genus1"] = to_json(genus1_case());
        // a single section is printed bare
        if (out.size() == 1) out = out.begin().value();
        std::cout << out.dump(2) << "\n";
        return kOk;
    }
    std::vector<std::string> parts;
    if (elliptic) parts.push_back(section("elliptic", render_table1(table1_lines(build_table1()), fmt), fmt));
    if (non_elliptic) parts.push_back(section("non-elliptic", render_table2(table2_lines(build_table2()), fmt), fmt));
    if (genus1) parts.push_back(section("genus 1", render_genus1(genus1_case(), fmt), fmt));
    for (std::size_t i = 0; i < parts.size(); ++i) std::cout << (i ? "\n" : "") << parts[i];
    return kOk;
}

int cmd_verify(bool strict) {
    DiffReport report;
    try {
        report = verify_against_embedded();
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    int failures = 0;
    for (const auto& d : report.diffs) {
        std::ostringstream line;
        line << "table " << d.table << " row " << d.row << " " << d.column << ": embedded " << d.embedded
             << ", generated " << d.generated;
        if (d.known_erratum) {
            std::cerr << "known erratum: " << line.str() << "\n";
            if (strict) ++failures;
        } else {
            std::cout << "[FAIL] golden: " << line.str() << "\n";
            ++failures;
        }
    }
    std::cout << "[" << (report.failures() == 0 ? "ok" : "FAIL") << "] golden: " << report.cells_compared
              << " cells compared, " << report.failures() << " mismatches, " << report.errata() << " known errata\n";
    for (const auto& c : run_invariant_suites()) {
        std::cout << "[" << (c.passed ? "ok" : "FAIL") << "] " << c.suite << ": " << c.name;
        if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
        std::cout << "\n";
        failures += c.passed ? 0 : 1;
    }
    std::cout << (failures == 0 ? "verify: ok" : "verify: " + std::to_string(failures) + " failure(s)") << "\n";
    return failures == 0 ? kOk : kFailure;
}

int cmd_fiber(const std::string& type, const std::string& psi) {
    const KodairaFiberType f = parse_fiber_token(type);
    const BaseAction b = parse_base_action(psi);
    const LocalFixedData d = fiber_fixed_locus(f, b);
    json out{{"fiber", token(f)},
             {"psi", to_string(b)},
             {"p34", d.p34},
             {"p25", d.p25},
             {"curves", d.fixed_rational_curves}};
    std::cout << out.dump() << "\n";
    return kOk;
}

int cmd_lefschetz(bool enumerate, int p34, int p25, int curves, const std::vector<int>& genus) {
    if (enumerate) {
        for (const auto& p : enumerate_loci()) std::cout << to_json(p).dump() << "\n";
        return kOk;
    }
    const FixedLocus6 locus{p34, p25, curves, genus};
    locus.validate();
    json out{{"locus", to_json(locus)},
             {"sum", to_json(holomorphic_sum(locus))},
             {"target", to_json(holomorphic_target(6))},
             {"holds", verify_holomorphic(locus)},
             {"integer_identity", satisfies_integer_identity(locus)}};
    std::cout << out.dump() << "\n";
    return kOk;
}

std::vector<int> parse_mults(const std::string& s) {
    std::vector<int> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw UsageError("bad multiplicity '" + item + "'");
        } catch (const std::logic_error&) {
            throw UsageError("bad multiplicity '" + item + "'");
        }
    }
    return out;
}

int cmd_weierstrass(const std::string& mults, const std::string& profile_file) {
    RootProfile r;
    if (!profile_file.empty()) {
        r = root_profile_from_json(load_json(profile_file));
    } else if (!mults.empty()) {
        r.multiplicities = parse_mults(mults);
    } else {
        throw UsageError("weierstrass needs --mults or --profile");
    }
    const FiberMultiset fm = fibers_from_profile(r);
    std::cout << to_json(fm).dump() << "\n";
    return kOk;
}

// a path, then a file under data/lattices, then a registry name
IntegralLattice resolve_lattice(const std::string& arg) {
    if (std::filesystem::is_regular_file(arg)) return lattice_from_json(load_json(arg));
    const auto shipped = data_dir() / "lattices" / arg;
    if (std::filesystem::is_regular_file(shipped)) return lattice_from_json(load_json(shipped));
    return lattice_by_name(arg);
}

json describe(const IntegralLattice& l) {
    json out{{"rank", l.rank()}, {"even", l.is_even()}, {"determinant", l.determinant().get_str()}};
    if (l.name()) out["name"] = *l.name();
    if (l.is_nondegenerate()) {
        const auto [pos, neg] = signature(l);
        out["signature"] = {pos, neg};
        json divisors = json::array();
        for (const auto& d : discriminant_group(l).divisors) divisors.push_back(d.get_str());
        out["discriminant_group"] = divisors;
    }
    const auto c = classify_fixed_picard(l);
    json violations = json::array();
    for (auto v : c.violations) violations.push_back(to_string(v));
    out["fixed_picard"] = {{"ok", c.ok()}, {"name", c.name ? json(*c.name) : json(nullptr)}, {"violations", violations}};
    return out;
}

int cmd_lattice(const std::string& gram, const std::vector<std::string>& mirror) {
    if (!mirror.empty()) {
        const bool m = mirror_pair(resolve_lattice(mirror[0]), resolve_lattice(mirror[1]));
        std::cout << (m ? "true" : "false") << "\n";
        return kOk;
    }
    if (gram.empty()) throw UsageError("lattice needs --gram or --mirror");
    std::cout << describe(resolve_lattice(gram)).dump() << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fixed loci of order-6 non-symplectic automorphisms of K3 surfaces"};
    app.require_subcommand(1);

    auto* classify = app.add_subcommand("classify", "Print the classification tables");
    bool elliptic = false, non_elliptic = false, genus1 = false, all = false;
    std::string format = "json";
    classify->add_flag("--elliptic", elliptic, "Elliptic table");
    classify->add_flag("--non-elliptic", non_elliptic, "Non-elliptic table");
    classify->add_flag("--genus1", genus1, "Fixed elliptic curve case");
    classify->add_flag("--all", all, "Everything (default)");
    classify->add_option("--format", format, "json, csv or markdown")->check(CLI::IsMember({"json", "csv", "markdown"}));

    auto* verify = app.add_subcommand("verify", "Compare against the embedded tables and run the invariant suites");
    bool strict = false;
    verify->add_flag("--strict", strict, "Count known errata as failures");

    auto* fiber = app.add_subcommand("fiber", "Fixed locus contributed by one stable fiber");
    std::string type;
    std::string psi = "trivial";
    fiber->add_option("--type", type, "I0, II, IV, IVstar, IIstar, ...")->required();
    fiber->add_option("--psi", psi, "trivial or involution")->check(CLI::IsMember({"trivial", "involution"}));

    auto* lefschetz = app.add_subcommand("lefschetz", "Check the holomorphic fixed-point identity");
    bool enumerate = false;
    int p34 = 0, p25 = 0, curves = 0;
    std::vector<int> genus;
    lefschetz->add_flag("--enumerate", enumerate, "List every admissible profile as JSON lines");
    lefschetz->add_option("--p34", p34, "Points of type 1/6(3,4)");
    lefschetz->add_option("--p25", p25, "Points of type 1/6(2,5)");
    lefschetz->add_option("--curves", curves, "Fixed rational curves");
    lefschetz->add_option("--genus", genus, "Genus of a fixed curve of positive genus");

    auto* weierstrass = app.add_subcommand("weierstrass", "Fibers of y^2 = x^3 + p12(t)");
    std::string mults;
    std::string profile;
    weierstrass->add_option("--mults", mults, "Comma separated root multiplicities");
    weierstrass->add_option("--profile", profile, "JSON file {\"mults\": [...]}")->check(CLI::ExistingFile);

    auto* lattice = app.add_subcommand("lattice", "Lattice invariants");
    std::string gram;
    std::vector<std::string> mirror;
    lattice->add_option("--gram", gram, "JSON file, shipped lattice file or registry name");
    lattice->add_option("--mirror", mirror, "Two lattices to test as a mirror pair")->expected(2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kUsage;
    }

    try {
        if (*classify) return cmd_classify(elliptic, non_elliptic, genus1, all, format);
        if (*verify) return cmd_verify(strict);
        if (*fiber) return cmd_fiber(type, psi);
        if (*lefschetz) return cmd_lefschetz(enumerate, p34, p25, curves, genus);
        if (*weierstrass) return cmd_weierstrass(mults, profile);
        if (*lattice) return cmd_lattice(gram, mirror);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
