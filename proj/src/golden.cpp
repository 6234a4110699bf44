#include "k3fix/golden.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>

#ifndef K3FIX_DEFAULT_DATA_DIR
#define K3FIX_DEFAULT_DATA_DIR "data"
#endif

namespace k3fix {

std::vector<Table1Line> table1_lines(const std::vector<ClassRow>& rows) {
    std::vector<Table1Line> base;
    std::vector<Table1Line> primed;
    for (const auto& row : rows) {
        if (!row.fiber_counts) throw std::invalid_argument("table 1 row without fiber counts");
        Table1Line line;
        line.id = row.id;
        line.g = row.order3.g;
        line.n = row.order3.n;
        line.k = row.order3.k;
        line.ii = row.fiber_counts->ii;
        line.iv = row.fiber_counts->iv;
        line.iistar = row.fiber_counts->iistar;
        line.ivstar = row.fiber_counts->ivstar;
        line.trivial_p34 = row.trivial_fixed.p34;
        line.trivial_p25 = row.trivial_fixed.p25;
        line.trivial_l_minus_1 = row.trivial_fixed.rational_curves - 1;
        if (row.involution_options.empty()) {
            base.push_back(line);
            continue;
        }
        for (std::size_t i = 0; i < row.involution_options.size(); ++i) {
            const auto& o = row.involution_options[i];
            Table1Line l = line;
            l.id = row.id + std::string(i, '\'');
            l.involution = Table1Line::Involution{token(o.fibers.first), token(o.fibers.second), o.locus.p34,
                                                  o.locus.p25, o.locus.rational_curves};
            (i == 0 ? base : primed).push_back(std::move(l));
        }
    }
    base.insert(base.end(), primed.begin(), primed.end());
    return base;
}

std::vector<Table2Line> table2_lines(const std::vector<ClassRow>& rows) {
    std::vector<Table2Line> out;
    for (const auto& row : rows) {
        out.push_back({row.id, row.order3.g, row.order3.n, row.order3.k, row.trivial_fixed.p34,
                       row.trivial_fixed.p25, row.trivial_fixed.rational_curves});
    }
    return out;
}

namespace {

nlohmann::json opt_json(const std::optional<int>& g) { return g ? nlohmann::json(*g) : nlohmann::json(nullptr); }

std::optional<int> opt_int(const nlohmann::json& j, const char* key) {
    const auto& v = j.at(key);
    if (v.is_null()) return std::nullopt;
    return v.get<int>();
}

}  // namespace

nlohmann::json to_json(const Table1Line& l) {
    nlohmann::json j{{"id", l.id},
                     {"g", opt_json(l.g)},
                     {"n", l.n},
                     {"k", l.k},
                     {"ii", l.ii},
                     {"iv", l.iv},
                     {"iistar", l.iistar},
                     {"ivstar", l.ivstar},
                     {"trivial", {{"p34", l.trivial_p34}, {"p25", l.trivial_p25}, {"l_minus_1", l.trivial_l_minus_1}}}};
    if (l.involution) {
        j["involution"] = {{"F0", l.involution->f0},
                           {"Finf", l.involution->finf},
                           {"p34", l.involution->p34},
                           {"p25", l.involution->p25},
                           {"l", l.involution->l}};
    } else {
        j["involution"] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const Table2Line& l) {
    return {{"id", l.id}, {"g", opt_json(l.g)}, {"n", l.n},   {"k", l.k},
            {"p34", l.p34}, {"p25", l.p25},     {"l", l.l}};
}

nlohmann::json table1_json(const std::vector<Table1Line>& lines) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& l : lines) rows.push_back(to_json(l));
    return {{"table", 1}, {"rows", rows}};
}

nlohmann::json table2_json(const std::vector<Table2Line>& lines) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& l : lines) rows.push_back(to_json(l));
    return {{"table", 2}, {"rows", rows}};
}

std::vector<Table1Line> parse_table1(const nlohmann::json& j) {
    try {
        if (j.at("table").get<int>() != 1) throw DataError("expected table 1");
        std::vector<Table1Line> out;
        for (const auto& r : j.at("rows")) {
            Table1Line l;
            l.id = r.at("id").get<std::string>();
            l.g = opt_int(r, "g");
            l.n = r.at("n").get<int>();
            l.k = r.at("k").get<int>();
            l.ii = r.at("ii").get<int>();
            l.iv = r.at("iv").get<int>();
            l.iistar = r.at("iistar").get<int>();
            l.ivstar = r.at("ivstar").get<int>();
            const auto& t = r.at("trivial");
            l.trivial_p34 = t.at("p34").get<int>();
            l.trivial_p25 = t.at("p25").get<int>();
            l.trivial_l_minus_1 = t.at("l_minus_1").get<int>();
            const auto& inv = r.at("involution");
            if (!inv.is_null()) {
                l.involution = Table1Line::Involution{inv.at("F0").get<std::string>(), inv.at("Finf").get<std::string>(),
                                                      inv.at("p34").get<int>(), inv.at("p25").get<int>(),
                                                      inv.at("l").get<int>()};
            }
            out.push_back(std::move(l));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed table 1 data: ") + e.what());
    }
}

std::vector<Table2Line> parse_table2(const nlohmann::json& j) {
    try {
        if (j.at("table").get<int>() != 2) throw DataError("expected table 2");
        std::vector<Table2Line> out;
        for (const auto& r : j.at("rows")) {
            out.push_back({r.at("id").get<std::string>(), opt_int(r, "g"), r.at("n").get<int>(), r.at("k").get<int>(),
                           r.at("p34").get<int>(), r.at("p25").get<int>(), r.at("l").get<int>()});
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed table 2 data: ") + e.what());
    }
}

std::filesystem::path data_dir() {
    if (const char* env = std::getenv("K3FIX_DATA_DIR"); env && *env) return env;
    return K3FIX_DEFAULT_DATA_DIR;
}

nlohmann::json load_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw DataError("cannot open " + p.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw DataError("cannot parse " + p.string() + ": " + e.what());
    }
}

const std::vector<KnownErratum>& known_errata() {
    static const std::vector<KnownErratum> errata{
        {1, "18", "F0/Finf", "I0,I0", "I0,IV",
         "fiber loci give (6,0,0) for {I0,I0} and (4,1,0) for {I0,IV}; the printed locus (4,1,0) "
         "belongs to {I0,IV}, and an odd IV count rules out {I0,I0}"},
    };
    return errata;
}

int DiffReport::failures() const {
    return static_cast<int>(std::count_if(diffs.begin(), diffs.end(), [](const CellDiff& d) { return !d.known_erratum; }));
}

int DiffReport::errata() const {
    return static_cast<int>(std::count_if(diffs.begin(), diffs.end(), [](const CellDiff& d) { return d.known_erratum; }));
}

namespace {

using Cells = std::vector<std::pair<std::string, std::string>>;

std::string str(const std::optional<int>& g) { return g ? std::to_string(*g) : "∅"; }

Cells cells_of(const Table1Line& l) {
    Cells c{{"g", str(l.g)},
            {"n", std::to_string(l.n)},
            {"k", std::to_string(l.k)},
            {"ii", std::to_string(l.ii)},
            {"iv", std::to_string(l.iv)},
            {"iistar", std::to_string(l.iistar)},
            {"ivstar", std::to_string(l.ivstar)},
            {"trivial.p34", std::to_string(l.trivial_p34)},
            {"trivial.p25", std::to_string(l.trivial_p25)},
            {"trivial.l-1", std::to_string(l.trivial_l_minus_1)}};
    if (l.involution) {
        // unordered pair: which base point is called 0 is a convention
        std::string a = l.involution->f0;
        std::string b = l.involution->finf;
        const KodairaFiberType fa = parse_fiber_token(a);
        const KodairaFiberType fb = parse_fiber_token(b);
        if (fb < fa) std::swap(a, b);
        c.emplace_back("F0/Finf", a + "," + b);
        c.emplace_back("involution.p34", std::to_string(l.involution->p34));
        c.emplace_back("involution.p25", std::to_string(l.involution->p25));
        c.emplace_back("involution.l", std::to_string(l.involution->l));
    } else {
        c.emplace_back("involution", "none");
    }
    return c;
}

Cells cells_of(const Table2Line& l) {
    return {{"g", str(l.g)},
            {"n", std::to_string(l.n)},
            {"k", std::to_string(l.k)},
            {"p34", std::to_string(l.p34)},
            {"p25", std::to_string(l.p25)},
            {"l", std::to_string(l.l)}};
}

bool is_known(int table, const std::string& row, const std::string& column, const std::string& printed,
              const std::string& generated) {
    return std::any_of(known_errata().begin(), known_errata().end(), [&](const KnownErratum& e) {
        return e.table == table && e.row == row && e.column == column && e.printed == printed &&
               e.generated == generated;
    });
}

template <typename Line>
void compare(int table, const std::vector<Line>& generated, const std::vector<Line>& embedded, DiffReport& report) {
    std::map<std::string, const Line*> gen;
    for (const auto& l : generated) gen[l.id] = &l;
    std::map<std::string, const Line*> emb;
    for (const auto& l : embedded) emb[l.id] = &l;

    for (const auto& [id, e] : emb) {
        auto it = gen.find(id);
        if (it == gen.end()) {
            report.diffs.push_back({table, id, "row", "present", "missing", false});
            continue;
        }
        const Cells ec = cells_of(*e);
        const Cells gc = cells_of(*it->second);
        std::map<std::string, std::string> gmap(gc.begin(), gc.end());
        std::map<std::string, std::string> emap(ec.begin(), ec.end());
        for (const auto& [col, value] : ec) {
            ++report.cells_compared;
            auto g = gmap.find(col);
            const std::string gv = g == gmap.end() ? "absent" : g->second;
            if (gv != value) report.diffs.push_back({table, id, col, value, gv, is_known(table, id, col, value, gv)});
        }
        for (const auto& [col, value] : gc) {
            if (!emap.contains(col)) report.diffs.push_back({table, id, col, "absent", value, false});
        }
    }
    for (const auto& [id, g] : gen) {
        if (!emb.contains(id)) report.diffs.push_back({table, id, "row", "missing", "present", false});
    }
}

}  // namespace

DiffReport compare_tables(const std::vector<Table1Line>& generated1, const std::vector<Table1Line>& embedded1,
                          const std::vector<Table2Line>& generated2, const std::vector<Table2Line>& embedded2) {
    DiffReport report;
    compare(1, generated1, embedded1, report);
    compare(2, generated2, embedded2, report);
    return report;
}

DiffReport verify_against_embedded(const nlohmann::json& table1, const nlohmann::json& table2) {
    return compare_tables(table1_lines(build_table1()), parse_table1(table1), table2_lines(build_table2()),
                          parse_table2(table2));
}

DiffReport verify_against_embedded() {
    const auto dir = data_dir();
    return verify_against_embedded(load_json(dir / "table1.json"), load_json(dir / "table2.json"));
}

}  // namespace k3fix
