#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3fix/classify.hpp"

namespace k3fix {

/// One printed line of the elliptic table. The trivial-base-action column carries
/// l - 1 (the fixed section is not counted); the involution columns carry l.
struct Table1Line {
    std::string id;
    std::optional<int> g;
    int n = 0;
    int k = 0;
    int ii = 0;
    int iv = 0;
    int iistar = 0;
    int ivstar = 0;
    int trivial_p34 = 0;
    int trivial_p25 = 0;
    int trivial_l_minus_1 = 0;
    struct Involution {
        std::string f0;
        std::string finf;
        int p34 = 0;
        int p25 = 0;
        int l = 0;
        friend bool operator==(const Involution&, const Involution&) = default;
    };
    std::optional<Involution> involution;

    friend bool operator==(const Table1Line&, const Table1Line&) = default;
};

struct Table2Line {
    std::string id;
    std::optional<int> g;
    int n = 0;
    int k = 0;
    int p34 = 0;
    int p25 = 0;
    int l = 0;

    friend bool operator==(const Table2Line&, const Table2Line&) = default;
};

/// Flattens rows into printed lines: the first involution option stays on the row,
/// further options become primed lines after all base lines.
std::vector<Table1Line> table1_lines(const std::vector<ClassRow>& rows);
std::vector<Table2Line> table2_lines(const std::vector<ClassRow>& rows);

nlohmann::json to_json(const Table1Line& l);
nlohmann::json to_json(const Table2Line& l);
nlohmann::json table1_json(const std::vector<Table1Line>& lines);
nlohmann::json table2_json(const std::vector<Table2Line>& lines);

class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<Table1Line> parse_table1(const nlohmann::json& j);
std::vector<Table2Line> parse_table2(const nlohmann::json& j);

/// $K3FIX_DATA_DIR if set, otherwise the data directory of the source tree.
std::filesystem::path data_dir();

/// Reads and parses a JSON file; throws DataError when missing or malformed.
nlohmann::json load_json(const std::filesystem::path& p);

/// A printed cell known to disagree with the per-fiber arithmetic.
struct KnownErratum {
    int table;
    std::string row;
    std::string column;
    std::string printed;
    std::string generated;
    std::string reason;
};

const std::vector<KnownErratum>& known_errata();

struct CellDiff {
    int table = 0;
    std::string row;
    std::string column;
    std::string embedded;
    std::string generated;
    bool known_erratum = false;
};

struct DiffReport {
    std::vector<CellDiff> diffs;
    int cells_compared = 0;

    int failures() const;
    int errata() const;
};

/// Cell-by-cell comparison of generated and embedded tables; fiber pairs are compared
/// unordered.
DiffReport compare_tables(const std::vector<Table1Line>& generated1, const std::vector<Table1Line>& embedded1,
                          const std::vector<Table2Line>& generated2, const std::vector<Table2Line>& embedded2);

/// Regenerates both tables and compares them to data_dir()/table{1,2}.json.
DiffReport verify_against_embedded();
DiffReport verify_against_embedded(const nlohmann::json& table1, const nlohmann::json& table2);

}  // namespace k3fix
