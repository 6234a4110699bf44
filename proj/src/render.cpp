#include "k3fix/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3fix {

OutputFormat parse_format(std::string_view s) {
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    if (s == "markdown") return OutputFormat::Markdown;
    throw std::invalid_argument("unknown output format '" + std::string(s) + "'");
}

namespace {

using Grid = std::vector<std::vector<std::string>>;

std::size_t display_width(const std::string& s) {
    // count UTF-8 code points, not bytes
    return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) {
        return (static_cast<unsigned char>(c) & 0xC0) != 0x80;
    }));
}

std::string markdown(const std::vector<std::string>& header, const Grid& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
        width[c] = std::max<std::size_t>(3, display_width(header[c]));
        for (const auto& r : rows) width[c] = std::max(width[c], display_width(r[c]));
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        os << "|";
        for (std::size_t c = 0; c < cells.size(); ++c) {
            os << " " << std::string(width[c] - display_width(cells[c]), ' ') << cells[c] << " |";
        }
        os << "\n";
    };
    line(header);
    os << "|";
    for (std::size_t w : width) os << std::string(w + 1, '-') << ":|";
    os << "\n";
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string csv(const std::vector<std::string>& header, const Grid& rows) {
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << ",";
            if (cells[c].find_first_of(",\"'") != std::string::npos) os << "\"" << cells[c] << "\"";
            else os << cells[c];
        }
        os << "\n";
    };
    line(header);
    for (const auto& r : rows) line(r);
    return os.str();
}

std::string genus_cell(const std::optional<int>& g, OutputFormat fmt) {
    if (g) return std::to_string(*g);
    return fmt == OutputFormat::Markdown ? "∅" : "";
}

std::string fiber_cell(const std::string& tok, OutputFormat fmt) {
    if (fmt != OutputFormat::Markdown) return tok;
    const auto f = parse_fiber_token(tok);
    if (f == kIVstar) return "IV*";
    if (f == kIIstar) return "II*";
    return tok;
}

}  // namespace

std::string render_table1(const std::vector<Table1Line>& lines, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return table1_json(lines).dump(2) + "\n";
    const bool md = fmt == OutputFormat::Markdown;
    const std::vector<std::string> header =
        md ? std::vector<std::string>{"#",      "g",      "n",   "k",  "ii",   "iv",     "ii*",    "iv*",
                                      "p(3,4)", "p(2,5)", "l-1", "F0", "F∞", "p(3,4)", "p(2,5)", "l"}
           : std::vector<std::string>{"id",       "g",         "n",         "k",   "ii",   "iv",
                                      "iistar",   "ivstar",    "triv_p34",  "triv_p25",    "triv_l_minus_1",
                                      "F0",       "Finf",      "inv_p34",   "inv_p25",     "inv_l"};
    Grid rows;
    for (const auto& l : lines) {
        std::vector<std::string> r{l.id,
                                   genus_cell(l.g, fmt),
                                   std::to_string(l.n),
                                   std::to_string(l.k),
                                   std::to_string(l.ii),
                                   std::to_string(l.iv),
                                   std::to_string(l.iistar),
                                   std::to_string(l.ivstar),
                                   std::to_string(l.trivial_p34),
                                   std::to_string(l.trivial_p25),
                                   std::to_string(l.trivial_l_minus_1)};
        if (l.involution) {
            r.push_back(fiber_cell(l.involution->f0, fmt));
            r.push_back(fiber_cell(l.involution->finf, fmt));
            r.push_back(std::to_string(l.involution->p34));
            r.push_back(std::to_string(l.involution->p25));
            r.push_back(std::to_string(l.involution->l));
        } else {
            r.insert(r.end(), 5, "");
        }
        rows.push_back(std::move(r));
    }
    return md ? markdown(header, rows) : csv(header, rows);
}

std::string render_table2(const std::vector<Table2Line>& lines, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return table2_json(lines).dump(2) + "\n";
    const bool md = fmt == OutputFormat::Markdown;
    const std::vector<std::string> header = md ? std::vector<std::string>{"#", "g", "n", "k", "p(3,4)", "p(2,5)", "l"}
                                               : std::vector<std::string>{"id", "g", "n", "k", "p34", "p25", "l"};
    Grid rows;
    for (const auto& l : lines) {
        rows.push_back({l.id, genus_cell(l.g, fmt), std::to_string(l.n), std::to_string(l.k), std::to_string(l.p34),
                        std::to_string(l.p25), std::to_string(l.l)});
    }
    return md ? markdown(header, rows) : csv(header, rows);
}

std::string render_genus1(const ClassRow& row, OutputFormat fmt) {
    if (fmt == OutputFormat::Json) return to_json(row).dump(2) + "\n";
    const bool md = fmt == OutputFormat::Markdown;
    const std::vector<std::string> header =
        md ? std::vector<std::string>{"#", "g", "n", "k", "p(3,4)", "p(2,5)", "l", "genus"}
           : std::vector<std::string>{"id", "g", "n", "k", "p34", "p25", "l", "genus"};
    std::string genus;
    for (int g : row.trivial_fixed.genus_list) genus += (genus.empty() ? "" : " ") + std::to_string(g);
    Grid rows{{row.id, genus_cell(row.order3.g, fmt), std::to_string(row.order3.n), std::to_string(row.order3.k),
               std::to_string(row.trivial_fixed.p34), std::to_string(row.trivial_fixed.p25),
               std::to_string(row.trivial_fixed.rational_curves), genus}};
    return md ? markdown(header, rows) : csv(header, rows);
}

}  // namespace k3fix
