#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k3fix/classify.hpp"
#include "k3fix/golden.hpp"

namespace k3fix {

enum class OutputFormat { Json, Csv, Markdown };

/// Throws std::invalid_argument for anything but json, csv, markdown.
OutputFormat parse_format(std::string_view s);

std::string render_table1(const std::vector<Table1Line>& lines, OutputFormat fmt);
std::string render_table2(const std::vector<Table2Line>& lines, OutputFormat fmt);
std::string render_genus1(const ClassRow& row, OutputFormat fmt);

}  // namespace k3fix
