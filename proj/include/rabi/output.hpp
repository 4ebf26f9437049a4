// output.hpp — CSV emission (12 significant digits) and minimal SVG plots.

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rabi {

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

void write_csv(std::ostream& out, const Table& table);
void write_csv_file(const std::string& path, const Table& table);

/// Parse back a CSV produced by write_csv (used by round-trip checks).
Table read_csv(std::istream& in);

/// 600x400 line plot of column `y_col` against column 0.
void write_svg_plot(const std::string& path, const Table& table, size_t y_col);

std::string format_sig(double v);  // 12 significant digits

}  // namespace rabi
