// output.cpp

#include "rabi/output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rabi {

std::string format_sig(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_csv(std::ostream& out, const Table& table) {
    for (size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "");
    out << "\n";
    for (const auto& row : table.rows) {
        if (row.size() != table.columns.size())
            throw std::invalid_argument("row width does not match header");
        for (size_t c = 0; c < row.size(); ++c)
            out << format_sig(row[c]) << (c + 1 < row.size() ? "," : "");
        out << "\n";
    }
}

void write_csv_file(const std::string& path, const Table& table) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    write_csv(f, table);
}

Table read_csv(std::istream& in) {
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    std::istringstream hs(line);
    std::string cell;
    while (std::getline(hs, cell, ',')) t.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream rs(line);
        std::vector<double> row;
        while (std::getline(rs, cell, ',')) row.push_back(std::stod(cell));
        if (row.size() != t.columns.size()) throw std::runtime_error("ragged CSV row");
        t.rows.push_back(std::move(row));
    }
    return t;
}

void write_svg_plot(const std::string& path, const Table& table, size_t y_col) {
    if (y_col == 0 || y_col >= table.columns.size())
        throw std::invalid_argument("invalid SVG column");
    const int W = 600, H = 400, ml = 60, mr = 15, mt = 20, mb = 45;
    double x_min = 1e300, x_max = -1e300, y_min = 1e300, y_max = -1e300;
    for (const auto& r : table.rows) {
        x_min = std::min(x_min, r[0]);
        x_max = std::max(x_max, r[0]);
        y_min = std::min(y_min, r[y_col]);
        y_max = std::max(y_max, r[y_col]);
    }
    if (table.rows.empty() || x_max <= x_min) throw std::invalid_argument("nothing to plot");
    if (y_max <= y_min) {
        y_max += 0.5;
        y_min -= 0.5;
    }
    auto px = [&](double x) { return ml + (x - x_min) / (x_max - x_min) * (W - ml - mr); };
    auto py = [&](double y) { return H - mb - (y - y_min) / (y_max - y_min) * (H - mt - mb); };

    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    f << "<rect width='100%' height='100%' fill='white'/>\n";
    f << "<line x1='" << ml << "' y1='" << (H - mb) << "' x2='" << (W - mr) << "' y2='"
      << (H - mb) << "' stroke='black'/>\n";
    f << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << (H - mb)
      << "' stroke='black'/>\n";
    f << "<text x='" << (W / 2) << "' y='" << (H - 8)
      << "' text-anchor='middle' font-size='14'>" << table.columns[0] << "</text>\n";
    f << "<text x='14' y='" << (H / 2)
      << "' text-anchor='middle' font-size='14' transform='rotate(-90 14 " << (H / 2) << ")'>"
      << table.columns[y_col] << "</text>\n";
    for (int k = 0; k <= 4; ++k) {
        const double xv = x_min + (x_max - x_min) * k / 4.0;
        const double yv = y_min + (y_max - y_min) * k / 4.0;
        f << "<text x='" << px(xv) << "' y='" << (H - mb + 18)
          << "' text-anchor='middle' font-size='11'>" << format_sig(xv).substr(0, 8)
          << "</text>\n";
        f << "<text x='" << (ml - 6) << "' y='" << (py(yv) + 4)
          << "' text-anchor='end' font-size='11'>" << format_sig(yv).substr(0, 8)
          << "</text>\n";
    }
    f << "<polyline fill='none' stroke='steelblue' stroke-width='1.5' points='";
    for (const auto& r : table.rows) f << px(r[0]) << "," << py(r[y_col]) << " ";
    f << "'/>\n</svg>\n";
}

}  // namespace rabi
