#include "qrlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "qrlab/numerics.hpp"

namespace qrlab {

std::string csv_cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string csv_cell(int v) { return std::to_string(v); }

std::string render_csv(const CsvTable& table) {
    if (table.header.empty() || table.rows.empty())
        throw std::invalid_argument("render_csv: table must be nonempty");
    std::ostringstream os;
    for (size_t i = 0; i < table.header.size(); ++i) {
        if (i) os << ',';
        os << table.header[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << row[i];
        }
        os << '\n';
    }
    return os.str();
}

void write_text_file(const std::string& text, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw numeric_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw numeric_error("write failed: " + path);
}

void write_csv(const CsvTable& table, const std::string& path) {
    write_text_file(render_csv(table), path);
}

std::string render_pgm(const JuliaGrid& grid) {
    const double log_den = std::log10(1.0 + grid.config.threshold);
    std::ostringstream os;
    os << "P2\n" << grid.config.width << ' ' << grid.config.height << "\n255\n";
    for (int row = 0; row < grid.config.height; ++row) {
        for (int col = 0; col < grid.config.width; ++col) {
            const double ind = grid.indicator[grid.index(row, col)];
            double v = std::isinf(ind) ? 1.0 : std::min(1.0, std::log10(1.0 + ind) / log_den);
            const int gray = static_cast<int>(std::floor(255.0 * v + 0.5));
            if (col) os << ' ';
            os << gray;
        }
        os << '\n';
    }
    return os.str();
}

void write_pgm(const JuliaGrid& grid, const std::string& path) {
    write_text_file(render_pgm(grid), path);
}

}  // namespace qrlab
