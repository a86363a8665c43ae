#pragma once

#include <string>
#include <vector>

#include "qrlab/julia.hpp"

namespace qrlab {

// One decimal cell with 17 significant digits (round-trips a double).
std::string csv_cell(double v);
std::string csv_cell(int v);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// UTF-8, comma separated, header first, deterministic row order.
std::string render_csv(const CsvTable& table);
void write_csv(const CsvTable& table, const std::string& path);

// Plain PGM (P2): "P2", "<width> <height>", "255", then ASCII gray rows top
// to bottom. Gray = 255 min(1, log10(1+indicator)/log10(1+threshold)),
// rounded half-up.
std::string render_pgm(const JuliaGrid& grid);
void write_pgm(const JuliaGrid& grid, const std::string& path);

void write_text_file(const std::string& text, const std::string& path);

}  // namespace qrlab
