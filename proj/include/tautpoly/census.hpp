#pragma once

#include "tautpoly/boundary.hpp"

namespace tautpoly {

struct ScanRow {
    std::string entry;
    int n = 0, cusps = 0, rank = 0;
    std::string taut, veering_lower, veering_upper;
    bool veering_asym = false;
    bool flowgraph_noniso = false;
    std::string error;  // nonempty when the entry failed; other fields empty
};

// Evaluates entries independently (parallel when threads > 1); row order
// follows the input order. Per-entry failures are reported in the row.
std::vector<ScanRow> census_scan(const std::vector<std::string>& entries);

std::string scan_csv_header();
std::string to_csv_row(const ScanRow& row);

// Census file: one entry per line, '#' starts a comment.
std::vector<std::string> read_entry_file(const std::string& path);

}  // namespace tautpoly
