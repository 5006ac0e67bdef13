// table.hpp — flat numeric result tables with deterministic CSV/JSON
// serialization (fixed column order, 12-significant-digit floats, one
// '#'-prefixed provenance comment line).

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qerasure {

// %.12g rendering used for all emitted numbers.
std::string format_number(double v);

// n log-spaced values from lo to hi inclusive (lo, hi > 0, n >= 2).
std::vector<double> log_grid(double lo, double hi, int n);

struct Table {
    std::string provenance;  // written as "# <provenance>" above the header
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void append_row(std::vector<double> row);
    void write_csv(std::ostream& out) const;
    void write_json(std::ostream& out) const;
    std::string to_csv() const;
};

}  // namespace qerasure
