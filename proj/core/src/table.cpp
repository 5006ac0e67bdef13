#include "qerasure/table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qerasure {

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    if (!(lo > 0.0 && hi > 0.0)) {
        throw std::invalid_argument("log_grid: bounds must be > 0");
    }
    if (n < 2) {
        throw std::invalid_argument("log_grid: need n >= 2");
    }
    std::vector<double> grid;
    grid.reserve(n);
    for (int i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / (n - 1);
        grid.push_back(lo * std::pow(hi / lo, f));
    }
    return grid;
}

void Table::append_row(std::vector<double> row) {
    if (row.size() != columns.size()) {
        throw std::invalid_argument("Table: row width does not match column count");
    }
    rows.push_back(std::move(row));
}

void Table::write_csv(std::ostream& out) const {
    if (!provenance.empty()) {
        out << "# " << provenance << "\n";
    }
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << columns[c] << (c + 1 < columns.size() ? "," : "");
    }
    out << "\n";
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << format_number(row[c]) << (c + 1 < row.size() ? "," : "");
        }
        out << "\n";
    }
}

void Table::write_json(std::ostream& out) const {
    nlohmann::ordered_json j;
    j["provenance"] = provenance;
    j["columns"] = columns;
    auto rows_json = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        auto r = nlohmann::ordered_json::array();
        for (double v : row) {
            if (std::isfinite(v)) {
                r.push_back(v);
            } else {
                r.push_back(nullptr);
            }
        }
        rows_json.push_back(std::move(r));
    }
    j["rows"] = std::move(rows_json);
    out << j.dump(2) << "\n";
}

std::string Table::to_csv() const {
    std::ostringstream ss;
    write_csv(ss);
    return ss.str();
}

}  // namespace qerasure
