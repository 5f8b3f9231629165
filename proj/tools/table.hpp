#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rydjc::cli {

// Numeric table serialized as CSV or as a JSON array of
// records. Both use the shortest decimal that round-trips.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;

    void add_row(std::vector<double> row);
    [[nodiscard]] std::size_t column_index(const std::string& name) const;
};

std::string format_double(double v);

void write_csv(std::ostream& os, const Table& table);
void write_json(std::ostream& os, const Table& table);

// Inverse of write_csv. Throws std::runtime_error on malformed input.
Table read_csv(std::istream& is);

}  // namespace rydjc::cli
