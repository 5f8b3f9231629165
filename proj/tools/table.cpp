#include "table.hpp"

#include "json.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace rydjc::cli {

void Table::add_row(std::vector<double> row)
{
    if (row.size() != columns.size()) {
        throw std::logic_error("row width does not match the header");
    }
    rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const
{
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) {
            return i;
        }
    }
    throw std::out_of_range("no column named " + name);
}

std::string format_double(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return {buf, res.ptr};
}

void write_csv(std::ostream& os, const Table& table)
{
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << format_double(row[i]);
        }
        os << '\n';
    }
}

void write_json(std::ostream& os, const Table& table)
{
    auto records = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json rec;
        for (std::size_t i = 0; i < row.size(); ++i) {
            rec[table.columns[i]] = row[i];
        }
        records.push_back(std::move(rec));
    }
    os << records.dump(1) << '\n';
}

Table read_csv(std::istream& is)
{
    Table table;
    std::string line;
    if (!std::getline(is, line)) {
        throw std::runtime_error("empty CSV");
    }
    {
        std::stringstream header(line);
        std::string cell;
        while (std::getline(header, cell, ',')) {
            table.columns.push_back(cell);
        }
    }
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<double> row;
        const char* p = line.data();
        const char* const end = p + line.size();
        while (true) {
            double v = 0.0;
            const auto res = std::from_chars(p, end, v);
            if (res.ec != std::errc{}) {
                throw std::runtime_error("bad number on CSV line " + std::to_string(line_no));
            }
            row.push_back(v);
            p = res.ptr;
            if (p == end) {
                break;
            }
            if (*p != ',') {
                throw std::runtime_error("bad separator on CSV line " + std::to_string(line_no));
            }
            ++p;
        }
        if (row.size() != table.columns.size()) {
            throw std::runtime_error("ragged CSV line " + std::to_string(line_no));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace rydjc::cli
