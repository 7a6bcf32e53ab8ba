#pragma once

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace rstk::app {

using Cell = std::variant<double, long long, std::string>;

struct Table {
    std::string schema;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

// 17 significant digits, "%.17g"
std::string format_number(double x);
// shortest text that round-trips
std::string format_short(double x);

// "# schema=<name> version=1", header row, then rows
void write_csv(const Table& t, std::ostream& os);
// array of objects keyed by column name
void write_json(const Table& t, std::ostream& os);

}  // namespace rstk::app
