#include "rstk/app/table.hpp"

#include <charconv>
#include <cstdio>
#include "json.hpp"

namespace rstk::app {

std::string format_number(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string format_short(double x)
{
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

namespace {

std::string cell_text(const Cell& c)
{
    if (const double* d = std::get_if<double>(&c))
        return format_number(*d);
    if (const long long* i = std::get_if<long long>(&c))
        return std::to_string(*i);
    const std::string& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"')
            quoted += '"';
        quoted += ch;
    }
    return quoted + "\"";
}

}  // namespace

void write_csv(const Table& t, std::ostream& os)
{
    os << "# schema=" << t.schema << " version=1\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i)
        os << (i ? "," : "") << t.columns[i];
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << cell_text(row[i]);
        os << '\n';
    }
}

void write_json(const Table& t, std::ostream& os)
{
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i)
            std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

}  // namespace rstk::app
