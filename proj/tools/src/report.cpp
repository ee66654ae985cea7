#include "report.hpp"

#include <algorithm>
#include <sstream>

namespace propg_cli {

std::optional<Format> parse_format(std::string_view s) {
    if (s == "table")
        return Format::kTable;
    if (s == "json")
        return Format::kJson;
    if (s == "csv")
        return Format::kCsv;
    return std::nullopt;
}

std::string csv_quote(std::string_view field) {
    if (field.find_first_of(",\"\n") == std::string_view::npos)
        return std::string(field);
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string Report::render(Format f) const {
    switch (f) {
    case Format::kJson:
        return to_json();
    case Format::kCsv:
        return to_csv();
    default:
        return to_table();
    }
}

std::string Report::to_json() const {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    j["params"] = params;
    j["columns"] = columns;
    j["rows"] = rows;
    j["extra"] = extra;
    return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::string out;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i)
            out += ',';
        out += csv_quote(columns[i]);
    }
    out += '\n';
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i)
                out += ',';
            out += csv_quote(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string Report::to_table() const {
    std::ostringstream out;
    out << "# " << command;
    for (const auto& [k, v] : params.items())
        out << ' ' << k << '=' << (v.is_string() ? v.get<std::string>() : v.dump());
    out << '\n';

    std::vector<std::size_t> widths(columns.size(), 0);
    for (std::size_t i = 0; i < columns.size(); ++i)
        widths[i] = columns[i].size();
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());

    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i)
                out << "  ";
            out << cells[i];
            if (i + 1 < cells.size())
                out << std::string(widths[i] - std::min(widths[i], cells[i].size()), ' ');
        }
        out << '\n';
    };
    if (!columns.empty()) {
        line(columns);
        std::string rule;
        for (std::size_t i = 0; i < widths.size(); ++i) {
            if (i)
                rule += "  ";
            rule += std::string(widths[i], '-');
        }
        out << rule << '\n';
    }
    for (const auto& row : rows)
        line(row);
    for (const auto& [k, v] : extra.items())
        out << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    return out.str();
}

} // namespace propg_cli
