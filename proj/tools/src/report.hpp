#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace propg_cli {

using Json = nlohmann::ordered_json;

enum class Format { kTable, kJson, kCsv };

std::optional<Format> parse_format(std::string_view s);

// One command invocation's result: a flat table plus parameter and extra
// scalar records.  All numeric values are carried as decimal strings so
// that the JSON form is unambiguous for 64-bit data and byte-identical
// across runs.
struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    Json extra = Json::object();

    std::string render(Format f) const;
    std::string to_json() const;
    std::string to_csv() const;
    std::string to_table() const;
};

std::string csv_quote(std::string_view field);

} // namespace propg_cli
