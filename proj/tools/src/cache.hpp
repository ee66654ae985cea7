#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace propg_cli {

// Versioned JSON cache under $PROPG_CACHE (fallback: the platform cache
// directory).  Writes are write-then-rename; entries whose schema field is
// missing or stale are ignored by load().
class Cache {
public:
    static constexpr int kSchema = 1;

    static std::filesystem::path directory();
    static std::optional<nlohmann::json> load(const std::string& name);
    static void store(const std::string& name, const nlohmann::json& value);

    struct Entry {
        std::string name;
        std::uintmax_t bytes;
        bool valid;
    };
    static std::vector<Entry> entries();
    static std::size_t clear();
};

} // namespace propg_cli
