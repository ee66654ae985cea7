#include "cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>

#include "propg/errors.hpp"

namespace propg_cli {

namespace fs = std::filesystem;

fs::path Cache::directory() {
    if (const char* env = std::getenv("PROPG_CACHE"); env && *env)
        return fs::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return fs::path(xdg) / "propg";
    if (const char* home = std::getenv("HOME"); home && *home)
        return fs::path(home) / ".cache" / "propg";
    return fs::path(".propg-cache");
}

std::optional<nlohmann::json> Cache::load(const std::string& name) {
    std::ifstream in(directory() / (name + ".json"));
    if (!in)
        return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        return std::nullopt;
    if (!j.contains("schema") || !j["schema"].is_number_integer() || j["schema"] != kSchema)
        return std::nullopt; // stale schema: ignore
    return j;
}

void Cache::store(const std::string& name, const nlohmann::json& value) {
    std::error_code ec;
    const fs::path dir = directory();
    fs::create_directories(dir, ec);
    if (ec)
        throw propg::Error("cannot create cache directory " + dir.string() + ": " + ec.message());
    const fs::path tmp = dir / (name + ".json.tmp");
    const fs::path target = dir / (name + ".json");
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out)
            throw propg::Error("cannot write cache file " + tmp.string());
        out << value.dump(2) << '\n';
        if (!out)
            throw propg::Error("short write to cache file " + tmp.string());
    }
    fs::rename(tmp, target, ec);
    if (ec)
        throw propg::Error("cannot finalize cache file " + target.string() + ": " + ec.message());
}

std::vector<Cache::Entry> Cache::entries() {
    std::vector<Entry> out;
    std::error_code ec;
    const fs::path dir = directory();
    if (!fs::exists(dir, ec))
        return out;
    for (const auto& item : fs::directory_iterator(dir, ec)) {
        if (!item.is_regular_file() || item.path().extension() != ".json")
            continue;
        const std::string name = item.path().stem().string();
        out.push_back({name, item.file_size(), load(name).has_value()});
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.name < b.name; });
    return out;
}

std::size_t Cache::clear() {
    std::size_t removed = 0;
    std::error_code ec;
    const fs::path dir = directory();
    if (!fs::exists(dir, ec))
        return removed;
    std::vector<fs::path> victims;
    for (const auto& item : fs::directory_iterator(dir, ec))
        if (item.is_regular_file() && item.path().extension() == ".json")
            victims.push_back(item.path());
    for (const auto& path : victims) {
        if (fs::remove(path, ec) && !ec)
            ++removed;
    }
    return removed;
}

} // namespace propg_cli
