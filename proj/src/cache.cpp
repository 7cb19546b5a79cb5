#include "gridplans/cache.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>

namespace gridplans {

namespace {

// Stable content hash for file names (std::hash is not pinned across builds).
std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001B3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace

ResultCache::ResultCache(std::filesystem::path directory) : directory_(std::move(directory)) {
    std::filesystem::create_directories(directory_);
}

std::filesystem::path ResultCache::record_path(const std::string& operation,
                                               const nlohmann::json& params) const {
    return directory_ / (operation + "-" + fnv1a_hex(params.dump()) + ".json");
}

std::optional<nlohmann::json> ResultCache::lookup(const std::string& operation,
                                                  const nlohmann::json& params) const {
    std::ifstream in(record_path(operation, params));
    if (!in) return std::nullopt;
    nlohmann::json record = nlohmann::json::parse(in, nullptr, false);
    if (record.is_discarded()) return std::nullopt;
    if (record.value("version", "") != kVersion) return std::nullopt;
    if (record.value("operation", "") != operation) return std::nullopt;
    if (record.value("params", nlohmann::json()) != params) return std::nullopt;
    if (!record.contains("result")) return std::nullopt;
    return record["result"];
}

void ResultCache::store(const std::string& operation, const nlohmann::json& params,
                        const nlohmann::json& result, double wall_ms) const {
    nlohmann::json record = {
        {"version", kVersion},
        {"operation", operation},
        {"params", params},
        {"result", result},
        {"wall_ms", wall_ms},
    };
    std::ofstream out(record_path(operation, params), std::ios::trunc);
    out << record.dump(2) << '\n';
}

} // namespace gridplans
