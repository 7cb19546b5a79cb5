#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace gridplans {

// Directory of JSON records keyed by (operation, parameters). Values are
// stored as exact decimal strings by callers; a version tag guards against
// stale formats, and parameter echo guards against key collisions.
class ResultCache {
public:
    static constexpr const char* kVersion = "1";

    explicit ResultCache(std::filesystem::path directory);

    const std::filesystem::path& directory() const { return directory_; }

    std::optional<nlohmann::json> lookup(const std::string& operation,
                                         const nlohmann::json& params) const;

    void store(const std::string& operation, const nlohmann::json& params,
               const nlohmann::json& result, double wall_ms) const;

private:
    std::filesystem::path record_path(const std::string& operation,
                                      const nlohmann::json& params) const;

    std::filesystem::path directory_;
};

} // namespace gridplans
