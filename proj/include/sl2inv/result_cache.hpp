#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace sl2inv {

// JSON results on disk, one file per key named by a 64-bit FNV-1a hash of
// the key.  The full key is stored alongside the value and checked on load.
// Writes go to a temporary file in the same directory and are renamed into place.
class ResultCache {
public:
    // A disabled cache never reads or writes.
    ResultCache() = default;
    explicit ResultCache(std::filesystem::path dir);

    // SL2INV_CACHE_DIR, else $XDG_CACHE_HOME/sl2inv, else $HOME/.cache/sl2inv.
    static std::filesystem::path default_dir();

    bool enabled() const noexcept { return !dir_.empty(); }
    const std::filesystem::path& dir() const noexcept { return dir_; }

    std::optional<nlohmann::json> load(const std::string& key) const;
    void store(const std::string& key, const nlohmann::json& value) const;

    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

std::uint64_t fnv1a64(const std::string& data);

}  // namespace sl2inv
