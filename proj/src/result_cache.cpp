#include "sl2inv/result_cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>
#include <unistd.h>

namespace sl2inv {

std::uint64_t fnv1a64(const std::string& data) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path ResultCache::default_dir() {
    if (const char* env = std::getenv("SL2INV_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "sl2inv";
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "sl2inv";
    return std::filesystem::temp_directory_path() / "sl2inv-cache";
}

std::filesystem::path ResultCache::path_for(const std::string& key) const {
    char name[32];
    std::snprintf(name, sizeof name, "%016llx.json", static_cast<unsigned long long>(fnv1a64(key)));
    return dir_ / name;
}

std::optional<nlohmann::json> ResultCache::load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    try {
        nlohmann::json entry = nlohmann::json::parse(in);
        if (entry.value("key", "") != key) return std::nullopt;
        return entry.at("value");
    } catch (const nlohmann::json::exception&) {
        return std::nullopt;  // unreadable entries are treated as misses
    }
}

void ResultCache::store(const std::string& key, const nlohmann::json& value) const {
    if (!enabled()) return;
    static std::atomic<unsigned> counter{0};
    std::filesystem::create_directories(dir_);
    const std::filesystem::path target = path_for(key);
    std::ostringstream suffix;
    suffix << ".tmp." << ::getpid() << "." << std::this_thread::get_id() << "." << counter++;
    const std::filesystem::path tmp = target.string() + suffix.str();
    {
        std::ofstream out(tmp);
        out << nlohmann::json{{"key", key}, {"value", value}}.dump();
        if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    }
    std::filesystem::rename(tmp, target);
}

}  // namespace sl2inv
