#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace netrob::cli {

inline constexpr const char* kVersion = "0.1.0";

inline std::uint64_t fnv1a64(std::istream& in) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    char buf[1 << 14];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 0x100000001b3ULL;
        }
    }
    return h;
}

inline std::string file_digest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return "unreadable";
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(fnv1a64(in)));
    return std::string("fnv1a64:") + hex;
}

/// Provenance of one command run. Embedded in every JSON artifact.
class RunManifest {
public:
    RunManifest(std::string command, std::uint64_t seed)
        : command_(std::move(command)), seed_(seed), start_(std::chrono::steady_clock::now()) {}

    void flag(const std::string& name, const std::string& value) { flags_[name] = value; }
    void input(const std::filesystem::path& path) { inputs_.emplace_back(path.string(), file_digest(path)); }

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["command"] = command_;
        j["flags"] = flags_;
        j["seed"] = seed_;
        j["version"] = kVersion;
        j["inputs"] = nlohmann::json::array();
        for (const auto& [path, digest] : inputs_) j["inputs"].push_back({{"path", path}, {"digest", digest}});
        j["wall_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return j;
    }

private:
    std::string command_;
    std::uint64_t seed_;
    std::map<std::string, std::string> flags_;
    std::vector<std::pair<std::string, std::string>> inputs_;
    std::chrono::steady_clock::time_point start_;
};

}  // namespace netrob::cli
