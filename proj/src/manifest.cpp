#include "tasksets/manifest.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "tasksets/errors.hpp"

namespace tasksets {

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string fnv1a64_hex(const std::string& bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return fnv1a64_hex(buf.str());
}

void write_manifest(const std::string& dir, const RunManifest& manifest) {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    char stamp[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(stamp, sizeof(stamp), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);

    nlohmann::json doc = {
        {"tool_version", kToolVersion},
        {"command", manifest.command},
        {"config", manifest.config},
        {"inputs", manifest.input_digests},
        {"master_seed", manifest.master_seed},
        {"registry_hash", manifest.registry_hash},
        {"timestamp", stamp},
    };
    std::ofstream out(dir + "/manifest.json", std::ios::binary);
    if (!out) throw IoError("cannot write manifest in " + dir);
    out << doc.dump(2) << "\n";
}

} // namespace tasksets
