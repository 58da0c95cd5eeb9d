#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace tasksets {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a, used for input digests and the registry hash. Not cryptographic.
uint64_t fnv1a64(const std::string& bytes);
std::string fnv1a64_hex(const std::string& bytes);
std::string file_digest(const std::string& path); // throws IoError

struct RunManifest {
    std::string command;
    std::map<std::string, std::string> config; // flag snapshot
    std::map<std::string, std::string> input_digests;
    uint64_t master_seed = 0;
    std::string registry_hash;
};

// Writes <dir>/manifest.json; adds tool version and a UTC timestamp.
void write_manifest(const std::string& dir, const RunManifest& manifest);

} // namespace tasksets
