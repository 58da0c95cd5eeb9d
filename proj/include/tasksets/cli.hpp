#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace tasksets::cli {

// Exit codes: 0 success, 1 usage/config error, 2 data error.
int run(int argc, const char* const* argv);

struct SimulateArgs {
    std::string config_path;
    std::string out_dir;
    std::optional<uint64_t> seed; // overrides the config's master seed
    int jobs = 0;
};

struct AnalyzeArgs {
    std::string in_dir;
    std::string theme = "fight_flight"; // fight_flight | explore_exploit
    std::string character;              // empty matches everyone
    std::string out_dir;
    int horizon = 150;
    int min_games = 3;
    int jobs = 0;
    bool avg_per_game = false;
    bool no_kill_credit = false;
};

struct EmbedArgs {
    std::string features_csv;
    std::string method = "linear";
    uint64_t seed = 0;
    std::string out_dir;
};

struct CompareArgs {
    std::string features_a;
    std::string features_b;
    std::string out_dir;
    uint64_t seed = 0;
};

struct OverlapArgs {
    std::string in_dir;
    std::string out_dir;
    std::string measure = "jaccard"; // jaccard | conditional
    int min_games = 3;
    int jobs = 0;
};

struct OccupancyArgs {
    std::string in_dir;
    std::string out_dir;
    int min_games = 3;
    int jobs = 0;
    // Radius for the solo/multi time columns; the regroup radius by default.
    double group_radius = 2100.0;
};

struct SwitchArgs {
    std::string in_dir;
    std::string character_a;
    std::string character_b;
    std::string out_dir;
    int min_games = 3;
    int horizon = 150;
    int jobs = 0;
};

struct RegistryDumpArgs {
    std::string out_path; // empty writes to stdout
};

struct BenchArgs {
    int games = 270;
    int ticks = 400;
    int jobs = 8;
    std::string out_dir; // optional bench.csv location
};

void cmd_simulate(const SimulateArgs& args);
void cmd_analyze(const AnalyzeArgs& args);
void cmd_embed(const EmbedArgs& args);
void cmd_compare(const CompareArgs& args);
void cmd_overlap(const OverlapArgs& args);
void cmd_occupancy(const OccupancyArgs& args);
void cmd_switch(const SwitchArgs& args);
void cmd_registry_dump(const RegistryDumpArgs& args);
void cmd_bench(const BenchArgs& args);

} // namespace tasksets::cli
