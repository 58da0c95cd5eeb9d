#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "tasksets/evaluate.hpp"
#include "tasksets/features.hpp"
#include "tasksets/simulator.hpp"

namespace tasksets {

// One analyzed (player, character): mask series per game plus the score
// average used for reward coloring and group-time tallies at the configured
// radius.
struct EvaluatedPlayer {
    std::string player_id;
    std::string character_name;
    CharacterClass character_class = CharacterClass::Damage;
    std::vector<MaskSeries> game_masks;
    double mean_score = 0.0;
    // Alive ticks split by nearest-teammate distance against
    // PopulationOptions::group_time_radius (strict on both sides, so a tick
    // exactly on the radius counts as neither).
    long alive_ticks = 0;
    long solo_time_ticks = 0;
    long multi_time_ticks = 0;

    std::vector<const MaskSeries*> mask_ptrs() const {
        std::vector<const MaskSeries*> out;
        out.reserve(game_masks.size());
        for (const MaskSeries& m : game_masks) out.push_back(&m);
        return out;
    }
};

struct PopulationOptions {
    int min_games = kDefaultMinGames;
    // Empty matches everyone; otherwise matches character_name, falling back
    // to the class name (damage/support/tank).
    std::string character_filter;
    int jobs = 0;
    EvalOptions eval;
    // Radius for the solo/multi time tallies; the regroup radius by default.
    double group_time_radius = 2100.0;
};

// Players with at least min_games games, grouped by (player_id, character),
// sorted by player id then character. Game order inside a player is sorted
// by game id, so results do not depend on input order.
//
// File-based: reads every *.jsonl under dir (two passes: metas for grouping,
// then full parses for qualified players only). Throws IoError when the
// directory is missing or holds no trajectory files.
std::vector<EvaluatedPlayer> evaluate_directory(const std::string& dir,
                                                const Registry& registry,
                                                const PopulationOptions& opts);

// In-memory: simulates each config and evaluates qualified players without
// keeping trajectories around.
std::vector<EvaluatedPlayer> evaluate_simulated(const std::vector<SimConfig>& configs,
                                                const Registry& registry,
                                                const PopulationOptions& opts);

// From already-parsed trajectories.
std::vector<EvaluatedPlayer> evaluate_trajectories(const std::vector<Trajectory>& games,
                                                   const Registry& registry,
                                                   const PopulationOptions& opts);

// Meta records of every trajectory file in a directory, sorted by filename.
std::vector<GameMeta> scan_directory_metas(const std::string& dir, int jobs = 0);

struct ThemeAnalysis {
    std::vector<PlayerFeatureVector> features; // aligned with players
    std::vector<double> mean_scores;
    std::vector<std::string> skipped;       // player ids with no affordances at all
    std::vector<std::string> skip_reasons;
};

// Feature vectors for every evaluated player; players whose pairs are all
// empty land in `skipped` instead of failing the run.
ThemeAnalysis analyze_theme(const std::vector<EvaluatedPlayer>& players,
                            const Registry& registry, Theme theme,
                            int horizon = kDefaultHorizon, int min_games = kDefaultMinGames,
                            bool average_per_game = false);

// Trajectory files named <game_id>.jsonl; returns the file names written.
std::vector<std::string> write_population_files(const std::vector<SimConfig>& configs,
                                                const std::string& out_dir, int jobs);

} // namespace tasksets
