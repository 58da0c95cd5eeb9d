#pragma once

#include <string>
#include <vector>

#include "tasksets/curves.hpp"
#include "tasksets/evaluate.hpp"
#include "tasksets/registry.hpp"

namespace tasksets {

inline constexpr int kDefaultMinGames = 3;
inline constexpr double kRatioEpsilon = 1e-6;

// Per pair: auc/max/argmax of the primary member (fight or exploit), the same
// for the secondary member (flight or explore), then the three primary /
// secondary ratios. 4 pairs x 9 = 36 values for fight-flight, 3 x 9 = 27 for
// explore-exploit.
struct PlayerFeatureVector {
    std::string player_id;
    std::string character_name;
    int games_used = 0;
    Theme theme = Theme::FightFlight;
    std::vector<double> values;
    // Pairs whose curves had no simultaneous affordance anywhere contribute
    // zeros and neutral ratios; the flag records which ones were real.
    std::vector<bool> pair_valid;

    // Mean auc ratio over valid pairs; 1 when none are valid.
    double mean_auc_ratio() const;
};

// Column names matching `values`, e.g. ff1_fight_auc .. ff4_argmax_ratio.
std::vector<std::string> feature_names(const Registry& registry, Theme theme);

// The 9-value block for one pair from the two member curves.
// ratio = (primary + eps) / (secondary + eps).
std::array<double, 9> pair_feature_block(const CurveStats& primary, const CurveStats& secondary);
// Same, from (auc, max, argmax) triples; used by the per-game averaging mode
// where averaged argmax is no longer an integer.
std::array<double, 9> pair_feature_block(const std::array<double, 3>& primary,
                                         const std::array<double, 3>& secondary);

// Assembles the vector from per-game mask series pooled per pair.
// Throws InsufficientGames when fewer than min_games series are given and
// NoAffordances when every pair of the theme is empty.
PlayerFeatureVector player_features(const std::vector<const MaskSeries*>& games,
                                    const Registry& registry, Theme theme,
                                    const std::string& player_id,
                                    const std::string& character_name,
                                    int min_games = kDefaultMinGames,
                                    int horizon = kDefaultHorizon);

// Per-game probability averaging instead of count pooling, kept as an
// alternative aggregation. Games where a pair has no affordance are skipped
// for that pair.
PlayerFeatureVector player_features_avg(const std::vector<const MaskSeries*>& games,
                                        const Registry& registry, Theme theme,
                                        const std::string& player_id,
                                        const std::string& character_name,
                                        int min_games = kDefaultMinGames,
                                        int horizon = kDefaultHorizon);

} // namespace tasksets
