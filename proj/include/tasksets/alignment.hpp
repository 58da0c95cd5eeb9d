#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tasksets/embed.hpp"
#include "tasksets/features.hpp"
#include "tasksets/stats.hpp"

namespace tasksets {

struct Spread {
    double std = 0.0;
    double iqr = 0.0;
};

// Per-axis (or per-feature-column) spread of a population. Throws
// TooFewPlayers for fewer than 2 rows.
std::vector<Spread> spread_stats(const std::vector<std::vector<double>>& rows);

struct FeatureComparison {
    std::string name;
    double ks_statistic = 0.0;
    double p_proxy = 1.0;
};

struct AxisComparison {
    Spread a;
    Spread b;
    double spread_ratio = 1.0; // std_a / std_b
};

struct AlignmentReport {
    int n_a = 0;
    int n_b = 0;
    std::vector<FeatureComparison> features;
    std::vector<AxisComparison> axes; // joint-embedding axes, 2 entries
    double mean_spread_ratio = 1.0;
    double significant_fraction = 0.0; // share of features with p_proxy < 0.05
};

// Joint linear embedding fit on the union of both populations so spreads are
// measured along shared axes. feature_names sizes must match row widths.
AlignmentReport compare_populations(const std::vector<std::vector<double>>& features_a,
                                    const std::vector<std::vector<double>>& features_b,
                                    const std::vector<std::string>& feature_names,
                                    uint64_t seed = 0);

std::string alignment_report_json(const AlignmentReport& report);

enum class Strategy { Fight, Flight };

// Fight iff the player's mean auc ratio strictly exceeds the population
// median of mean auc ratios; ties classify as Flight. The same rule serves
// explore-exploit, reading Fight as Exploit.
Strategy classify_strategy(double player_mean_ratio, const std::vector<double>& population_ratios);

struct SwitchAnalysis {
    int players_considered = 0; // with enough games on both characters
    int players_excluded = 0;   // failed the min-games filter on either
    int switched_to_fight = 0;
    int switched_to_flight = 0;
    int stayed_fight = 0;
    int stayed_flight = 0;
    double pct_switched_to_fight = 0.0;  // of switchers
    double pct_switched_to_flight = 0.0; // of switchers
    double pct_stayed_fight = 0.0;       // of stayers
    double pct_stayed_flight = 0.0;      // of stayers
};

// Transition tabulation. Both classification vectors are keyed by player
// order; classifications must come from classify_strategy against each
// character's own population.
SwitchAnalysis tabulate_switches(const std::vector<Strategy>& on_a,
                                 const std::vector<Strategy>& on_b, int players_excluded);

} // namespace tasksets
