#pragma once

#include <map>
#include <string>
#include <vector>

#include "tasksets/evaluate.hpp"
#include "tasksets/registry.hpp"

namespace tasksets {

enum class OverlapKind { Affordance, Completion };
enum class OverlapMeasure { Jaccard, Conditional };

// Pairwise tick-overlap of task-set flags pooled over a population's games.
// Jaccard: |i and j| / |i or j|, 0 when the union is empty (so the diagonal
// is 1 exactly for task-sets that occur at least once). Conditional:
// P(j | i) = |i and j| / |i|, asymmetric.
struct OverlapMatrix {
    std::vector<std::string> taskset_ids;
    std::vector<std::vector<double>> values;
    OverlapKind kind = OverlapKind::Affordance;
    OverlapMeasure measure = OverlapMeasure::Jaccard;
    std::string population; // descriptor, e.g. character class
    int games = 0;
};

OverlapMatrix overlap_matrix(const std::vector<const MaskSeries*>& collection,
                             const Registry& registry, OverlapKind kind,
                             OverlapMeasure measure = OverlapMeasure::Jaccard,
                             const std::string& population = "");

// Elementwise m1 - m2; requires identical task-set ordering.
std::vector<std::vector<double>> matrix_difference(const OverlapMatrix& m1,
                                                   const OverlapMatrix& m2);

// Solo / diad / multi occupancy for one population of (game, player) series.
// Dead ticks are excluded from every denominator.
struct OccupancyRow {
    std::string label;
    int games = 0;
    long alive_ticks = 0;
    double afford_pct = 0.0;           // solo-multi group afforded, of alive ticks
    double solo_completion_pct = 0.0;  // of classified ticks, sums to 100 with the next two
    double diad_completion_pct = 0.0;
    double multi_completion_pct = 0.0;
    double solo_time_pct = 0.0;  // nearest teammate beyond the regroup radius
    double multi_time_pct = 0.0; // at least one teammate within it
};

OccupancyRow solo_multi_occupancy(const std::vector<const MaskSeries*>& collection,
                                  const Registry& registry, const std::string& label = "");

// Jaccard overlap of each solo-multi completion flag with the union of the
// four fight completions, one row per population.
std::map<std::string, double> fight_overlap(const std::vector<const MaskSeries*>& collection,
                                            const Registry& registry);

void write_overlap_csv(std::ostream& out, const OverlapMatrix& m);
void write_difference_csv(std::ostream& out, const std::vector<std::string>& ids,
                          const std::vector<std::vector<double>>& diff);

} // namespace tasksets
