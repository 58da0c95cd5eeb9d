#pragma once

#include <map>
#include <string>
#include <vector>

#include "tasksets/evaluate.hpp"
#include "tasksets/registry.hpp"

namespace tasksets {

inline constexpr int kDefaultHorizon = 150;

// Completion-probability-vs-offset series. counts[x] is the number of
// simultaneous-affordance ticks whose window contains a completion exactly x
// ticks later; denominator is the total number of simultaneous-affordance
// ticks pooled over the collection.
struct Curve {
    int horizon = 0;
    std::vector<long> counts;    // size horizon + 1, offsets 0..horizon
    long denominator = 0;
    std::vector<double> probabilities;
};

struct AffordanceWindow {
    std::string taskset_id;
    int start = 0;
    int end = 0; // exclusive: next affordance of this task-set, or trajectory end
    std::vector<int> completion_offsets;
};

struct CurveStats {
    double auc = 0.0;
    double max = 0.0;
    int argmax = 0;
};

// Ticks at which every listed task-set is afforded. Throws UnknownTaskSet.
std::vector<int> simultaneous_afford_ticks(const MaskSeries& masks, const Registry& registry,
                                           const std::vector<std::string>& taskset_ids);

// One window per affordance tick. afford_ticks must be sorted ticks at which
// the task-set is afforded; offset 0 is included when the completion holds at
// the affordance tick itself.
std::vector<AffordanceWindow> completion_windows(const MaskSeries& masks,
                                                 const Registry& registry,
                                                 const std::string& taskset_id,
                                                 const std::vector<int>& afford_ticks);

// Pooled completion curve per task-set of a pair/group: counts are summed
// over every (game, player) series in the collection and divided by the
// pooled denominator once. Throws NoAffordances when no simultaneous tick
// exists anywhere in the collection.
std::map<std::string, Curve> completion_curve(const std::vector<const MaskSeries*>& collection,
                                              const Registry& registry,
                                              const std::vector<std::string>& pair_ids,
                                              int horizon);

// Raw (count, denominator) accumulation without the final division; merge is
// plain integer addition, so pooling order cannot matter.
struct CurveCounts {
    int horizon = 0;
    std::vector<long> counts;
    long denominator = 0;
};

CurveCounts accumulate_curve(const MaskSeries& masks, const Registry& registry,
                             const std::string& taskset_id,
                             const std::vector<int>& simultaneous_ticks, int horizon);
void merge_counts(CurveCounts& into, const CurveCounts& from);
Curve finish_curve(const CurveCounts& counts);

CurveStats curve_stats(const Curve& curve);

// curves.csv rows: taskset_id, offset, count, denominator, probability.
void write_curve_csv_header(std::ostream& out, bool with_player_column);
void write_curve_csv_rows(std::ostream& out, const std::string& taskset_id, const Curve& curve,
                          const std::string& player_id = "");

} // namespace tasksets
