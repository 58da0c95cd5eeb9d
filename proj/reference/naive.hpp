#pragma once

// Serial reference implementation of the 18 built-in task-set predicates and
// the completion-curve procedure. Written as straight per-tick scans over the
// trajectory with its own thresholds and math, independent of the engine in
// src/. Tests and the benchmark compare the two; they must match exactly.

#include <string>
#include <vector>

#include "tasksets/telemetry.hpp"

namespace tasksets::naive {

// Fixed task-set order, same ids the engine registers.
const std::vector<std::string>& taskset_ids();

struct BoolMasks {
    int ticks = 0;
    // [taskset][tick], taskset order per taskset_ids()
    std::vector<std::vector<bool>> afford;
    std::vector<std::vector<bool>> complete;
    std::vector<bool> alive;
};

BoolMasks eval_masks(const Trajectory& t, const std::string& player_id,
                     bool fight_counts_kill_credit = true);

struct ScanCurve {
    std::vector<long> counts; // index = offset, 0..horizon
    long denominator = 0;
};

// Direct O(ticks x horizon) scan of the completion-curve procedure, pooled
// over a collection of games. Returns one curve per requested row, in order.
std::vector<ScanCurve> curve_scan(const std::vector<const BoolMasks*>& games,
                                  const std::vector<int>& pair_rows, int horizon);

} // namespace tasksets::naive
