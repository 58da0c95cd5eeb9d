#pragma once

#include <string>
#include <vector>

#include "tasksets/bits.hpp"
#include "tasksets/registry.hpp"
#include "tasksets/telemetry.hpp"

namespace tasksets {

struct EvalOptions {
    // The fight completion condition counts a kill credit as well as dealt
    // damage. Flip off to require dealt damage only.
    bool fight_counts_kill_credit = true;
};

// Per-tick affordance/completion flags for one (game, player), one bit row
// per registered task-set in registry order, plus the ego's alive row.
struct MaskSeries {
    int ticks = 0;
    std::vector<Bits> afford;
    std::vector<Bits> complete;
    Bits ego_alive;
};

// Evaluates every registered task-set for one player over a full trajectory.
// Affordances additionally require the ego to be alive; completions are the
// raw per-tick conditions. Throws UnknownPlayer.
MaskSeries evaluate(const Trajectory& t, const std::string& player_id, const Registry& registry,
                    const EvalOptions& opts = {});

// All rostered players of one game, roster order.
std::vector<MaskSeries> evaluate_all(const Trajectory& t, const Registry& registry,
                                     const EvalOptions& opts = {});

// OpenMP kernel: one mask series per (game, player) across a batch of games,
// out[i][slot]. `jobs` bounds the worker count; results are identical for
// any value of it.
std::vector<std::vector<MaskSeries>> evaluate_games(const std::vector<Trajectory>& games,
                                                    const Registry& registry,
                                                    const EvalOptions& opts = {}, int jobs = 0);

} // namespace tasksets
