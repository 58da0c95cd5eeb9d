#include "tasksets/evaluate.hpp"

#include <omp.h>

#include "engine_detail.hpp"
#include "tasksets/errors.hpp"

namespace tasksets {

namespace {

constexpr double kNear2 = 2100.0 * 2100.0;
constexpr double kFlee2 = 3500.0 * 3500.0;
constexpr double kTeam2 = 3500.0 * 3500.0;
constexpr double kRegroup2 = 2100.0 * 2100.0;
constexpr double kHealthSplit = 0.5;

// Row order must match builtin_registry().
enum Row {
    kFf1Fight = 0,
    kFf1Flight,
    kFf2Fight,
    kFf2Flight,
    kFf3Fight,
    kFf3Flight,
    kFf4Fight,
    kFf4Flight,
    kEe1Exploit,
    kEe1Explore,
    kEe2Exploit,
    kEe2Explore,
    kEe3Exploit,
    kEe3Explore,
    kSmSolo,
    kSmRegroup,
    kSmDiad,
    kSmMulti,
    kRowCount,
};

void check_registry(const Registry& registry) {
    if (registry.size() != kRowCount)
        throw Error("evaluate requires the built-in 18 task-set registry");
}

void eval_tick(const detail::TickFacts& f, const EvalOptions& opts, int tick, MaskSeries& out) {
    const bool near_enemy = f.has_enemy && f.enemy_d2 < kNear2;
    const bool fight_done =
        f.events.dealt_damage || (opts.fight_counts_kill_credit && f.events.kill_credit);
    const bool flight_done = f.has_enemy && f.enemy_motion.away && f.enemy_d2 < kFlee2;

    bool afford[kRowCount];
    bool complete[kRowCount];

    const bool ff1 = near_enemy && f.enemy_health > kHealthSplit && f.enemy_motion.toward;
    const bool ff2 = near_enemy && f.enemy_health < kHealthSplit;
    const bool ff3 = near_enemy && f.enemy_health > f.health && f.events.took_damage;
    const bool ff4 = near_enemy && f.enemy_health < f.health && f.events.took_damage;
    afford[kFf1Fight] = afford[kFf1Flight] = ff1;
    afford[kFf2Fight] = afford[kFf2Flight] = ff2;
    afford[kFf3Fight] = afford[kFf3Flight] = ff3;
    afford[kFf4Fight] = afford[kFf4Flight] = ff4;
    complete[kFf1Fight] = complete[kFf2Fight] = complete[kFf3Fight] = complete[kFf4Fight] =
        fight_done;
    complete[kFf1Flight] = complete[kFf2Flight] = complete[kFf3Flight] = complete[kFf4Flight] =
        flight_done;

    // Being far from "all" of an empty set of targets holds vacuously.
    const bool ee1 = f.has_cluster && f.cluster_d2 > kNear2;
    const bool ee2 = f.seeds > 0 && (!f.has_active_platform || f.active_d2 > kNear2);
    const bool ee3 = f.seeds > 0 && (!f.has_inactive_platform || f.inactive_d2 > kNear2);
    afford[kEe1Exploit] = afford[kEe1Explore] = ee1;
    afford[kEe2Exploit] = afford[kEe2Explore] = ee2;
    afford[kEe3Exploit] = afford[kEe3Explore] = ee3;
    complete[kEe1Exploit] = f.has_cluster && f.cluster_motion.toward;
    complete[kEe1Explore] = f.cluster_motion.away;
    complete[kEe2Exploit] = f.seeds > 0 && f.active_motion.toward;
    complete[kEe2Explore] = f.active_motion.away;
    complete[kEe3Exploit] = f.seeds > 0 && f.inactive_motion.toward;
    complete[kEe3Explore] = f.inactive_motion.away;

    const bool sm = !f.has_teammate || f.teammate_d2 >= kTeam2;
    afford[kSmSolo] = afford[kSmRegroup] = afford[kSmDiad] = afford[kSmMulti] = sm;
    complete[kSmSolo] = !f.has_teammate || f.teammate_d2 > kRegroup2;
    complete[kSmRegroup] = f.has_teammate && f.teammate_d2 < kRegroup2;
    complete[kSmDiad] = f.teammates_within_regroup == 1;
    complete[kSmMulti] = f.teammates_within_regroup > 1;

    for (int r = 0; r < kRowCount; ++r) {
        if (afford[r] && f.alive) out.afford[r].set(tick);
        if (complete[r]) out.complete[r].set(tick);
    }
    if (f.alive) out.ego_alive.set(tick);
}

} // namespace

MaskSeries evaluate(const Trajectory& t, const std::string& player_id, const Registry& registry,
                    const EvalOptions& opts) {
    check_registry(registry);
    detail::FrameCursor cursor(t);
    int ego_slot = cursor.slot_of(player_id);

    MaskSeries out;
    out.ticks = static_cast<int>(t.frames.size());
    out.afford.assign(kRowCount, Bits(out.ticks));
    out.complete.assign(kRowCount, Bits(out.ticks));
    out.ego_alive = Bits(out.ticks);

    std::array<const PlayerState*, detail::kPlayers> by_slot{};
    for (int tick = 0; tick < out.ticks; ++tick) {
        const GameFrame& frame = t.frames[tick];
        cursor.resolve(frame, by_slot);
        detail::TickFacts facts = detail::compute_tick_facts(cursor, frame, by_slot, ego_slot);
        eval_tick(facts, opts, tick, out);
    }
    return out;
}

std::vector<MaskSeries> evaluate_all(const Trajectory& t, const Registry& registry,
                                     const EvalOptions& opts) {
    check_registry(registry);
    detail::FrameCursor cursor(t);
    const int slots = cursor.slots();
    const int ticks = static_cast<int>(t.frames.size());

    std::vector<MaskSeries> out(slots);
    for (MaskSeries& m : out) {
        m.ticks = ticks;
        m.afford.assign(kRowCount, Bits(ticks));
        m.complete.assign(kRowCount, Bits(ticks));
        m.ego_alive = Bits(ticks);
    }

    // One frame resolution serves all eight egos.
    std::array<const PlayerState*, detail::kPlayers> by_slot{};
    for (int tick = 0; tick < ticks; ++tick) {
        const GameFrame& frame = t.frames[tick];
        cursor.resolve(frame, by_slot);
        for (int ego = 0; ego < slots; ++ego) {
            detail::TickFacts facts = detail::compute_tick_facts(cursor, frame, by_slot, ego);
            eval_tick(facts, opts, tick, out[ego]);
        }
    }
    return out;
}

std::vector<std::vector<MaskSeries>> evaluate_games(const std::vector<Trajectory>& games,
                                                    const Registry& registry,
                                                    const EvalOptions& opts, int jobs) {
    check_registry(registry);
    std::vector<std::vector<MaskSeries>> out(games.size());
    if (jobs <= 0) jobs = omp_get_max_threads();
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (size_t i = 0; i < games.size(); ++i) {
        try {
            out[i] = evaluate_all(games[i], registry, opts);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

} // namespace tasksets
