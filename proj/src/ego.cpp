#include "tasksets/ego.hpp"

#include "engine_detail.hpp"
#include "tasksets/errors.hpp"

namespace tasksets {

EgoFeatures compute_ego_features(const Trajectory& t, const std::string& player_id, long tick) {
    detail::FrameCursor cursor(t);
    int ego_slot = cursor.slot_of(player_id);
    if (tick < 0 || tick >= static_cast<long>(t.frames.size())) throw TickOutOfRange(tick);

    const GameFrame& frame = t.frames[tick];
    std::array<const PlayerState*, detail::kPlayers> by_slot{};
    cursor.resolve(frame, by_slot);
    detail::TickFacts f = detail::compute_tick_facts(cursor, frame, by_slot, ego_slot);

    EgoFeatures out;
    out.alive = f.alive;
    out.health_fraction = f.health;
    out.seeds_carried = f.seeds;
    out.events = f.events;

    if (f.has_enemy)
        out.nearest_enemy = NearestEnemy{cursor.slot_id(f.enemy_slot), f.enemy_dist, f.enemy_health};
    if (f.has_teammate)
        out.nearest_teammate = NearestEntity{cursor.slot_id(f.teammate_slot), f.teammate_dist};
    if (f.has_cluster)
        out.nearest_seed_cluster = NearestEntity{frame.seed_clusters[f.cluster_index].cluster_id,
                                                 std::sqrt(f.cluster_d2)};
    if (f.has_active_platform)
        out.nearest_active_platform = NearestEntity{frame.platforms[f.active_index].platform_id,
                                                    std::sqrt(f.active_d2)};
    if (f.has_inactive_platform)
        out.nearest_inactive_platform = NearestEntity{
            frame.platforms[f.inactive_index].platform_id, std::sqrt(f.inactive_d2)};

    out.moving_toward_nearest_enemy = f.enemy_motion.toward;
    out.moving_away_from_nearest_enemy = f.enemy_motion.away;
    out.moving_toward_nearest_seed_cluster = f.cluster_motion.toward;
    out.moving_away_from_nearest_seed_cluster = f.cluster_motion.away;
    out.moving_toward_nearest_active_platform = f.active_motion.toward;
    out.moving_away_from_nearest_active_platform = f.active_motion.away;
    out.moving_toward_nearest_inactive_platform = f.inactive_motion.toward;
    out.moving_away_from_nearest_inactive_platform = f.inactive_motion.away;

    out.teammate_distances.assign(f.teammate_dists.begin(),
                                  f.teammate_dists.begin() + f.teammate_count);
    return out;
}

} // namespace tasksets
