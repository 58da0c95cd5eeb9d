#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tasksets/telemetry.hpp"

namespace tasksets {

struct NearestEnemy {
    std::string player_id;
    double distance = 0.0;
    double health_fraction = 0.0;
};

struct NearestEntity {
    std::string id;
    double distance = 0.0;
};

// Per-tick view of the world from one player's perspective. Nearest-* fields
// consider live entities only (visible clusters, platforms by active flag)
// and are absent when no candidate exists. Ties go to the lowest entity id.
//
// Motion flags use the radial-speed rule: the ego is moving toward a target
// when the closing speed along the ego->target direction exceeds 1 unit/tick,
// and moving away when the separating speed exceeds it. The two flags for one
// target are never both set.
struct EgoFeatures {
    bool alive = false;
    double health_fraction = 0.0;
    int seeds_carried = 0;
    EventFlags events;

    std::optional<NearestEnemy> nearest_enemy;
    std::optional<NearestEntity> nearest_teammate;
    std::optional<NearestEntity> nearest_seed_cluster;
    std::optional<NearestEntity> nearest_active_platform;
    std::optional<NearestEntity> nearest_inactive_platform;

    bool moving_toward_nearest_enemy = false;
    bool moving_away_from_nearest_enemy = false;
    bool moving_toward_nearest_seed_cluster = false;
    bool moving_away_from_nearest_seed_cluster = false;
    bool moving_toward_nearest_active_platform = false;
    bool moving_away_from_nearest_active_platform = false;
    bool moving_toward_nearest_inactive_platform = false;
    bool moving_away_from_nearest_inactive_platform = false;

    // Distances to live teammates, unordered.
    std::vector<double> teammate_distances;

    int teammates_within(double r) const {
        int n = 0;
        for (double d : teammate_distances)
            if (d < r) ++n;
        return n;
    }
};

// Dead-band for the radial-speed motion rule, in units/tick.
inline constexpr double kMotionEpsilon = 1.0;

// Throws UnknownPlayer / TickOutOfRange.
EgoFeatures compute_ego_features(const Trajectory& t, const std::string& player_id, long tick);

} // namespace tasksets
