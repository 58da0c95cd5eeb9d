#pragma once

// Internal per-tick feature computation shared by compute_ego_features and
// the mask evaluator. Not installed; the serial reference implementation in
// reference/ must not include this.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "tasksets/errors.hpp"
#include "tasksets/telemetry.hpp"

namespace tasksets::detail {

inline constexpr int kPlayers = 8;

struct MotionFlags {
    bool toward = false;
    bool away = false;
};

// Radial-speed rule with a 1 unit/tick dead-band. `dist` must be the
// std::sqrt of dx*dx + dy*dy; keeping one expression here and in the
// reference implementation makes flag comparisons exact.
inline MotionFlags motion_flags(const PlayerState& ego, double dx, double dy, double dist) {
    MotionFlags m;
    if (dist <= 0.0) return m;
    double approach = (ego.velocity.x * dx + ego.velocity.y * dy) / dist;
    m.toward = approach > 1.0;
    m.away = approach < -1.0;
    return m;
}

struct TickFacts {
    bool alive = false;
    double health = 0.0;
    int seeds = 0;
    EventFlags events;

    bool has_enemy = false;
    int enemy_slot = -1;
    double enemy_dist = 0.0;
    double enemy_d2 = 0.0;
    double enemy_health = 0.0;
    MotionFlags enemy_motion;

    bool has_teammate = false;
    int teammate_slot = -1;
    double teammate_dist = 0.0;
    double teammate_d2 = 0.0;
    std::array<double, kPlayers> teammate_dists{}; // live teammates only
    int teammate_count = 0;
    int teammates_within_regroup = 0; // strict d < 2100

    bool has_cluster = false;
    int cluster_index = -1;
    double cluster_d2 = 0.0;
    MotionFlags cluster_motion;

    bool has_active_platform = false;
    int active_index = -1;
    double active_d2 = 0.0;
    MotionFlags active_motion;

    bool has_inactive_platform = false;
    int inactive_index = -1;
    double inactive_d2 = 0.0;
    MotionFlags inactive_motion;
};

class FrameCursor {
public:
    explicit FrameCursor(const Trajectory& t) : traj_(t) {
        slot_ids_.reserve(t.meta.character_roster.size());
        teams_.reserve(t.meta.character_roster.size());
        for (const auto& [id, entry] : t.meta.character_roster) {
            slot_ids_.push_back(id);
            teams_.push_back(entry.team);
        }
    }

    int slots() const { return static_cast<int>(slot_ids_.size()); }
    Team team(int slot) const { return teams_[slot]; }
    const std::string& slot_id(int slot) const { return slot_ids_[slot]; }

    int slot_of(const std::string& player_id) const {
        for (int i = 0; i < slots(); ++i)
            if (slot_ids_[i] == player_id) return i;
        throw UnknownPlayer(player_id);
    }

    // Players in roster order. Parsed and simulated trajectories are already
    // ordered; anything else gets a per-frame lookup.
    void resolve(const GameFrame& f, std::array<const PlayerState*, kPlayers>& by_slot) const {
        if (static_cast<int>(f.players.size()) != slots())
            throw Error("frame does not contain every rostered player");
        bool ordered = true;
        for (int i = 0; i < slots(); ++i) {
            if (f.players[i].player_id != slot_ids_[i]) {
                ordered = false;
                break;
            }
        }
        if (ordered) {
            for (int i = 0; i < slots(); ++i) by_slot[i] = &f.players[i];
            return;
        }
        for (int i = 0; i < slots(); ++i) {
            by_slot[i] = nullptr;
            for (const PlayerState& p : f.players) {
                if (p.player_id == slot_ids_[i]) {
                    by_slot[i] = &p;
                    break;
                }
            }
            if (!by_slot[i]) throw Error("frame missing rostered player " + slot_ids_[i]);
        }
    }

private:
    const Trajectory& traj_;
    std::vector<std::string> slot_ids_;
    std::vector<Team> teams_;
};

inline TickFacts compute_tick_facts(const FrameCursor& cursor, const GameFrame& frame,
                                    const std::array<const PlayerState*, kPlayers>& by_slot,
                                    int ego_slot) {
    TickFacts facts;
    const PlayerState& ego = *by_slot[ego_slot];
    facts.alive = ego.alive;
    facts.health = ego.health_fraction;
    facts.seeds = ego.seeds_carried;
    facts.events = ego.events;

    const Team ego_team = cursor.team(ego_slot);

    for (int s = 0; s < cursor.slots(); ++s) {
        if (s == ego_slot) continue;
        const PlayerState& other = *by_slot[s];
        if (!other.alive) continue;
        double dx = other.position.x - ego.position.x;
        double dy = other.position.y - ego.position.y;
        double d2 = dx * dx + dy * dy;
        if (cursor.team(s) == ego_team) {
            double d = std::sqrt(d2);
            facts.teammate_dists[facts.teammate_count++] = d;
            if (!facts.has_teammate || d2 < facts.teammate_d2) {
                facts.has_teammate = true;
                facts.teammate_slot = s;
                facts.teammate_d2 = d2;
                facts.teammate_dist = d;
            }
            if (d2 < 2100.0 * 2100.0) ++facts.teammates_within_regroup;
        } else {
            if (!facts.has_enemy || d2 < facts.enemy_d2) {
                facts.has_enemy = true;
                facts.enemy_slot = s;
                facts.enemy_d2 = d2;
                facts.enemy_health = other.health_fraction;
            }
        }
    }
    if (facts.has_enemy) {
        const PlayerState& enemy = *by_slot[facts.enemy_slot];
        double dx = enemy.position.x - ego.position.x;
        double dy = enemy.position.y - ego.position.y;
        facts.enemy_dist = std::sqrt(facts.enemy_d2);
        facts.enemy_motion = motion_flags(ego, dx, dy, facts.enemy_dist);
    }

    for (size_t i = 0; i < frame.seed_clusters.size(); ++i) {
        const SeedCluster& c = frame.seed_clusters[i];
        if (!c.visible) continue;
        double dx = c.position.x - ego.position.x;
        double dy = c.position.y - ego.position.y;
        double d2 = dx * dx + dy * dy;
        if (!facts.has_cluster || d2 < facts.cluster_d2) {
            facts.has_cluster = true;
            facts.cluster_index = static_cast<int>(i);
            facts.cluster_d2 = d2;
        }
    }
    if (facts.has_cluster) {
        const SeedCluster& c = frame.seed_clusters[facts.cluster_index];
        double dx = c.position.x - ego.position.x;
        double dy = c.position.y - ego.position.y;
        facts.cluster_motion = motion_flags(ego, dx, dy, std::sqrt(facts.cluster_d2));
    }

    for (size_t i = 0; i < frame.platforms.size(); ++i) {
        const Platform& p = frame.platforms[i];
        double dx = p.position.x - ego.position.x;
        double dy = p.position.y - ego.position.y;
        double d2 = dx * dx + dy * dy;
        if (p.active) {
            if (!facts.has_active_platform || d2 < facts.active_d2) {
                facts.has_active_platform = true;
                facts.active_index = static_cast<int>(i);
                facts.active_d2 = d2;
            }
        } else {
            if (!facts.has_inactive_platform || d2 < facts.inactive_d2) {
                facts.has_inactive_platform = true;
                facts.inactive_index = static_cast<int>(i);
                facts.inactive_d2 = d2;
            }
        }
    }
    if (facts.has_active_platform) {
        const Platform& p = frame.platforms[facts.active_index];
        double dx = p.position.x - ego.position.x;
        double dy = p.position.y - ego.position.y;
        facts.active_motion = motion_flags(ego, dx, dy, std::sqrt(facts.active_d2));
    }
    if (facts.has_inactive_platform) {
        const Platform& p = frame.platforms[facts.inactive_index];
        double dx = p.position.x - ego.position.x;
        double dy = p.position.y - ego.position.y;
        facts.inactive_motion = motion_flags(ego, dx, dy, std::sqrt(facts.inactive_d2));
    }
    return facts;
}

} // namespace tasksets::detail
