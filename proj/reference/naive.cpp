#include "reference/naive.hpp"

#include <cmath>

#include "tasksets/errors.hpp"

namespace tasksets::naive {

const std::vector<std::string>& taskset_ids() {
    static const std::vector<std::string> ids = {
        "Attack_Approach_Damage_Enemy_Health_Good",
        "Run_From_Enemy_In_Good_Health",
        "Attack_Approach_Damage_Enemy_Health_Poor",
        "Run_From_Enemy_In_Poor_Health",
        "Fight_Damage_Enemy_When_Attacked_Enemy_Health_Greater",
        "Run_When_Attacked_Enemy_Health_Greater",
        "Fight_Damage_Enemy_When_Attacked_Enemy_Health_Poorer",
        "Run_When_Attacked_Enemy_Health_Poorer",
        "Attempt_Direct_Pickup_Nearest_Seed_Cluster",
        "Explore_Away_From_Nearest_Seed_Cluster",
        "Attempt_Direct_Deposit_Nearest_Active_Platform",
        "Explore_Away_From_Nearest_Active_Platform_with_Seeds",
        "Attempt_Direct_Deposit_Nearest_Inactive_Platform",
        "Explore_Away_From_Nearest_Inactive_Platform_with_Seeds",
        "Continue_To_Play_Solo",
        "Regroup_With_Allies",
        "Regroup_With_Single_Ally",
        "Regroup_With_Multiple_Allies",
    };
    return ids;
}

namespace {

// 1 = toward, -1 = away, 0 = neither (dead-band 1 unit/tick).
int radial_motion(const PlayerState& ego, double tx, double ty) {
    double dx = tx - ego.position.x;
    double dy = ty - ego.position.y;
    double dist = std::sqrt(dx * dx + dy * dy);
    if (dist <= 0.0) return 0;
    double approach = (ego.velocity.x * dx + ego.velocity.y * dy) / dist;
    if (approach > 1.0) return 1;
    if (approach < -1.0) return -1;
    return 0;
}

double squared_distance(const PlayerState& a, double x, double y) {
    double dx = x - a.position.x;
    double dy = y - a.position.y;
    return dx * dx + dy * dy;
}

} // namespace

BoolMasks eval_masks(const Trajectory& t, const std::string& player_id,
                     bool fight_counts_kill_credit) {
    Team ego_team = Team::A;
    {
        auto it = t.meta.character_roster.find(player_id);
        if (it == t.meta.character_roster.end()) throw UnknownPlayer(player_id);
        ego_team = it->second.team;
    }

    const int n_sets = static_cast<int>(taskset_ids().size());
    BoolMasks out;
    out.ticks = static_cast<int>(t.frames.size());
    out.afford.assign(n_sets, std::vector<bool>(out.ticks, false));
    out.complete.assign(n_sets, std::vector<bool>(out.ticks, false));
    out.alive.assign(out.ticks, false);

    for (int tick = 0; tick < out.ticks; ++tick) {
        const GameFrame& frame = t.frames[tick];

        const PlayerState* ego = nullptr;
        for (const PlayerState& p : frame.players)
            if (p.player_id == player_id) ego = &p;
        if (!ego) throw UnknownPlayer(player_id);
        out.alive[tick] = ego->alive;

        // Nearest live enemy and teammate, lowest id on ties. Roster order is
        // id-sorted and frames follow it.
        const PlayerState* enemy = nullptr;
        double enemy_d2 = 0.0;
        const PlayerState* teammate = nullptr;
        double teammate_d2 = 0.0;
        int teammates_close = 0;
        for (const PlayerState& p : frame.players) {
            if (&p == ego || !p.alive) continue;
            Team p_team = t.meta.character_roster.at(p.player_id).team;
            double d2 = squared_distance(*ego, p.position.x, p.position.y);
            if (p_team == ego_team) {
                if (!teammate || d2 < teammate_d2) {
                    teammate = &p;
                    teammate_d2 = d2;
                }
                if (d2 < 2100.0 * 2100.0) ++teammates_close;
            } else {
                if (!enemy || d2 < enemy_d2) {
                    enemy = &p;
                    enemy_d2 = d2;
                }
            }
        }

        const SeedCluster* cluster = nullptr;
        double cluster_d2 = 0.0;
        for (const SeedCluster& c : frame.seed_clusters) {
            if (!c.visible) continue;
            double d2 = squared_distance(*ego, c.position.x, c.position.y);
            if (!cluster || d2 < cluster_d2) {
                cluster = &c;
                cluster_d2 = d2;
            }
        }

        const Platform* active = nullptr;
        double active_d2 = 0.0;
        const Platform* inactive = nullptr;
        double inactive_d2 = 0.0;
        for (const Platform& p : frame.platforms) {
            double d2 = squared_distance(*ego, p.position.x, p.position.y);
            if (p.active) {
                if (!active || d2 < active_d2) {
                    active = &p;
                    active_d2 = d2;
                }
            } else {
                if (!inactive || d2 < inactive_d2) {
                    inactive = &p;
                    inactive_d2 = d2;
                }
            }
        }

        int enemy_motion =
            enemy ? radial_motion(*ego, enemy->position.x, enemy->position.y) : 0;
        int cluster_motion =
            cluster ? radial_motion(*ego, cluster->position.x, cluster->position.y) : 0;
        int active_motion =
            active ? radial_motion(*ego, active->position.x, active->position.y) : 0;
        int inactive_motion =
            inactive ? radial_motion(*ego, inactive->position.x, inactive->position.y) : 0;

        bool enemy_near = enemy && enemy_d2 < 2100.0 * 2100.0;
        bool fight_done = ego->events.dealt_damage ||
                          (fight_counts_kill_credit && ego->events.kill_credit);
        bool flight_done = enemy && enemy_motion == -1 && enemy_d2 < 3500.0 * 3500.0;

        bool afford[18];
        bool complete[18];
        afford[0] = afford[1] =
            enemy_near && enemy->health_fraction > 0.5 && enemy_motion == 1;
        afford[2] = afford[3] = enemy_near && enemy->health_fraction < 0.5;
        afford[4] = afford[5] = enemy_near && enemy->health_fraction > ego->health_fraction &&
                                ego->events.took_damage;
        afford[6] = afford[7] = enemy_near && enemy->health_fraction < ego->health_fraction &&
                                ego->events.took_damage;
        complete[0] = complete[2] = complete[4] = complete[6] = fight_done;
        complete[1] = complete[3] = complete[5] = complete[7] = flight_done;

        afford[8] = afford[9] = cluster && cluster_d2 > 2100.0 * 2100.0;
        complete[8] = cluster && cluster_motion == 1;
        complete[9] = cluster_motion == -1;
        afford[10] = afford[11] =
            ego->seeds_carried > 0 && (!active || active_d2 > 2100.0 * 2100.0);
        complete[10] = ego->seeds_carried > 0 && active_motion == 1;
        complete[11] = active_motion == -1;
        afford[12] = afford[13] =
            ego->seeds_carried > 0 && (!inactive || inactive_d2 > 2100.0 * 2100.0);
        complete[12] = ego->seeds_carried > 0 && inactive_motion == 1;
        complete[13] = inactive_motion == -1;

        bool no_team_nearby = !teammate || teammate_d2 >= 3500.0 * 3500.0;
        afford[14] = afford[15] = afford[16] = afford[17] = no_team_nearby;
        complete[14] = !teammate || teammate_d2 > 2100.0 * 2100.0;
        complete[15] = teammate && teammate_d2 < 2100.0 * 2100.0;
        complete[16] = teammates_close == 1;
        complete[17] = teammates_close > 1;

        for (int s = 0; s < 18; ++s) {
            out.afford[s][tick] = afford[s] && ego->alive;
            out.complete[s][tick] = complete[s];
        }
    }
    return out;
}

std::vector<ScanCurve> curve_scan(const std::vector<const BoolMasks*>& games,
                                  const std::vector<int>& pair_rows, int horizon) {
    std::vector<ScanCurve> out(pair_rows.size());
    for (ScanCurve& c : out) c.counts.assign(horizon + 1, 0);

    for (const BoolMasks* game : games) {
        for (int t = 0; t < game->ticks; ++t) {
            bool all_afforded = true;
            for (int row : pair_rows)
                if (!game->afford[row][t]) all_afforded = false;
            if (!all_afforded) continue;

            for (size_t k = 0; k < pair_rows.size(); ++k) {
                int row = pair_rows[k];
                out[k].denominator += 1;
                for (int x = 0; x <= horizon; ++x) {
                    int tick = t + x;
                    if (tick >= game->ticks) break;
                    // The window closes at the next affordance of this task-set.
                    if (x > 0 && game->afford[row][tick]) break;
                    if (game->complete[row][tick]) out[k].counts[x] += 1;
                }
            }
        }
    }
    return out;
}

} // namespace tasksets::naive
