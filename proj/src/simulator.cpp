#include "tasksets/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "tasksets/errors.hpp"

namespace tasksets {

using nlohmann::json;

const std::map<std::string, CharacterSpec>& default_characters() {
    static const std::map<std::string, CharacterSpec> chars = {
        {"striker", {CharacterClass::Damage, 100.0, 12.0, 0.0, 46.0, 5}},
        {"raider", {CharacterClass::Damage, 95.0, 11.0, 0.0, 48.0, 5}},
        {"warden", {CharacterClass::Tank, 200.0, 6.0, 0.0, 40.0, 5}},
        {"mender", {CharacterClass::Support, 120.0, 5.0, 8.0, 44.0, 5}},
    };
    return chars;
}

void apply_default_arena(SimConfig& config) {
    constexpr double kPi = 3.14159265358979323846;
    // Rings scale with the map so the stock layout works at any extent;
    // at the default 8000 the clusters sit at 3500 and the platforms at 5200.
    if (config.clusters.empty()) {
        config.clusters.push_back({{0.0, 0.0}, 30});
        const double r = 0.4375 * config.map_half_extent;
        for (int k = 0; k < 5; ++k) {
            double a = (90.0 + 72.0 * k) * kPi / 180.0;
            config.clusters.push_back({{r * std::cos(a), r * std::sin(a)}, 30});
        }
    }
    if (config.platforms.empty()) {
        const double r = 0.65 * config.map_half_extent;
        for (int k = 0; k < 3; ++k) {
            double a = (90.0 + 120.0 * k) * kPi / 180.0;
            config.platforms.push_back({r * std::cos(a), r * std::sin(a)});
        }
    }
}

void validate_config(const SimConfig& config) {
    if (config.game_id.empty()) throw InvalidConfig("game_id", "must be non-empty");
    if (config.map_half_extent <= 3500.0)
        throw InvalidConfig("map_half_extent", "must exceed 3500 so flee behavior is observable");
    if (config.ticks < 1) throw InvalidConfig("ticks", "must be >= 1");
    if (config.tick_rate < 1) throw InvalidConfig("tick_rate", "must be >= 1");
    if (config.players.size() != 8) throw InvalidConfig("players", "exactly 8 players required");
    int team_a = 0;
    for (size_t i = 0; i < config.players.size(); ++i) {
        const PlayerSetup& p = config.players[i];
        std::string path = "players[" + std::to_string(i) + "]";
        if (p.player_id.empty()) throw InvalidConfig(path + ".player_id", "must be non-empty");
        if (p.team == Team::A) ++team_a;
        if (p.spec.move_speed <= 0) throw InvalidConfig(path + ".move_speed", "must be positive");
        if (p.spec.max_hp <= 0) throw InvalidConfig(path + ".max_hp", "must be positive");
        if (p.spec.carry_cap < 1) throw InvalidConfig(path + ".carry_cap", "must be >= 1");
        auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
        if (!in01(p.archetype.aggression) || !in01(p.archetype.exploration) ||
            !in01(p.archetype.sociality))
            throw InvalidConfig(path + ".archetype", "knobs must lie in [0, 1]");
    }
    if (team_a != 4) throw InvalidConfig("players", "4 players per team required");
    for (size_t i = 0; i < config.players.size(); ++i)
        for (size_t j = i + 1; j < config.players.size(); ++j)
            if (config.players[i].player_id == config.players[j].player_id)
                throw InvalidConfig("players", "duplicate player_id " +
                                                   config.players[i].player_id);
    if (config.phase_collection_ticks < 1)
        throw InvalidConfig("phase_collection_ticks", "must be >= 1");
    if (config.phase_deposit_ticks < 1)
        throw InvalidConfig("phase_deposit_ticks", "must be >= 1");
    if (config.engage_radius <= 0) throw InvalidConfig("engage_radius", "must be positive");
    if (config.interact_radius <= 0) throw InvalidConfig("interact_radius", "must be positive");
    if (config.respawn_delay < 1) throw InvalidConfig("respawn_delay", "must be >= 1");
    for (size_t i = 0; i < config.clusters.size(); ++i)
        if (config.clusters[i].seeds < 0)
            throw InvalidConfig("clusters[" + std::to_string(i) + "].seeds",
                                "must be non-negative");
}

Vec2 policy_velocity(Vec2 position, double move_speed, const ArchetypeParams& params,
                     const WorldView& view, Rng& rng) {
    // Arrived agents stand still instead of orbiting their destination;
    // first-order kinematics would otherwise overshoot every tick.
    constexpr double kArrive = 150.0;

    Vec2 dir{0.0, 0.0};
    if (view.nearest_enemy && view.nearest_enemy_dist < 2100.0) {
        Vec2 to_enemy = *view.nearest_enemy - position;
        if (rng.uniform() < params.aggression) {
            if (view.nearest_enemy_dist <= kArrive) return {0.0, 0.0};
            dir = to_enemy;
        } else {
            dir = Vec2{0, 0} - to_enemy;
        }
    } else {
        Vec2 target;
        if (view.carrying_seeds && view.phase_platform) {
            target = rng.uniform() < 1.0 - params.exploration ? *view.phase_platform
                                                              : view.waypoint;
        } else if (view.nearest_cluster) {
            target = rng.uniform() < 1.0 - params.exploration ? *view.nearest_cluster
                                                              : view.waypoint;
        } else {
            target = view.waypoint;
        }
        if (norm(target - position) <= kArrive) return {0.0, 0.0};
        dir = target - position;
    }

    Vec2 unit = normalized_or_zero(dir);
    if (unit == Vec2{0.0, 0.0}) unit = {1.0, 0.0};

    if (view.allied_centroid) {
        Vec2 ally_unit = normalized_or_zero(*view.allied_centroid - position);
        unit = unit * (1.0 - params.sociality) + ally_unit * params.sociality;
        unit = normalized_or_zero(unit);
    }
    return unit * move_speed;
}

PolicyDecision policy_step(Vec2 position, double move_speed, bool is_support,
                           const ArchetypeParams& params, const WorldView& view, Rng& rng) {
    PolicyDecision d;
    d.velocity = policy_velocity(position, move_speed, params, view, rng);
    d.heal_intent = is_support && view.hurt_ally_in_engage_range;
    d.attack_intent = view.enemy_in_engage_range && !d.heal_intent;
    return d;
}

namespace {

struct SimPlayer {
    Vec2 spawn;
    Vec2 pos;
    Vec2 recorded_vel;
    double hp = 0.0;
    int seeds = 0;
    double score = 0.0;
    bool alive = true;
    long death_tick = -1;
    Vec2 waypoint;
    bool has_waypoint = false;
    long waypoint_tick = 0;
    EventFlags events;
};

Phase phase_at(const SimConfig& cfg, long tick, long& deposit_cycle) {
    long cycle = cfg.phase_collection_ticks + cfg.phase_deposit_ticks;
    long in_cycle = tick % cycle;
    deposit_cycle = tick / cycle;
    return in_cycle < cfg.phase_collection_ticks ? Phase::Collection : Phase::Deposit;
}

} // namespace

Trajectory simulate(const SimConfig& input) {
    SimConfig cfg = input;
    apply_default_arena(cfg);
    validate_config(cfg);

    Rng rng(cfg.rng_seed);
    const double extent = cfg.map_half_extent;
    const size_t n = cfg.players.size();

    Trajectory traj;
    traj.meta.game_id = cfg.game_id;
    traj.meta.map_units_note = "distance thresholds assume raw game units";
    traj.meta.tick_rate = cfg.tick_rate;
    for (const PlayerSetup& p : cfg.players)
        traj.meta.character_roster[p.player_id] =
            RosterEntry{p.character_name, p.spec.character_class, p.team};

    // Spawn lines near the west/east edges, teammates spread along y.
    std::vector<SimPlayer> sim(n);
    std::vector<int> clusters_left(cfg.clusters.size());
    for (size_t c = 0; c < cfg.clusters.size(); ++c) clusters_left[c] = cfg.clusters[c].seeds;
    {
        int idx_a = 0, idx_b = 0;
        for (size_t i = 0; i < n; ++i) {
            const PlayerSetup& p = cfg.players[i];
            int lane = p.team == Team::A ? idx_a++ : idx_b++;
            double x = p.team == Team::A ? -(extent - 1200.0) : extent - 1200.0;
            double y = (lane - 1.5) * 2400.0;
            sim[i].spawn = p.spawn_override.value_or(Vec2{x, y});
            sim[i].pos = sim[i].spawn;
            sim[i].hp = p.spec.max_hp;
        }
    }

    std::vector<bool> platform_active(cfg.platforms.size(), false);

    auto record_frame = [&](long tick, Phase phase) {
        GameFrame f;
        f.tick = tick;
        f.phase = phase;
        // Roster order is id-sorted; emit players the same way.
        std::vector<size_t> order(n);
        for (size_t i = 0; i < n; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return cfg.players[a].player_id < cfg.players[b].player_id;
        });
        for (size_t k : order) {
            const PlayerSetup& setup = cfg.players[k];
            const SimPlayer& s = sim[k];
            PlayerState ps;
            ps.player_id = setup.player_id;
            ps.position = s.pos;
            ps.velocity = s.alive ? s.recorded_vel : Vec2{0.0, 0.0};
            ps.health_fraction = std::clamp(s.hp / setup.spec.max_hp, 0.0, 1.0);
            ps.seeds_carried = s.seeds;
            ps.score = s.score;
            ps.events = s.events;
            ps.alive = s.alive;
            f.players.push_back(std::move(ps));
        }
        for (size_t c = 0; c < cfg.clusters.size(); ++c) {
            SeedCluster sc;
            sc.cluster_id = "c" + std::to_string(c);
            sc.position = cfg.clusters[c].position;
            sc.seeds_remaining = clusters_left[c];
            sc.visible = clusters_left[c] > 0;
            f.seed_clusters.push_back(std::move(sc));
        }
        for (size_t p = 0; p < cfg.platforms.size(); ++p) {
            Platform pl;
            pl.platform_id = "d" + std::to_string(p);
            pl.position = cfg.platforms[p];
            pl.active = platform_active[p];
            f.platforms.push_back(std::move(pl));
        }
        traj.frames.push_back(std::move(f));
    };

    long cycle0 = 0;
    record_frame(0, phase_at(cfg, 0, cycle0));

    std::vector<Vec2> commanded(n);
    std::vector<bool> attack_intent(n), heal_intent(n);

    for (long tick = 1; tick < cfg.ticks; ++tick) {
        long deposit_cycle = 0;
        Phase phase = phase_at(cfg, tick, deposit_cycle);
        for (size_t p = 0; p < cfg.platforms.size(); ++p)
            platform_active[p] =
                phase == Phase::Deposit && (deposit_cycle % cfg.platforms.size()) == p;

        for (SimPlayer& s : sim) s.events = EventFlags{};

        // Decisions from the previous tick's positions, slot order.
        for (size_t i = 0; i < n; ++i) {
            SimPlayer& s = sim[i];
            commanded[i] = {0.0, 0.0};
            attack_intent[i] = heal_intent[i] = false;
            if (!s.alive) continue;
            if (cfg.freeze_others && i != 0) continue;
            const PlayerSetup& setup = cfg.players[i];

            WorldView view;
            double best = 0.0;
            for (size_t j = 0; j < n; ++j) {
                if (j == i || !sim[j].alive) continue;
                if (cfg.players[j].team == setup.team) continue;
                double d2v = dist2(s.pos, sim[j].pos);
                if (!view.nearest_enemy || d2v < best) {
                    view.nearest_enemy = sim[j].pos;
                    best = d2v;
                }
            }
            if (view.nearest_enemy) view.nearest_enemy_dist = std::sqrt(best);

            double best_cluster = 0.0;
            for (size_t c = 0; c < cfg.clusters.size(); ++c) {
                if (clusters_left[c] <= 0) continue;
                double d2v = dist2(s.pos, cfg.clusters[c].position);
                if (!view.nearest_cluster || d2v < best_cluster) {
                    view.nearest_cluster = cfg.clusters[c].position;
                    best_cluster = d2v;
                }
            }

            double best_platform = 0.0;
            for (size_t p = 0; p < cfg.platforms.size(); ++p) {
                bool relevant = phase == Phase::Deposit ? platform_active[p] : !platform_active[p];
                if (!relevant) continue;
                double d2v = dist2(s.pos, cfg.platforms[p]);
                if (!view.phase_platform || d2v < best_platform) {
                    view.phase_platform = cfg.platforms[p];
                    best_platform = d2v;
                }
            }

            Vec2 centroid{0.0, 0.0};
            int allies = 0;
            for (size_t j = 0; j < n; ++j) {
                if (j == i || !sim[j].alive) continue;
                if (cfg.players[j].team != setup.team) continue;
                centroid = centroid + sim[j].pos;
                ++allies;
            }
            if (allies > 0) view.allied_centroid = centroid * (1.0 / allies);

            if (!s.has_waypoint || dist2(s.pos, s.waypoint) < 400.0 * 400.0 ||
                tick - s.waypoint_tick > 150) {
                // Wandering seeks open space: of five uniform candidates,
                // prefer ones deeper into unclaimed ground than the agent
                // already is, then keep the candidate farthest from any
                // remaining seed cluster.
                double own_gap = std::numeric_limits<double>::max();
                for (size_t c = 0; c < cfg.clusters.size(); ++c) {
                    if (clusters_left[c] <= 0) continue;
                    own_gap = std::min(own_gap, dist2(s.pos, cfg.clusters[c].position));
                }
                if (own_gap == std::numeric_limits<double>::max()) own_gap = 0.0;
                Vec2 best{0.0, 0.0};
                double best_gap = -1.0;
                Vec2 best_outward{0.0, 0.0};
                double best_outward_gap = -1.0;
                for (int cand = 0; cand < 5; ++cand) {
                    Vec2 pt{rng.uniform(-extent, extent), rng.uniform(-extent, extent)};
                    double gap = std::numeric_limits<double>::max();
                    for (size_t c = 0; c < cfg.clusters.size(); ++c) {
                        if (clusters_left[c] <= 0) continue;
                        gap = std::min(gap, dist2(pt, cfg.clusters[c].position));
                    }
                    if (gap == std::numeric_limits<double>::max()) gap = 0.0;
                    if (gap > best_gap) {
                        best_gap = gap;
                        best = pt;
                    }
                    if (gap > own_gap && gap > best_outward_gap) {
                        best_outward_gap = gap;
                        best_outward = pt;
                    }
                }
                s.waypoint = best_outward_gap >= 0.0 ? best_outward : best;
                s.has_waypoint = true;
                s.waypoint_tick = tick;
            }
            view.waypoint = s.waypoint;
            view.carrying_seeds = s.seeds > 0;
            view.enemy_in_engage_range =
                view.nearest_enemy && view.nearest_enemy_dist <= cfg.engage_radius;
            const bool is_support = setup.spec.character_class == CharacterClass::Support;
            if (is_support) {
                for (size_t j = 0; j < n; ++j) {
                    if (j == i || !sim[j].alive) continue;
                    if (cfg.players[j].team != setup.team) continue;
                    if (sim[j].hp >= 0.5 * cfg.players[j].spec.max_hp) continue;
                    if (dist2(s.pos, sim[j].pos) <= cfg.engage_radius * cfg.engage_radius) {
                        view.hurt_ally_in_engage_range = true;
                        break;
                    }
                }
            }

            PolicyDecision decision =
                policy_step(s.pos, setup.spec.move_speed, is_support, setup.archetype, view, rng);
            commanded[i] = decision.velocity;
            attack_intent[i] = decision.attack_intent;
            heal_intent[i] = decision.heal_intent;
        }

        // Movement with map clamping; recorded velocity is the actual
        // displacement so motion predicates see what happened.
        for (size_t i = 0; i < n; ++i) {
            SimPlayer& s = sim[i];
            s.recorded_vel = {0.0, 0.0};
            if (!s.alive) continue;
            Vec2 target = s.pos + commanded[i];
            target.x = std::clamp(target.x, -extent, extent);
            target.y = std::clamp(target.y, -extent, extent);
            s.recorded_vel = target - s.pos;
            s.pos = target;
        }

        // Combat and healing, slot order.
        for (size_t i = 0; i < n; ++i) {
            SimPlayer& s = sim[i];
            if (!s.alive) continue;
            const PlayerSetup& setup = cfg.players[i];
            if (heal_intent[i]) {
                int target = -1;
                double best = 0.0;
                for (size_t j = 0; j < n; ++j) {
                    if (j == i || !sim[j].alive) continue;
                    if (cfg.players[j].team != setup.team) continue;
                    if (sim[j].hp >= 0.5 * cfg.players[j].spec.max_hp) continue;
                    double d2v = dist2(s.pos, sim[j].pos);
                    if (d2v > cfg.engage_radius * cfg.engage_radius) continue;
                    if (target < 0 || d2v < best) {
                        target = static_cast<int>(j);
                        best = d2v;
                    }
                }
                if (target >= 0) {
                    SimPlayer& ally = sim[target];
                    ally.hp = std::min(ally.hp + setup.spec.heal_power,
                                       cfg.players[target].spec.max_hp);
                    s.events.healed_ally = true;
                }
            }
            if (attack_intent[i]) {
                int target = -1;
                double best = 0.0;
                for (size_t j = 0; j < n; ++j) {
                    if (j == i || !sim[j].alive) continue;
                    if (cfg.players[j].team == setup.team) continue;
                    double d2v = dist2(s.pos, sim[j].pos);
                    if (d2v > cfg.engage_radius * cfg.engage_radius) continue;
                    if (target < 0 || d2v < best) {
                        target = static_cast<int>(j);
                        best = d2v;
                    }
                }
                if (target >= 0) {
                    SimPlayer& victim = sim[target];
                    victim.hp -= setup.spec.attack_power;
                    s.events.dealt_damage = true;
                    victim.events.took_damage = true;
                    if (victim.hp <= 0.0) {
                        victim.hp = 0.0;
                        victim.alive = false;
                        victim.death_tick = tick;
                        victim.recorded_vel = {0.0, 0.0};
                        s.events.kill_credit = true;
                        s.score += cfg.points_per_kill;
                    }
                }
            }
        }

        // Seed pickup, one per tick per player.
        for (size_t i = 0; i < n; ++i) {
            SimPlayer& s = sim[i];
            if (!s.alive || s.seeds >= cfg.players[i].spec.carry_cap) continue;
            for (size_t c = 0; c < cfg.clusters.size(); ++c) {
                if (clusters_left[c] <= 0) continue;
                if (dist2(s.pos, cfg.clusters[c].position) >
                    cfg.interact_radius * cfg.interact_radius)
                    continue;
                --clusters_left[c];
                ++s.seeds;
                break;
            }
        }

        // Deposits at active platforms.
        for (size_t i = 0; i < n; ++i) {
            SimPlayer& s = sim[i];
            if (!s.alive || s.seeds == 0) continue;
            for (size_t p = 0; p < cfg.platforms.size(); ++p) {
                if (!platform_active[p]) continue;
                if (dist2(s.pos, cfg.platforms[p]) > cfg.interact_radius * cfg.interact_radius)
                    continue;
                s.score += cfg.points_per_seed * s.seeds;
                s.seeds = 0;
                break;
            }
        }

        // Respawns.
        for (size_t i = 0; i < n; ++i) {
            SimPlayer& s = sim[i];
            if (s.alive || tick - s.death_tick < cfg.respawn_delay) continue;
            s.alive = true;
            s.hp = cfg.players[i].spec.max_hp;
            s.pos = s.spawn;
            s.recorded_vel = {0.0, 0.0};
        }

        record_frame(tick, phase);
    }
    return traj;
}

std::vector<SimConfig> make_population(const PopulationConfig& pop) {
    if (pop.members.empty()) throw InvalidConfig("members", "population needs members");
    for (size_t m = 0; m < pop.members.size(); ++m) {
        const PopulationMember& member = pop.members[m];
        std::string path = "members[" + std::to_string(m) + "]";
        if (member.player_id.empty()) throw InvalidConfig(path + ".player_id", "must be non-empty");
        if (member.games < 1) throw InvalidConfig(path + ".games", "must be >= 1");
        if (!pop.characters.count(member.character_name))
            throw InvalidConfig(path + ".character", "unknown character " + member.character_name);
        auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
        if (!in01(member.archetype.aggression) || !in01(member.archetype.exploration) ||
            !in01(member.archetype.sociality))
            throw InvalidConfig(path + ".archetype", "knobs must lie in [0, 1]");
    }

    // Class contract across the roster of distinct characters.
    for (const auto& [name_a, a] : pop.characters) {
        for (const auto& [name_b, b] : pop.characters) {
            if (a.character_class == CharacterClass::Tank &&
                b.character_class == CharacterClass::Damage && a.max_hp <= b.max_hp)
                throw InvalidConfig("characters." + name_a + ".max_hp",
                                    "tanks must out-last damage characters");
            if (a.character_class == CharacterClass::Damage &&
                b.character_class != CharacterClass::Damage && a.attack_power <= b.attack_power)
                throw InvalidConfig("characters." + name_a + ".attack_power",
                                    "damage characters must hit hardest");
            if (a.character_class == CharacterClass::Support &&
                b.character_class != CharacterClass::Support && a.heal_power <= b.heal_power)
                throw InvalidConfig("characters." + name_a + ".heal_power",
                                    "supports must heal hardest");
        }
    }

    // Bot cast: three team-A slots and four team-B slots.
    static const char* kBotCharacters[7] = {"warden", "mender", "striker",
                                            "striker", "warden", "mender", "striker"};
    auto bot_spec = [&](const char* name) {
        auto it = pop.characters.find(name);
        if (it != pop.characters.end()) return it->second;
        return default_characters().at(name);
    };

    Rng seeder(pop.master_seed);
    std::vector<SimConfig> out;
    for (const PopulationMember& member : pop.members) {
        for (int g = 0; g < member.games; ++g) {
            SimConfig cfg = pop.base;
            cfg.game_id = member.player_id + "_" + member.character_name + "_g" +
                          std::to_string(g);
            cfg.rng_seed = seeder.next();
            cfg.players.clear();

            PlayerSetup focal;
            focal.player_id = member.player_id;
            focal.character_name = member.character_name;
            focal.spec = pop.characters.at(member.character_name);
            focal.team = Team::A;
            focal.archetype = member.archetype;
            cfg.players.push_back(std::move(focal));

            for (int b = 0; b < 7; ++b) {
                PlayerSetup bot;
                bot.player_id = cfg.game_id + "_b" + std::to_string(b + 1);
                bot.character_name = kBotCharacters[b];
                bot.spec = bot_spec(kBotCharacters[b]);
                bot.team = b < 3 ? Team::A : Team::B;
                bot.archetype = pop.npc_archetype;
                cfg.players.push_back(std::move(bot));
            }
            out.push_back(std::move(cfg));
        }
    }
    return out;
}

namespace {

double get_or(const json& j, const char* key, double fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number()) throw InvalidConfig(key, "must be a number");
    return it->get<double>();
}

long get_or(const json& j, const char* key, long fallback) {
    auto it = j.find(key);
    if (it == j.end()) return fallback;
    if (!it->is_number_integer()) throw InvalidConfig(key, "must be an integer");
    return it->get<long>();
}

ArchetypeParams parse_archetype(const json& j, const std::string& path) {
    ArchetypeParams a;
    a.aggression = get_or(j, "aggression", 0.5);
    a.exploration = get_or(j, "exploration", 0.5);
    a.sociality = get_or(j, "sociality", 0.5);
    auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (!in01(a.aggression) || !in01(a.exploration) || !in01(a.sociality))
        throw InvalidConfig(path, "archetype knobs must lie in [0, 1]");
    return a;
}

} // namespace

PopulationConfig parse_population_config(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InvalidConfig("<config>", "invalid JSON");

    PopulationConfig pop;
    pop.master_seed = static_cast<uint64_t>(get_or(j, "master_seed", 1L));
    pop.base.map_half_extent = get_or(j, "map_half_extent", pop.base.map_half_extent);
    pop.base.ticks = static_cast<int>(get_or(j, "ticks", static_cast<long>(pop.base.ticks)));
    pop.base.tick_rate =
        static_cast<int>(get_or(j, "tick_rate", static_cast<long>(pop.base.tick_rate)));
    pop.base.phase_collection_ticks = static_cast<int>(
        get_or(j, "phase_collection_ticks", static_cast<long>(pop.base.phase_collection_ticks)));
    pop.base.phase_deposit_ticks = static_cast<int>(
        get_or(j, "phase_deposit_ticks", static_cast<long>(pop.base.phase_deposit_ticks)));
    pop.base.engage_radius = get_or(j, "engage_radius", pop.base.engage_radius);
    pop.base.interact_radius = get_or(j, "interact_radius", pop.base.interact_radius);
    pop.base.respawn_delay =
        static_cast<int>(get_or(j, "respawn_delay", static_cast<long>(pop.base.respawn_delay)));
    pop.base.points_per_seed = get_or(j, "points_per_seed", pop.base.points_per_seed);
    pop.base.points_per_kill = get_or(j, "points_per_kill", pop.base.points_per_kill);
    if (j.contains("freeze_others")) {
        if (!j["freeze_others"].is_boolean())
            throw InvalidConfig("freeze_others", "must be a boolean");
        pop.base.freeze_others = j["freeze_others"].get<bool>();
    }

    if (j.contains("clusters")) {
        if (!j["clusters"].is_array()) throw InvalidConfig("clusters", "must be an array");
        for (const json& c : j["clusters"]) {
            if (!c.contains("position") || !c["position"].is_array() || c["position"].size() != 2)
                throw InvalidConfig("clusters", "entries need a [x, y] position");
            pop.base.clusters.push_back(
                {{c["position"][0].get<double>(), c["position"][1].get<double>()},
                 static_cast<int>(get_or(c, "seeds", 30L))});
        }
    }
    if (j.contains("platforms")) {
        if (!j["platforms"].is_array()) throw InvalidConfig("platforms", "must be an array");
        for (const json& p : j["platforms"]) {
            if (!p.is_array() || p.size() != 2)
                throw InvalidConfig("platforms", "entries must be [x, y]");
            pop.base.platforms.push_back({p[0].get<double>(), p[1].get<double>()});
        }
    }

    if (j.contains("characters")) {
        if (!j["characters"].is_object()) throw InvalidConfig("characters", "must be an object");
        for (auto it = j["characters"].begin(); it != j["characters"].end(); ++it) {
            const json& c = it.value();
            CharacterSpec spec;
            std::string cls = c.contains("class") ? c["class"].get<std::string>() : "damage";
            auto parsed = character_class_from_string(cls);
            if (!parsed) throw InvalidConfig("characters." + it.key() + ".class",
                                             "must be damage, support or tank");
            spec.character_class = *parsed;
            spec.max_hp = get_or(c, "max_hp", 100.0);
            spec.attack_power = get_or(c, "attack_power", 10.0);
            spec.heal_power = get_or(c, "heal_power", 0.0);
            spec.move_speed = get_or(c, "move_speed", 46.0);
            spec.carry_cap = static_cast<int>(get_or(c, "carry_cap", 5L));
            pop.characters[it.key()] = spec;
        }
    }

    if (j.contains("npc_archetype"))
        pop.npc_archetype = parse_archetype(j["npc_archetype"], "npc_archetype");

    if (!j.contains("members") || !j["members"].is_array() || j["members"].empty())
        throw InvalidConfig("members", "population needs a non-empty members array");
    for (const json& m : j["members"]) {
        PopulationMember member;
        if (!m.contains("player_id") || !m["player_id"].is_string())
            throw InvalidConfig("members", "entries need a player_id string");
        member.player_id = m["player_id"].get<std::string>();
        member.character_name =
            m.contains("character") ? m["character"].get<std::string>() : "striker";
        member.archetype = parse_archetype(m, "members." + member.player_id);
        member.games = static_cast<int>(get_or(m, "games", 3L));
        pop.members.push_back(std::move(member));
    }
    return pop;
}

PopulationConfig load_population_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidConfig(path, "cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_population_config(buf.str());
}

} // namespace tasksets
