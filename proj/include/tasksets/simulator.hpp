#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tasksets/rng.hpp"
#include "tasksets/telemetry.hpp"

namespace tasksets {

// Behavior knobs, all in [0, 1]:
//   aggression  - approach-and-attack vs flee when an enemy is near
//   exploration - wander to a waypoint vs head straight for the objective
//   sociality   - steering weight toward the allied centroid
struct ArchetypeParams {
    double aggression = 0.5;
    double exploration = 0.5;
    double sociality = 0.5;
};

struct CharacterSpec {
    CharacterClass character_class = CharacterClass::Damage;
    double max_hp = 100.0;
    double attack_power = 10.0; // damage per tick in range
    double heal_power = 0.0;    // healing per tick in range (Support)
    double move_speed = 46.0;   // units per tick
    int carry_cap = 5;
};

// The three stock characters, one per class.
const std::map<std::string, CharacterSpec>& default_characters();

struct PlayerSetup {
    std::string player_id;
    std::string character_name;
    CharacterSpec spec;
    Team team = Team::A;
    ArchetypeParams archetype;
    // Default spawns sit on per-team lanes near the map edges; set this to
    // plant exact geometry.
    std::optional<Vec2> spawn_override;
};

struct ClusterSpawn {
    Vec2 position;
    int seeds = 0;
};

struct SimConfig {
    std::string game_id = "game";
    double map_half_extent = 8000.0;
    int ticks = 6000;
    int tick_rate = 10;
    uint64_t rng_seed = 1;
    std::vector<PlayerSetup> players; // exactly 8, 4 per team
    std::vector<ClusterSpawn> clusters;
    std::vector<Vec2> platforms;
    int phase_collection_ticks = 300;
    int phase_deposit_ticks = 300;
    double engage_radius = 400.0;
    double interact_radius = 300.0; // seed pickup / deposit range
    int respawn_delay = 60;
    double points_per_seed = 10.0;
    double points_per_kill = 25.0;
    // Rollout mode: every player except the first holds its spawn action
    // (stand still) for the whole game instead of running the policy.
    bool freeze_others = false;
};

// Fills clusters/platforms with the stock arena layout when empty.
void apply_default_arena(SimConfig& config);

// Throws InvalidConfig with a field path.
void validate_config(const SimConfig& config);

// Deterministic: one splitmix64 stream per game, so identical configs give
// bit-identical trajectories.
Trajectory simulate(const SimConfig& config);

// One decision of the per-tick policy, exposed for tests.
struct WorldView {
    std::optional<Vec2> nearest_enemy;       // position
    double nearest_enemy_dist = 0.0;
    std::optional<Vec2> phase_platform;      // nearest platform relevant to phase
    std::optional<Vec2> nearest_cluster;     // nearest cluster with seeds
    std::optional<Vec2> allied_centroid;     // live teammates only
    Vec2 waypoint;
    bool carrying_seeds = false;
    bool enemy_in_engage_range = false;
    bool hurt_ally_in_engage_range = false; // ally below half health
};

Vec2 policy_velocity(Vec2 position, double move_speed, const ArchetypeParams& params,
                     const WorldView& view, Rng& rng);

struct PolicyDecision {
    Vec2 velocity;
    bool attack_intent = false;
    bool heal_intent = false; // supports prefer healing a hurt ally in range
};

PolicyDecision policy_step(Vec2 position, double move_speed, bool is_support,
                           const ArchetypeParams& params, const WorldView& view, Rng& rng);

// A synthetic player that appears in `games` games as the focal slot, against
// a fixed cast of per-game bots.
struct PopulationMember {
    std::string player_id;
    std::string character_name; // key into characters
    ArchetypeParams archetype;
    int games = 3;
};

struct PopulationConfig {
    SimConfig base; // players ignored; the rest seeds every game
    std::map<std::string, CharacterSpec> characters = default_characters();
    std::vector<PopulationMember> members;
    ArchetypeParams npc_archetype{0.6, 0.5, 0.4};
    uint64_t master_seed = 1;
};

// One config per (member, game): the member is the focal team-A player, the
// other seven slots are bots with per-game unique ids. Per-game seeds are
// consecutive outputs of a splitmix64 stream seeded with master_seed.
std::vector<SimConfig> make_population(const PopulationConfig& pop);

PopulationConfig load_population_config(const std::string& path);     // throws InvalidConfig/IoError
PopulationConfig parse_population_config(const std::string& json_text);

} // namespace tasksets
