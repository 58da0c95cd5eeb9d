#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tasksets/geometry.hpp"

namespace tasksets {

enum class CharacterClass { Damage, Support, Tank };
enum class Team { A, B };
enum class Phase { Collection, Deposit };

const char* to_string(CharacterClass c);
const char* to_string(Team t);
const char* to_string(Phase p);
std::optional<CharacterClass> character_class_from_string(const std::string& s);

struct RosterEntry {
    std::string character_name;
    CharacterClass character_class = CharacterClass::Damage;
    Team team = Team::A;
    friend bool operator==(const RosterEntry&, const RosterEntry&) = default;
};

struct GameMeta {
    std::string game_id;
    std::string map_units_note;
    int tick_rate = 10;
    // Keyed by player_id; map order doubles as the canonical player slot order.
    std::map<std::string, RosterEntry> character_roster;
    friend bool operator==(const GameMeta&, const GameMeta&) = default;
};

struct EventFlags {
    bool dealt_damage = false;
    bool took_damage = false;
    bool kill_credit = false;
    bool healed_ally = false;
    friend bool operator==(const EventFlags&, const EventFlags&) = default;
};

struct PlayerState {
    std::string player_id;
    Vec2 position;
    Vec2 velocity;
    double health_fraction = 1.0;
    int seeds_carried = 0;
    double score = 0.0;
    EventFlags events;
    bool alive = true;
    friend bool operator==(const PlayerState&, const PlayerState&) = default;
};

struct SeedCluster {
    std::string cluster_id;
    Vec2 position;
    int seeds_remaining = 0;
    bool visible = false;
    friend bool operator==(const SeedCluster&, const SeedCluster&) = default;
};

struct Platform {
    std::string platform_id;
    Vec2 position;
    bool active = false;
    friend bool operator==(const Platform&, const Platform&) = default;
};

struct GameFrame {
    long tick = 0;
    Phase phase = Phase::Collection;
    std::vector<PlayerState> players;
    std::vector<SeedCluster> seed_clusters;
    std::vector<Platform> platforms;
    friend bool operator==(const GameFrame&, const GameFrame&) = default;
};

struct Trajectory {
    GameMeta meta;
    std::vector<GameFrame> frames;
    friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// One game per file. Line 1 is the meta record, every following line one
// frame, all JSON objects. The meta record carries format "tasksets/1".
//
// Throws MalformedRecord on any schema or structural violation; never skips
// a bad line. Frames come back with players in roster order.
Trajectory parse_trajectory(std::istream& in);
Trajectory parse_trajectory_string(const std::string& text);
Trajectory parse_trajectory_file(const std::string& path);

// Just the meta record, for directory scans that group players before
// paying for full parses.
GameMeta parse_meta_record(const std::string& line, int line_no = 1);

void serialize_trajectory(const Trajectory& t, std::ostream& out);
std::string serialize_trajectory_string(const Trajectory& t);
void serialize_trajectory_file(const Trajectory& t, const std::string& path);

struct Violation {
    long tick = -1; // -1 for meta-level violations
    std::string field;
    std::string rule;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidateOptions {
    // Checked only when set; the cap is a simulation config value, not part
    // of the wire format.
    std::optional<int> carry_cap;
};

std::vector<Violation> validate_trajectory(const Trajectory& t, const ValidateOptions& opts = {});

} // namespace tasksets
