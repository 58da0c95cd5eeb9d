#include "tasksets/telemetry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "tasksets/errors.hpp"

namespace tasksets {

using nlohmann::json;

const char* to_string(CharacterClass c) {
    switch (c) {
        case CharacterClass::Damage: return "damage";
        case CharacterClass::Support: return "support";
        case CharacterClass::Tank: return "tank";
    }
    return "?";
}

const char* to_string(Team t) { return t == Team::A ? "A" : "B"; }

const char* to_string(Phase p) { return p == Phase::Collection ? "collection" : "deposit"; }

std::optional<CharacterClass> character_class_from_string(const std::string& s) {
    if (s == "damage") return CharacterClass::Damage;
    if (s == "support") return CharacterClass::Support;
    if (s == "tank") return CharacterClass::Tank;
    return std::nullopt;
}

namespace {

constexpr const char* kFormatVersion = "tasksets/1";

[[noreturn]] void fail(int line, const std::string& reason) {
    throw MalformedRecord(line, reason);
}

const json& need(const json& j, const char* key, int line) {
    auto it = j.find(key);
    if (it == j.end()) fail(line, std::string("missing field '") + key + "'");
    return *it;
}

double need_number(const json& j, const char* key, int line) {
    const json& v = need(j, key, line);
    if (!v.is_number()) fail(line, std::string("field '") + key + "' is not a number");
    double d = v.get<double>();
    if (!std::isfinite(d)) fail(line, std::string("field '") + key + "' is not finite");
    return d;
}

long need_integer(const json& j, const char* key, int line) {
    const json& v = need(j, key, line);
    if (!v.is_number_integer()) fail(line, std::string("field '") + key + "' is not an integer");
    return v.get<long>();
}

bool need_bool(const json& j, const char* key, int line) {
    const json& v = need(j, key, line);
    if (!v.is_boolean()) fail(line, std::string("field '") + key + "' is not a boolean");
    return v.get<bool>();
}

std::string need_string(const json& j, const char* key, int line) {
    const json& v = need(j, key, line);
    if (!v.is_string()) fail(line, std::string("field '") + key + "' is not a string");
    return v.get<std::string>();
}

Vec2 need_vec2(const json& j, const char* key, int line) {
    const json& v = need(j, key, line);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(line, std::string("field '") + key + "' is not a 2-element number array");
    Vec2 out{v[0].get<double>(), v[1].get<double>()};
    if (!std::isfinite(out.x) || !std::isfinite(out.y))
        fail(line, std::string("field '") + key + "' is not finite");
    return out;
}

GameMeta parse_meta(const json& j, int line) {
    if (need_string(j, "format", line) != kFormatVersion)
        fail(line, "unsupported format version");
    GameMeta meta;
    meta.game_id = need_string(j, "game_id", line);
    if (meta.game_id.empty()) fail(line, "game_id is empty");
    meta.map_units_note = need_string(j, "map_units_note", line);
    long rate = need_integer(j, "tick_rate", line);
    if (rate < 1) fail(line, "tick_rate must be >= 1");
    meta.tick_rate = static_cast<int>(rate);

    const json& roster = need(j, "character_roster", line);
    if (!roster.is_object()) fail(line, "character_roster is not an object");
    int team_a = 0, team_b = 0;
    for (auto it = roster.begin(); it != roster.end(); ++it) {
        RosterEntry entry;
        entry.character_name = need_string(it.value(), "character_name", line);
        auto cls = character_class_from_string(need_string(it.value(), "character_class", line));
        if (!cls) fail(line, "unknown character_class");
        entry.character_class = *cls;
        std::string team = need_string(it.value(), "team", line);
        if (team == "A") { entry.team = Team::A; ++team_a; }
        else if (team == "B") { entry.team = Team::B; ++team_b; }
        else fail(line, "team must be A or B");
        meta.character_roster.emplace(it.key(), std::move(entry));
    }
    if (meta.character_roster.size() != 8) fail(line, "roster must contain exactly 8 players");
    if (team_a != 4 || team_b != 4) fail(line, "roster must have 4 players per team");
    return meta;
}

PlayerState parse_player(const json& j, int line) {
    PlayerState p;
    p.player_id = need_string(j, "player_id", line);
    p.position = need_vec2(j, "position", line);
    p.velocity = need_vec2(j, "velocity", line);
    p.health_fraction = need_number(j, "health_fraction", line);
    long seeds = need_integer(j, "seeds_carried", line);
    if (seeds < 0) fail(line, "seeds_carried must be non-negative");
    p.seeds_carried = static_cast<int>(seeds);
    p.score = need_number(j, "score", line);
    if (p.score < 0) fail(line, "score must be non-negative");
    const json& ev = need(j, "events", line);
    p.events.dealt_damage = need_bool(ev, "dealt_damage", line);
    p.events.took_damage = need_bool(ev, "took_damage", line);
    p.events.kill_credit = need_bool(ev, "kill_credit", line);
    p.events.healed_ally = need_bool(ev, "healed_ally", line);
    p.alive = need_bool(j, "alive", line);
    return p;
}

GameFrame parse_frame(const json& j, const GameMeta& meta, int line) {
    GameFrame f;
    f.tick = need_integer(j, "tick", line);
    std::string phase = need_string(j, "phase", line);
    if (phase == "collection") f.phase = Phase::Collection;
    else if (phase == "deposit") f.phase = Phase::Deposit;
    else fail(line, "phase must be collection or deposit");

    const json& players = need(j, "players", line);
    if (!players.is_array()) fail(line, "players is not an array");
    if (players.size() != meta.character_roster.size())
        fail(line, "frame must contain every rostered player exactly once");
    f.players.resize(players.size());
    std::vector<bool> seen(players.size(), false);
    for (const json& pj : players) {
        PlayerState p = parse_player(pj, line);
        auto it = meta.character_roster.find(p.player_id);
        if (it == meta.character_roster.end()) fail(line, "player not in roster: " + p.player_id);
        // Frames are normalized to roster order so downstream indexing is stable.
        size_t slot = std::distance(meta.character_roster.begin(), it);
        if (seen[slot]) fail(line, "duplicate player in frame: " + p.player_id);
        seen[slot] = true;
        f.players[slot] = std::move(p);
    }

    const json& clusters = need(j, "seed_clusters", line);
    if (!clusters.is_array()) fail(line, "seed_clusters is not an array");
    for (const json& cj : clusters) {
        SeedCluster c;
        c.cluster_id = need_string(cj, "cluster_id", line);
        c.position = need_vec2(cj, "position", line);
        long rem = need_integer(cj, "seeds_remaining", line);
        if (rem < 0) fail(line, "seeds_remaining must be non-negative");
        c.seeds_remaining = static_cast<int>(rem);
        c.visible = need_bool(cj, "visible", line);
        f.seed_clusters.push_back(std::move(c));
    }

    const json& platforms = need(j, "platforms", line);
    if (!platforms.is_array()) fail(line, "platforms is not an array");
    for (const json& pj : platforms) {
        Platform p;
        p.platform_id = need_string(pj, "platform_id", line);
        p.position = need_vec2(pj, "position", line);
        p.active = need_bool(pj, "active", line);
        f.platforms.push_back(std::move(p));
    }
    return f;
}

json meta_to_json(const GameMeta& meta) {
    json roster = json::object();
    for (const auto& [id, entry] : meta.character_roster) {
        roster[id] = {
            {"character_name", entry.character_name},
            {"character_class", to_string(entry.character_class)},
            {"team", to_string(entry.team)},
        };
    }
    return {
        {"format", kFormatVersion},
        {"game_id", meta.game_id},
        {"map_units_note", meta.map_units_note},
        {"tick_rate", meta.tick_rate},
        {"character_roster", std::move(roster)},
    };
}

json frame_to_json(const GameFrame& f) {
    json players = json::array();
    for (const PlayerState& p : f.players) {
        players.push_back({
            {"player_id", p.player_id},
            {"position", {p.position.x, p.position.y}},
            {"velocity", {p.velocity.x, p.velocity.y}},
            {"health_fraction", p.health_fraction},
            {"seeds_carried", p.seeds_carried},
            {"score", p.score},
            {"events",
             {{"dealt_damage", p.events.dealt_damage},
              {"took_damage", p.events.took_damage},
              {"kill_credit", p.events.kill_credit},
              {"healed_ally", p.events.healed_ally}}},
            {"alive", p.alive},
        });
    }
    json clusters = json::array();
    for (const SeedCluster& c : f.seed_clusters) {
        clusters.push_back({
            {"cluster_id", c.cluster_id},
            {"position", {c.position.x, c.position.y}},
            {"seeds_remaining", c.seeds_remaining},
            {"visible", c.visible},
        });
    }
    json platforms = json::array();
    for (const Platform& p : f.platforms) {
        platforms.push_back({
            {"platform_id", p.platform_id},
            {"position", {p.position.x, p.position.y}},
            {"active", p.active},
        });
    }
    return {
        {"tick", f.tick},
        {"phase", to_string(f.phase)},
        {"players", std::move(players)},
        {"seed_clusters", std::move(clusters)},
        {"platforms", std::move(platforms)},
    };
}

} // namespace

GameMeta parse_meta_record(const std::string& line, int line_no) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded()) fail(line_no, "invalid JSON");
    if (!j.is_object()) fail(line_no, "record is not an object");
    return parse_meta(j, line_no);
}

Trajectory parse_trajectory(std::istream& in) {
    Trajectory t;
    std::string line;
    int line_no = 0;
    bool have_meta = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            // A single trailing newline is fine; blank lines elsewhere are not.
            if (in.peek() == std::char_traits<char>::eof()) break;
            fail(line_no, "blank line");
        }
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded()) fail(line_no, "invalid JSON");
        if (!j.is_object()) fail(line_no, "record is not an object");
        if (!have_meta) {
            t.meta = parse_meta(j, line_no);
            have_meta = true;
            continue;
        }
        GameFrame f = parse_frame(j, t.meta, line_no);
        long expected = static_cast<long>(t.frames.size());
        if (f.tick != expected) {
            if (f.tick > expected && !t.frames.empty()) fail(line_no, "tick gap");
            fail(line_no, "ticks must start at 0 and increase by 1");
        }
        t.frames.push_back(std::move(f));
    }
    if (!have_meta) fail(line_no, "missing meta record");
    if (t.frames.empty()) fail(line_no, "trajectory has no frames");
    return t;
}

Trajectory parse_trajectory_string(const std::string& text) {
    std::istringstream in(text);
    return parse_trajectory(in);
}

Trajectory parse_trajectory_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return parse_trajectory(in);
}

void serialize_trajectory(const Trajectory& t, std::ostream& out) {
    out << meta_to_json(t.meta).dump() << '\n';
    for (const GameFrame& f : t.frames) out << frame_to_json(f).dump() << '\n';
}

std::string serialize_trajectory_string(const Trajectory& t) {
    std::ostringstream out;
    serialize_trajectory(t, out);
    return out.str();
}

void serialize_trajectory_file(const Trajectory& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    serialize_trajectory(t, out);
}

std::vector<Violation> validate_trajectory(const Trajectory& t, const ValidateOptions& opts) {
    std::vector<Violation> out;
    auto add = [&](long tick, const char* field, const char* rule) {
        out.push_back({tick, field, rule});
    };

    if (t.meta.game_id.empty()) add(-1, "game_id", "non-empty");
    if (t.meta.tick_rate < 1) add(-1, "tick_rate", "positive");
    if (t.meta.character_roster.size() != 8) add(-1, "character_roster", "exactly 8 players");
    int team_a = 0;
    for (const auto& [id, entry] : t.meta.character_roster)
        if (entry.team == Team::A) ++team_a;
    if (t.meta.character_roster.size() == 8 && team_a != 4)
        add(-1, "character_roster", "4 players per team");

    if (t.frames.empty()) {
        add(-1, "frames", "non-empty");
        return out;
    }

    for (size_t i = 0; i < t.frames.size(); ++i) {
        const GameFrame& f = t.frames[i];
        if (f.tick != static_cast<long>(i)) add(f.tick, "tick", "starts at 0, step 1");

        size_t rostered = 0;
        for (const PlayerState& p : f.players) {
            if (t.meta.character_roster.count(p.player_id)) ++rostered;
            if (p.health_fraction < 0.0 || p.health_fraction > 1.0)
                add(f.tick, "health_fraction", "range");
            if (!p.alive && (p.velocity.x != 0.0 || p.velocity.y != 0.0))
                add(f.tick, "velocity", "zero while dead");
            if (p.seeds_carried < 0) add(f.tick, "seeds_carried", "non-negative");
            if (opts.carry_cap && p.seeds_carried > *opts.carry_cap)
                add(f.tick, "seeds_carried", "carry cap");
            if (p.score < 0.0) add(f.tick, "score", "non-negative");
        }
        if (f.players.size() != t.meta.character_roster.size() || rostered != f.players.size())
            add(f.tick, "players", "every rostered player exactly once");

        for (const SeedCluster& c : f.seed_clusters) {
            if (c.seeds_remaining < 0) add(f.tick, "seeds_remaining", "non-negative");
            if (c.visible != (c.seeds_remaining > 0))
                add(f.tick, "visible", "visible iff seeds remain");
        }
    }
    return out;
}

} // namespace tasksets
