#pragma once

// Builders and generators shared across the test suites.

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "tasksets/rng.hpp"
#include "tasksets/telemetry.hpp"

namespace testsupport {

using namespace tasksets;

// p0..p3 on team A, p4..p7 on team B, characters cycling through the three
// classes.
inline GameMeta basic_meta(const std::string& game_id = "test_game") {
    GameMeta meta;
    meta.game_id = game_id;
    meta.map_units_note = "synthetic";
    meta.tick_rate = 10;
    const char* chars[3] = {"striker", "warden", "mender"};
    const CharacterClass classes[3] = {CharacterClass::Damage, CharacterClass::Tank,
                                       CharacterClass::Support};
    for (int i = 0; i < 8; ++i) {
        RosterEntry e;
        e.character_name = chars[i % 3];
        e.character_class = classes[i % 3];
        e.team = i < 4 ? Team::A : Team::B;
        meta.character_roster["p" + std::to_string(i)] = e;
    }
    return meta;
}

inline PlayerState basic_player(const std::string& id, Vec2 pos, Vec2 vel = {0, 0},
                                double health = 1.0, bool alive = true) {
    PlayerState p;
    p.player_id = id;
    p.position = pos;
    p.velocity = alive ? vel : Vec2{0, 0};
    p.health_fraction = health;
    p.alive = alive;
    return p;
}

// Frame with every rostered player present; positions default to a spread
// that keeps everyone far apart.
inline GameFrame basic_frame(const GameMeta& meta, long tick = 0) {
    GameFrame f;
    f.tick = tick;
    f.phase = Phase::Collection;
    int i = 0;
    for (const auto& [id, entry] : meta.character_roster) {
        (void)entry;
        f.players.push_back(basic_player(id, {i * 9000.0 - 31500.0, (i % 2) * 9000.0}));
        ++i;
    }
    return f;
}

inline Trajectory one_frame_trajectory() {
    Trajectory t;
    t.meta = basic_meta();
    t.frames.push_back(basic_frame(t.meta));
    return t;
}

// Random but invariant-respecting trajectory. Distances are scaled so the
// 2100/3500 thresholds fire on both sides, health crosses 0.5, players die
// and respawn, and all event flags occur.
inline Trajectory random_trajectory(uint64_t seed, int ticks = 200) {
    Rng rng(seed);
    Trajectory t;
    t.meta = basic_meta("rand_" + std::to_string(seed));

    struct Walker {
        Vec2 pos;
        double health;
        bool alive;
        int dead_for;
        int seeds;
        double score;
    };
    std::vector<std::string> ids;
    for (const auto& [id, entry] : t.meta.character_roster) {
        (void)entry;
        ids.push_back(id);
    }
    std::vector<Walker> walkers(ids.size());
    for (Walker& w : walkers) {
        w.pos = {rng.uniform(-4000, 4000), rng.uniform(-4000, 4000)};
        w.health = rng.uniform(0.05, 1.0);
        w.alive = true;
        w.dead_for = 0;
        w.seeds = static_cast<int>(rng.below(6));
        w.score = 0.0;
    }

    std::vector<Vec2> cluster_pos = {{0, 0}, {2500, -1500}, {-3000, 2000}};
    std::vector<int> cluster_seeds = {20, 15, 10};
    std::vector<Vec2> platform_pos = {{3500, 3500}, {-3500, -3500}, {0, 3800}};

    for (int tick = 0; tick < ticks; ++tick) {
        GameFrame f;
        f.tick = tick;
        f.phase = rng.uniform() < 0.5 ? Phase::Collection : Phase::Deposit;
        for (size_t i = 0; i < ids.size(); ++i) {
            Walker& w = walkers[i];
            Vec2 vel{0, 0};
            if (w.alive) {
                if (rng.uniform() < 0.02) { // death
                    w.alive = false;
                    w.dead_for = 0;
                    w.health = 0.0;
                } else {
                    vel = {rng.uniform(-60, 60), rng.uniform(-60, 60)};
                    if (rng.uniform() < 0.05) vel = {0, 0};
                    w.pos = w.pos + vel;
                    w.pos.x = std::clamp(w.pos.x, -4200.0, 4200.0);
                    w.pos.y = std::clamp(w.pos.y, -4200.0, 4200.0);
                    w.health = std::clamp(w.health + rng.uniform(-0.08, 0.08), 0.0, 1.0);
                    if (rng.uniform() < 0.03) w.health = 0.5; // exact threshold
                    w.seeds = std::clamp(w.seeds + static_cast<int>(rng.below(3)) - 1, 0, 5);
                    w.score += rng.uniform(0, 2);
                }
            } else if (++w.dead_for > 15 && rng.uniform() < 0.2) { // respawn
                w.alive = true;
                w.health = 1.0;
            }

            PlayerState p = basic_player(ids[i], w.pos, vel, w.health, w.alive);
            p.seeds_carried = w.seeds;
            p.score = w.score;
            if (w.alive) {
                p.events.dealt_damage = rng.uniform() < 0.10;
                p.events.took_damage = rng.uniform() < 0.10;
                p.events.kill_credit = rng.uniform() < 0.02;
                p.events.healed_ally = rng.uniform() < 0.05;
            }
            f.players.push_back(std::move(p));
        }
        for (size_t c = 0; c < cluster_pos.size(); ++c) {
            if (rng.uniform() < 0.05 && cluster_seeds[c] > 0) --cluster_seeds[c];
            SeedCluster sc;
            sc.cluster_id = "c" + std::to_string(c);
            sc.position = cluster_pos[c];
            sc.seeds_remaining = cluster_seeds[c];
            sc.visible = cluster_seeds[c] > 0;
            f.seed_clusters.push_back(std::move(sc));
        }
        for (size_t pi = 0; pi < platform_pos.size(); ++pi) {
            Platform pl;
            pl.platform_id = "d" + std::to_string(pi);
            pl.position = platform_pos[pi];
            pl.active = rng.uniform() < 0.4;
            f.platforms.push_back(std::move(pl));
        }
        t.frames.push_back(std::move(f));
    }
    return t;
}

// Fresh scratch directory under the system temp root.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("tasksets_test_" + tag + "_" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() { std::filesystem::remove_all(path_); }
    std::string str() const { return path_.string(); }
    std::string file(const std::string& name) const { return (path_ / name).string(); }

private:
    std::filesystem::path path_;
};

} // namespace testsupport
