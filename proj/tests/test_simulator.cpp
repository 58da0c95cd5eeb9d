#include <doctest.h>

#include <cmath>
#include <map>

#include "tasksets/errors.hpp"
#include "tasksets/simulator.hpp"
#include "tasksets/telemetry.hpp"
#include "tests/test_support.hpp"

using namespace tasksets;

TEST_SUITE_BEGIN("simulator");

namespace {

PopulationConfig small_population(int members, int games, int ticks,
                                  ArchetypeParams archetype = {0.6, 0.4, 0.3}) {
    PopulationConfig pop;
    pop.master_seed = 99;
    pop.base.ticks = ticks;
    pop.base.map_half_extent = 5000;
    pop.base.phase_collection_ticks = 120;
    pop.base.phase_deposit_ticks = 120;
    for (int m = 0; m < members; ++m) {
        PopulationMember member;
        member.player_id = "p" + std::to_string(m);
        member.character_name = "striker";
        member.archetype = archetype;
        member.games = games;
        pop.members.push_back(member);
    }
    return pop;
}

} // namespace

TEST_CASE("one tick produces the spawn frame with no events") {
    PopulationConfig pop = small_population(1, 1, 1);
    Trajectory t = simulate(make_population(pop)[0]);
    REQUIRE(t.frames.size() == 1);
    const GameFrame& f = t.frames[0];
    CHECK(f.tick == 0);
    for (const PlayerState& p : f.players) {
        CHECK(p.velocity == Vec2{0, 0});
        CHECK(p.health_fraction == 1.0);
        CHECK(p.seeds_carried == 0);
        CHECK(p.score == 0.0);
        CHECK(p.alive);
        CHECK_FALSE(p.events.dealt_damage);
        CHECK_FALSE(p.events.took_damage);
        CHECK_FALSE(p.events.kill_credit);
        CHECK_FALSE(p.events.healed_ally);
    }
}

TEST_CASE("identical seeds give bit-identical serialized games") {
    PopulationConfig pop = small_population(1, 1, 400);
    SimConfig cfg = make_population(pop)[0];
    std::string a = serialize_trajectory_string(simulate(cfg));
    std::string b = serialize_trajectory_string(simulate(cfg));
    CHECK(a == b);

    SimConfig other = cfg;
    other.rng_seed += 1;
    CHECK(serialize_trajectory_string(simulate(other)) != a);
}

TEST_CASE("aggressive agent reaches a static enemy within the kinematic bound") {
    SimConfig cfg;
    cfg.game_id = "kinematics";
    cfg.ticks = 60;
    cfg.map_half_extent = 6000;
    cfg.freeze_others = true;
    const CharacterSpec striker = default_characters().at("striker");
    auto add = [&](const std::string& id, Team team, Vec2 spawn, ArchetypeParams a) {
        PlayerSetup p;
        p.player_id = id;
        p.character_name = "striker";
        p.spec = striker;
        p.team = team;
        p.archetype = a;
        p.spawn_override = spawn;
        cfg.players.push_back(p);
    };
    add("ego", Team::A, {0, 0}, {1.0, 0.0, 0.0});
    add("a1", Team::A, {-5000, 5000}, {});
    add("a2", Team::A, {-5000, -5000}, {});
    add("a3", Team::A, {-5000, 0}, {});
    add("e1", Team::B, {1500, 0}, {}); // the static target
    add("e2", Team::B, {5000, 5000}, {});
    add("e3", Team::B, {5000, -5000}, {});
    add("e4", Team::B, {5000, 0}, {});

    Trajectory t = simulate(cfg);
    long bound =
        static_cast<long>(std::ceil((1500.0 - cfg.engage_radius) / striker.move_speed)) + 1;
    long first_damage = -1;
    for (const GameFrame& f : t.frames) {
        for (const PlayerState& p : f.players)
            if (p.player_id == "ego" && p.events.dealt_damage) first_damage = f.tick;
        if (first_damage >= 0) break;
    }
    REQUIRE(first_damage > 0);
    CHECK(first_damage <= bound);
}

TEST_CASE("policy velocity arms") {
    Rng rng(1);
    ArchetypeParams params;
    WorldView view;
    view.waypoint = {1000, 1000};

    SUBCASE("flee arm points away from the enemy") {
        params.aggression = 0.0;
        view.nearest_enemy = Vec2{1000, 0};
        view.nearest_enemy_dist = 1000.0;
        Vec2 v = policy_velocity({0, 0}, 46.0, params, view, rng);
        CHECK(v.x < 0);
        CHECK(norm(v) == doctest::Approx(46.0));
        // Radial speed away from the enemy is positive.
        CHECK(dot(v, Vec2{1, 0}) < 0);
    }
    SUBCASE("approach arm points at the enemy") {
        params.aggression = 1.0;
        view.nearest_enemy = Vec2{1000, 0};
        view.nearest_enemy_dist = 1000.0;
        Vec2 v = policy_velocity({0, 0}, 46.0, params, view, rng);
        CHECK(v.x == doctest::Approx(46.0));
    }
    SUBCASE("full sociality points at the allied centroid") {
        params.sociality = 1.0;
        view.allied_centroid = Vec2{0, 500};
        Vec2 v = policy_velocity({0, 0}, 40.0, params, view, rng);
        CHECK(v.y == doctest::Approx(40.0));
        CHECK(v.x == doctest::Approx(0.0));
    }
    SUBCASE("direct deposit arm points at the platform") {
        params.exploration = 0.0;
        view.carrying_seeds = true;
        view.phase_platform = Vec2{0, -2000};
        Vec2 v = policy_velocity({0, 0}, 46.0, params, view, rng);
        CHECK(v.y == doctest::Approx(-46.0));
    }
    SUBCASE("no objectives leaves the waypoint arm") {
        Vec2 v = policy_velocity({0, 0}, 46.0, params, view, rng);
        CHECK(dot(v, Vec2{1, 1}) > 0);
        CHECK(norm(v) == doctest::Approx(46.0));
    }
    SUBCASE("intents: attack in range, heal preferred for supports") {
        view.nearest_enemy = Vec2{300, 0};
        view.nearest_enemy_dist = 300.0;
        view.enemy_in_engage_range = true;
        PolicyDecision d = policy_step({0, 0}, 46.0, false, params, view, rng);
        CHECK(d.attack_intent);
        CHECK_FALSE(d.heal_intent);

        view.hurt_ally_in_engage_range = true;
        d = policy_step({0, 0}, 46.0, true, params, view, rng);
        CHECK(d.heal_intent);
        CHECK_FALSE(d.attack_intent);

        // Non-supports never heal.
        d = policy_step({0, 0}, 46.0, false, params, view, rng);
        CHECK(d.attack_intent);
        CHECK_FALSE(d.heal_intent);
    }
}

TEST_CASE("seed conservation ignoring nothing") {
    PopulationConfig pop = small_population(2, 1, 500, {0.4, 0.3, 0.4});
    for (const SimConfig& cfg : make_population(pop)) {
        Trajectory t = simulate(cfg);
        long initial = 0;
        for (const SeedCluster& c : t.frames[0].seed_clusters) initial += c.seeds_remaining;
        for (const PlayerState& p : t.frames[0].players) initial += p.seeds_carried;

        long deposited = 0;
        std::map<std::string, int> prev_carried;
        for (const PlayerState& p : t.frames[0].players) prev_carried[p.player_id] = p.seeds_carried;
        for (size_t k = 1; k < t.frames.size(); ++k) {
            long clusters = 0, carried = 0;
            for (const SeedCluster& c : t.frames[k].seed_clusters) clusters += c.seeds_remaining;
            for (const PlayerState& p : t.frames[k].players) {
                carried += p.seeds_carried;
                int drop = prev_carried[p.player_id] - p.seeds_carried;
                if (drop > 0) deposited += drop;
                prev_carried[p.player_id] = p.seeds_carried;
            }
            REQUIRE(clusters + carried + deposited == initial);
        }
    }
}

TEST_CASE("health bounds and single kill credit per death") {
    PopulationConfig pop = small_population(3, 1, 600, {0.9, 0.3, 0.5});
    pop.base.map_half_extent = 4000; // tight map, frequent fights
    for (const SimConfig& cfg : make_population(pop)) {
        Trajectory t = simulate(cfg);
        long deaths = 0, credits = 0;
        std::map<std::string, bool> was_alive;
        for (const PlayerState& p : t.frames[0].players) was_alive[p.player_id] = p.alive;
        for (const GameFrame& f : t.frames) {
            for (const PlayerState& p : f.players) {
                CHECK(p.health_fraction >= 0.0);
                CHECK(p.health_fraction <= 1.0);
                if (was_alive[p.player_id] && !p.alive) ++deaths;
                was_alive[p.player_id] = p.alive;
                if (p.events.kill_credit) ++credits;
            }
        }
        CHECK(deaths == credits);
    }
}

TEST_CASE("simulator output validates clean across a seed matrix") {
    for (uint64_t seed : {1ull, 17ull, 987654321ull}) {
        PopulationConfig pop = small_population(1, 2, 350, {0.7, 0.6, 0.7});
        pop.master_seed = seed;
        for (const SimConfig& cfg : make_population(pop)) {
            Trajectory t = simulate(cfg);
            auto violations = validate_trajectory(t, {.carry_cap = 5});
            CHECK(violations.empty());
        }
    }
}

TEST_CASE("freeze-others mode holds everyone but the focal player still") {
    PopulationConfig pop = small_population(1, 1, 100, {0.8, 0.2, 0.2});
    pop.base.freeze_others = true;
    Trajectory t = simulate(make_population(pop)[0]);
    std::map<std::string, Vec2> spawn;
    for (const PlayerState& p : t.frames[0].players) spawn[p.player_id] = p.position;
    for (const GameFrame& f : t.frames) {
        for (const PlayerState& p : f.players) {
            if (p.player_id == "p0") continue;
            CHECK(p.position == spawn[p.player_id]);
            CHECK(p.velocity == Vec2{0, 0});
        }
    }
    // The focal player does move.
    bool moved = false;
    for (const GameFrame& f : t.frames)
        for (const PlayerState& p : f.players)
            if (p.player_id == "p0" && p.velocity != Vec2{0, 0}) moved = true;
    CHECK(moved);
}

TEST_CASE("make_population layout and reproducibility") {
    SUBCASE("grid of 9 levels x 10 players makes 90 members, 270 games") {
        PopulationConfig pop;
        pop.base.ticks = 10;
        for (int level = 0; level < 9; ++level) {
            for (int k = 0; k < 10; ++k) {
                PopulationMember m;
                m.player_id = "a" + std::to_string(level) + "_" + std::to_string(k);
                m.character_name = "striker";
                m.archetype.aggression = 0.1 + 0.1 * level;
                m.games = 3;
                pop.members.push_back(m);
            }
        }
        CHECK(pop.members.size() == 90);
        std::vector<SimConfig> configs = make_population(pop);
        CHECK(configs.size() == 270);

        // Every member appears in exactly `games` configs as the focal player
        // and so passes the default min-games filter.
        std::map<std::string, int> appearances;
        for (const SimConfig& cfg : configs) ++appearances[cfg.players[0].player_id];
        for (const auto& [id, n] : appearances) CHECK(n == 3);

        // Bot ids are unique per game.
        std::map<std::string, int> bot_ids;
        for (const SimConfig& cfg : configs)
            for (size_t i = 1; i < cfg.players.size(); ++i) ++bot_ids[cfg.players[i].player_id];
        for (const auto& [id, n] : bot_ids) CHECK(n == 1);
    }
    SUBCASE("fixed master seed reproduces every game seed") {
        PopulationConfig pop = small_population(4, 3, 10);
        std::vector<SimConfig> a = make_population(pop);
        std::vector<SimConfig> b = make_population(pop);
        REQUIRE(a.size() == b.size());
        for (size_t i = 0; i < a.size(); ++i) CHECK(a[i].rng_seed == b[i].rng_seed);
    }
}

TEST_CASE("config validation failures carry field paths") {
    PopulationConfig pop = small_population(1, 1, 100);

    SUBCASE("map too small") {
        pop.base.map_half_extent = 3000;
        CHECK_THROWS_AS(simulate(make_population(pop)[0]), InvalidConfig);
    }
    SUBCASE("knob out of range") {
        pop.members[0].archetype.aggression = 1.5;
        CHECK_THROWS_AS(make_population(pop)[0], InvalidConfig);
    }
    SUBCASE("unknown character") {
        pop.members[0].character_name = "nonexistent";
        CHECK_THROWS_AS(make_population(pop), InvalidConfig);
    }
    SUBCASE("class contract broken") {
        pop.characters["warden"].max_hp = 50; // tank weaker than damage
        CHECK_THROWS_AS(make_population(pop), InvalidConfig);
    }
    SUBCASE("json config errors") {
        CHECK_THROWS_AS(parse_population_config("{ not json"), InvalidConfig);
        CHECK_THROWS_AS(parse_population_config("{\"members\": []}"), InvalidConfig);
    }
}

TEST_CASE("population config json round-trip of the fields that matter") {
    std::string text = R"({
        "master_seed": 321,
        "ticks": 500,
        "map_half_extent": 6000,
        "freeze_others": false,
        "npc_archetype": {"aggression": 0.5, "exploration": 0.5, "sociality": 0.5},
        "characters": {
            "brawler": {"class": "damage", "max_hp": 90, "attack_power": 14, "move_speed": 50, "carry_cap": 4}
        },
        "members": [
            {"player_id": "x1", "character": "brawler", "aggression": 0.9, "exploration": 0.2, "sociality": 0.1, "games": 4}
        ]
    })";
    PopulationConfig pop = parse_population_config(text);
    CHECK(pop.master_seed == 321);
    CHECK(pop.base.ticks == 500);
    CHECK(pop.base.map_half_extent == 6000);
    CHECK(pop.characters.count("brawler") == 1);
    CHECK(pop.characters.at("brawler").attack_power == 14);
    REQUIRE(pop.members.size() == 1);
    CHECK(pop.members[0].games == 4);
    CHECK(pop.members[0].archetype.aggression == 0.9);

    std::vector<SimConfig> configs = make_population(pop);
    CHECK(configs.size() == 4);
    CHECK(configs[0].players[0].character_name == "brawler");
    CHECK(configs[0].players[0].spec.attack_power == 14);
}

TEST_SUITE_END();
