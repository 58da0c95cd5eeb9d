#include <doctest.h>

#include <sstream>

#include "tasksets/errors.hpp"
#include "tasksets/simulator.hpp"
#include "tasksets/telemetry.hpp"
#include "tests/test_support.hpp"

using namespace tasksets;
using namespace testsupport;

TEST_SUITE_BEGIN("telemetry");

namespace {

std::string two_tick_file() {
    Trajectory t;
    t.meta = basic_meta("hand");
    GameFrame f0 = basic_frame(t.meta, 0);
    f0.players[0].position = {12.5, -3.25};
    f0.players[0].velocity = {1.0, 0.0};
    f0.players[0].health_fraction = 0.5;
    f0.players[0].seeds_carried = 2;
    f0.players[0].score = 7.25;
    f0.players[0].events.dealt_damage = true;
    GameFrame f1 = basic_frame(t.meta, 1);
    f1.phase = Phase::Deposit;
    SeedCluster c;
    c.cluster_id = "c0";
    c.position = {100.0, 200.0};
    c.seeds_remaining = 3;
    c.visible = true;
    f1.seed_clusters.push_back(c);
    Platform p;
    p.platform_id = "d0";
    p.position = {-50.0, 60.0};
    p.active = true;
    f1.platforms.push_back(p);
    t.frames = {f0, f1};
    return serialize_trajectory_string(t);
}

} // namespace

TEST_CASE("hand-written two-tick file parses field by field") {
    std::string text = two_tick_file();
    Trajectory t = parse_trajectory_string(text);

    CHECK(t.meta.game_id == "hand");
    CHECK(t.meta.tick_rate == 10);
    CHECK(t.meta.character_roster.size() == 8);
    CHECK(t.meta.character_roster.at("p0").team == Team::A);
    CHECK(t.meta.character_roster.at("p7").team == Team::B);
    REQUIRE(t.frames.size() == 2);
    const PlayerState& p0 = t.frames[0].players[0];
    CHECK(p0.player_id == "p0");
    CHECK(p0.position == Vec2{12.5, -3.25});
    CHECK(p0.velocity == Vec2{1.0, 0.0});
    CHECK(p0.health_fraction == 0.5);
    CHECK(p0.seeds_carried == 2);
    CHECK(p0.score == 7.25);
    CHECK(p0.events.dealt_damage);
    CHECK_FALSE(p0.events.took_damage);
    CHECK(t.frames[1].phase == Phase::Deposit);
    REQUIRE(t.frames[1].seed_clusters.size() == 1);
    CHECK(t.frames[1].seed_clusters[0].seeds_remaining == 3);
    REQUIRE(t.frames[1].platforms.size() == 1);
    CHECK(t.frames[1].platforms[0].active);
}

TEST_CASE("parse then serialize is the identity") {
    std::string text = two_tick_file();
    Trajectory t = parse_trajectory_string(text);
    CHECK(parse_trajectory_string(serialize_trajectory_string(t)) == t);
}

TEST_CASE("meta line alone is an empty trajectory error") {
    std::string text = two_tick_file();
    std::string meta_only = text.substr(0, text.find('\n') + 1);
    CHECK_THROWS_AS(parse_trajectory_string(meta_only), MalformedRecord);
}

TEST_CASE("tick gap is rejected") {
    Trajectory t;
    t.meta = basic_meta();
    GameFrame f0 = basic_frame(t.meta, 0);
    GameFrame f2 = basic_frame(t.meta, 2);
    t.frames = {f0, f2};
    std::string text = serialize_trajectory_string(t);
    try {
        parse_trajectory_string(text);
        FAIL("expected MalformedRecord");
    } catch (const MalformedRecord& e) {
        CHECK(std::string(e.what()).find("tick gap") != std::string::npos);
        CHECK(e.line_no == 3);
    }
}

TEST_CASE("first tick must be zero") {
    Trajectory t;
    t.meta = basic_meta();
    t.frames = {basic_frame(t.meta, 1)};
    CHECK_THROWS_AS(parse_trajectory_string(serialize_trajectory_string(t)), MalformedRecord);
}

TEST_CASE("rejects bad meta and frame records") {
    Trajectory good = one_frame_trajectory();
    std::string text = serialize_trajectory_string(good);

    SUBCASE("missing format version") {
        std::string broken = text;
        size_t pos = broken.find("\"format\":\"tasksets/1\",");
        REQUIRE(pos != std::string::npos);
        broken.erase(pos, std::string("\"format\":\"tasksets/1\",").size());
        CHECK_THROWS_AS(parse_trajectory_string(broken), MalformedRecord);
    }
    SUBCASE("seven players") {
        Trajectory t = good;
        t.meta.character_roster.erase("p7");
        t.frames[0].players.pop_back();
        CHECK_THROWS_AS(parse_trajectory_string(serialize_trajectory_string(t)),
                        MalformedRecord);
    }
    SUBCASE("uneven teams") {
        Trajectory t = good;
        t.meta.character_roster.at("p7").team = Team::A;
        CHECK_THROWS_AS(parse_trajectory_string(serialize_trajectory_string(t)),
                        MalformedRecord);
    }
    SUBCASE("duplicate player in frame") {
        Trajectory t = good;
        t.frames[0].players[1] = t.frames[0].players[0];
        CHECK_THROWS_AS(parse_trajectory_string(serialize_trajectory_string(t)),
                        MalformedRecord);
    }
    SUBCASE("garbage line") {
        CHECK_THROWS_AS(parse_trajectory_string(text + "not json\n"), MalformedRecord);
    }
}

TEST_CASE("exact and inexact binary fractions round-trip exactly") {
    Trajectory t = one_frame_trajectory();
    t.frames[0].players[0].health_fraction = 0.5;
    t.frames[0].players[1].health_fraction = 0.1;
    t.frames[0].players[2].position = {1.0 / 3.0, 2.0 / 7.0};
    Trajectory back = parse_trajectory_string(serialize_trajectory_string(t));
    CHECK(back == t);
}

TEST_CASE("simulator output round-trips") {
    PopulationConfig pop;
    pop.base.ticks = 500;
    pop.members.push_back({"p00", "striker", {0.7, 0.4, 0.3}, 1});
    std::vector<SimConfig> configs = make_population(pop);
    Trajectory t = simulate(configs[0]);
    Trajectory back = parse_trajectory_string(serialize_trajectory_string(t));
    CHECK(back == t);
}

TEST_CASE("random trajectories round-trip") {
    for (uint64_t seed : {1ull, 2ull, 3ull, 4ull, 5ull}) {
        Trajectory t = random_trajectory(seed, 60);
        CHECK(parse_trajectory_string(serialize_trajectory_string(t)) == t);
    }
}

TEST_CASE("validate passes clean simulator output") {
    PopulationConfig pop;
    pop.base.ticks = 400;
    pop.members.push_back({"p00", "striker", {0.9, 0.5, 0.5}, 1});
    Trajectory t = simulate(make_population(pop)[0]);
    CHECK(validate_trajectory(t, {.carry_cap = 5}).empty());
}

TEST_CASE("validate reports specific violations") {
    SUBCASE("health out of range") {
        Trajectory t = one_frame_trajectory();
        t.frames[0].players[0].health_fraction = 1.2;
        auto v = validate_trajectory(t);
        REQUIRE(v.size() == 1);
        CHECK(v[0].tick == 0);
        CHECK(v[0].field == "health_fraction");
        CHECK(v[0].rule == "range");
    }
    SUBCASE("dead player moving") {
        Trajectory t = one_frame_trajectory();
        t.frames[0].players[2].alive = false;
        t.frames[0].players[2].velocity = {3.0, 0.0};
        auto v = validate_trajectory(t);
        REQUIRE(v.size() == 1);
        CHECK(v[0].field == "velocity");
    }
    SUBCASE("carry cap only when configured") {
        Trajectory t = one_frame_trajectory();
        t.frames[0].players[1].seeds_carried = 9;
        CHECK(validate_trajectory(t).empty());
        auto v = validate_trajectory(t, {.carry_cap = 5});
        REQUIRE(v.size() == 1);
        CHECK(v[0].field == "seeds_carried");
    }
    SUBCASE("cluster visibility") {
        Trajectory t = one_frame_trajectory();
        SeedCluster c;
        c.cluster_id = "c0";
        c.seeds_remaining = 0;
        c.visible = true;
        t.frames[0].seed_clusters.push_back(c);
        auto v = validate_trajectory(t);
        REQUIRE(v.size() == 1);
        CHECK(v[0].field == "visible");
    }
}

TEST_CASE("fault injection finds exactly the mutated field") {
    struct Mutation {
        const char* field;
        void (*apply)(Trajectory&);
    };
    const Mutation mutations[] = {
        {"health_fraction", [](Trajectory& t) { t.frames[1].players[3].health_fraction = -0.5; }},
        {"velocity",
         [](Trajectory& t) {
             t.frames[2].players[4].alive = false;
             t.frames[2].players[4].health_fraction = 0.0;
             t.frames[2].players[4].velocity = {0.0, 2.0};
         }},
        {"seeds_carried", [](Trajectory& t) { t.frames[0].players[5].seeds_carried = 99; }},
        {"tick", [](Trajectory& t) { t.frames[3].tick = 9; }},
        {"visible", [](Trajectory& t) { t.frames[1].seed_clusters[0].visible = false; }},
        {"game_id", [](Trajectory& t) { t.meta.game_id.clear(); }},
    };

    for (const Mutation& m : mutations) {
        Trajectory t = random_trajectory(77, 8);
        t.frames[1].seed_clusters[0].seeds_remaining = 5;
        t.frames[1].seed_clusters[0].visible = true;
        REQUIRE(validate_trajectory(t, {.carry_cap = 10}).empty());
        m.apply(t);
        auto v = validate_trajectory(t, {.carry_cap = 10});
        REQUIRE_MESSAGE(v.size() == 1, "field ", m.field);
        CHECK(v[0].field == m.field);
    }
}

TEST_SUITE_END();
