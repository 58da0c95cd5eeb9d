#include <doctest.h>

#include <map>

#include "tasksets/errors.hpp"
#include "tasksets/evaluate.hpp"
#include "tasksets/overlap.hpp"
#include "tasksets/pipeline.hpp"
#include "tasksets/rng.hpp"
#include "tests/test_support.hpp"

using namespace tasksets;
using namespace testsupport;

TEST_SUITE_BEGIN("overlap");

namespace {

MaskSeries blank_masks(const Registry& registry, int ticks) {
    MaskSeries m;
    m.ticks = ticks;
    m.afford.assign(registry.size(), Bits(ticks));
    m.complete.assign(registry.size(), Bits(ticks));
    m.ego_alive = Bits(ticks);
    for (int t = 0; t < ticks; ++t) m.ego_alive.set(t);
    return m;
}

} // namespace

TEST_CASE("jaccard entries from planted tick sets") {
    Registry registry;
    MaskSeries m = blank_masks(registry, 10);
    int i = registry.index_of("Attack_Approach_Damage_Enemy_Health_Good");
    int j = registry.index_of("Attempt_Direct_Pickup_Nearest_Seed_Cluster");
    int k = registry.index_of("Continue_To_Play_Solo");
    for (int t : {1, 2, 3}) m.afford[i].set(t);
    for (int t : {2, 3, 4}) m.afford[j].set(t);
    for (int t : {7, 8}) m.afford[k].set(t);

    OverlapMatrix ov = overlap_matrix({&m}, registry, OverlapKind::Affordance);
    CHECK(ov.values[i][j] == doctest::Approx(0.5)); // 2 / 4
    CHECK(ov.values[i][i] == 1.0);                  // occurs, so diagonal 1
    CHECK(ov.values[i][k] == 0.0);                  // disjoint
    int never = registry.index_of("Regroup_With_Allies");
    CHECK(ov.values[never][never] == 0.0); // absent rows get a 0 diagonal

    SUBCASE("symmetry and range everywhere") {
        Rng rng(55);
        MaskSeries r = blank_masks(registry, 200);
        for (int row = 0; row < registry.size(); ++row)
            for (int t = 0; t < 200; ++t)
                if (rng.uniform() < 0.2) r.afford[row].set(t);
        OverlapMatrix mat = overlap_matrix({&r}, registry, OverlapKind::Affordance);
        for (int a = 0; a < registry.size(); ++a) {
            for (int b = 0; b < registry.size(); ++b) {
                CHECK(mat.values[a][b] == mat.values[b][a]);
                CHECK(mat.values[a][b] >= 0.0);
                CHECK(mat.values[a][b] <= 1.0);
            }
        }
    }
    SUBCASE("conditional measure is row-normalized") {
        OverlapMatrix cond =
            overlap_matrix({&m}, registry, OverlapKind::Affordance, OverlapMeasure::Conditional);
        CHECK(cond.values[i][j] == doctest::Approx(2.0 / 3.0)); // P(j | i)
        CHECK(cond.values[j][i] == doctest::Approx(2.0 / 3.0)); // P(i | j), same counts here
        CHECK(cond.values[i][i] == 1.0);
    }
    SUBCASE("empty collection throws") {
        CHECK_THROWS_AS(overlap_matrix({}, registry, OverlapKind::Affordance), EmptyCollection);
    }
}

TEST_CASE("matrix differences") {
    Registry registry;
    Rng rng(77);
    MaskSeries m1 = blank_masks(registry, 100);
    MaskSeries m2 = blank_masks(registry, 100);
    for (int row = 0; row < registry.size(); ++row) {
        for (int t = 0; t < 100; ++t) {
            if (rng.uniform() < 0.3) m1.complete[row].set(t);
            if (rng.uniform() < 0.2) m2.complete[row].set(t);
        }
    }
    OverlapMatrix a = overlap_matrix({&m1}, registry, OverlapKind::Completion);
    OverlapMatrix b = overlap_matrix({&m2}, registry, OverlapKind::Completion);

    auto self = matrix_difference(a, a);
    for (const auto& row : self)
        for (double v : row) CHECK(v == 0.0);

    auto ab = matrix_difference(a, b);
    auto ba = matrix_difference(b, a);
    for (size_t r = 0; r < ab.size(); ++r)
        for (size_t c = 0; c < ab.size(); ++c) CHECK(ab[r][c] == -ba[r][c]);

    OverlapMatrix reordered = a;
    std::swap(reordered.taskset_ids[0], reordered.taskset_ids[1]);
    CHECK_THROWS_AS(matrix_difference(a, reordered), ShapeMismatch);
}

TEST_CASE("occupancy of a team glued together") {
    Registry registry;
    Trajectory t;
    t.meta = basic_meta();
    for (int k = 0; k < 30; ++k) {
        GameFrame f = basic_frame(t.meta, k);
        // Team A within 1000 units of p0; two teammates inside the regroup radius.
        f.players[0].position = {0, 0};
        f.players[1].position = {800, 0};
        f.players[2].position = {0, 900};
        f.players[3].position = {-700, 100};
        t.frames.push_back(f);
    }
    MaskSeries m = evaluate(t, "p0", registry);
    OccupancyRow row = solo_multi_occupancy({&m}, registry, "glued");
    CHECK(row.solo_time_pct == 0.0);
    CHECK(row.multi_time_pct == 100.0);
    CHECK(row.solo_completion_pct == 0.0);
    CHECK(row.diad_completion_pct == 0.0);
    CHECK(row.multi_completion_pct == 100.0);
    CHECK(row.afford_pct == 0.0); // teammates nearby, never afforded
}

TEST_CASE("occupancy splits always sum to 100 and exclude dead ticks") {
    Registry registry;
    for (uint64_t seed = 300; seed < 320; ++seed) {
        Trajectory t = random_trajectory(seed, 120);
        for (const auto& [player_id, entry] : t.meta.character_roster) {
            (void)entry;
            MaskSeries m = evaluate(t, player_id, registry);
            OccupancyRow row = solo_multi_occupancy({&m}, registry);
            double sum =
                row.solo_completion_pct + row.diad_completion_pct + row.multi_completion_pct;
            CHECK(sum == doctest::Approx(100.0).epsilon(1e-9));
            CHECK(row.alive_ticks == m.ego_alive.count());
        }
    }
}

TEST_CASE("pooled occupancy equals the tick-weighted pool of per-game rows") {
    Registry registry;
    Trajectory t1 = random_trajectory(501, 100);
    Trajectory t2 = random_trajectory(502, 140);
    MaskSeries m1 = evaluate(t1, "p2", registry);
    MaskSeries m2 = evaluate(t2, "p2", registry);

    OccupancyRow pooled = solo_multi_occupancy({&m1, &m2}, registry);
    OccupancyRow r1 = solo_multi_occupancy({&m1}, registry);
    OccupancyRow r2 = solo_multi_occupancy({&m2}, registry);

    double w1 = static_cast<double>(r1.alive_ticks);
    double w2 = static_cast<double>(r2.alive_ticks);
    double expected_solo_time = (r1.solo_time_pct * w1 + r2.solo_time_pct * w2) / (w1 + w2);
    CHECK(pooled.solo_time_pct == doctest::Approx(expected_solo_time).epsilon(1e-9));
    CHECK(pooled.alive_ticks == r1.alive_ticks + r2.alive_ticks);
}

TEST_CASE("fight overlap is zero without fight completions") {
    Registry registry;
    MaskSeries m = blank_masks(registry, 50);
    int solo = registry.index_of("Continue_To_Play_Solo");
    for (int t = 0; t < 50; t += 3) m.complete[solo].set(t);
    auto overlap = fight_overlap({&m}, registry);
    for (const auto& [id, v] : overlap) CHECK(v == 0.0);
}

TEST_CASE("fight overlap counts intersection over union") {
    Registry registry;
    MaskSeries m = blank_masks(registry, 10);
    int fight = registry.index_of("Attack_Approach_Damage_Enemy_Health_Good");
    int multi = registry.index_of("Regroup_With_Multiple_Allies");
    for (int t : {1, 2, 3, 4}) m.complete[fight].set(t);
    for (int t : {3, 4, 5, 6}) m.complete[multi].set(t);
    auto overlap = fight_overlap({&m}, registry);
    CHECK(overlap.at("Regroup_With_Multiple_Allies") == doctest::Approx(2.0 / 6.0));
    CHECK(overlap.at("Continue_To_Play_Solo") == 0.0);
}

namespace {

// Mixed-class focal population; aggression per class, shared sociality.
std::map<CharacterClass, std::vector<const MaskSeries*>> simulate_classes(
    const Registry& registry, std::vector<EvaluatedPlayer>& storage, double damage_aggression,
    double tank_aggression, double support_aggression, double sociality) {
    PopulationConfig pop;
    pop.master_seed = 4242;
    pop.base.map_half_extent = 4500;
    pop.base.ticks = 1200;
    pop.base.phase_collection_ticks = 120;
    pop.base.phase_deposit_ticks = 120;
    pop.npc_archetype = {0.7, 0.4, 0.45};
    struct ClassSpec {
        const char* character;
        double aggression;
    };
    const ClassSpec classes[3] = {{"striker", damage_aggression},
                                  {"warden", tank_aggression},
                                  {"mender", support_aggression}};
    for (const ClassSpec& cls : classes) {
        for (int k = 0; k < 6; ++k) {
            PopulationMember m;
            m.player_id = std::string(cls.character) + "_p" + std::to_string(k);
            m.character_name = cls.character;
            m.archetype = {cls.aggression, 0.3, sociality};
            m.games = 3;
            pop.members.push_back(m);
        }
    }
    PopulationOptions opts;
    storage = evaluate_simulated(make_population(pop), registry, opts);
    std::map<CharacterClass, std::vector<const MaskSeries*>> by_class;
    for (const auto& p : storage)
        for (const MaskSeries& m : p.game_masks) by_class[p.character_class].push_back(&m);
    return by_class;
}

} // namespace

TEST_CASE("damage-class players with the most aggressive style out-fight the rest") {
    Registry registry;
    std::vector<EvaluatedPlayer> storage;
    auto by_class = simulate_classes(registry, storage, 0.95, 0.4, 0.3, 0.45);
    REQUIRE(by_class.size() == 3);

    std::map<CharacterClass, double> max_fight;
    for (const auto& [cls, masks] : by_class) {
        double best = 0.0;
        for (const auto& [id, v] : fight_overlap(masks, registry)) best = std::max(best, v);
        max_fight[cls] = best;
    }
    CHECK(max_fight[CharacterClass::Damage] > max_fight[CharacterClass::Support]);
    CHECK(max_fight[CharacterClass::Damage] > max_fight[CharacterClass::Tank]);
}

TEST_CASE("group-time tallies match mask-based occupancy at the regroup radius") {
    Registry registry;
    std::vector<EvaluatedPlayer> storage;
    simulate_classes(registry, storage, 0.7, 0.5, 0.4, 0.4);
    REQUIRE(!storage.empty());
    for (const EvaluatedPlayer& p : storage) {
        OccupancyRow row = solo_multi_occupancy(p.mask_ptrs(), registry);
        CHECK(p.alive_ticks == row.alive_ticks);
        double solo_pct = 100.0 * static_cast<double>(p.solo_time_ticks) /
                          static_cast<double>(p.alive_ticks);
        double multi_pct = 100.0 * static_cast<double>(p.multi_time_ticks) /
                           static_cast<double>(p.alive_ticks);
        CHECK(solo_pct == doctest::Approx(row.solo_time_pct).epsilon(1e-12));
        CHECK(multi_pct == doctest::Approx(row.multi_time_pct).epsilon(1e-12));
    }
}

TEST_CASE("sociable fighters engage in company for every class") {
    Registry registry;
    std::vector<EvaluatedPlayer> storage;
    auto by_class = simulate_classes(registry, storage, 0.9, 0.9, 0.9, 0.45);
    REQUIRE(by_class.size() == 3);

    for (const auto& [cls, masks] : by_class) {
        auto overlap = fight_overlap(masks, registry);
        CHECK(overlap.at("Regroup_With_Multiple_Allies") > overlap.at("Continue_To_Play_Solo"));
    }
}

TEST_SUITE_END();
