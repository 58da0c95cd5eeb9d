#include "tasksets/bench.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <thread>

#include "reference/naive.hpp"
#include "tasksets/cli.hpp"
#include "tasksets/csv.hpp"
#include "tasksets/errors.hpp"
#include "tasksets/evaluate.hpp"
#include "tasksets/simulator.hpp"

namespace tasksets {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Trajectory> build_population(int games, int ticks) {
    PopulationConfig pop;
    pop.master_seed = 20240501;
    pop.base.ticks = ticks;
    pop.base.phase_collection_ticks = std::max(1, ticks / 4);
    pop.base.phase_deposit_ticks = std::max(1, ticks / 4);

    int members = std::max(1, games / 3);
    for (int m = 0; m < members; ++m) {
        PopulationMember member;
        member.player_id = "p" + std::to_string(m);
        member.character_name = "striker";
        member.archetype.aggression = 0.1 + 0.8 * (m % 9) / 8.0;
        member.archetype.exploration = 0.1 + 0.8 * ((m / 3) % 9) / 8.0;
        member.archetype.sociality = 0.1 + 0.8 * ((m / 9) % 9) / 8.0;
        member.games = 3;
        pop.members.push_back(std::move(member));
    }
    std::vector<SimConfig> configs = make_population(pop);
    if (static_cast<int>(configs.size()) > games) configs.resize(games);

    std::vector<Trajectory> out(configs.size());
#pragma omp parallel for schedule(dynamic)
    for (size_t i = 0; i < configs.size(); ++i) out[i] = simulate(configs[i]);
    return out;
}

bool masks_equal(const MaskSeries& engine, const naive::BoolMasks& reference) {
    if (engine.ticks != reference.ticks) return false;
    for (size_t row = 0; row < engine.afford.size(); ++row) {
        for (int t = 0; t < engine.ticks; ++t) {
            if (engine.afford[row].get(t) != reference.afford[row][t]) return false;
            if (engine.complete[row].get(t) != reference.complete[row][t]) return false;
        }
    }
    return true;
}

} // namespace

BenchResult run_bench(int games, int ticks, int jobs) {
    if (games < 1) throw InvalidConfig("games", "must be >= 1");
    if (ticks < 1) throw InvalidConfig("ticks", "must be >= 1");
    if (jobs < 1) throw InvalidConfig("jobs", "must be >= 1");

    Registry registry;
    std::vector<Trajectory> population = build_population(games, ticks);

    BenchResult result;
    result.games = static_cast<long>(population.size());
    result.ticks = ticks;
    result.jobs = jobs;
    result.hardware_threads = static_cast<int>(std::thread::hardware_concurrency());
    for (const Trajectory& t : population)
        result.evals += static_cast<long>(t.frames.size()) * 8;

    // Warm-up pass so first-touch costs stay out of the timings.
    evaluate_all(population.front(), registry);

    auto start = Clock::now();
    auto masks_single = evaluate_games(population, registry, {}, 1);
    result.engine_single_secs = seconds_since(start);

    start = Clock::now();
    auto masks_jobs = evaluate_games(population, registry, {}, jobs);
    result.engine_jobs_secs = seconds_since(start);

    start = Clock::now();
    std::vector<naive::BoolMasks> reference;
    reference.reserve(8);
    for (const Trajectory& t : population) {
        for (const auto& entry : t.meta.character_roster) {
            naive::BoolMasks masks = naive::eval_masks(t, entry.first);
            if (reference.size() < 8) reference.push_back(std::move(masks));
        }
    }
    result.reference_secs = seconds_since(start);

    // Spot-check the first game against the reference.
    result.masks_match_reference = true;
    for (size_t slot = 0; slot < reference.size(); ++slot) {
        if (!masks_equal(masks_single[0][slot], reference[slot])) {
            result.masks_match_reference = false;
            break;
        }
    }
    if (masks_jobs.size() != masks_single.size()) result.masks_match_reference = false;
    return result;
}

namespace cli {

void cmd_bench(const BenchArgs& args) {
    BenchResult r = run_bench(args.games, args.ticks, args.jobs);

    std::printf("population: %ld games x %ld ticks, %ld frame-player evaluations\n", r.games,
                r.ticks, r.evals);
    std::printf("hardware threads: %d\n", r.hardware_threads);
    std::printf("engine  1 job : %8.3f s  %12.0f evals/s\n", r.engine_single_secs,
                r.single_evals_per_sec());
    std::printf("engine %2d jobs: %8.3f s  %12.0f evals/s  (speedup %.2fx)\n", r.jobs,
                r.engine_jobs_secs, r.jobs_evals_per_sec(), r.speedup());
    std::printf("reference     : %8.3f s  %12.0f evals/s\n", r.reference_secs,
                r.reference_evals_per_sec());
    std::printf("engine matches reference: %s\n", r.masks_match_reference ? "yes" : "NO");

    if (!args.out_dir.empty()) {
        std::filesystem::create_directories(args.out_dir);
        std::ofstream out(args.out_dir + "/bench.csv", std::ios::binary);
        if (!out) throw IoError("cannot write bench.csv in " + args.out_dir);
        out << "games,ticks,evals,jobs,hardware_threads,engine_single_secs,engine_jobs_secs,"
               "reference_secs,single_evals_per_sec,jobs_evals_per_sec,speedup,matches\n";
        out << r.games << ',' << r.ticks << ',' << r.evals << ',' << r.jobs << ','
            << r.hardware_threads << ',' << csv::format_double(r.engine_single_secs) << ','
            << csv::format_double(r.engine_jobs_secs) << ','
            << csv::format_double(r.reference_secs) << ','
            << csv::format_double(r.single_evals_per_sec()) << ','
            << csv::format_double(r.jobs_evals_per_sec()) << ','
            << csv::format_double(r.speedup()) << ',' << (r.masks_match_reference ? 1 : 0)
            << '\n';
    }
}

} // namespace cli

} // namespace tasksets
