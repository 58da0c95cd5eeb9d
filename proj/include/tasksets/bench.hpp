#pragma once

namespace tasksets {

// Evaluation-throughput benchmark over an in-memory synthetic population:
// the OpenMP engine at one job and at `jobs` jobs, plus the serial reference
// implementation, all producing masks for every player of every game.
struct BenchResult {
    long games = 0;
    long ticks = 0;
    long evals = 0; // frame-player evaluations per run
    int jobs = 0;
    int hardware_threads = 0;
    double engine_single_secs = 0.0;
    double engine_jobs_secs = 0.0;
    double reference_secs = 0.0;
    bool masks_match_reference = false;

    double single_evals_per_sec() const {
        return engine_single_secs > 0 ? evals / engine_single_secs : 0.0;
    }
    double jobs_evals_per_sec() const {
        return engine_jobs_secs > 0 ? evals / engine_jobs_secs : 0.0;
    }
    double reference_evals_per_sec() const {
        return reference_secs > 0 ? evals / reference_secs : 0.0;
    }
    double speedup() const {
        return engine_jobs_secs > 0 ? engine_single_secs / engine_jobs_secs : 0.0;
    }
};

BenchResult run_bench(int games, int ticks, int jobs);

} // namespace tasksets
