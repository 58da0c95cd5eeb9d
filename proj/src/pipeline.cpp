#include "tasksets/pipeline.hpp"

#include <omp.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "tasksets/errors.hpp"
#include "tasksets/log.hpp"

namespace fs = std::filesystem;

namespace tasksets {

namespace {

bool matches_filter(const RosterEntry& entry, const std::string& filter) {
    if (filter.empty()) return true;
    if (entry.character_name == filter) return true;
    return filter == to_string(entry.character_class);
}

struct GameRef {
    int game = 0; // index into the game source
    std::string game_id;
};

struct PlayerKey {
    std::string player_id;
    std::string character_name;
    bool operator<(const PlayerKey& o) const {
        if (player_id != o.player_id) return player_id < o.player_id;
        return character_name < o.character_name;
    }
};

struct GroupTime {
    long alive = 0;
    long solo = 0;
    long multi = 0;
};

GroupTime tally_group_time(const Trajectory& t, const std::string& player_id, double radius) {
    Team team = t.meta.character_roster.at(player_id).team;
    const double r2 = radius * radius;
    GroupTime out;
    for (const GameFrame& f : t.frames) {
        const PlayerState* ego = nullptr;
        for (const PlayerState& p : f.players)
            if (p.player_id == player_id) ego = &p;
        if (!ego || !ego->alive) continue;
        ++out.alive;
        bool any = false;
        double best = 0.0;
        for (const PlayerState& p : f.players) {
            if (&p == ego || !p.alive) continue;
            if (t.meta.character_roster.at(p.player_id).team != team) continue;
            double d2v = dist2(ego->position, p.position);
            if (!any || d2v < best) {
                any = true;
                best = d2v;
            }
        }
        if (!any || best > r2) ++out.solo;
        else if (best < r2) ++out.multi;
    }
    return out;
}

// Shared tail of the three entry points: given per-game metas and a loader,
// group qualified players, evaluate their games in parallel, pull final
// scores.
std::vector<EvaluatedPlayer> evaluate_from_source(
    const std::vector<GameMeta>& metas, const std::function<Trajectory(int)>& load_game,
    const Registry& registry, const PopulationOptions& opts) {
    std::map<PlayerKey, std::vector<GameRef>> groups;
    std::map<PlayerKey, CharacterClass> classes;
    for (size_t g = 0; g < metas.size(); ++g) {
        for (const auto& [player_id, entry] : metas[g].character_roster) {
            if (!matches_filter(entry, opts.character_filter)) continue;
            PlayerKey key{player_id, entry.character_name};
            groups[key].push_back({static_cast<int>(g), metas[g].game_id});
            classes[key] = entry.character_class;
        }
    }

    // min-games filter, then a deterministic game order per player.
    std::vector<std::pair<PlayerKey, std::vector<GameRef>>> qualified;
    for (auto& [key, refs] : groups) {
        if (static_cast<int>(refs.size()) < opts.min_games) continue;
        std::sort(refs.begin(), refs.end(),
                  [](const GameRef& a, const GameRef& b) { return a.game_id < b.game_id; });
        qualified.emplace_back(key, refs);
    }

    // Which games still matter, and which qualified players live in each.
    std::map<int, std::vector<int>> players_of_game;
    for (size_t q = 0; q < qualified.size(); ++q)
        for (const GameRef& ref : qualified[q].second)
            players_of_game[ref.game].push_back(static_cast<int>(q));

    std::vector<int> games;
    for (const auto& [game, _] : players_of_game) games.push_back(game);

    std::vector<EvaluatedPlayer> out(qualified.size());
    for (size_t q = 0; q < qualified.size(); ++q) {
        out[q].player_id = qualified[q].first.player_id;
        out[q].character_name = qualified[q].first.character_name;
        out[q].character_class = classes[qualified[q].first];
        out[q].game_masks.resize(qualified[q].second.size());
    }

    // (player, game) slot lookup: game index -> position in the player's list.
    std::vector<std::map<int, int>> slot_of(qualified.size());
    for (size_t q = 0; q < qualified.size(); ++q)
        for (size_t k = 0; k < qualified[q].second.size(); ++k)
            slot_of[q][qualified[q].second[k].game] = static_cast<int>(k);

    std::vector<std::vector<double>> scores(qualified.size());
    std::vector<std::vector<GroupTime>> group_times(qualified.size());
    for (size_t q = 0; q < qualified.size(); ++q) {
        scores[q].resize(qualified[q].second.size(), 0.0);
        group_times[q].resize(qualified[q].second.size());
    }

    int jobs = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (size_t gi = 0; gi < games.size(); ++gi) {
        try {
            int game = games[gi];
            Trajectory traj = load_game(game);
            for (int q : players_of_game[game]) {
                int slot = slot_of[q].at(game);
                out[q].game_masks[slot] =
                    evaluate(traj, qualified[q].first.player_id, registry, opts.eval);
                group_times[q][slot] = tally_group_time(traj, qualified[q].first.player_id,
                                                        opts.group_time_radius);
                const GameFrame& last = traj.frames.back();
                for (const PlayerState& p : last.players)
                    if (p.player_id == qualified[q].first.player_id) scores[q][slot] = p.score;
            }
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);

    for (size_t q = 0; q < qualified.size(); ++q) {
        double sum = 0.0;
        for (double s : scores[q]) sum += s;
        out[q].mean_score = scores[q].empty() ? 0.0 : sum / scores[q].size();
        for (const GroupTime& g : group_times[q]) {
            out[q].alive_ticks += g.alive;
            out[q].solo_time_ticks += g.solo;
            out[q].multi_time_ticks += g.multi;
        }
    }
    return out;
}

std::vector<std::string> list_trajectory_files(const std::string& dir) {
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
    std::vector<std::string> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() == ".jsonl") files.push_back(entry.path().string());
    }
    if (files.empty()) throw IoError("no trajectory files (*.jsonl) in " + dir);
    std::sort(files.begin(), files.end());
    return files;
}

GameMeta read_meta_line(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw MalformedRecord(1, "missing meta record in " + path);
    return parse_meta_record(line);
}

} // namespace

std::vector<GameMeta> scan_directory_metas(const std::string& dir, int jobs) {
    std::vector<std::string> files = list_trajectory_files(dir);
    std::vector<GameMeta> metas(files.size());
    if (jobs <= 0) jobs = omp_get_max_threads();
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (size_t i = 0; i < files.size(); ++i) {
        try {
            metas[i] = read_meta_line(files[i]);
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return metas;
}

std::vector<EvaluatedPlayer> evaluate_directory(const std::string& dir, const Registry& registry,
                                                const PopulationOptions& opts) {
    std::vector<std::string> files = list_trajectory_files(dir);
    log::info("scanning %zu trajectory files in %s", files.size(), dir.c_str());
    std::vector<GameMeta> metas = scan_directory_metas(dir, opts.jobs);
    return evaluate_from_source(
        metas, [&](int g) { return parse_trajectory_file(files[g]); }, registry, opts);
}

std::vector<EvaluatedPlayer> evaluate_simulated(const std::vector<SimConfig>& configs,
                                                const Registry& registry,
                                                const PopulationOptions& opts) {
    std::vector<GameMeta> metas(configs.size());
    for (size_t i = 0; i < configs.size(); ++i) {
        metas[i].game_id = configs[i].game_id;
        for (const PlayerSetup& p : configs[i].players)
            metas[i].character_roster[p.player_id] =
                RosterEntry{p.character_name, p.spec.character_class, p.team};
    }
    return evaluate_from_source(
        metas, [&](int g) { return simulate(configs[g]); }, registry, opts);
}

std::vector<EvaluatedPlayer> evaluate_trajectories(const std::vector<Trajectory>& games,
                                                   const Registry& registry,
                                                   const PopulationOptions& opts) {
    std::vector<GameMeta> metas(games.size());
    for (size_t i = 0; i < games.size(); ++i) metas[i] = games[i].meta;
    return evaluate_from_source(
        metas, [&](int g) { return games[g]; }, registry, opts);
}

ThemeAnalysis analyze_theme(const std::vector<EvaluatedPlayer>& players, const Registry& registry,
                            Theme theme, int horizon, int min_games, bool average_per_game) {
    ThemeAnalysis out;
    for (const EvaluatedPlayer& player : players) {
        try {
            PlayerFeatureVector fv =
                average_per_game
                    ? player_features_avg(player.mask_ptrs(), registry, theme, player.player_id,
                                          player.character_name, min_games, horizon)
                    : player_features(player.mask_ptrs(), registry, theme, player.player_id,
                                      player.character_name, min_games, horizon);
            out.features.push_back(std::move(fv));
            out.mean_scores.push_back(player.mean_score);
        } catch (const NoAffordances& e) {
            out.skipped.push_back(player.player_id);
            out.skip_reasons.push_back(e.what());
        }
    }
    return out;
}

std::vector<std::string> write_population_files(const std::vector<SimConfig>& configs,
                                                const std::string& out_dir, int jobs) {
    fs::create_directories(out_dir);
    std::vector<std::string> names(configs.size());
    if (jobs <= 0) jobs = omp_get_max_threads();
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (size_t i = 0; i < configs.size(); ++i) {
        try {
            Trajectory traj = simulate(configs[i]);
            std::string name = configs[i].game_id + ".jsonl";
            serialize_trajectory_file(traj, out_dir + "/" + name);
            names[i] = name;
        } catch (...) {
#pragma omp critical
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return names;
}

} // namespace tasksets
