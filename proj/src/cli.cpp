#include "tasksets/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "tasksets/alignment.hpp"
#include "tasksets/csv.hpp"
#include "tasksets/curves.hpp"
#include "tasksets/embed.hpp"
#include "tasksets/errors.hpp"
#include "tasksets/log.hpp"
#include "tasksets/manifest.hpp"
#include "tasksets/overlap.hpp"
#include "tasksets/pipeline.hpp"
#include "tasksets/registry.hpp"
#include "tasksets/simulator.hpp"

namespace fs = std::filesystem;

namespace tasksets::cli {

namespace {

std::string registry_hash(const Registry& registry) {
    return fnv1a64_hex(registry.dump_json());
}

void ensure_out_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory " + dir);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    return out;
}

std::map<std::string, std::string> dir_digests(const std::string& dir) {
    std::map<std::string, std::string> out;
    if (!fs::is_directory(dir)) throw IoError("not a directory: " + dir);
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".jsonl") continue;
        out[entry.path().filename().string()] = file_digest(entry.path().string());
    }
    return out;
}

Theme theme_from_string(const std::string& s) {
    if (s == "fight_flight") return Theme::FightFlight;
    if (s == "explore_exploit") return Theme::ExploreExploit;
    throw InvalidConfig("theme", "must be fight_flight or explore_exploit");
}

// features.csv layout: identity columns, score/ratio means, the feature
// block, then one validity flag per pair.
void write_features_csv(std::ostream& out, const Registry& registry, Theme theme,
                        const ThemeAnalysis& analysis) {
    std::vector<std::string> names = feature_names(registry, theme);
    std::vector<std::string> pairs = registry.pair_ids(theme);
    out << "player_id,character,games_used,mean_score,mean_auc_ratio";
    for (const std::string& n : names) out << ',' << n;
    for (const std::string& p : pairs) out << ',' << p << "_valid";
    out << '\n';
    for (size_t i = 0; i < analysis.features.size(); ++i) {
        const PlayerFeatureVector& fv = analysis.features[i];
        out << fv.player_id << ',' << fv.character_name << ',' << fv.games_used << ','
            << csv::format_double(analysis.mean_scores[i]) << ','
            << csv::format_double(fv.mean_auc_ratio());
        for (double v : fv.values) out << ',' << csv::format_double(v);
        for (bool valid : fv.pair_valid) out << ',' << (valid ? 1 : 0);
        out << '\n';
    }
}

struct FeatureFile {
    std::vector<std::string> player_ids;
    std::vector<std::string> characters;
    std::vector<int> games_used;
    std::vector<double> mean_scores;
    std::vector<double> mean_ratios;
    std::vector<std::string> feature_columns;
    std::vector<std::vector<double>> rows;
};

FeatureFile read_features_csv(const std::string& path) {
    csv::Table table = csv::read_file(path);
    FeatureFile out;
    std::vector<int> feature_cols;
    for (size_t c = 0; c < table.header.size(); ++c) {
        const std::string& name = table.header[c];
        if (name == "player_id" || name == "character" || name == "games_used" ||
            name == "mean_score" || name == "mean_auc_ratio")
            continue;
        if (name.size() > 6 && name.substr(name.size() - 6) == "_valid") continue;
        feature_cols.push_back(static_cast<int>(c));
        out.feature_columns.push_back(name);
    }
    int id_col = table.column("player_id");
    int char_col = table.column("character");
    int games_col = table.column("games_used");
    int score_col = table.column("mean_score");
    int ratio_col = table.column("mean_auc_ratio");
    if (id_col < 0 || char_col < 0 || games_col < 0 || score_col < 0 || ratio_col < 0)
        throw MalformedRecord(1, "not a features csv: " + path);

    for (const auto& row : table.rows) {
        out.player_ids.push_back(row[id_col]);
        out.characters.push_back(row[char_col]);
        out.games_used.push_back(static_cast<int>(csv::to_double(row[games_col])));
        out.mean_scores.push_back(csv::to_double(row[score_col]));
        out.mean_ratios.push_back(csv::to_double(row[ratio_col]));
        std::vector<double> values;
        values.reserve(feature_cols.size());
        for (int c : feature_cols) values.push_back(csv::to_double(row[c]));
        out.rows.push_back(std::move(values));
    }
    return out;
}

const char* class_label(CharacterClass c) { return to_string(c); }

} // namespace

void cmd_simulate(const SimulateArgs& args) {
    if (!fs::is_regular_file(args.config_path))
        throw InvalidConfig(args.config_path, "config file not found");
    PopulationConfig pop = load_population_config(args.config_path);
    if (args.seed) pop.master_seed = *args.seed;

    std::vector<SimConfig> configs = make_population(pop);
    ensure_out_dir(args.out_dir);
    std::vector<std::string> files = write_population_files(configs, args.out_dir, args.jobs);
    log::info("simulated %zu games into %s", files.size(), args.out_dir.c_str());

    Registry registry;
    RunManifest manifest;
    manifest.command = "simulate";
    manifest.master_seed = pop.master_seed;
    manifest.registry_hash = registry_hash(registry);
    manifest.config["config_path"] = args.config_path;
    manifest.config["games"] = std::to_string(configs.size());
    manifest.input_digests[fs::path(args.config_path).filename().string()] =
        file_digest(args.config_path);
    // Output digests let reruns be compared without hashing externally.
    for (const std::string& name : files)
        manifest.config["out:" + name] = file_digest(args.out_dir + "/" + name);
    write_manifest(args.out_dir, manifest);
}

void cmd_analyze(const AnalyzeArgs& args) {
    Theme theme = theme_from_string(args.theme);
    Registry registry;

    PopulationOptions opts;
    opts.min_games = args.min_games;
    opts.character_filter = args.character;
    opts.jobs = args.jobs;
    opts.eval.fight_counts_kill_credit = !args.no_kill_credit;

    std::vector<EvaluatedPlayer> players = evaluate_directory(args.in_dir, registry, opts);
    ThemeAnalysis analysis =
        analyze_theme(players, registry, theme, args.horizon, args.min_games, args.avg_per_game);

    ensure_out_dir(args.out_dir);
    {
        auto out = open_out(args.out_dir + "/features.csv");
        write_features_csv(out, registry, theme, analysis);
    }
    {
        auto out = open_out(args.out_dir + "/curves.csv");
        write_curve_csv_header(out, true);
        for (const EvaluatedPlayer& player : players) {
            for (const std::string& pair : registry.pair_ids(theme)) {
                std::vector<std::string> ids = registry.members_of(pair);
                try {
                    auto curves =
                        completion_curve(player.mask_ptrs(), registry, ids, args.horizon);
                    for (const std::string& id : ids)
                        write_curve_csv_rows(out, id, curves.at(id), player.player_id);
                } catch (const NoAffordances&) {
                    // Pair never afforded for this player; features carry the flag.
                }
            }
        }
    }
    {
        auto out = open_out(args.out_dir + "/skipped.txt");
        for (size_t i = 0; i < analysis.skipped.size(); ++i)
            out << analysis.skipped[i] << ": " << analysis.skip_reasons[i] << '\n';
    }
    log::info("analyzed %zu players (%zu skipped)", analysis.features.size(),
              analysis.skipped.size());

    RunManifest manifest;
    manifest.command = "analyze";
    manifest.registry_hash = registry_hash(registry);
    manifest.config["in_dir"] = args.in_dir;
    manifest.config["theme"] = args.theme;
    manifest.config["character"] = args.character;
    manifest.config["horizon"] = std::to_string(args.horizon);
    manifest.config["min_games"] = std::to_string(args.min_games);
    manifest.config["avg_per_game"] = args.avg_per_game ? "true" : "false";
    manifest.config["kill_credit"] = args.no_kill_credit ? "false" : "true";
    manifest.input_digests = dir_digests(args.in_dir);
    write_manifest(args.out_dir, manifest);
}

void cmd_embed(const EmbedArgs& args) {
    FeatureFile features = read_features_csv(args.features_csv);
    EmbedMethod method = embed_method_from_string(args.method);
    std::vector<Coords2> coords = embed_2d(features.rows, method, args.seed);

    ensure_out_dir(args.out_dir);
    auto out = open_out(args.out_dir + "/manifold.csv");
    out << "player_id,character,games_used";
    for (const std::string& n : features.feature_columns) out << ',' << n;
    out << ",x,y,color_reward,color_ratio\n";
    for (size_t i = 0; i < features.rows.size(); ++i) {
        out << features.player_ids[i] << ',' << features.characters[i] << ','
            << features.games_used[i];
        for (double v : features.rows[i]) out << ',' << csv::format_double(v);
        out << ',' << csv::format_double(coords[i][0]) << ',' << csv::format_double(coords[i][1])
            << ',' << csv::format_double(features.mean_scores[i]) << ','
            << csv::format_double(features.mean_ratios[i]) << '\n';
    }

    Registry registry;
    RunManifest manifest;
    manifest.command = "embed";
    manifest.master_seed = args.seed;
    manifest.registry_hash = registry_hash(registry);
    manifest.config["features_csv"] = args.features_csv;
    manifest.config["method"] = args.method;
    manifest.input_digests[fs::path(args.features_csv).filename().string()] =
        file_digest(args.features_csv);
    write_manifest(args.out_dir, manifest);
}

void cmd_compare(const CompareArgs& args) {
    FeatureFile a = read_features_csv(args.features_a);
    FeatureFile b = read_features_csv(args.features_b);
    if (a.feature_columns != b.feature_columns)
        throw ShapeMismatch("feature columns differ between populations");

    AlignmentReport report = compare_populations(a.rows, b.rows, a.feature_columns, args.seed);
    ensure_out_dir(args.out_dir);
    auto out = open_out(args.out_dir + "/alignment.json");
    out << alignment_report_json(report);

    Registry registry;
    RunManifest manifest;
    manifest.command = "compare";
    manifest.master_seed = args.seed;
    manifest.registry_hash = registry_hash(registry);
    manifest.config["features_a"] = args.features_a;
    manifest.config["features_b"] = args.features_b;
    manifest.input_digests["a/" + fs::path(args.features_a).filename().string()] =
        file_digest(args.features_a);
    manifest.input_digests["b/" + fs::path(args.features_b).filename().string()] =
        file_digest(args.features_b);
    write_manifest(args.out_dir, manifest);
}

void cmd_overlap(const OverlapArgs& args) {
    Registry registry;
    if (args.measure != "jaccard" && args.measure != "conditional")
        throw InvalidConfig("measure", "must be jaccard or conditional");
    OverlapMeasure measure =
        args.measure == "conditional" ? OverlapMeasure::Conditional : OverlapMeasure::Jaccard;

    PopulationOptions opts;
    opts.min_games = args.min_games;
    opts.jobs = args.jobs;
    std::vector<EvaluatedPlayer> players = evaluate_directory(args.in_dir, registry, opts);

    std::map<CharacterClass, std::vector<const MaskSeries*>> by_class;
    for (const EvaluatedPlayer& p : players)
        for (const MaskSeries& m : p.game_masks) by_class[p.character_class].push_back(&m);

    ensure_out_dir(args.out_dir);
    std::map<CharacterClass, OverlapMatrix> afford, complete;
    for (const auto& [cls, masks] : by_class) {
        afford[cls] =
            overlap_matrix(masks, registry, OverlapKind::Affordance, measure, class_label(cls));
        complete[cls] =
            overlap_matrix(masks, registry, OverlapKind::Completion, measure, class_label(cls));
        auto out_a = open_out(args.out_dir + "/overlap_affordance_" + class_label(cls) + ".csv");
        write_overlap_csv(out_a, afford[cls]);
        auto out_c = open_out(args.out_dir + "/overlap_completion_" + class_label(cls) + ".csv");
        write_overlap_csv(out_c, complete[cls]);
    }

    auto write_diffs = [&](const std::map<CharacterClass, OverlapMatrix>& matrices,
                           const std::string& kind) {
        const std::pair<CharacterClass, CharacterClass> pairs[] = {
            {CharacterClass::Tank, CharacterClass::Support},
            {CharacterClass::Damage, CharacterClass::Support},
            {CharacterClass::Damage, CharacterClass::Tank},
        };
        for (const auto& [lhs, rhs] : pairs) {
            auto l = matrices.find(lhs);
            auto r = matrices.find(rhs);
            if (l == matrices.end() || r == matrices.end()) continue;
            auto diff = matrix_difference(l->second, r->second);
            auto out = open_out(args.out_dir + "/overlap_" + kind + "_diff_" +
                                class_label(lhs) + "_minus_" + class_label(rhs) + ".csv");
            write_difference_csv(out, l->second.taskset_ids, diff);
        }
    };
    write_diffs(afford, "affordance");
    write_diffs(complete, "completion");

    {
        auto out = open_out(args.out_dir + "/fight_overlap.csv");
        out << "class,taskset_id,overlap\n";
        for (const auto& [cls, masks] : by_class) {
            std::map<std::string, double> rows = fight_overlap(masks, registry);
            for (const auto& [id, value] : rows)
                out << class_label(cls) << ',' << id << ',' << csv::format_double(value) << '\n';
        }
    }

    RunManifest manifest;
    manifest.command = "overlap";
    manifest.registry_hash = registry_hash(registry);
    manifest.config["in_dir"] = args.in_dir;
    manifest.config["measure"] = args.measure;
    manifest.config["min_games"] = std::to_string(args.min_games);
    manifest.input_digests = dir_digests(args.in_dir);
    write_manifest(args.out_dir, manifest);
}

void cmd_occupancy(const OccupancyArgs& args) {
    Registry registry;
    PopulationOptions opts;
    opts.min_games = args.min_games;
    opts.jobs = args.jobs;
    opts.group_time_radius = args.group_radius;
    std::vector<EvaluatedPlayer> players = evaluate_directory(args.in_dir, registry, opts);

    std::map<std::string, std::vector<const EvaluatedPlayer*>> by_character;
    std::map<CharacterClass, std::vector<const EvaluatedPlayer*>> by_class;
    for (const EvaluatedPlayer& p : players) {
        by_character[p.character_name].push_back(&p);
        by_class[p.character_class].push_back(&p);
    }

    ensure_out_dir(args.out_dir);
    auto out = open_out(args.out_dir + "/occupancy.csv");
    out << "character,games,alive_ticks,afford_pct,solo_completion_pct,diad_completion_pct,"
           "multi_completion_pct,solo_time_pct,multi_time_pct\n";
    auto write_group = [&](const std::string& label,
                           const std::vector<const EvaluatedPlayer*>& group) {
        std::vector<const MaskSeries*> masks;
        long alive = 0, solo = 0, multi = 0;
        for (const EvaluatedPlayer* p : group) {
            for (const MaskSeries& m : p->game_masks) masks.push_back(&m);
            alive += p->alive_ticks;
            solo += p->solo_time_ticks;
            multi += p->multi_time_ticks;
        }
        OccupancyRow row = solo_multi_occupancy(masks, registry, label);
        // Solo/multi time reported at the configured radius.
        if (alive > 0) {
            row.solo_time_pct = 100.0 * static_cast<double>(solo) / static_cast<double>(alive);
            row.multi_time_pct = 100.0 * static_cast<double>(multi) / static_cast<double>(alive);
        }
        out << row.label << ',' << row.games << ',' << row.alive_ticks << ','
            << csv::format_double(row.afford_pct) << ','
            << csv::format_double(row.solo_completion_pct) << ','
            << csv::format_double(row.diad_completion_pct) << ','
            << csv::format_double(row.multi_completion_pct) << ','
            << csv::format_double(row.solo_time_pct) << ','
            << csv::format_double(row.multi_time_pct) << '\n';
    };
    for (const auto& [name, group] : by_character) write_group(name, group);
    for (const auto& [cls, group] : by_class)
        write_group(std::string("class:") + class_label(cls), group);

    RunManifest manifest;
    manifest.command = "occupancy";
    manifest.registry_hash = registry_hash(registry);
    manifest.config["in_dir"] = args.in_dir;
    manifest.config["min_games"] = std::to_string(args.min_games);
    manifest.config["group_radius"] = csv::format_double(args.group_radius);
    manifest.input_digests = dir_digests(args.in_dir);
    write_manifest(args.out_dir, manifest);
}

void cmd_switch(const SwitchArgs& args) {
    if (args.character_a.empty() || args.character_b.empty())
        throw InvalidConfig("characters", "switch needs --a and --b character names");
    Registry registry;
    PopulationOptions opts;
    opts.min_games = args.min_games;
    opts.jobs = args.jobs;
    std::vector<EvaluatedPlayer> players = evaluate_directory(args.in_dir, registry, opts);

    // Each character's qualified population anchors its own median;
    // transitions are tabulated over players qualified on both.
    std::map<std::string, double> ratio_a, ratio_b;
    std::vector<double> pop_a, pop_b;
    for (const EvaluatedPlayer& p : players) {
        if (p.character_name != args.character_a && p.character_name != args.character_b)
            continue;
        try {
            PlayerFeatureVector fv =
                player_features(p.mask_ptrs(), registry, Theme::FightFlight, p.player_id,
                                p.character_name, args.min_games, args.horizon);
            double ratio = fv.mean_auc_ratio();
            if (p.character_name == args.character_a) {
                ratio_a[p.player_id] = ratio;
                pop_a.push_back(ratio);
            } else {
                ratio_b[p.player_id] = ratio;
                pop_b.push_back(ratio);
            }
        } catch (const NoAffordances&) {
        }
    }
    if (pop_a.empty() || pop_b.empty())
        throw EmptyCollection("no qualified players on one of the characters");

    std::vector<std::string> dual;
    for (const auto& [id, _] : ratio_a)
        if (ratio_b.count(id)) dual.push_back(id);

    std::vector<Strategy> on_a, on_b;
    for (const std::string& id : dual) {
        on_a.push_back(classify_strategy(ratio_a.at(id), pop_a));
        on_b.push_back(classify_strategy(ratio_b.at(id), pop_b));
    }

    // Players who appear on both characters but fell to the min-games filter
    // on either side.
    std::map<std::string, int> games_a, games_b;
    for (const GameMeta& meta : scan_directory_metas(args.in_dir, args.jobs)) {
        for (const auto& [player_id, entry] : meta.character_roster) {
            if (entry.character_name == args.character_a) ++games_a[player_id];
            if (entry.character_name == args.character_b) ++games_b[player_id];
        }
    }
    int excluded = 0;
    for (const auto& [id, _] : games_a) {
        if (!games_b.count(id)) continue;
        bool dual_qualified = ratio_a.count(id) && ratio_b.count(id);
        if (!dual_qualified) ++excluded;
    }
    SwitchAnalysis analysis = tabulate_switches(on_a, on_b, excluded);

    ensure_out_dir(args.out_dir);
    {
        nlohmann::json doc = {
            {"character_a", args.character_a},
            {"character_b", args.character_b},
            {"players_considered", analysis.players_considered},
            {"players_excluded", analysis.players_excluded},
            {"switched_to_fight", analysis.switched_to_fight},
            {"switched_to_flight", analysis.switched_to_flight},
            {"stayed_fight", analysis.stayed_fight},
            {"stayed_flight", analysis.stayed_flight},
            {"pct_switched_to_fight", analysis.pct_switched_to_fight},
            {"pct_switched_to_flight", analysis.pct_switched_to_flight},
            {"pct_stayed_fight", analysis.pct_stayed_fight},
            {"pct_stayed_flight", analysis.pct_stayed_flight},
        };
        auto out = open_out(args.out_dir + "/switch.json");
        out << doc.dump(2) << "\n";
    }
    {
        auto out = open_out(args.out_dir + "/switch.csv");
        out << "player_id,strategy_a,strategy_b\n";
        for (size_t i = 0; i < dual.size(); ++i) {
            out << dual[i] << ',' << (on_a[i] == Strategy::Fight ? "fight" : "flight") << ','
                << (on_b[i] == Strategy::Fight ? "fight" : "flight") << '\n';
        }
    }

    RunManifest manifest;
    manifest.command = "switch";
    manifest.registry_hash = registry_hash(registry);
    manifest.config["in_dir"] = args.in_dir;
    manifest.config["character_a"] = args.character_a;
    manifest.config["character_b"] = args.character_b;
    manifest.config["min_games"] = std::to_string(args.min_games);
    manifest.input_digests = dir_digests(args.in_dir);
    write_manifest(args.out_dir, manifest);
}

void cmd_registry_dump(const RegistryDumpArgs& args) {
    Registry registry;
    std::string doc = registry.dump_json();
    if (args.out_path.empty()) {
        std::cout << doc;
        return;
    }
    auto out = open_out(args.out_path);
    out << doc;
}

int run(int argc, const char* const* argv) {
    CLI::App app{"task-set gameplay behavior analysis"};
    app.require_subcommand(1);

    SimulateArgs sim_args;
    auto* sim = app.add_subcommand("simulate", "generate a synthetic population");
    sim->add_option("--config", sim_args.config_path, "population config JSON")->required();
    sim->add_option("--out", sim_args.out_dir, "output directory")->required();
    uint64_t seed_value = 0;
    bool seed_set = false;
    sim->add_option("--seed", seed_value, "master seed override")
        ->each([&](const std::string&) { seed_set = true; });
    sim->add_option("--jobs", sim_args.jobs, "parallel jobs");

    AnalyzeArgs an_args;
    auto* an = app.add_subcommand("analyze", "per-player curves and feature vectors");
    an->add_option("--in", an_args.in_dir, "trajectory directory")->required();
    an->add_option("--theme", an_args.theme, "fight_flight or explore_exploit")->required();
    an->add_option("--character", an_args.character, "character name or class filter");
    an->add_option("--out", an_args.out_dir, "output directory")->required();
    an->add_option("--horizon", an_args.horizon, "curve horizon in ticks");
    an->add_option("--min-games", an_args.min_games, "minimum games per player");
    an->add_option("--jobs", an_args.jobs, "parallel jobs");
    an->add_flag("--avg-per-game", an_args.avg_per_game,
                 "average per-game curve stats instead of pooling counts");
    an->add_flag("--no-kill-credit", an_args.no_kill_credit,
                 "fight completions require dealt damage only");

    EmbedArgs em_args;
    auto* em = app.add_subcommand("embed", "2D embedding of a feature matrix");
    em->add_option("--features", em_args.features_csv, "features.csv")->required();
    em->add_option("--method", em_args.method, "linear or neighbor");
    em->add_option("--seed", em_args.seed, "seed for the neighbor method");
    em->add_option("--out", em_args.out_dir, "output directory")->required();

    CompareArgs cmp_args;
    auto* cmp = app.add_subcommand("compare", "alignment report for two populations");
    cmp->add_option("--a", cmp_args.features_a, "features.csv of population A")->required();
    cmp->add_option("--b", cmp_args.features_b, "features.csv of population B")->required();
    cmp->add_option("--seed", cmp_args.seed, "embedding seed");
    cmp->add_option("--out", cmp_args.out_dir, "output directory")->required();

    OverlapArgs ov_args;
    auto* ov = app.add_subcommand("overlap", "per-class overlap matrices");
    ov->add_option("--in", ov_args.in_dir, "trajectory directory")->required();
    ov->add_option("--out", ov_args.out_dir, "output directory")->required();
    ov->add_option("--measure", ov_args.measure, "jaccard or conditional");
    ov->add_option("--min-games", ov_args.min_games, "minimum games per player");
    ov->add_option("--jobs", ov_args.jobs, "parallel jobs");

    OccupancyArgs oc_args;
    auto* oc = app.add_subcommand("occupancy", "solo/diad/multi occupancy tables");
    oc->add_option("--in", oc_args.in_dir, "trajectory directory")->required();
    oc->add_option("--out", oc_args.out_dir, "output directory")->required();
    oc->add_option("--min-games", oc_args.min_games, "minimum games per player");
    oc->add_option("--group-radius", oc_args.group_radius,
                   "radius for the solo/multi time columns");
    oc->add_option("--jobs", oc_args.jobs, "parallel jobs");

    SwitchArgs sw_args;
    auto* sw = app.add_subcommand("switch", "strategy changes across two characters");
    sw->add_option("--in", sw_args.in_dir, "trajectory directory")->required();
    sw->add_option("--a", sw_args.character_a, "character A")->required();
    sw->add_option("--b", sw_args.character_b, "character B")->required();
    sw->add_option("--out", sw_args.out_dir, "output directory")->required();
    sw->add_option("--min-games", sw_args.min_games, "minimum games per character");
    sw->add_option("--horizon", sw_args.horizon, "curve horizon in ticks");
    sw->add_option("--jobs", sw_args.jobs, "parallel jobs");

    RegistryDumpArgs rd_args;
    auto* rd = app.add_subcommand("registry-dump", "print the task-set registry");
    rd->add_option("--out", rd_args.out_path, "output file (stdout when absent)");

    BenchArgs bn_args;
    auto* bn = app.add_subcommand("bench", "evaluation throughput benchmark");
    bn->add_option("--games", bn_args.games, "population size in games");
    bn->add_option("--ticks", bn_args.ticks, "ticks per game");
    bn->add_option("--jobs", bn_args.jobs, "parallel jobs for the scaling run");
    bn->add_option("--out", bn_args.out_dir, "optional directory for bench.csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (sim->parsed()) {
            if (seed_set) sim_args.seed = seed_value;
            cmd_simulate(sim_args);
        } else if (an->parsed()) {
            cmd_analyze(an_args);
        } else if (em->parsed()) {
            cmd_embed(em_args);
        } else if (cmp->parsed()) {
            cmd_compare(cmp_args);
        } else if (ov->parsed()) {
            cmd_overlap(ov_args);
        } else if (oc->parsed()) {
            cmd_occupancy(oc_args);
        } else if (sw->parsed()) {
            cmd_switch(sw_args);
        } else if (rd->parsed()) {
            cmd_registry_dump(rd_args);
        } else if (bn->parsed()) {
            cmd_bench(bn_args);
        }
    } catch (const InvalidConfig& e) {
        log::error("%s", e.what());
        return 1;
    } catch (const Error& e) {
        log::error("%s", e.what());
        return 2;
    } catch (const std::exception& e) {
        log::error("%s", e.what());
        return 2;
    }
    return 0;
}

} // namespace tasksets::cli
