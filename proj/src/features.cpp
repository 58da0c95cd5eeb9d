#include "tasksets/features.hpp"

#include <array>

#include "tasksets/errors.hpp"

namespace tasksets {

double PlayerFeatureVector::mean_auc_ratio() const {
    // auc_ratio is value 6 of each 9-value pair block.
    double sum = 0.0;
    int n = 0;
    for (size_t p = 0; p < pair_valid.size(); ++p) {
        if (!pair_valid[p]) continue;
        sum += values[p * 9 + 6];
        ++n;
    }
    return n ? sum / n : 1.0;
}

namespace {

Member primary_member(Theme theme) {
    return theme == Theme::FightFlight ? Member::Fight : Member::Exploit;
}

Member secondary_member(Theme theme) {
    return theme == Theme::FightFlight ? Member::Flight : Member::Explore;
}

std::vector<std::string> theme_pairs_checked(const Registry& registry, Theme theme) {
    if (theme == Theme::SoloMulti)
        throw InvalidConfig("theme", "feature vectors exist for fight_flight and explore_exploit");
    return registry.pair_ids(theme);
}

} // namespace

std::vector<std::string> feature_names(const Registry& registry, Theme theme) {
    std::vector<std::string> out;
    const char* primary = theme == Theme::FightFlight ? "fight" : "exploit";
    const char* secondary = theme == Theme::FightFlight ? "flight" : "explore";
    for (const std::string& pair : theme_pairs_checked(registry, theme)) {
        for (const char* member : {primary, secondary})
            for (const char* stat : {"auc", "max", "argmax"})
                out.push_back(pair + "_" + member + "_" + stat);
        for (const char* stat : {"auc", "max", "argmax"})
            out.push_back(pair + "_" + stat + "_ratio");
    }
    return out;
}

std::array<double, 9> pair_feature_block(const std::array<double, 3>& primary,
                                         const std::array<double, 3>& secondary) {
    auto ratio = [](double num, double den) {
        return (num + kRatioEpsilon) / (den + kRatioEpsilon);
    };
    return {
        primary[0],
        primary[1],
        primary[2],
        secondary[0],
        secondary[1],
        secondary[2],
        ratio(primary[0], secondary[0]),
        ratio(primary[1], secondary[1]),
        ratio(primary[2], secondary[2]),
    };
}

std::array<double, 9> pair_feature_block(const CurveStats& primary, const CurveStats& secondary) {
    return pair_feature_block(
        std::array<double, 3>{primary.auc, primary.max, static_cast<double>(primary.argmax)},
        std::array<double, 3>{secondary.auc, secondary.max,
                              static_cast<double>(secondary.argmax)});
}

namespace {

PlayerFeatureVector build_features(const std::vector<const MaskSeries*>& games,
                                   const Registry& registry, Theme theme,
                                   const std::string& player_id,
                                   const std::string& character_name, int min_games, int horizon,
                                   bool average_per_game) {
    if (static_cast<int>(games.size()) < min_games)
        throw InsufficientGames(player_id, static_cast<int>(games.size()), min_games);

    const std::vector<std::string> pairs = theme_pairs_checked(registry, theme);
    PlayerFeatureVector out;
    out.player_id = player_id;
    out.character_name = character_name;
    out.games_used = static_cast<int>(games.size());
    out.theme = theme;

    bool any_valid = false;
    for (const std::string& pair : pairs) {
        const std::string& primary_id = registry.member(pair, primary_member(theme)).id;
        const std::string& secondary_id = registry.member(pair, secondary_member(theme)).id;
        std::vector<std::string> ids{primary_id, secondary_id};

        std::array<double, 3> primary_stats{}, secondary_stats{};
        bool valid = false;
        if (!average_per_game) {
            try {
                auto curves = completion_curve(games, registry, ids, horizon);
                CurveStats p = curve_stats(curves.at(primary_id));
                CurveStats s = curve_stats(curves.at(secondary_id));
                primary_stats = {p.auc, p.max, static_cast<double>(p.argmax)};
                secondary_stats = {s.auc, s.max, static_cast<double>(s.argmax)};
                valid = true;
            } catch (const NoAffordances&) {
            }
        } else {
            // Mean of per-game curve stats over the games that have the
            // affordance at all.
            int used = 0;
            for (const MaskSeries* game : games) {
                try {
                    auto curves = completion_curve({game}, registry, ids, horizon);
                    CurveStats p = curve_stats(curves.at(primary_id));
                    CurveStats s = curve_stats(curves.at(secondary_id));
                    primary_stats[0] += p.auc;
                    primary_stats[1] += p.max;
                    primary_stats[2] += p.argmax;
                    secondary_stats[0] += s.auc;
                    secondary_stats[1] += s.max;
                    secondary_stats[2] += s.argmax;
                    ++used;
                } catch (const NoAffordances&) {
                }
            }
            if (used > 0) {
                for (int i = 0; i < 3; ++i) {
                    primary_stats[i] /= used;
                    secondary_stats[i] /= used;
                }
                valid = true;
            }
        }

        if (valid) {
            auto block = pair_feature_block(primary_stats, secondary_stats);
            out.values.insert(out.values.end(), block.begin(), block.end());
            any_valid = true;
        } else {
            // Neutral block: zero stats, unit ratios.
            out.values.insert(out.values.end(), {0, 0, 0, 0, 0, 0, 1, 1, 1});
        }
        out.pair_valid.push_back(valid);
    }

    if (!any_valid) throw NoAffordances(player_id + " (" + to_string(theme) + std::string(")"));
    return out;
}

} // namespace

PlayerFeatureVector player_features(const std::vector<const MaskSeries*>& games,
                                    const Registry& registry, Theme theme,
                                    const std::string& player_id,
                                    const std::string& character_name, int min_games,
                                    int horizon) {
    return build_features(games, registry, theme, player_id, character_name, min_games, horizon,
                          false);
}

PlayerFeatureVector player_features_avg(const std::vector<const MaskSeries*>& games,
                                        const Registry& registry, Theme theme,
                                        const std::string& player_id,
                                        const std::string& character_name, int min_games,
                                        int horizon) {
    return build_features(games, registry, theme, player_id, character_name, min_games, horizon,
                          true);
}

} // namespace tasksets
