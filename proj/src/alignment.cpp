#include "tasksets/alignment.hpp"

#include <cmath>

#include <json.hpp>

#include "tasksets/errors.hpp"

namespace tasksets {

std::vector<Spread> spread_stats(const std::vector<std::vector<double>>& rows) {
    if (rows.size() < 2) throw TooFewPlayers("spread needs at least 2 rows");
    const size_t d = rows[0].size();
    std::vector<Spread> out(d);
    for (size_t j = 0; j < d; ++j) {
        std::vector<double> col(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) col[i] = rows[i][j];
        out[j].std = stats::stddev(col);
        out[j].iqr = stats::iqr(col);
    }
    return out;
}

AlignmentReport compare_populations(const std::vector<std::vector<double>>& features_a,
                                    const std::vector<std::vector<double>>& features_b,
                                    const std::vector<std::string>& feature_names,
                                    uint64_t seed) {
    if (features_a.empty() || features_b.empty())
        throw TooFewPlayers("both populations must be non-empty");
    const size_t d = features_a[0].size();
    if (features_b[0].size() != d) throw ShapeMismatch("populations have different widths");
    if (feature_names.size() != d) throw ShapeMismatch("feature names do not match width");

    AlignmentReport report;
    report.n_a = static_cast<int>(features_a.size());
    report.n_b = static_cast<int>(features_b.size());

    int significant = 0;
    for (size_t j = 0; j < d; ++j) {
        std::vector<double> col_a(features_a.size()), col_b(features_b.size());
        for (size_t i = 0; i < features_a.size(); ++i) col_a[i] = features_a[i][j];
        for (size_t i = 0; i < features_b.size(); ++i) col_b[i] = features_b[i][j];
        stats::KsResult ks = stats::ks_two_sample(col_a, col_b);
        report.features.push_back({feature_names[j], ks.statistic, ks.p_proxy});
        if (ks.p_proxy < 0.05) ++significant;
    }
    report.significant_fraction = d ? static_cast<double>(significant) / d : 0.0;

    // One embedding on the union keeps the axes shared.
    std::vector<std::vector<double>> all = features_a;
    all.insert(all.end(), features_b.begin(), features_b.end());
    std::vector<Coords2> coords = embed_2d(all, EmbedMethod::Linear, seed);

    std::vector<std::vector<double>> axes_a(features_a.size(), std::vector<double>(2));
    std::vector<std::vector<double>> axes_b(features_b.size(), std::vector<double>(2));
    for (size_t i = 0; i < features_a.size(); ++i)
        axes_a[i] = {coords[i][0], coords[i][1]};
    for (size_t i = 0; i < features_b.size(); ++i)
        axes_b[i] = {coords[features_a.size() + i][0], coords[features_a.size() + i][1]};

    std::vector<Spread> spread_a = spread_stats(axes_a);
    std::vector<Spread> spread_b = spread_stats(axes_b);
    double ratio_sum = 0.0;
    for (int ax = 0; ax < 2; ++ax) {
        AxisComparison c;
        c.a = spread_a[ax];
        c.b = spread_b[ax];
        c.spread_ratio = spread_b[ax].std > 0.0 ? spread_a[ax].std / spread_b[ax].std
                                                : (spread_a[ax].std > 0.0 ? HUGE_VAL : 1.0);
        ratio_sum += c.spread_ratio;
        report.axes.push_back(c);
    }
    report.mean_spread_ratio = ratio_sum / 2.0;
    return report;
}

std::string alignment_report_json(const AlignmentReport& report) {
    nlohmann::json features = nlohmann::json::array();
    for (const FeatureComparison& f : report.features)
        features.push_back(
            {{"name", f.name}, {"ks", f.ks_statistic}, {"p_proxy", f.p_proxy}});
    nlohmann::json axes = nlohmann::json::array();
    for (size_t i = 0; i < report.axes.size(); ++i) {
        const AxisComparison& c = report.axes[i];
        axes.push_back({
            {"axis", i + 1},
            {"std_a", c.a.std},
            {"iqr_a", c.a.iqr},
            {"std_b", c.b.std},
            {"iqr_b", c.b.iqr},
            {"spread_ratio", c.spread_ratio},
        });
    }
    nlohmann::json doc = {
        {"n_a", report.n_a},
        {"n_b", report.n_b},
        {"features", std::move(features)},
        {"axes", std::move(axes)},
        {"summary",
         {{"mean_spread_ratio", report.mean_spread_ratio},
          {"significant_fraction", report.significant_fraction}}},
    };
    return doc.dump(2) + "\n";
}

Strategy classify_strategy(double player_mean_ratio,
                           const std::vector<double>& population_ratios) {
    if (population_ratios.empty()) throw TooFewPlayers("classification needs a population");
    double med = stats::median(population_ratios);
    return player_mean_ratio > med ? Strategy::Fight : Strategy::Flight;
}

SwitchAnalysis tabulate_switches(const std::vector<Strategy>& on_a,
                                 const std::vector<Strategy>& on_b, int players_excluded) {
    if (on_a.size() != on_b.size()) throw ShapeMismatch("classification lists differ in length");
    SwitchAnalysis out;
    out.players_considered = static_cast<int>(on_a.size());
    out.players_excluded = players_excluded;
    for (size_t i = 0; i < on_a.size(); ++i) {
        if (on_a[i] == on_b[i]) {
            if (on_a[i] == Strategy::Fight) ++out.stayed_fight;
            else ++out.stayed_flight;
        } else {
            if (on_b[i] == Strategy::Fight) ++out.switched_to_fight;
            else ++out.switched_to_flight;
        }
    }
    int switched = out.switched_to_fight + out.switched_to_flight;
    int stayed = out.stayed_fight + out.stayed_flight;
    if (switched > 0) {
        out.pct_switched_to_fight = 100.0 * out.switched_to_fight / switched;
        out.pct_switched_to_flight = 100.0 * out.switched_to_flight / switched;
    }
    if (stayed > 0) {
        out.pct_stayed_fight = 100.0 * out.stayed_fight / stayed;
        out.pct_stayed_flight = 100.0 * out.stayed_flight / stayed;
    }
    return out;
}

} // namespace tasksets
