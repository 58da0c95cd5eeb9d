#include "tasksets/overlap.hpp"

#include <ostream>

#include "tasksets/csv.hpp"
#include "tasksets/errors.hpp"

namespace tasksets {

OverlapMatrix overlap_matrix(const std::vector<const MaskSeries*>& collection,
                             const Registry& registry, OverlapKind kind, OverlapMeasure measure,
                             const std::string& population) {
    if (collection.empty()) throw EmptyCollection("overlap over empty collection");

    const int n = registry.size();
    OverlapMatrix m;
    m.kind = kind;
    m.measure = measure;
    m.population = population;
    m.games = static_cast<int>(collection.size());
    for (const TaskSetDef& d : registry.defs()) m.taskset_ids.push_back(d.id);

    std::vector<std::vector<long>> inter(n, std::vector<long>(n, 0));
    std::vector<std::vector<long>> uni(n, std::vector<long>(n, 0));
    for (const MaskSeries* masks : collection) {
        const auto& rows = kind == OverlapKind::Affordance ? masks->afford : masks->complete;
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                inter[i][j] += and_count(rows[i], rows[j]);
                uni[i][j] += or_count(rows[i], rows[j]);
            }
        }
    }

    m.values.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (measure == OverlapMeasure::Jaccard) {
                double v = uni[i][j] > 0
                               ? static_cast<double>(inter[i][j]) / static_cast<double>(uni[i][j])
                               : 0.0;
                m.values[i][j] = m.values[j][i] = v;
            } else {
                long count_i = uni[i][i]; // |i or i| = |i|
                long count_j = uni[j][j];
                m.values[i][j] =
                    count_i > 0 ? static_cast<double>(inter[i][j]) / static_cast<double>(count_i)
                                : 0.0;
                m.values[j][i] =
                    count_j > 0 ? static_cast<double>(inter[i][j]) / static_cast<double>(count_j)
                                : 0.0;
            }
        }
    }
    return m;
}

std::vector<std::vector<double>> matrix_difference(const OverlapMatrix& m1,
                                                   const OverlapMatrix& m2) {
    if (m1.taskset_ids != m2.taskset_ids) throw ShapeMismatch("task-set orderings differ");
    std::vector<std::vector<double>> out(m1.values.size(),
                                         std::vector<double>(m1.values.size(), 0.0));
    for (size_t i = 0; i < m1.values.size(); ++i)
        for (size_t j = 0; j < m1.values.size(); ++j)
            out[i][j] = m1.values[i][j] - m2.values[i][j];
    return out;
}

OccupancyRow solo_multi_occupancy(const std::vector<const MaskSeries*>& collection,
                                  const Registry& registry, const std::string& label) {
    if (collection.empty()) throw EmptyCollection("occupancy over empty collection");

    const int solo = registry.index_of("Continue_To_Play_Solo");
    const int regroup = registry.index_of("Regroup_With_Allies");
    const int diad = registry.index_of("Regroup_With_Single_Ally");
    const int multi = registry.index_of("Regroup_With_Multiple_Allies");

    long alive = 0, afforded = 0;
    long solo_c = 0, diad_c = 0, multi_c = 0;
    long solo_time = 0, multi_time = 0;
    for (const MaskSeries* masks : collection) {
        alive += masks->ego_alive.count();
        afforded += and_count(masks->afford[solo], masks->ego_alive);
        // Classified ticks: exactly one of solo/diad/multi completion holds.
        // They are mutually exclusive by construction, so the count of ticks
        // with any of them is the count of classified ticks.
        for (size_t w = 0; w < masks->ego_alive.words().size(); ++w) {
            uint64_t a = masks->ego_alive.words()[w];
            uint64_t s = masks->complete[solo].words()[w] & a;
            uint64_t d = masks->complete[diad].words()[w] & a;
            uint64_t m = masks->complete[multi].words()[w] & a;
            solo_c += std::popcount(s);
            diad_c += std::popcount(d);
            multi_c += std::popcount(m);
            solo_time += std::popcount(s);
            multi_time += std::popcount(masks->complete[regroup].words()[w] & a);
        }
    }

    OccupancyRow row;
    row.label = label;
    row.games = static_cast<int>(collection.size());
    row.alive_ticks = alive;
    long classified = solo_c + diad_c + multi_c;
    if (alive > 0) {
        row.afford_pct = 100.0 * static_cast<double>(afforded) / static_cast<double>(alive);
        row.solo_time_pct = 100.0 * static_cast<double>(solo_time) / static_cast<double>(alive);
        row.multi_time_pct = 100.0 * static_cast<double>(multi_time) / static_cast<double>(alive);
    }
    if (classified > 0) {
        row.solo_completion_pct = 100.0 * static_cast<double>(solo_c) / classified;
        row.diad_completion_pct = 100.0 * static_cast<double>(diad_c) / classified;
        row.multi_completion_pct = 100.0 * static_cast<double>(multi_c) / classified;
    }
    return row;
}

std::map<std::string, double> fight_overlap(const std::vector<const MaskSeries*>& collection,
                                            const Registry& registry) {
    if (collection.empty()) throw EmptyCollection("fight overlap over empty collection");

    std::vector<int> fight_rows;
    for (const TaskSetDef& d : registry.defs())
        if (d.theme == Theme::FightFlight && d.member == Member::Fight)
            fight_rows.push_back(registry.index_of(d.id));
    std::vector<int> sm_rows;
    std::vector<std::string> sm_ids;
    for (const TaskSetDef& d : registry.defs()) {
        if (d.theme == Theme::SoloMulti) {
            sm_rows.push_back(registry.index_of(d.id));
            sm_ids.push_back(d.id);
        }
    }

    std::vector<long> inter(sm_rows.size(), 0), uni(sm_rows.size(), 0);
    for (const MaskSeries* masks : collection) {
        const size_t nwords = masks->ego_alive.words().size();
        for (size_t w = 0; w < nwords; ++w) {
            uint64_t fight_union = 0;
            for (int r : fight_rows) fight_union |= masks->complete[r].words()[w];
            for (size_t k = 0; k < sm_rows.size(); ++k) {
                uint64_t sm = masks->complete[sm_rows[k]].words()[w];
                inter[k] += std::popcount(sm & fight_union);
                uni[k] += std::popcount(sm | fight_union);
            }
        }
    }

    std::map<std::string, double> out;
    for (size_t k = 0; k < sm_rows.size(); ++k)
        out[sm_ids[k]] =
            uni[k] > 0 ? static_cast<double>(inter[k]) / static_cast<double>(uni[k]) : 0.0;
    return out;
}

void write_overlap_csv(std::ostream& out, const OverlapMatrix& m) {
    out << "taskset_id";
    for (const std::string& id : m.taskset_ids) out << ',' << id;
    out << '\n';
    for (size_t i = 0; i < m.taskset_ids.size(); ++i) {
        out << m.taskset_ids[i];
        for (size_t j = 0; j < m.taskset_ids.size(); ++j)
            out << ',' << csv::format_double(m.values[i][j]);
        out << '\n';
    }
}

void write_difference_csv(std::ostream& out, const std::vector<std::string>& ids,
                          const std::vector<std::vector<double>>& diff) {
    out << "taskset_id";
    for (const std::string& id : ids) out << ',' << id;
    out << '\n';
    for (size_t i = 0; i < ids.size(); ++i) {
        out << ids[i];
        for (size_t j = 0; j < ids.size(); ++j) out << ',' << csv::format_double(diff[i][j]);
        out << '\n';
    }
}

} // namespace tasksets
