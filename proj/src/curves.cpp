#include "tasksets/curves.hpp"

#include <ostream>

#include "tasksets/csv.hpp"
#include "tasksets/errors.hpp"

namespace tasksets {

std::vector<int> simultaneous_afford_ticks(const MaskSeries& masks, const Registry& registry,
                                           const std::vector<std::string>& taskset_ids) {
    std::vector<int> rows;
    rows.reserve(taskset_ids.size());
    for (const std::string& id : taskset_ids) rows.push_back(registry.index_of(id));

    std::vector<int> out;
    if (rows.empty()) return out;
    const size_t nwords = masks.afford[rows[0]].words().size();
    for (size_t w = 0; w < nwords; ++w) {
        uint64_t word = ~uint64_t{0};
        for (int r : rows) word &= masks.afford[r].words()[w];
        while (word) {
            int bit = std::countr_zero(word);
            out.push_back(static_cast<int>(w * 64) + bit);
            word &= word - 1;
        }
    }
    return out;
}

std::vector<AffordanceWindow> completion_windows(const MaskSeries& masks,
                                                 const Registry& registry,
                                                 const std::string& taskset_id,
                                                 const std::vector<int>& afford_ticks) {
    const int row = registry.index_of(taskset_id);
    const Bits& afford = masks.afford[row];
    const Bits& complete = masks.complete[row];

    // next_afford[t] = smallest tick > t with an affordance, or ticks.
    std::vector<int> next_afford(masks.ticks + 1);
    next_afford[masks.ticks] = masks.ticks;
    int next = masks.ticks;
    for (int t = masks.ticks - 1; t >= 0; --t) {
        next_afford[t] = next;
        if (afford.get(t)) next = t;
    }

    std::vector<AffordanceWindow> out;
    out.reserve(afford_ticks.size());
    for (int start : afford_ticks) {
        AffordanceWindow w;
        w.taskset_id = taskset_id;
        w.start = start;
        w.end = next_afford[start];
        for (int t = start; t < w.end; ++t)
            if (complete.get(t)) w.completion_offsets.push_back(t - start);
        out.push_back(std::move(w));
    }
    return out;
}

CurveCounts accumulate_curve(const MaskSeries& masks, const Registry& registry,
                             const std::string& taskset_id,
                             const std::vector<int>& simultaneous_ticks, int horizon) {
    const int row = registry.index_of(taskset_id);
    const Bits& afford = masks.afford[row];
    const Bits& complete = masks.complete[row];

    CurveCounts out;
    out.horizon = horizon;
    out.counts.assign(horizon + 1, 0);
    out.denominator = static_cast<long>(simultaneous_ticks.size());

    std::vector<int> next_afford(masks.ticks + 1);
    next_afford[masks.ticks] = masks.ticks;
    int next = masks.ticks;
    for (int t = masks.ticks - 1; t >= 0; --t) {
        next_afford[t] = next;
        if (afford.get(t)) next = t;
    }

    for (int start : simultaneous_ticks) {
        int end = next_afford[start];
        if (end > start + horizon + 1) end = start + horizon + 1;
        if (end > masks.ticks) end = masks.ticks;
        for (int t = start; t < end; ++t)
            if (complete.get(t)) out.counts[t - start] += 1;
    }
    return out;
}

void merge_counts(CurveCounts& into, const CurveCounts& from) {
    if (into.horizon != from.horizon) throw ShapeMismatch("curve horizons differ");
    into.denominator += from.denominator;
    for (size_t i = 0; i < into.counts.size(); ++i) into.counts[i] += from.counts[i];
}

Curve finish_curve(const CurveCounts& counts) {
    Curve c;
    c.horizon = counts.horizon;
    c.counts = counts.counts;
    c.denominator = counts.denominator;
    c.probabilities.resize(c.counts.size());
    for (size_t i = 0; i < c.counts.size(); ++i)
        c.probabilities[i] = static_cast<double>(c.counts[i]) / static_cast<double>(c.denominator);
    return c;
}

std::map<std::string, Curve> completion_curve(const std::vector<const MaskSeries*>& collection,
                                              const Registry& registry,
                                              const std::vector<std::string>& pair_ids,
                                              int horizon) {
    std::map<std::string, CurveCounts> acc;
    for (const std::string& id : pair_ids) {
        CurveCounts c;
        c.horizon = horizon;
        c.counts.assign(horizon + 1, 0);
        acc.emplace(id, std::move(c));
    }

    for (const MaskSeries* masks : collection) {
        std::vector<int> ticks = simultaneous_afford_ticks(*masks, registry, pair_ids);
        for (const std::string& id : pair_ids)
            merge_counts(acc.at(id), accumulate_curve(*masks, registry, id, ticks, horizon));
    }

    long denom = pair_ids.empty() ? 0 : acc.at(pair_ids.front()).denominator;
    if (denom == 0) {
        std::string what;
        for (const std::string& id : pair_ids) what += (what.empty() ? "" : ", ") + id;
        throw NoAffordances(what);
    }

    std::map<std::string, Curve> out;
    for (const std::string& id : pair_ids) out.emplace(id, finish_curve(acc.at(id)));
    return out;
}

CurveStats curve_stats(const Curve& curve) {
    CurveStats s;
    for (size_t x = 0; x < curve.probabilities.size(); ++x) {
        double p = curve.probabilities[x];
        s.auc += p;
        if (p > s.max) {
            s.max = p;
            s.argmax = static_cast<int>(x);
        }
    }
    return s;
}

void write_curve_csv_header(std::ostream& out, bool with_player_column) {
    if (with_player_column) out << "player_id,";
    out << "taskset_id,offset,count,denominator,probability\n";
}

void write_curve_csv_rows(std::ostream& out, const std::string& taskset_id, const Curve& curve,
                          const std::string& player_id) {
    for (size_t x = 0; x < curve.counts.size(); ++x) {
        if (!player_id.empty()) out << player_id << ',';
        out << taskset_id << ',' << x << ',' << curve.counts[x] << ',' << curve.denominator << ','
            << csv::format_double(curve.probabilities[x]) << '\n';
    }
}

} // namespace tasksets
