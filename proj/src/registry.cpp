#include "tasksets/registry.hpp"

#include <algorithm>

#include <json.hpp>

#include "tasksets/errors.hpp"

namespace tasksets {

const char* to_string(Theme t) {
    switch (t) {
        case Theme::FightFlight: return "fight_flight";
        case Theme::ExploreExploit: return "explore_exploit";
        case Theme::SoloMulti: return "solo_multi";
    }
    return "?";
}

const char* to_string(Member m) {
    switch (m) {
        case Member::Fight: return "fight";
        case Member::Flight: return "flight";
        case Member::Exploit: return "exploit";
        case Member::Explore: return "explore";
        case Member::Solo: return "solo";
        case Member::Regroup: return "regroup";
        case Member::Diad: return "diad";
        case Member::Multi: return "multi";
    }
    return "?";
}

namespace {

constexpr double kNearRadius = 2100.0;
constexpr double kFleeRadius = 3500.0;
constexpr double kHealthSplit = 0.5;
constexpr double kTeamRadius = 3500.0;
constexpr double kRegroupRadius = 2100.0;

TaskSetDef def(std::string id, Theme theme, std::string pair, Member member,
               std::map<std::string, double> params) {
    return TaskSetDef{std::move(id), theme, std::move(pair), member, std::move(params)};
}

} // namespace

std::vector<TaskSetDef> builtin_registry() {
    std::vector<TaskSetDef> out;
    const Theme ff = Theme::FightFlight;
    const Theme ee = Theme::ExploreExploit;
    const Theme sm = Theme::SoloMulti;

    out.push_back(def("Attack_Approach_Damage_Enemy_Health_Good", ff, "ff1", Member::Fight,
                      {{"near_radius", kNearRadius}, {"health_split", kHealthSplit}}));
    out.push_back(def("Run_From_Enemy_In_Good_Health", ff, "ff1", Member::Flight,
                      {{"near_radius", kNearRadius},
                       {"health_split", kHealthSplit},
                       {"flee_radius", kFleeRadius}}));
    out.push_back(def("Attack_Approach_Damage_Enemy_Health_Poor", ff, "ff2", Member::Fight,
                      {{"near_radius", kNearRadius}, {"health_split", kHealthSplit}}));
    out.push_back(def("Run_From_Enemy_In_Poor_Health", ff, "ff2", Member::Flight,
                      {{"near_radius", kNearRadius},
                       {"health_split", kHealthSplit},
                       {"flee_radius", kFleeRadius}}));
    out.push_back(def("Fight_Damage_Enemy_When_Attacked_Enemy_Health_Greater", ff, "ff3",
                      Member::Fight, {{"near_radius", kNearRadius}}));
    out.push_back(def("Run_When_Attacked_Enemy_Health_Greater", ff, "ff3", Member::Flight,
                      {{"near_radius", kNearRadius}, {"flee_radius", kFleeRadius}}));
    out.push_back(def("Fight_Damage_Enemy_When_Attacked_Enemy_Health_Poorer", ff, "ff4",
                      Member::Fight, {{"near_radius", kNearRadius}}));
    out.push_back(def("Run_When_Attacked_Enemy_Health_Poorer", ff, "ff4", Member::Flight,
                      {{"near_radius", kNearRadius}, {"flee_radius", kFleeRadius}}));

    out.push_back(def("Attempt_Direct_Pickup_Nearest_Seed_Cluster", ee, "ee1", Member::Exploit,
                      {{"near_radius", kNearRadius}}));
    out.push_back(def("Explore_Away_From_Nearest_Seed_Cluster", ee, "ee1", Member::Explore,
                      {{"near_radius", kNearRadius}}));
    out.push_back(def("Attempt_Direct_Deposit_Nearest_Active_Platform", ee, "ee2",
                      Member::Exploit, {{"near_radius", kNearRadius}}));
    out.push_back(def("Explore_Away_From_Nearest_Active_Platform_with_Seeds", ee, "ee2",
                      Member::Explore, {{"near_radius", kNearRadius}}));
    out.push_back(def("Attempt_Direct_Deposit_Nearest_Inactive_Platform", ee, "ee3",
                      Member::Exploit, {{"near_radius", kNearRadius}}));
    out.push_back(def("Explore_Away_From_Nearest_Inactive_Platform_with_Seeds", ee, "ee3",
                      Member::Explore, {{"near_radius", kNearRadius}}));

    out.push_back(def("Continue_To_Play_Solo", sm, "sm", Member::Solo,
                      {{"team_radius", kTeamRadius}, {"regroup_radius", kRegroupRadius}}));
    out.push_back(def("Regroup_With_Allies", sm, "sm", Member::Regroup,
                      {{"team_radius", kTeamRadius}, {"regroup_radius", kRegroupRadius}}));
    out.push_back(def("Regroup_With_Single_Ally", sm, "sm", Member::Diad,
                      {{"team_radius", kTeamRadius}, {"regroup_radius", kRegroupRadius}}));
    out.push_back(def("Regroup_With_Multiple_Allies", sm, "sm", Member::Multi,
                      {{"team_radius", kTeamRadius}, {"regroup_radius", kRegroupRadius}}));
    return out;
}

Registry::Registry() : Registry(builtin_registry()) {}

Registry::Registry(std::vector<TaskSetDef> defs) : defs_(std::move(defs)) {
    for (int i = 0; i < static_cast<int>(defs_.size()); ++i) index_[defs_[i].id] = i;
}

int Registry::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw UnknownTaskSet(id);
    return it->second;
}

bool Registry::contains(const std::string& id) const { return index_.count(id) > 0; }

std::vector<std::string> Registry::pair_ids(Theme theme) const {
    std::vector<std::string> out;
    for (const TaskSetDef& d : defs_) {
        if (d.theme != theme) continue;
        if (std::find(out.begin(), out.end(), d.pair_id) == out.end()) out.push_back(d.pair_id);
    }
    return out;
}

std::vector<std::string> Registry::members_of(const std::string& pair_id) const {
    std::vector<std::string> out;
    for (const TaskSetDef& d : defs_)
        if (d.pair_id == pair_id) out.push_back(d.id);
    return out;
}

const TaskSetDef& Registry::member(const std::string& pair_id, Member role) const {
    for (const TaskSetDef& d : defs_)
        if (d.pair_id == pair_id && d.member == role) return d;
    throw UnknownTaskSet(pair_id + "/" + to_string(role));
}

std::string Registry::dump_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const TaskSetDef& d : defs_) {
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [k, v] : d.params) params[k] = v;
        arr.push_back({
            {"id", d.id},
            {"theme", to_string(d.theme)},
            {"pair_id", d.pair_id},
            {"member", to_string(d.member)},
            {"params", std::move(params)},
        });
    }
    return nlohmann::json{{"task_sets", std::move(arr)}}.dump(2) + "\n";
}

} // namespace tasksets
