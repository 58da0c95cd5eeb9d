#pragma once

#include <map>
#include <string>
#include <vector>

namespace tasksets {

enum class Theme { FightFlight, ExploreExploit, SoloMulti };

const char* to_string(Theme t);

// Which member of its affordance context a task-set is: the two sides of a
// fight-flight or explore-exploit pair, or one of the four solo-multi
// completions.
enum class Member { Fight, Flight, Exploit, Explore, Solo, Regroup, Diad, Multi };

const char* to_string(Member m);

struct TaskSetDef {
    std::string id;
    Theme theme = Theme::FightFlight;
    // Task-sets sharing a pair_id share one affordance predicate.
    std::string pair_id;
    Member member = Member::Fight;
    std::map<std::string, double> params;
};

// The 18 built-in task-sets: 4 fight-flight pairs, 3 explore-exploit pairs,
// and the 4-member solo-multi group. Order is stable and is the canonical
// mask row order.
std::vector<TaskSetDef> builtin_registry();

// Registry with id -> row lookup.
class Registry {
public:
    Registry();
    explicit Registry(std::vector<TaskSetDef> defs);

    const std::vector<TaskSetDef>& defs() const { return defs_; }
    int size() const { return static_cast<int>(defs_.size()); }

    // Throws UnknownTaskSet.
    int index_of(const std::string& id) const;
    bool contains(const std::string& id) const;
    const TaskSetDef& def(int index) const { return defs_[index]; }

    // Pair ids of a theme in feature order (ff1..ff4, ee1..ee3).
    std::vector<std::string> pair_ids(Theme theme) const;
    // Task-set ids sharing a pair/group id, registry order.
    std::vector<std::string> members_of(const std::string& pair_id) const;
    // Member with the given role within a pair. Throws UnknownTaskSet.
    const TaskSetDef& member(const std::string& pair_id, Member role) const;

    // JSON document listing id, theme, pair, member and params for every
    // task-set; written by the registry-dump command and hashed into run
    // manifests.
    std::string dump_json() const;

private:
    std::vector<TaskSetDef> defs_;
    std::map<std::string, int> index_;
};

} // namespace tasksets
