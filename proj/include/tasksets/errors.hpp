#pragma once

#include <stdexcept>
#include <string>

namespace tasksets {

// Base for everything thrown by this library. CLI maps subtypes onto exit
// codes: config/usage problems exit 1, data problems exit 2.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MalformedRecord : Error {
    int line_no;
    MalformedRecord(int line, const std::string& reason)
        : Error("malformed record at line " + std::to_string(line) + ": " + reason),
          line_no(line) {}
};

struct UnknownPlayer : Error {
    explicit UnknownPlayer(const std::string& id) : Error("unknown player: " + id) {}
};

struct TickOutOfRange : Error {
    explicit TickOutOfRange(long tick) : Error("tick out of range: " + std::to_string(tick)) {}
};

struct UnknownTaskSet : Error {
    explicit UnknownTaskSet(const std::string& id) : Error("unknown task-set: " + id) {}
};

struct NoAffordances : Error {
    explicit NoAffordances(const std::string& what_ids)
        : Error("no simultaneous affordances for " + what_ids) {}
};

struct InsufficientGames : Error {
    int have;
    int need;
    InsufficientGames(const std::string& player, int have_, int need_)
        : Error("player " + player + " has " + std::to_string(have_) + " games, needs " +
                std::to_string(need_)),
          have(have_),
          need(need_) {}
};

struct TooFewPlayers : Error {
    using Error::Error;
};

struct ZeroVarianceAllColumns : Error {
    ZeroVarianceAllColumns() : Error("all feature columns have zero variance") {}
};

struct EmptyCollection : Error {
    using Error::Error;
};

struct ShapeMismatch : Error {
    using Error::Error;
};

struct InvalidConfig : Error {
    explicit InvalidConfig(const std::string& field_path, const std::string& reason)
        : Error("invalid config at " + field_path + ": " + reason) {}
};

struct IoError : Error {
    using Error::Error;
};

} // namespace tasksets
