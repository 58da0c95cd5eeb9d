#pragma once

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace tasksets::log {

enum class Level { Off = 0, Error = 1, Warn = 2, Info = 3, Debug = 4 };

// Level comes from TASKSETS_LOG (error|warn|info|debug|off), default warn.
inline Level threshold() {
    static Level lvl = [] {
        const char* e = std::getenv("TASKSETS_LOG");
        if (!e) return Level::Warn;
        if (!std::strcmp(e, "off")) return Level::Off;
        if (!std::strcmp(e, "error")) return Level::Error;
        if (!std::strcmp(e, "warn")) return Level::Warn;
        if (!std::strcmp(e, "info")) return Level::Info;
        if (!std::strcmp(e, "debug")) return Level::Debug;
        return Level::Warn;
    }();
    return lvl;
}

template <typename... Args>
void emit(Level lvl, const char* tag, const char* fmt, Args... args) {
    if (static_cast<int>(lvl) > static_cast<int>(threshold())) return;
    std::fprintf(stderr, "[%s] ", tag);
    std::fprintf(stderr, fmt, args...);
    std::fprintf(stderr, "\n");
}

template <typename... Args>
void error(const char* fmt, Args... args) { emit(Level::Error, "error", fmt, args...); }
template <typename... Args>
void warn(const char* fmt, Args... args) { emit(Level::Warn, "warn", fmt, args...); }
template <typename... Args>
void info(const char* fmt, Args... args) { emit(Level::Info, "info", fmt, args...); }
template <typename... Args>
void debug(const char* fmt, Args... args) { emit(Level::Debug, "debug", fmt, args...); }

} // namespace tasksets::log
