#pragma once

#include <cmath>

namespace tasksets {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline double norm(Vec2 a) { return std::sqrt(norm2(a)); }

// Zero vector stays zero instead of producing NaN.
inline Vec2 normalized_or_zero(Vec2 a) {
    double n = norm(a);
    if (n <= 0.0) return {0.0, 0.0};
    return {a.x / n, a.y / n};
}

inline double dist2(Vec2 a, Vec2 b) { return norm2(b - a); }

} // namespace tasksets
