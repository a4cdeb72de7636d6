#pragma once

#include <cmath>
#include <cstdint>
#include <functional>

namespace toponav {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
    friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 a) { return std::sqrt(dot(a, a)); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

// Grid cell; 1 cell = 1 m. Also the agent's discrete state.
struct Cell {
    int x = 0;
    int y = 0;

    friend bool operator==(Cell a, Cell b) { return a.x == b.x && a.y == b.y; }
    friend bool operator!=(Cell a, Cell b) { return !(a == b); }
    friend bool operator<(Cell a, Cell b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }

    Vec2 center() const { return {static_cast<double>(x), static_cast<double>(y)}; }
};

struct CellHash {
    std::size_t operator()(Cell c) const {
        auto h = static_cast<std::uint64_t>(static_cast<std::uint32_t>(c.x));
        h = h * 0x9e3779b97f4a7c15ULL + static_cast<std::uint32_t>(c.y);
        return static_cast<std::size_t>(h ^ (h >> 31));
    }
};

inline double cell_distance(Cell a, Cell b) { return distance(a.center(), b.center()); }

// Primitive actions, in tie-break order.
enum class Action : int { North = 0, East = 1, South = 2, West = 3 };

inline constexpr int kNumActions = 4;

inline Cell neighbor(Cell c, Action a) {
    switch (a) {
        case Action::North: return {c.x, c.y + 1};
        case Action::East: return {c.x + 1, c.y};
        case Action::South: return {c.x, c.y - 1};
        case Action::West: return {c.x - 1, c.y};
    }
    return c;
}

// The two directions orthogonal to a (slip outcomes).
inline std::pair<Action, Action> perpendicular(Action a) {
    if (a == Action::North || a == Action::South) {
        return {Action::East, Action::West};
    }
    return {Action::North, Action::South};
}

}  // namespace toponav
