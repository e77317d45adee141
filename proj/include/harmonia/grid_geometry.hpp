#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace harmonia {

struct GridPoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

inline std::string to_key(const GridPoint& p) {
    return "[" + std::to_string(p.x) + "," + std::to_string(p.y) + "]";
}

inline GridPoint grid_point_from_key(const std::string& key) {
    if (key.size() < 5 || key.front() != '[' || key.back() != ']')
        throw std::invalid_argument("grid key must look like [x,y]: " + key);
    const auto comma = key.find(',');
    if (comma == std::string::npos)
        throw std::invalid_argument("grid key must look like [x,y]: " + key);
    std::size_t used1 = 0, used2 = 0;
    const std::string xs = key.substr(1, comma - 1);
    const std::string ys = key.substr(comma + 1, key.size() - comma - 2);
    const std::int64_t x = std::stoll(xs, &used1);
    const std::int64_t y = std::stoll(ys, &used2);
    if (used1 != xs.size() || used2 != ys.size())
        throw std::invalid_argument("grid key must look like [x,y]: " + key);
    return {x, y};
}

// The four edges of the diamond region boundary. The coordinate formulas,
// for 0 <= i <= n:
//   UL: (-n+i,  i)     UR: (n+1-i,  i)
//   LL: (-n+i, -i-1)   LR: (n-i+1, -i-1)
enum class Side { UL, UR, LL, LR };

constexpr std::array<Side, 4> kAllSides{Side::UL, Side::UR, Side::LL, Side::LR};

inline const char* side_name(Side s) {
    switch (s) {
        case Side::UL: return "UL";
        case Side::UR: return "UR";
        case Side::LL: return "LL";
        case Side::LR: return "LR";
    }
    return "?";
}

inline GridPoint corner_point(std::int64_t n, Side side, std::int64_t i) {
    switch (side) {
        case Side::UL: return {-n + i, i};
        case Side::UR: return {n + 1 - i, i};
        case Side::LL: return {-n + i, -i - 1};
        case Side::LR: return {n - i + 1, -i - 1};
    }
    throw std::invalid_argument("bad side");
}

// The n+1 points of one edge, in order i = 0..n.
inline std::vector<GridPoint> diamond_boundary(std::int64_t n, Side side) {
    if (n < 0) throw std::invalid_argument("region index must be >= 0");
    std::vector<GridPoint> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (std::int64_t i = 0; i <= n; ++i) out.push_back(corner_point(n, side, i));
    return out;
}

// Base rows y = -1 ("A row") and y = 0 ("B row").
inline GridPoint row_a(std::int64_t x) { return {x, -1}; }
inline GridPoint row_b(std::int64_t x) { return {x, 0}; }

// The 2(2n+2) points of rows y = -1 and y = 0 for x in [-n, n+1]. The values
// on this window determine the harmonic extension on all of S_n.
inline std::vector<GridPoint> spanning_rows(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("region index must be >= 0");
    std::vector<GridPoint> out;
    out.reserve(static_cast<std::size_t>(4 * n + 4));
    for (std::int64_t x = -n; x <= n + 1; ++x) out.push_back(row_a(x));
    for (std::int64_t x = -n; x <= n + 1; ++x) out.push_back(row_b(x));
    return out;
}

// S_n: the union of the four edge sets over levels k <= n. Row bands:
//   y in [0, n]:      -(n-y) <= x <= n+1-y
//   y in [-n-1, -1]:  with i = -y-1, -(n-i) <= x <= n-i+1
struct DiamondRegion {
    std::int64_t n = 0;

    explicit DiamondRegion(std::int64_t level) : n(level) {
        if (level < 0) throw std::invalid_argument("region index must be >= 0");
    }

    bool contains(const GridPoint& p) const {
        if (p.y >= 0) {
            if (p.y > n) return false;
            return p.x >= -(n - p.y) && p.x <= n + 1 - p.y;
        }
        const std::int64_t i = -p.y - 1;
        if (i > n) return false;
        return p.x >= -(n - i) && p.x <= n - i + 1;
    }

    // All points, row by row from y = n down to y = -n-1, left to right.
    std::vector<GridPoint> points() const {
        std::vector<GridPoint> out;
        out.reserve(static_cast<std::size_t>(2 * (n + 1) * (n + 2)));
        for (std::int64_t y = n; y >= -n - 1; --y) {
            const std::int64_t half = (y >= 0) ? n - y : n + y + 1;
            for (std::int64_t x = -half; x <= half + 1; ++x) out.push_back({x, y});
        }
        return out;
    }

    // Points of S_n \ S_{n-1}: the four level-n edges, 4(n+1) points.
    std::vector<GridPoint> ring() const {
        std::vector<GridPoint> out;
        for (Side s : kAllSides)
            for (auto& p : diamond_boundary(n, s)) out.push_back(p);
        return out;
    }

    // Interior = points whose four grid neighbors are all inside S_n.
    bool interior(const GridPoint& p) const {
        return contains({p.x - 1, p.y}) && contains({p.x + 1, p.y}) &&
               contains({p.x, p.y - 1}) && contains({p.x, p.y + 1});
    }
};

inline std::array<GridPoint, 4> grid_neighbors(const GridPoint& p) {
    return {GridPoint{p.x - 1, p.y}, GridPoint{p.x + 1, p.y}, GridPoint{p.x, p.y - 1},
            GridPoint{p.x, p.y + 1}};
}

}  // namespace harmonia
