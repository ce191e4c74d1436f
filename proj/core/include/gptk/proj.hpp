#pragma once

// Points and lines of PG(2, F) over an interned field context. A point is
// normalized so its last nonzero coordinate is 1; a line (coefficient
// triple) is normalized the same way. Equality is equality of normalized
// coordinates, and the canonical order is lexicographic on (x, y, z) codes.

#include <array>
#include <compare>
#include <cstdint>

#include "gptk/ffield.hpp"

namespace gptk {

struct ProjPoint {
    const FieldCtx* ctx = nullptr;
    std::array<uint32_t, 3> c{0, 0, 0};

    ProjPoint() = default;
    ProjPoint(const FieldCtx* f, uint32_t x, uint32_t y, uint32_t z);

    uint32_t x() const { return c[0]; }
    uint32_t y() const { return c[1]; }
    uint32_t z() const { return c[2]; }

    bool operator==(const ProjPoint& o) const { return ctx == o.ctx && c == o.c; }
    bool operator<(const ProjPoint& o) const { return c < o.c; }

    // lift into a bigger field
    ProjPoint embedded(const FieldCtx* big) const;
};

// a line is also a normalized coefficient triple (a : b : c), ax + by + cz = 0
struct Line {
    const FieldCtx* ctx = nullptr;
    std::array<uint32_t, 3> c{0, 0, 0};

    Line() = default;
    Line(const FieldCtx* f, uint32_t a, uint32_t b, uint32_t cc);

    bool operator==(const Line& o) const { return ctx == o.ctx && c == o.c; }
    bool contains(const ProjPoint& p) const;
    Line embedded(const FieldCtx* big) const;
};

// unique line through two distinct points (cross product); throws EqualPoints
Line line_through(const ProjPoint& p, const ProjPoint& q);

// the q+1 rational points of a line, canonical order
std::vector<ProjPoint> line_points(const Line& l);

// all q^2+q+1 points of PG(2, F), canonical order
std::vector<ProjPoint> all_plane_points(const FieldCtx* f);

} // namespace gptk
