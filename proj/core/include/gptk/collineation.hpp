#pragma once

// Semilinear plane maps: an invertible 3x3 matrix together with a Frobenius
// exponent. Matrices are stored projectively normalized (first nonzero entry
// in row-major order equals 1), so equality is projective equality and
// scalar lifts never survive into groups built from these.

#include <array>
#include <cstdint>
#include <vector>

#include "gptk/proj.hpp"

namespace gptk {

struct Mat3 {
    const FieldCtx* ctx = nullptr;
    std::array<uint32_t, 9> m{}; // row-major

    Mat3() = default;
    Mat3(const FieldCtx* f, std::array<uint32_t, 9> entries) : ctx(f), m(entries) {}
    static Mat3 identity(const FieldCtx* f);

    uint32_t at(int r, int c) const { return m[size_t(3 * r + c)]; }
    uint32_t& at(int r, int c) { return m[size_t(3 * r + c)]; }

    uint32_t det() const;
    Mat3 mul(const Mat3& o) const;
    Mat3 inverse() const; // throws SingularMatrix
    Mat3 frobenius(int e) const; // entrywise a -> a^(p^e)
    Mat3 embedded(const FieldCtx* big) const;
    bool operator==(const Mat3& o) const { return ctx == o.ctx && m == o.m; }
};

struct Collineation {
    Mat3 mat;
    int frob = 0; // 0 <= frob < ctx->k

    Collineation() = default;
    Collineation(Mat3 m, int e);
    static Collineation identity(const FieldCtx* f);

    const FieldCtx* ctx() const { return mat.ctx; }
    bool is_identity() const;

    // (M1,e1)(M2,e2) = (M1 * sigma^{e1}(M2), e1+e2 mod k); acts v -> M sigma^e(v)
    Collineation compose(const Collineation& o) const;
    Collineation inverse() const;
    ProjPoint apply(const ProjPoint& p) const;
    Line apply(const Line& l) const;
    Collineation embedded(const FieldCtx* big) const;

    bool operator==(const Collineation& o) const { return mat == o.mat && frob == o.frob; }
    bool operator<(const Collineation& o) const {
        if (frob != o.frob) return frob < o.frob;
        return mat.m < o.mat.m;
    }
};

struct CollineationHash {
    size_t operator()(const Collineation& c) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](uint64_t v) {
            h ^= v;
            h *= 1099511628211ull;
        };
        for (auto v : c.mat.m) mix(v);
        mix(uint64_t(c.frob));
        return size_t(h);
    }
};

} // namespace gptk
