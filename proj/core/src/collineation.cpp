#include "gptk/collineation.hpp"

#include <algorithm>

namespace gptk {

ProjPoint::ProjPoint(const FieldCtx* f, uint32_t x, uint32_t y, uint32_t z) : ctx(f), c{x, y, z} {
    if (x == 0 && y == 0 && z == 0) fail(Errc::InvalidParameter, "projective point (0,0,0)");
    // normalize: last nonzero coordinate equals 1
    int last = c[2] != 0 ? 2 : (c[1] != 0 ? 1 : 0);
    uint32_t s = ctx->inv(c[size_t(last)]);
    for (auto& v : c) v = ctx->mul(v, s);
}

ProjPoint ProjPoint::embedded(const FieldCtx* big) const {
    return ProjPoint(big, big->embed(ctx, c[0]), big->embed(ctx, c[1]), big->embed(ctx, c[2]));
}

Line::Line(const FieldCtx* f, uint32_t a, uint32_t b, uint32_t cc) : ctx(f), c{a, b, cc} {
    if (a == 0 && b == 0 && cc == 0) fail(Errc::InvalidParameter, "zero line");
    int last = c[2] != 0 ? 2 : (c[1] != 0 ? 1 : 0);
    uint32_t s = ctx->inv(c[size_t(last)]);
    for (auto& v : c) v = ctx->mul(v, s);
}

bool Line::contains(const ProjPoint& p) const {
    require_same_ctx(ctx, p.ctx);
    uint32_t s = ctx->add(ctx->add(ctx->mul(c[0], p.c[0]), ctx->mul(c[1], p.c[1])),
                          ctx->mul(c[2], p.c[2]));
    return s == 0;
}

Line Line::embedded(const FieldCtx* big) const {
    return Line(big, big->embed(ctx, c[0]), big->embed(ctx, c[1]), big->embed(ctx, c[2]));
}

Line line_through(const ProjPoint& p, const ProjPoint& q) {
    require_same_ctx(p.ctx, q.ctx);
    if (p == q) fail(Errc::EqualPoints, "line through equal points");
    const FieldCtx* f = p.ctx;
    auto cross = [&](int i, int j) {
        return f->sub(f->mul(p.c[size_t(i)], q.c[size_t(j)]), f->mul(p.c[size_t(j)], q.c[size_t(i)]));
    };
    return Line(f, cross(1, 2), f->neg(cross(0, 2)), cross(0, 1));
}

std::vector<ProjPoint> line_points(const Line& l) {
    const FieldCtx* f = l.ctx;
    // kernel basis of the single linear form
    int piv = l.c[0] != 0 ? 0 : (l.c[1] != 0 ? 1 : 2);
    int free1 = -1, free2 = -1;
    for (int i = 0; i < 3; ++i) {
        if (i == piv) continue;
        (free1 < 0 ? free1 : free2) = i;
    }
    auto basis_vec = [&](int fr) {
        std::array<uint32_t, 3> v{0, 0, 0};
        v[size_t(fr)] = 1;
        v[size_t(piv)] = f->neg(f->div(l.c[size_t(fr)], l.c[size_t(piv)]));
        return v;
    };
    auto u = basis_vec(free1), v = basis_vec(free2);
    std::vector<ProjPoint> pts;
    pts.reserve(size_t(f->q) + 1);
    pts.emplace_back(f, u[0], u[1], u[2]);
    for (uint32_t t = 0; t < f->q; ++t) {
        std::array<uint32_t, 3> w;
        for (int i = 0; i < 3; ++i) w[size_t(i)] = f->add(f->mul(u[size_t(i)], t), v[size_t(i)]);
        pts.emplace_back(f, w[0], w[1], w[2]);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

std::vector<ProjPoint> all_plane_points(const FieldCtx* f) {
    std::vector<ProjPoint> pts;
    pts.reserve(size_t(f->q) * f->q + f->q + 1);
    for (uint32_t x = 0; x < f->q; ++x)
        for (uint32_t y = 0; y < f->q; ++y) pts.emplace_back(f, x, y, 1);
    for (uint32_t x = 0; x < f->q; ++x) pts.emplace_back(f, x, 1, 0);
    pts.emplace_back(f, 1, 0, 0);
    std::sort(pts.begin(), pts.end());
    return pts;
}

Mat3 Mat3::identity(const FieldCtx* f) {
    Mat3 r;
    r.ctx = f;
    r.m = {1, 0, 0, 0, 1, 0, 0, 0, 1};
    return r;
}

uint32_t Mat3::det() const {
    auto mm = [&](int r, int c) { return at(r, c); };
    auto f = ctx;
    uint32_t t1 = f->mul(mm(0, 0), f->sub(f->mul(mm(1, 1), mm(2, 2)), f->mul(mm(1, 2), mm(2, 1))));
    uint32_t t2 = f->mul(mm(0, 1), f->sub(f->mul(mm(1, 0), mm(2, 2)), f->mul(mm(1, 2), mm(2, 0))));
    uint32_t t3 = f->mul(mm(0, 2), f->sub(f->mul(mm(1, 0), mm(2, 1)), f->mul(mm(1, 1), mm(2, 0))));
    return f->add(f->sub(t1, t2), t3);
}

Mat3 Mat3::mul(const Mat3& o) const {
    require_same_ctx(ctx, o.ctx);
    Mat3 r;
    r.ctx = ctx;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            uint32_t s = 0;
            for (int t = 0; t < 3; ++t) s = ctx->add(s, ctx->mul(at(i, t), o.at(t, j)));
            r.at(i, j) = s;
        }
    return r;
}

Mat3 Mat3::inverse() const {
    uint32_t d = det();
    if (d == 0) fail(Errc::SingularMatrix, "matrix is not invertible");
    uint32_t di = ctx->inv(d);
    auto f = ctx;
    auto cof = [&](int r, int c) {
        int r1 = (r + 1) % 3, r2 = (r + 2) % 3, c1 = (c + 1) % 3, c2 = (c + 2) % 3;
        return f->sub(f->mul(at(r1, c1), at(r2, c2)), f->mul(at(r1, c2), at(r2, c1)));
    };
    Mat3 r;
    r.ctx = ctx;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r.at(i, j) = f->mul(di, cof(j, i));
    return r;
}

Mat3 Mat3::frobenius(int e) const {
    Mat3 r = *this;
    for (auto& v : r.m) v = ctx->frob(v, e);
    return r;
}

Mat3 Mat3::embedded(const FieldCtx* big) const {
    Mat3 r;
    r.ctx = big;
    for (int i = 0; i < 9; ++i) r.m[size_t(i)] = big->embed(ctx, m[size_t(i)]);
    return r;
}

namespace {
Mat3 proj_normalize(Mat3 m) {
    for (auto v : m.m) {
        if (v != 0) {
            uint32_t s = m.ctx->inv(v);
            for (auto& w : m.m) w = m.ctx->mul(w, s);
            return m;
        }
    }
    fail(Errc::SingularMatrix, "zero matrix");
}
} // namespace

Collineation::Collineation(Mat3 m, int e) {
    if (m.det() == 0) fail(Errc::SingularMatrix, "collineation matrix is singular");
    mat = proj_normalize(std::move(m));
    int k = mat.ctx->k;
    frob = ((e % k) + k) % k;
}

Collineation Collineation::identity(const FieldCtx* f) { return Collineation(Mat3::identity(f), 0); }

bool Collineation::is_identity() const {
    return frob == 0 && mat == Mat3::identity(mat.ctx);
}

Collineation Collineation::compose(const Collineation& o) const {
    require_same_ctx(mat.ctx, o.mat.ctx);
    return Collineation(mat.mul(o.mat.frobenius(frob)), frob + o.frob);
}

Collineation Collineation::inverse() const {
    return Collineation(mat.inverse().frobenius(-frob), -frob);
}

ProjPoint Collineation::apply(const ProjPoint& p) const {
    require_same_ctx(mat.ctx, p.ctx);
    const FieldCtx* f = mat.ctx;
    std::array<uint32_t, 3> v;
    for (int i = 0; i < 3; ++i) v[size_t(i)] = f->frob(p.c[size_t(i)], frob);
    std::array<uint32_t, 3> w{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            w[size_t(i)] = f->add(w[size_t(i)], f->mul(mat.at(i, j), v[size_t(j)]));
    return ProjPoint(f, w[0], w[1], w[2]);
}

Line Collineation::apply(const Line& l) const {
    // image line coefficients: (M^-1)^T sigma^e(l)
    require_same_ctx(mat.ctx, l.ctx);
    const FieldCtx* f = mat.ctx;
    Mat3 mi = mat.inverse();
    std::array<uint32_t, 3> v;
    for (int i = 0; i < 3; ++i) v[size_t(i)] = f->frob(l.c[size_t(i)], frob);
    std::array<uint32_t, 3> w{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            w[size_t(i)] = f->add(w[size_t(i)], f->mul(mi.at(j, i), v[size_t(j)]));
    return Line(f, w[0], w[1], w[2]);
}

Collineation Collineation::embedded(const FieldCtx* big) const {
    // x -> x^(p^e) commutes with the subfield embedding, so the exponent
    // carries over unchanged
    return Collineation(mat.embedded(big), frob);
}

} // namespace gptk
