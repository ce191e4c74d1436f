#include "gptk/plane_curve.hpp"

#include <algorithm>
#include <map>

namespace gptk {

namespace {

struct ExpLess {
    bool operator()(const std::array<int, 3>& a, const std::array<int, 3>& b) const { return a > b; }
};

std::vector<CurveTerm> merge_terms(const FieldCtx* f, const std::vector<CurveTerm>& in) {
    std::map<std::array<int, 3>, uint32_t, ExpLess> acc;
    for (const auto& t : in) {
        if (t.c == 0) continue;
        auto key = t.exps();
        auto [it, fresh] = acc.emplace(key, t.c);
        if (!fresh) {
            it->second = f->add(it->second, t.c);
            if (it->second == 0) acc.erase(it);
        }
    }
    std::vector<CurveTerm> out;
    out.reserve(acc.size());
    for (const auto& [e, c] : acc) out.push_back({e[0], e[1], e[2], c});
    return out;
}

} // namespace

CurvePoly::CurvePoly(const FieldCtx* f, std::vector<CurveTerm> terms) : ctx_(f) {
    terms_ = merge_terms(f, terms);
    if (terms_.empty()) fail(Errc::InvalidParameter, "curve polynomial has no nonzero term");
    int d = terms_[0].i + terms_[0].j + terms_[0].l;
    for (const auto& t : terms_) {
        if (t.i < 0 || t.j < 0 || t.l < 0 || t.i + t.j + t.l != d)
            fail(Errc::InvalidParameter, "curve polynomial is not homogeneous");
    }
    d_ = d;
}

uint32_t CurvePoly::eval(const ProjPoint& p) const {
    require_same_ctx(ctx_, p.ctx);
    // stack power tables up to the degree (desk-scale degrees are small)
    constexpr int kMaxEvalDegree = 63;
    if (d_ > kMaxEvalDegree) fail(Errc::CapExceeded, "degree beyond the evaluation table");
    uint32_t pw[3][kMaxEvalDegree + 1];
    for (int v = 0; v < 3; ++v) {
        pw[v][0] = 1;
        for (int e = 1; e <= d_; ++e) pw[v][e] = ctx_->mul(pw[v][e - 1], p.c[size_t(v)]);
    }
    uint32_t s = 0;
    for (const auto& t : terms_) {
        uint32_t m = ctx_->mul(ctx_->mul(pw[0][t.i], pw[1][t.j]), pw[2][t.l]);
        s = ctx_->add(s, ctx_->mul(t.c, m));
    }
    return s;
}

CurvePoly CurvePoly::partial(int var) const {
    std::vector<CurveTerm> out;
    for (const auto& t : terms_) {
        int e = var == 0 ? t.i : var == 1 ? t.j : t.l;
        if (e == 0) continue;
        uint32_t c = ctx_->mul(t.c, ctx_->from_int(e));
        if (c == 0) continue;
        CurveTerm nt = t;
        (var == 0 ? nt.i : var == 1 ? nt.j : nt.l) -= 1;
        nt.c = c;
        out.push_back(nt);
    }
    if (out.empty()) {
        // formally zero derivative: represent as the zero-free invariant by
        // throwing where callers would misuse it; callers test via
        // partial_or_zero below
        return CurvePoly();
    }
    return CurvePoly(ctx_, out);
}

int CurvePoly::multiplicity_at(const ProjPoint& p) const {
    require_same_ctx(ctx_, p.ctx);
    // move p to (0:0:1) with a deterministic basis change, dehomogenize at
    // z = 1 and read the lowest total degree
    std::array<uint32_t, 3> v = p.c;
    // pick standard basis columns keeping the matrix invertible
    Mat3 m;
    m.ctx = ctx_;
    int skip = v[0] != 0 ? 0 : (v[1] != 0 ? 1 : 2);
    int cols[2], nc = 0;
    for (int i = 0; i < 3 && nc < 2; ++i)
        if (i != skip) cols[nc++] = i;
    for (int r = 0; r < 3; ++r) {
        m.at(r, 0) = (r == cols[0]) ? 1 : 0;
        m.at(r, 1) = (r == cols[1]) ? 1 : 0;
        m.at(r, 2) = v[size_t(r)];
    }
    CurvePoly moved = substituted(m);
    int best = d_;
    for (const auto& t : moved.terms()) best = std::min(best, t.i + t.j);
    return best;
}

CurvePoly CurvePoly::embedded(const FieldCtx* big) const {
    std::vector<CurveTerm> out = terms_;
    for (auto& t : out) t.c = big->embed(ctx_, t.c);
    return CurvePoly(big, out);
}

CurvePoly CurvePoly::normalized_leading() const {
    uint32_t lead = terms_[0].c;
    if (lead == 1) return *this;
    uint32_t s = ctx_->inv(lead);
    std::vector<CurveTerm> out = terms_;
    for (auto& t : out) t.c = ctx_->mul(t.c, s);
    return CurvePoly(ctx_, out);
}

bool CurvePoly::proportional_to(const CurvePoly& o) const {
    if (ctx_ != o.ctx_ || d_ != o.d_ || terms_.size() != o.terms_.size()) return false;
    uint32_t ratio = 0;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].exps() != o.terms_[i].exps()) return false;
        uint32_t r = ctx_->div(terms_[i].c, o.terms_[i].c);
        if (i == 0)
            ratio = r;
        else if (r != ratio)
            return false;
    }
    return true;
}

namespace {

// trivariate dense-ish polynomial accumulator keyed by exponent triple
using TriMap = std::map<std::array<int, 3>, uint32_t>;

void tri_add(const FieldCtx* f, TriMap& m, std::array<int, 3> e, uint32_t c) {
    if (c == 0) return;
    auto [it, fresh] = m.emplace(e, c);
    if (!fresh) {
        it->second = f->add(it->second, c);
        if (it->second == 0) m.erase(it);
    }
}

TriMap tri_mul(const FieldCtx* f, const TriMap& a, const TriMap& b) {
    TriMap r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b)
            tri_add(f, r, {ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, f->mul(ca, cb));
    return r;
}

} // namespace

CurvePoly CurvePoly::substituted(const Mat3& m) const {
    require_same_ctx(ctx_, m.ctx);
    const FieldCtx* f = ctx_;
    // powers of the three linear forms L_i = sum_j m[i][j] x_j
    std::array<std::vector<TriMap>, 3> rows;
    for (int i = 0; i < 3; ++i) {
        TriMap lin;
        tri_add(f, lin, {1, 0, 0}, m.at(i, 0));
        tri_add(f, lin, {0, 1, 0}, m.at(i, 1));
        tri_add(f, lin, {0, 0, 1}, m.at(i, 2));
        rows[size_t(i)].resize(size_t(d_) + 1);
        rows[size_t(i)][0] = TriMap{{{0, 0, 0}, 1}};
        for (int e = 1; e <= d_; ++e)
            rows[size_t(i)][size_t(e)] = tri_mul(f, rows[size_t(i)][size_t(e - 1)], lin);
    }
    TriMap acc;
    for (const auto& t : terms_) {
        TriMap cur = tri_mul(f, rows[0][size_t(t.i)], rows[1][size_t(t.j)]);
        cur = tri_mul(f, cur, rows[2][size_t(t.l)]);
        for (const auto& [e, c] : cur) tri_add(f, acc, e, f->mul(c, t.c));
    }
    std::vector<CurveTerm> out;
    out.reserve(acc.size());
    for (const auto& [e, c] : acc) out.push_back({e[0], e[1], e[2], c});
    return CurvePoly(f, out);
}

CurvePoly CurvePoly::coeff_frob(int e) const {
    std::vector<CurveTerm> out = terms_;
    for (auto& t : out) t.c = ctx_->frob(t.c, e);
    return CurvePoly(ctx_, out);
}

std::vector<ProjPoint> rational_points(const CurvePoly& c, int ext_k) {
    const FieldCtx* base = c.ctx();
    uint64_t q = 1;
    for (int i = 0; i < base->k * ext_k; ++i) {
        q *= uint64_t(base->p);
        if (q > kMaxFieldSize) fail(Errc::CapExceeded, "extension exceeds the field cap");
    }
    const FieldCtx* big = ext_k == 1 ? base : FieldCtx::get(base->p, base->k * ext_k);
    CurvePoly cc = ext_k == 1 ? c : c.embedded(big);
    std::vector<ProjPoint> out;
    for (const auto& p : all_plane_points(big))
        if (cc.contains(p)) out.push_back(p);
    return out;
}

SimplePointInfo is_simple(const CurvePoly& c, const ProjPoint& p) {
    if (!c.contains(p)) fail(Errc::PointNotOnCurve, "simplicity test off the curve");
    const FieldCtx* f = c.ctx();
    std::array<uint32_t, 3> grad{};
    for (int v = 0; v < 3; ++v) {
        CurvePoly d = c.partial(v);
        grad[size_t(v)] = d.ctx() == nullptr ? 0 : d.eval(p);
    }
    SimplePointInfo info;
    if (grad[0] == 0 && grad[1] == 0 && grad[2] == 0) {
        info.simple = false;
        return info;
    }
    info.simple = true;
    info.tangent = Line(f, grad[0], grad[1], grad[2]);
    return info;
}

std::vector<ProjPoint> singular_points(const CurvePoly& c, int ext_k) {
    auto pts = rational_points(c, ext_k);
    const FieldCtx* big = ext_k == 1 ? c.ctx() : FieldCtx::get(c.ctx()->p, c.ctx()->k * ext_k);
    CurvePoly cc = ext_k == 1 ? c : c.embedded(big);
    std::vector<ProjPoint> out;
    for (const auto& p : pts)
        if (!is_simple(cc, p).simple) out.push_back(p);
    return out;
}

bool line_is_component(const CurvePoly& c, const Line& l) {
    // move the line to z = 0 and test divisibility by z
    const FieldCtx* f = c.ctx();
    auto pts = line_points(l);
    ProjPoint p = pts[0], q = pts[1];
    // matrix with columns p, q, n where n is off the line; some coordinate
    // vertex always works
    ProjPoint n = [&] {
        for (int i = 2; i >= 0; --i) {
            ProjPoint cand(f, i == 0 ? 1u : 0u, i == 1 ? 1u : 0u, i == 2 ? 1u : 0u);
            if (!l.contains(cand)) return cand;
        }
        fail(Errc::ConsistencyCheckFailed, "no vertex off the line");
    }();
    Mat3 m;
    m.ctx = f;
    for (int r = 0; r < 3; ++r) {
        m.at(r, 0) = p.c[size_t(r)];
        m.at(r, 1) = q.c[size_t(r)];
        m.at(r, 2) = n.c[size_t(r)];
    }
    CurvePoly moved = c.substituted(m);
    for (const auto& t : moved.terms())
        if (t.l == 0) return false;
    return true;
}

LineSection intersect_line(const CurvePoly& c, const Line& l, uint64_t max_field_size) {
    const FieldCtx* f = c.ctx();
    require_same_ctx(f, l.ctx);
    if (line_is_component(c, l)) fail(Errc::LineIsComponent, "line divides the curve");

    // restrict to the line through its first two canonical rational points:
    // B(s,t) = C(sP + tQ)
    auto pts = line_points(l);
    ProjPoint P = pts[0], Q = pts[1];
    int d = c.degree();

    LineSection out;
    out.degree = d;
    int found = 0;

    // roots (s:t) are found per extension level; a root is charged to the
    // smallest level containing it
    for (int e = 1;; ++e) {
        if (f->k * e > kMaxDegree) break;
        uint64_t q = 1;
        bool over = false;
        for (int i = 0; i < f->k * e && !over; ++i) {
            q *= uint64_t(f->p);
            if (q > max_field_size) over = true;
        }
        if (over) break;
        const FieldCtx* big = e == 1 ? f : FieldCtx::get(f->p, f->k * e);
        CurvePoly cc = e == 1 ? c : c.embedded(big);
        ProjPoint Pb = e == 1 ? P : P.embedded(big);
        ProjPoint Qb = e == 1 ? Q : Q.embedded(big);

        // binary form coefficients b_m of s^(d-m) t^m
        std::vector<uint32_t> b(size_t(d) + 1, 0);
        {
            // evaluate via substitution x = s*P + t*Q using the trivariate
            // machinery on a 2-variable matrix is overkill; expand directly
            // by multiplying out linear forms per term
            using Bin = std::vector<uint32_t>; // index = power of t
            auto bin_mul = [&](const Bin& a, const Bin& bb) {
                Bin r(a.size() + bb.size() - 1, 0);
                for (size_t i = 0; i < a.size(); ++i)
                    for (size_t j = 0; j < bb.size(); ++j)
                        r[i + j] = big->add(r[i + j], big->mul(a[i], bb[j]));
                return r;
            };
            std::array<Bin, 3> lin;
            for (int v = 0; v < 3; ++v) lin[size_t(v)] = Bin{Pb.c[size_t(v)], Qb.c[size_t(v)]};
            std::array<std::vector<Bin>, 3> pw;
            for (int v = 0; v < 3; ++v) {
                pw[size_t(v)].resize(size_t(d) + 1);
                pw[size_t(v)][0] = Bin{1};
                for (int ee = 1; ee <= d; ++ee)
                    pw[size_t(v)][size_t(ee)] = bin_mul(pw[size_t(v)][size_t(ee - 1)], lin[size_t(v)]);
            }
            Bin total(size_t(d) + 1, 0);
            for (const auto& t : cc.terms()) {
                Bin cur = bin_mul(bin_mul(pw[0][size_t(t.i)], pw[1][size_t(t.j)]), pw[2][size_t(t.l)]);
                cur.resize(size_t(d) + 1, 0);
                for (size_t i = 0; i < cur.size(); ++i)
                    total[i] = big->add(total[i], big->mul(cur[i], t.c));
            }
            b = total;
        }

        // roots at (1 : r): univariate in t; root at (0 : 1) iff leading
        // s-degree coefficients vanish
        auto min_level = [&](uint32_t val) {
            // smallest divisor e' of e with val in GF(p^(k e'))
            for (int ep = 1; ep <= e; ++ep) {
                if (e % ep != 0) continue;
                if (big->frob(val, f->k * ep) == val) return ep;
            }
            return e;
        };
        auto root_level = [&](uint32_t s, uint32_t t) { return std::max(min_level(s), min_level(t)); };

        {
            UniPoly ut(big, b);
            if (ut.is_zero()) fail(Errc::ConsistencyCheckFailed, "restriction vanished");
            // multiplicity of (0:1): d - degree in t
            int inf_mult = d - ut.degree();
            if (inf_mult > 0 && e == 1) {
                ProjPoint pt = Qb;
                out.points.push_back({pt, inf_mult, is_simple(cc, pt).simple});
                found += inf_mult;
            }
            for (const auto& [r, mult] : all_roots(ut)) {
                if (root_level(1, r) != e) continue; // charged to a smaller level
                std::array<uint32_t, 3> v{};
                for (int vv = 0; vv < 3; ++vv)
                    v[size_t(vv)] = big->add(Pb.c[size_t(vv)], big->mul(r, Qb.c[size_t(vv)]));
                ProjPoint pt(big, v[0], v[1], v[2]);
                out.points.push_back({pt, mult, is_simple(cc, pt).simple});
                found += mult;
            }
        }
        if (found == d) break;
    }
    out.residual_degree = d - found;
    return out;
}

CurvePoly quadratic_transform(const CurvePoly& c) {
    // x^i y^j z^l -> x^(j+l) y^(i+l) z^(i+j), then strip the monomial gcd
    for (int var = 0; var < 3; ++var) {
        bool has_zero = false;
        for (const auto& t : c.terms())
            if ((var == 0 ? t.i : var == 1 ? t.j : t.l) == 0) has_zero = true;
        if (!has_zero)
            fail(Errc::FundamentalLineComponent, "a fundamental line divides the curve");
    }
    std::vector<CurveTerm> out;
    int mi = 1 << 20, mj = mi, ml = mi;
    for (const auto& t : c.terms()) {
        CurveTerm nt;
        nt.i = t.j + t.l;
        nt.j = t.i + t.l;
        nt.l = t.i + t.j;
        nt.c = t.c;
        out.push_back(nt);
        mi = std::min(mi, nt.i);
        mj = std::min(mj, nt.j);
        ml = std::min(ml, nt.l);
    }
    for (auto& t : out) {
        t.i -= mi;
        t.j -= mj;
        t.l -= ml;
    }
    return CurvePoly(c.ctx(), out);
}

CurvePoly apply_map_to_curve(const CurvePoly& c, const Collineation& t) {
    require_same_ctx(c.ctx(), t.ctx());
    // P on C iff T(P) on C': C' = (sigma^e C) o M^-1
    CurvePoly shifted = t.frob == 0 ? c : c.coeff_frob(t.frob);
    return shifted.substituted(t.mat.inverse());
}

bool preserves_curve(const CurvePoly& c, const Collineation& t) {
    return apply_map_to_curve(c, t).proportional_to(c);
}

} // namespace gptk
