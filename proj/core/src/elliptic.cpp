#include "gptk/elliptic.hpp"

#include <algorithm>
#include <set>

#include "gptk/genus_tools.hpp"

namespace gptk {

EllipticModel::EllipticModel(CurvePoly curve, ProjPoint origin)
    : curve_(std::move(curve)), origin_(origin) {
    if (curve_.degree() != 3) fail(Errc::InvalidParameter, "elliptic model needs a cubic");
    require_same_ctx(curve_.ctx(), origin.ctx);
    if (!curve_.contains(origin_)) fail(Errc::PointNotOnCurve, "origin is not on the cubic");
    // smoothness over the field and over the quadratic extension
    if (!singular_points(curve_, 1).empty())
        fail(Errc::InvalidParameter, "cubic is singular over the base field");
    uint64_t q2 = uint64_t(curve_.ctx()->q) * curve_.ctx()->q;
    if (q2 <= kMaxFieldSize && !singular_points(curve_, 2).empty())
        fail(Errc::InvalidParameter, "cubic is singular over the quadratic extension");
    // origin must be an inflection point: the tangent meets with order 3
    SimplePointInfo si = is_simple(curve_, origin_);
    LineSection sec = intersect_line(curve_, *si.tangent);
    bool inflection = sec.residual_degree == 0 && sec.points.size() == 1 &&
                      sec.points[0].point == origin_ && sec.points[0].multiplicity == 3;
    if (!inflection) fail(Errc::InvalidParameter, "origin is not an inflection point");
    points_ = rational_points(curve_, 1);
    oi_ = index_of(origin_);
}

int EllipticModel::index_of(const ProjPoint& p) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), p);
    if (it == points_.end() || !(*it == p)) return -1;
    return int(it - points_.begin());
}

int EllipticModel::third_intersection(int a, int b) const {
    const ProjPoint& P = points_[size_t(a)];
    const ProjPoint& Q = points_[size_t(b)];
    Line l = a == b ? *is_simple(curve_, P).tangent : line_through(P, Q);
    LineSection sec = intersect_line(curve_, l);
    if (sec.residual_degree != 0)
        fail(Errc::ConsistencyCheckFailed, "cubic chord did not split");
    // remove P and Q once each; the remaining intersection is the third point
    std::vector<std::pair<ProjPoint, int>> mults;
    for (const auto& li : sec.points) mults.emplace_back(li.point, li.multiplicity);
    auto consume = [&](const ProjPoint& p) {
        for (auto& [pt, m] : mults)
            if (pt == p && m > 0) {
                --m;
                return;
            }
        fail(Errc::ConsistencyCheckFailed, "chord endpoint missing from the section");
    };
    consume(P);
    consume(Q);
    for (const auto& [pt, m] : mults)
        if (m > 0) {
            int idx = index_of(pt);
            if (idx < 0) fail(Errc::ConsistencyCheckFailed, "third chord point is irrational");
            return idx;
        }
    fail(Errc::ConsistencyCheckFailed, "no third chord point");
}

int EllipticModel::add(int a, int b) const {
    int t = third_intersection(a, b);
    return third_intersection(t, oi_);
}

int EllipticModel::negate(int a) const { return third_intersection(a, oi_); }

int EllipticModel::scalar_mul(int64_t n, int a) const {
    if (n < 0) return scalar_mul(-n, negate(a));
    int acc = oi_;
    for (int64_t i = 0; i < n; ++i) acc = add(acc, a);
    return acc;
}

TorsionSubgroup torsion(const EllipticModel& e, int64_t r) {
    TorsionSubgroup t;
    t.r = r;
    for (int i = 0; i < int(e.point_count()); ++i)
        if (e.scalar_mul(r, i) == e.origin_index()) t.point_indices.push_back(i);
    size_t n = t.point_indices.size();
    if (n == 1)
        t.rank = 0;
    else if (n == size_t(r))
        t.rank = 1;
    else if (n == size_t(r) * size_t(r))
        t.rank = 2;
    else
        fail(Errc::ConsistencyCheckFailed, "torsion count is not a power of r");
    return t;
}

Perm translation_map(const EllipticModel& e, int a_index) {
    Perm p;
    p.img.resize(e.point_count());
    for (int i = 0; i < int(e.point_count()); ++i) p.img[size_t(i)] = uint16_t(e.add(i, a_index));
    return p;
}

AutomorphismGroup automorphism_search(const EllipticModel& e) {
    const FieldCtx* f = e.curve().ctx();
    // conjugate so the origin is (0:1:0) and its tangent is z = 0; in that
    // frame every curve-preserving collineation fixing the origin is
    // triangular: x' = Ax + Bz, y' = Dx + Cy + Ez, z' = z
    SimplePointInfo si = is_simple(e.curve(), e.origin());
    Line tangent = *si.tangent;
    ProjPoint O = e.origin();
    // columns: c0 on the tangent but not O, c1 = O, c2 off the tangent
    ProjPoint c0 = [&] {
        for (const auto& p : line_points(tangent))
            if (!(p == O)) return p;
        fail(Errc::ConsistencyCheckFailed, "tangent has a single rational point");
    }();
    ProjPoint c2 = [&] {
        for (const auto& p : all_plane_points(f))
            if (!tangent.contains(p)) return p;
        fail(Errc::ConsistencyCheckFailed, "no point off the tangent");
    }();
    Mat3 conj;
    conj.ctx = f;
    for (int r = 0; r < 3; ++r) {
        conj.at(r, 0) = c0.c[size_t(r)];
        conj.at(r, 1) = O.c[size_t(r)];
        conj.at(r, 2) = c2.c[size_t(r)];
    }
    Mat3 conj_inv = conj.inverse();
    CurvePoly moved = e.curve().substituted(conj);

    // a few rational points of the moved curve reject almost every candidate
    // before the full polynomial substitution runs
    std::vector<ProjPoint> probes;
    for (const auto& p : rational_points(moved, 1)) {
        probes.push_back(p);
        if (probes.size() == 4) break;
    }
    auto lands_on_curve = [&](const Mat3& s) {
        for (const auto& p : probes) {
            std::array<uint32_t, 3> w{};
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    w[size_t(i)] = f->add(w[size_t(i)], f->mul(s.at(i, j), p.c[size_t(j)]));
            if (moved.eval(ProjPoint(f, w[0], w[1], w[2])) != 0) return false;
        }
        return true;
    };

    AutomorphismGroup out;
    std::vector<Collineation> found;
    for (uint32_t A = 1; A < f->q; ++A)
        for (uint32_t C = 1; C < f->q; ++C)
            for (uint32_t B = 0; B < f->q; ++B)
                for (uint32_t D = 0; D < f->q; ++D)
                    for (uint32_t E = 0; E < f->q; ++E) {
                        Mat3 s;
                        s.ctx = f;
                        s.m = {A, 0, B, D, C, E, 0, 0, 1};
                        if (!lands_on_curve(s)) continue;
                        CurvePoly image = moved.substituted(s);
                        if (image.proportional_to(moved))
                            found.push_back(Collineation(conj.mul(s).mul(conj_inv), 0));
                    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    // as permutations of the rational points, aligned with the matrices
    std::vector<std::pair<Perm, Collineation>> pairs;
    for (const auto& t : found) {
        Perm p;
        p.img.resize(e.point_count());
        bool ok = true;
        for (size_t i = 0; i < e.point_count() && ok; ++i) {
            int img = e.index_of(t.apply(e.points()[i]));
            if (img < 0) ok = false;
            p.img[i] = uint16_t(std::max(img, 0));
        }
        if (ok) pairs.emplace_back(std::move(p), t);
    }
    std::sort(pairs.begin(), pairs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Perm> perms;
    for (auto& [p, m] : pairs) {
        perms.push_back(p);
        out.matrices.push_back(m);
    }
    out.on_points = from_elements<Perm>(perms, Perm::identity(e.point_count()));
    // realign matrices with the group's element order
    std::vector<Collineation> aligned(out.on_points.order(), Collineation::identity(f));
    for (size_t i = 0; i < perms.size(); ++i) {
        int idx = out.on_points.index_of(perms[i]);
        if (idx >= 0) aligned[size_t(idx)] = out.matrices[i];
    }
    out.matrices = std::move(aligned);
    return out;
}

std::vector<int> fixed_points(const Perm& p) {
    std::vector<int> out;
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == i) out.push_back(int(i));
    return out;
}

namespace {

// deterministic subgroup of the given order: try single generators, then
// p-element closures, then all generated pairs, in canonical element order
std::optional<FinGroup<Perm>> find_subgroup_of_order(const FinGroup<Perm>& g, size_t want) {
    if (g.order() == want) return g;
    for (size_t i = 0; i < g.order(); ++i)
        if (size_t(g.element_order(int(i))) == want)
            return generate<Perm>({g.elems[i]}, g.elems[0]);
    int64_t p = 0;
    if (is_prime_power(int64_t(want), &p, nullptr)) {
        std::vector<Perm> pelems;
        for (size_t i = 0; i < g.order(); ++i) {
            int64_t o = g.element_order(int(i));
            while (o % p == 0) o /= p;
            if (o == 1) pelems.push_back(g.elems[i]);
        }
        FinGroup<Perm> s = generate<Perm>(pelems, g.elems[0]);
        if (s.order() == want) return s;
    }
    for (size_t a = 0; a < g.order(); ++a)
        for (size_t b = a + 1; b < g.order(); ++b) {
            FinGroup<Perm> s = generate<Perm>({g.elems[a], g.elems[b]}, g.elems[0]);
            if (s.order() == want) return s;
        }
    return std::nullopt;
}

CaseIvReport build_case_iv_inner(const EllipticModel& e, int64_t r, size_t g1_order) {
    CaseIvReport rep;
    rep.r = r;
    TorsionSubgroup tor = torsion(e, r);
    if (tor.rank != 2)
        fail(Errc::TorsionNotRational, "full r-torsion is not rational, rank " +
                                           std::to_string(tor.rank));
    rep.omega = tor.point_indices; // the orbit of O under the torsion translations

    AutomorphismGroup aut = automorphism_search(e);
    rep.aut_order = aut.on_points.order();
    auto g1opt = find_subgroup_of_order(aut.on_points, g1_order);
    if (!g1opt)
        fail(Errc::NoSuitableStabilizerSubgroup,
             "stabilizer has no subgroup of order " + std::to_string(g1_order) +
                 " (stabilizer order " + std::to_string(aut.on_points.order()) + ")");
    FinGroup<Perm> g1 = *g1opt;
    rep.g1_order = g1.order();

    // canonical torsion translation: first non-origin torsion point
    int a_index = -1;
    for (int i : rep.omega)
        if (i != e.origin_index()) {
            a_index = i;
            break;
        }
    Perm tau = translation_map(e, a_index);
    Perm tau_inv = tau.inverse();
    rep.p2_index = int(tau_inv[size_t(e.origin_index())]);

    std::vector<Perm> g2elems;
    for (const auto& x : g1.elems) g2elems.push_back(tau_inv.compose(x).compose(tau));
    FinGroup<Perm> g2 = from_elements<Perm>(g2elems, Perm::identity(e.point_count()));

    std::vector<Perm> gens;
    gens.insert(gens.end(), g1.elems.begin(), g1.elems.end());
    gens.insert(gens.end(), g2.elems.begin(), g2.elems.end());
    rep.group = generate<Perm>(gens, Perm::identity(e.point_count()));
    rep.g_order = rep.group.order();
    rep.cond_II = intersect_elements(g1, g2).size() == 1;

    // restrict to omega
    std::vector<int> om = rep.omega;
    std::sort(om.begin(), om.end());
    auto om_index = [&](int pt) {
        auto it = std::lower_bound(om.begin(), om.end(), pt);
        return (it != om.end() && *it == pt) ? size_t(it - om.begin()) : om.size();
    };
    rep.omega_action = action_on(rep.group, om.size(), [&](const Perm& p, size_t i) {
        return om_index(p[size_t(om[i])]);
    });
    rep.kernel_order = rep.omega_action.kernel.size();
    rep.transitivity = transitivity_name(transitivity_grade(rep.omega_action));

    // sharp transitivity of G1 on omega minus the origin, and the multiset
    // identity
    int o = e.origin_index();
    {
        bool sharp = g1.order() == om.size() - 1;
        for (const auto& x : g1.elems) {
            if (x.is_identity()) continue;
            for (int ptv : om)
                if (ptv != o && x[size_t(ptv)] == ptv) sharp = false;
        }
        rep.g1_sharply_transitive = sharp;
    }
    {
        std::map<int, int> lhs, rhs;
        for (const auto& x : g1.elems) lhs[x[size_t(rep.p2_index)]] += 1;
        lhs[o] += 1;
        for (const auto& x : g2.elems) rhs[x[size_t(o)]] += 1;
        rhs[rep.p2_index] += 1;
        rep.cond_III_multiset = lhs == rhs;
    }
    // G1 must be normal in the stabilizer of the origin
    {
        FinGroup<Perm> stab = stabilizer(rep.group, rep.omega_action, int(om_index(o)));
        bool normal = true;
        for (const auto& s : stab.elems) {
            Perm si = s.inverse();
            for (const auto& x : g1.elems)
                if (!g1.contains(s.compose(x).compose(si))) {
                    normal = false;
                    break;
                }
            if (!normal) break;
        }
        rep.g1_normal_in_stabilizer = normal;
        if (!normal)
            fail(Errc::ConsistencyCheckFailed, "G1 is not normal in the origin stabilizer");
    }
    rep.label = classify(rep.group, rep.omega_action);
    return rep;
}

} // namespace

CaseIvReport build_case_iv(const EllipticModel& e, int64_t r, size_t g1_order,
                           bool allow_extension) {
    try {
        return build_case_iv_inner(e, r, g1_order);
    } catch (const Error& err) {
        if (!allow_extension || err.code() != Errc::NoSuitableStabilizerSubgroup) throw;
    }
    // retry over the quadratic extension
    const FieldCtx* f = e.curve().ctx();
    const FieldCtx* big = FieldCtx::get(f->p, f->k * 2);
    EllipticModel e2(e.curve().embedded(big), e.origin().embedded(big));
    CaseIvReport rep = build_case_iv_inner(e2, r, g1_order);
    rep.used_quadratic_extension = true;
    return rep;
}

} // namespace gptk
