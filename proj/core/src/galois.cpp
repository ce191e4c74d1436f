#include "gptk/galois.hpp"

#include <algorithm>
#include <set>

#include "gptk/group_id.hpp"

namespace gptk {

const char* tri_name(Tri t) {
    switch (t) {
        case Tri::False: return "false";
        case Tri::True: return "true";
        case Tri::Indeterminate: return "indeterminate";
    }
    return "?";
}

namespace {

// deterministic invertible matrix whose third column is the point
Mat3 basis_with_third_column(const ProjPoint& q) {
    const FieldCtx* f = q.ctx;
    int skip = q.c[0] != 0 ? 0 : (q.c[1] != 0 ? 1 : 2);
    int cols[2], nc = 0;
    for (int i = 0; i < 3 && nc < 2; ++i)
        if (i != skip) cols[nc++] = i;
    Mat3 m;
    m.ctx = f;
    for (int r = 0; r < 3; ++r) {
        m.at(r, 0) = (r == cols[0]) ? 1 : 0;
        m.at(r, 1) = (r == cols[1]) ? 1 : 0;
        m.at(r, 2) = q.c[size_t(r)];
    }
    return m;
}

} // namespace

PerspectivitySearchResult pencil_perspectivities(const CurvePoly& c, const ProjPoint& q,
                                                 int ext_k) {
    const FieldCtx* base = c.ctx();
    require_same_ctx(base, q.ctx);
    if (!c.contains(q)) fail(Errc::PointNotOnCurve, "pencil center must lie on the curve");
    uint64_t qq = 1;
    for (int i = 0; i < base->k * ext_k; ++i) {
        qq *= uint64_t(base->p);
        if (qq > kMaxFieldSize) fail(Errc::CapExceeded, "search extension exceeds the cap");
    }
    const FieldCtx* f = ext_k == 1 ? base : FieldCtx::get(base->p, base->k * ext_k);
    CurvePoly cc = ext_k == 1 ? c : c.embedded(f);
    ProjPoint qe = ext_k == 1 ? q : q.embedded(f);

    Mat3 conj = basis_with_third_column(qe);
    Mat3 conj_inv = conj.inverse();
    CurvePoly moved = cc.substituted(conj); // (0:0:1) now sits on the moved curve

    int d = cc.degree();
    int mult = moved.multiplicity_at(ProjPoint(f, 0, 0, 1));

    // z is the only coordinate that moves, so split the polynomial by
    // z-powers once and expand (bx + cy + az)^l per candidate
    std::vector<std::vector<CurveTerm>> by_z(size_t(d) + 1);
    for (const auto& t : moved.terms()) by_z[size_t(t.l)].push_back(t);
    // probe points reject almost all candidates cheaply
    std::vector<ProjPoint> probes;
    for (const auto& p : rational_points(moved, 1)) {
        probes.push_back(p);
        if (probes.size() == 3) break;
    }

    std::vector<Collineation> found;
    for (uint32_t a = 1; a < f->q; ++a)
        for (uint32_t b = 0; b < f->q; ++b)
            for (uint32_t g = 0; g < f->q; ++g) {
                Mat3 s;
                s.ctx = f;
                s.m = {1, 0, 0, 0, 1, 0, b, g, a};
                bool plausible = true;
                for (const auto& p : probes) {
                    uint32_t z2 = f->add(f->add(f->mul(b, p.c[0]), f->mul(g, p.c[1])),
                                         f->mul(a, p.c[2]));
                    if (moved.eval(ProjPoint(f, p.c[0], p.c[1], z2)) != 0) {
                        plausible = false;
                        break;
                    }
                }
                if (!plausible) continue;

                // accumulate sum_l B_l(x,y) (bx + cy + az)^l
                std::map<std::array<int, 3>, uint32_t> acc;
                std::map<std::array<int, 3>, uint32_t> lin;
                if (b != 0) lin[{1, 0, 0}] = b;
                if (g != 0) lin[{0, 1, 0}] = g;
                lin[{0, 0, 1}] = a;
                std::map<std::array<int, 3>, uint32_t> lpow{{{0, 0, 0}, 1}};
                auto fold = [&](std::map<std::array<int, 3>, uint32_t>& m,
                                std::array<int, 3> e, uint32_t c) {
                    if (c == 0) return;
                    auto [it, fresh] = m.emplace(e, c);
                    if (!fresh) {
                        it->second = f->add(it->second, c);
                        if (it->second == 0) m.erase(it);
                    }
                };
                for (int l = 0; l <= d; ++l) {
                    if (l > 0) {
                        std::map<std::array<int, 3>, uint32_t> nxt;
                        for (const auto& [e1, c1] : lpow)
                            for (const auto& [e2, c2] : lin)
                                fold(nxt, {e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]},
                                     f->mul(c1, c2));
                        lpow = std::move(nxt);
                    }
                    for (const auto& t : by_z[size_t(l)])
                        for (const auto& [e, c] : lpow)
                            fold(acc, {t.i + e[0], t.j + e[1], e[2]}, f->mul(t.c, c));
                }
                // compare with the target up to one scalar
                bool match = acc.size() == moved.terms().size();
                uint32_t ratio = 0;
                if (match)
                    for (const auto& t : moved.terms()) {
                        auto it = acc.find({t.i, t.j, t.l});
                        if (it == acc.end()) {
                            match = false;
                            break;
                        }
                        uint32_t r = f->div(it->second, t.c);
                        if (ratio == 0)
                            ratio = r;
                        else if (r != ratio) {
                            match = false;
                            break;
                        }
                    }
                if (match) {
                    Mat3 back = conj.mul(s).mul(conj_inv);
                    found.push_back(Collineation(back, 0));
                }
            }

    PerspectivitySearchResult res;
    res.center = qe;
    res.curve_degree = d;
    res.center_multiplicity = mult;
    res.group = from_elements<Collineation>(found, Collineation::identity(f));
    res.certificate = int(res.group.order()) == d - mult;
    for (size_t i = 0; i < res.group.order(); ++i)
        res.element_orders[res.group.element_order(int(i))] += 1;
    for (const auto& e : res.group.elems) {
        if (!(e.apply(qe) == qe))
            fail(Errc::ConsistencyCheckFailed, "pencil element moves the center");
    }
    return res;
}

OmegaReport build_omega(const CurvePoly& c, const ProjPoint& p1, const ProjPoint& p2) {
    if (!c.contains(p1) || !c.contains(p2))
        fail(Errc::PointNotOnCurve, "distinguished points must lie on the curve");
    OmegaReport rep;
    rep.line = line_through(p1, p2);
    LineSection sec = intersect_line(c, rep.line);
    rep.support = sec.points;
    rep.residual_degree = sec.residual_degree;
    rep.clean = sec.residual_degree == 0 && int(sec.points.size()) == c.degree();
    for (const auto& li : sec.points)
        if (li.multiplicity != 1 || !li.simple_on_curve) rep.clean = false;
    return rep;
}

namespace {

const FieldCtx* biggest_ctx(std::initializer_list<const FieldCtx*> ctxs) {
    const FieldCtx* best = nullptr;
    for (auto* c : ctxs)
        if (!best || c->q > best->q) best = c;
    for (auto* c : ctxs) {
        if (c->p != best->p || best->k % c->k != 0)
            fail(Errc::MixedFieldContexts, "no common extension field");
    }
    return best;
}

FinGroup<Collineation> lift_group(const FinGroup<Collineation>& g, const FieldCtx* f) {
    if (!g.order()) fail(Errc::InvalidParameter, "empty group");
    if (g.elems[0].ctx() == f) return g;
    std::vector<Collineation> elems;
    elems.reserve(g.order());
    for (const auto& e : g.elems) elems.push_back(e.embedded(f));
    std::vector<Collineation> gens;
    for (const auto& e : g.gens) gens.push_back(e.embedded(f));
    return from_elements<Collineation>(std::move(elems), Collineation::identity(f), gens);
}

} // namespace

PairReport verify_pair(const CurvePoly& c, const ProjPoint& p1, const ProjPoint& p2,
                       const FinGroup<Collineation>& g1in, const FinGroup<Collineation>& g2in) {
    const FieldCtx* f =
        biggest_ctx({c.ctx(), p1.ctx, p2.ctx, g1in.elems[0].ctx(), g2in.elems[0].ctx()});
    CurvePoly cc = c.ctx() == f ? c : c.embedded(f);
    ProjPoint P1 = p1.ctx == f ? p1 : p1.embedded(f);
    ProjPoint P2 = p2.ctx == f ? p2 : p2.embedded(f);
    FinGroup<Collineation> g1 = lift_group(g1in, f);
    FinGroup<Collineation> g2 = lift_group(g2in, f);

    for (const auto& e : g1.elems) {
        if (!(e.apply(P1) == P1)) fail(Errc::FixedPointViolation, "G1 does not fix P1");
        if (!preserves_curve(cc, e)) fail(Errc::FixedPointViolation, "G1 does not preserve C");
    }
    for (const auto& e : g2.elems) {
        if (!(e.apply(P2) == P2)) fail(Errc::FixedPointViolation, "G2 does not fix P2");
        if (!preserves_curve(cc, e)) fail(Errc::FixedPointViolation, "G2 does not preserve C");
    }

    PairReport rep;
    rep.p1 = P1;
    rep.p2 = P2;
    rep.g1_order = g1.order();
    rep.g2_order = g2.order();

    std::vector<Collineation> gens;
    gens.insert(gens.end(), g1.elems.begin(), g1.elems.end());
    gens.insert(gens.end(), g2.elems.begin(), g2.elems.end());
    FinGroup<Collineation> g = generate<Collineation>(gens, Collineation::identity(f));
    rep.g_order = g.order();

    rep.cond_II = intersect_elements(g1, g2).size() == 1;

    rep.omega = build_omega(cc, P1, P2);

    // action points: the line support when clean, else the orbit of P1
    std::vector<ProjPoint> pts;
    if (rep.omega.clean) {
        for (const auto& li : rep.omega.support) pts.push_back(li.point);
        std::sort(pts.begin(), pts.end());
        rep.omega_source = "line";
    }
    auto try_action = [&](const std::vector<ProjPoint>& within) -> std::optional<GroupAction> {
        try {
            return action_on(g, within.size(), [&](const Collineation& e, size_t i) -> size_t {
                ProjPoint img = e.apply(within[i]);
                auto it = std::lower_bound(within.begin(), within.end(), img);
                if (it == within.end() || !(*it == img)) return within.size();
                return size_t(it - within.begin());
            });
        } catch (const Error&) {
            return std::nullopt;
        }
    };
    std::optional<GroupAction> action;
    if (rep.omega.clean) action = try_action(pts);
    if (!action) {
        std::set<ProjPoint> orbit{P1};
        std::vector<ProjPoint> queue{P1};
        for (size_t head = 0; head < queue.size(); ++head) {
            ProjPoint cur = queue[head];
            for (const auto& e : g.gens) {
                ProjPoint img = e.apply(cur);
                if (orbit.insert(img).second) queue.push_back(img);
            }
        }
        pts.assign(orbit.begin(), orbit.end());
        rep.omega_source = "orbit";
        action = try_action(pts);
        if (!action) fail(Errc::NotInvariant, "group does not stabilize its own orbit");
        if (!orbit.count(P2))
            rep.notes.push_back("P2 is not in the orbit of P1; pair is not collinearly linked");
    }
    rep.omega_points = pts;
    rep.omega_perms = action->perms;

    auto index_of_point = [&](const ProjPoint& p) {
        auto it = std::lower_bound(pts.begin(), pts.end(), p);
        return (it != pts.end() && *it == p) ? int(it - pts.begin()) : -1;
    };
    int i1 = index_of_point(P1), i2 = index_of_point(P2);

    auto orbit_multiset = [&](const FinGroup<Collineation>& h, const ProjPoint& from) {
        std::map<ProjPoint, int> ms;
        for (const auto& e : h.elems) ms[e.apply(from)] += 1;
        return ms;
    };
    auto sharply_transitive = [&](const FinGroup<Collineation>& h, int fixed_idx) {
        if (h.order() != pts.size() - 1) return false;
        for (const auto& e : h.elems) {
            if (ElemOps<Collineation>::is_identity(e)) continue;
            for (size_t i = 0; i < pts.size(); ++i) {
                if (int(i) == fixed_idx) continue;
                if (e.apply(pts[i]) == pts[i]) return false;
            }
        }
        return true;
    };
    if (i1 >= 0 && i2 >= 0 && pts.size() >= 2) {
        rep.g1_sharply_transitive = sharply_transitive(g1, i1);
        rep.g2_sharply_transitive = sharply_transitive(g2, i2);
        auto lhs = orbit_multiset(g1, P2);
        lhs[P1] += 1;
        auto rhs = orbit_multiset(g2, P1);
        rhs[P2] += 1;
        rep.cond_III_multiset = lhs == rhs;
    }
    if (rep.omega.clean)
        rep.cond_III = rep.cond_III_multiset ? Tri::True : Tri::False;
    else
        rep.cond_III = Tri::Indeterminate;

    rep.kernel_order = action->kernel.size();
    {
        FinGroup<Collineation> kernel = subgroup_from_indices(g, action->kernel);
        rep.kernel_cyclic = kernel.order() == 1;
        for (size_t i = 0; i < kernel.order(); ++i)
            if (size_t(kernel.element_order(int(i))) == kernel.order()) rep.kernel_cyclic = true;
        if (rep.omega.clean) {
            if (!rep.kernel_cyclic || (c.degree() % int(rep.kernel_order)) != 0)
                fail(Errc::ConsistencyCheckFailed,
                     "action kernel is not cyclic of order dividing the degree");
        }
    }

    if (i1 >= 0) {
        FinGroup<Collineation> stab = stabilizer(g, *action, i1);
        bool normal = true;
        for (const auto& s : stab.elems) {
            Collineation si = s.inverse();
            for (const auto& e : g1.elems) {
                if (!g1.contains(s.compose(e).compose(si))) {
                    normal = false;
                    break;
                }
            }
            if (!normal) break;
        }
        rep.g1_normal_in_stabilizer = normal;
        if (!normal)
            fail(Errc::ConsistencyCheckFailed, "G1 is not normal in the stabilizer of P1");
    }

    rep.transitivity = pts.size() >= 2 ? transitivity_name(transitivity_grade(*action)) : "trivial";
    rep.facts = group_facts(g);
    ClassLabel label =
        pts.size() >= 2 ? classify_action(rep.facts, *action) : ClassLabel{"trivial", 0, {}};
    rep.classification_label = label.name;
    rep.label_evidence = label.evidence;
    return rep;
}

bool condition_I_check(int64_t group_order, const RamificationProfile& profile, int64_t g_curve) {
    int64_t d = different_from_profile(profile);
    // 2g - 2 = n (2g' - 2) + d  =>  solve for the quotient genus
    int64_t num = 2 * g_curve - 2 - d;
    if (num % group_order != 0)
        fail(Errc::NonIntegerGenus, "profile inconsistent with the curve genus");
    int64_t t = num / group_order; // = 2 g' - 2
    if ((t + 2) % 2 != 0 || t + 2 < 0)
        fail(Errc::NonIntegerGenus, "profile inconsistent with the curve genus");
    return (t + 2) / 2 == 0;
}

} // namespace gptk
