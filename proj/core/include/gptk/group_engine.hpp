#pragma once

// Explicit finite groups over two element kinds: semilinear plane
// collineations and plain permutations. Everything is extensional at desk
// scale: elements are stored, closure is breadth-first with sorted
// generators so element order is reproducible, and actions are cached
// permutation tables.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "gptk/collineation.hpp"

namespace gptk {

inline constexpr size_t kClosureCap = size_t(1) << 20;

// -------- permutations --------

struct Perm {
    std::vector<uint16_t> img;

    Perm() = default;
    explicit Perm(size_t n) : img(n) { std::iota(img.begin(), img.end(), uint16_t(0)); }
    static Perm identity(size_t n) { return Perm(n); }

    size_t size() const { return img.size(); }
    uint16_t operator[](size_t i) const { return img[i]; }
    bool is_identity() const {
        for (size_t i = 0; i < img.size(); ++i)
            if (img[i] != i) return false;
        return true;
    }
    // (a o b)(i) = a[b[i]]  (b acts first)
    Perm compose(const Perm& b) const {
        Perm r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[i] = img[b.img[i]];
        return r;
    }
    Perm inverse() const {
        Perm r;
        r.img.resize(img.size());
        for (size_t i = 0; i < img.size(); ++i) r.img[img[i]] = uint16_t(i);
        return r;
    }
    bool operator==(const Perm& o) const { return img == o.img; }
    bool operator<(const Perm& o) const { return img < o.img; }
};

struct PermHash {
    size_t operator()(const Perm& p) const {
        uint64_t h = 1469598103934665603ull;
        for (auto v : p.img) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return size_t(h);
    }
};

// -------- element traits --------

template <class E>
struct ElemOps;

template <>
struct ElemOps<Collineation> {
    using Hash = CollineationHash;
    static Collineation compose(const Collineation& a, const Collineation& b) { return a.compose(b); }
    static Collineation inverse(const Collineation& a) { return a.inverse(); }
    static bool is_identity(const Collineation& a) { return a.is_identity(); }
};

template <>
struct ElemOps<Perm> {
    using Hash = PermHash;
    static Perm compose(const Perm& a, const Perm& b) { return a.compose(b); }
    static Perm inverse(const Perm& a) { return a.inverse(); }
    static bool is_identity(const Perm& a) { return a.is_identity(); }
};

// -------- finite group --------

template <class E>
class FinGroup {
public:
    std::vector<E> elems; // elems[0] is the identity; BFS order from sorted gens
    std::vector<E> gens;

    FinGroup() = default;

    size_t order() const { return elems.size(); }

    int index_of(const E& e) const {
        auto it = index_.find(e);
        return it == index_.end() ? -1 : it->second;
    }
    bool contains(const E& e) const { return index_.count(e) != 0; }

    int mul(int a, int b) const {
        int r = index_of(ElemOps<E>::compose(elems[size_t(a)], elems[size_t(b)]));
        if (r < 0) fail(Errc::ConsistencyCheckFailed, "group is not closed");
        return r;
    }
    int inv(int a) const {
        int r = index_of(ElemOps<E>::inverse(elems[size_t(a)]));
        if (r < 0) fail(Errc::ConsistencyCheckFailed, "group lacks an inverse");
        return r;
    }
    int element_order(int a) const {
        int o = 1, cur = a;
        while (cur != 0) {
            cur = mul(cur, a);
            ++o;
        }
        return o;
    }

    void rebuild_index() {
        index_.clear();
        for (size_t i = 0; i < elems.size(); ++i) index_.emplace(elems[i], int(i));
    }
    void push_elem(const E& e) {
        index_.emplace(e, int(elems.size()));
        elems.push_back(e);
    }

private:
    std::unordered_map<E, int, typename ElemOps<E>::Hash> index_;
};

// closure of the generators; deterministic element order
template <class E>
FinGroup<E> generate(std::vector<E> gens, const E& id, size_t cap = kClosureCap) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const E& e) { return ElemOps<E>::is_identity(e); }),
               gens.end());
    FinGroup<E> g;
    g.gens = gens;
    g.push_elem(id);
    size_t head = 0;
    while (head < g.elems.size()) {
        E cur = g.elems[head++];
        for (const E& s : g.gens) {
            E next = ElemOps<E>::compose(cur, s);
            if (g.contains(next)) continue;
            if (g.elems.size() >= cap)
                fail(Errc::ClosureCapExceeded,
                     "closure exceeded cap, partial size " + std::to_string(g.elems.size()));
            g.push_elem(next);
        }
    }
    return g;
}

// group from a complete element list (must already be closed); the
// identity is supplied so an empty list still forms the trivial group
template <class E>
FinGroup<E> from_elements(std::vector<E> elems, const E& id, std::vector<E> gens = {}) {
    if (!ElemOps<E>::is_identity(id)) fail(Errc::InvalidParameter, "id is not the identity");
    elems.push_back(id);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    FinGroup<E> g;
    auto it = std::find_if(elems.begin(), elems.end(),
                           [](const E& e) { return ElemOps<E>::is_identity(e); });
    std::rotate(elems.begin(), it, it + 1);
    g.elems = std::move(elems);
    g.gens = gens.empty() ? std::vector<E>(g.elems.begin() + 1, g.elems.end()) : std::move(gens);
    g.rebuild_index();
    // closure sanity on a full multiplication sweep is quadratic; verify on
    // generators only
    for (const E& a : g.gens)
        if (!g.contains(a)) fail(Errc::InvalidParameter, "generator outside element list");
    return g;
}

template <class E>
FinGroup<E> subgroup_from_indices(const FinGroup<E>& g, std::vector<int> idx) {
    std::vector<E> elems;
    elems.reserve(idx.size());
    for (int i : idx) elems.push_back(g.elems[size_t(i)]);
    return from_elements<E>(std::move(elems), g.elems[0]);
}

// -------- actions --------

struct GroupAction {
    size_t npoints = 0;
    std::vector<Perm> perms;  // aligned with the group's element order
    std::vector<int> kernel;  // indices of elements acting trivially

    size_t group_order() const { return perms.size(); }
    size_t induced_order() const;
    FinGroup<Perm> induced_group() const; // the faithful quotient on the points
};

// builds the permutation table; ApplyFn: (const E&, size_t point_index) -> size_t
template <class E, class ApplyFn>
GroupAction action_on(const FinGroup<E>& g, size_t npoints, ApplyFn&& apply) {
    GroupAction a;
    a.npoints = npoints;
    a.perms.reserve(g.order());
    for (size_t ei = 0; ei < g.order(); ++ei) {
        Perm p;
        p.img.resize(npoints);
        std::vector<bool> seen(npoints, false);
        for (size_t i = 0; i < npoints; ++i) {
            size_t j = apply(g.elems[ei], i);
            if (j >= npoints)
                fail(Errc::NotInvariant, "element " + std::to_string(ei) + " moves point " +
                                             std::to_string(i) + " outside the set");
            p.img[i] = uint16_t(j);
            seen[j] = true;
        }
        for (size_t i = 0; i < npoints; ++i)
            if (!seen[i])
                fail(Errc::NotInvariant,
                     "element " + std::to_string(ei) + " is not a bijection of the set");
        if (p.is_identity()) a.kernel.push_back(int(ei));
        a.perms.push_back(std::move(p));
    }
    return a;
}

std::vector<int> orbit_of(const GroupAction& a, int point);

enum class Transitivity { Intransitive, Transitive, TwoTransitive, SharplyTwoTransitive };
const char* transitivity_name(Transitivity t);

Transitivity transitivity_grade(const GroupAction& a);

struct StructureReport {
    size_t order = 0;
    std::vector<int> center; // element indices
    std::vector<size_t> derived_series_orders;
    bool solvable = false;
    size_t involution_count = 0;
    std::map<int, size_t> order_histogram;
};

// -------- index-level algorithms shared by both element kinds --------

namespace detail {

struct IndexGroup {
    // multiplication and inverse over 0..n-1, identity = 0
    std::function<int(int, int)> mul;
    std::function<int(int)> inv;
    size_t n = 0;
    std::vector<int> gens;
};

std::vector<int> close_indices(const IndexGroup& ig, std::vector<int> seed, bool conjugate,
                               size_t cap);

} // namespace detail

template <class E>
detail::IndexGroup make_index_group(const FinGroup<E>& g) {
    detail::IndexGroup ig;
    ig.n = g.order();
    ig.mul = [&g](int a, int b) { return g.mul(a, b); };
    ig.inv = [&g](int a) { return g.inv(a); };
    for (const E& s : g.gens) ig.gens.push_back(g.index_of(s));
    return ig;
}

template <class E>
StructureReport structure_kit(const FinGroup<E>& g) {
    StructureReport r;
    r.order = g.order();
    auto ig = make_index_group(g);
    // center: commutes with every generator
    for (size_t a = 0; a < g.order(); ++a) {
        bool central = true;
        for (int s : ig.gens)
            if (ig.mul(int(a), s) != ig.mul(s, int(a))) {
                central = false;
                break;
            }
        if (central) r.center.push_back(int(a));
    }
    for (size_t a = 0; a < g.order(); ++a) {
        int o = g.element_order(int(a));
        r.order_histogram[o] += 1;
        if (o == 2) ++r.involution_count;
    }
    // derived series: subgroup generated by commutators of the previous
    // level's generating set, closed under conjugation by the previous level
    std::vector<int> cur(g.order());
    std::iota(cur.begin(), cur.end(), 0);
    r.derived_series_orders.push_back(cur.size());
    while (cur.size() > 1) {
        std::vector<int> comms;
        for (int a : cur)
            for (int b : cur) {
                int c = ig.mul(ig.mul(ig.inv(a), ig.inv(b)), ig.mul(a, b));
                comms.push_back(c);
            }
        std::sort(comms.begin(), comms.end());
        comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
        auto ig2 = ig;
        ig2.gens = cur;
        std::vector<int> next = detail::close_indices(ig2, comms, false, kClosureCap);
        if (next.size() == cur.size()) break; // perfect group, series stalls
        cur = next;
        r.derived_series_orders.push_back(cur.size());
    }
    r.solvable = cur.size() == 1;
    return r;
}

template <class E>
FinGroup<E> normal_closure(const FinGroup<E>& g, const std::vector<E>& sub_gens) {
    auto ig = make_index_group(g);
    std::vector<int> seed;
    for (const E& e : sub_gens) {
        int i = g.index_of(e);
        if (i < 0) fail(Errc::InvalidParameter, "subgroup generator outside the group");
        seed.push_back(i);
    }
    std::vector<int> closed = detail::close_indices(ig, seed, true, kClosureCap);
    return subgroup_from_indices(g, closed);
}

// distinct conjugates of a subgroup (as sorted index sets) with the
// conjugation action of the whole group
template <class E>
std::pair<std::vector<std::vector<int>>, GroupAction>
conjugation_action_on_conjugates(const FinGroup<E>& g, const std::vector<int>& subgroup_idx) {
    std::vector<int> h = subgroup_idx;
    std::sort(h.begin(), h.end());
    std::vector<std::vector<int>> conjugates;
    std::map<std::vector<int>, int> where;
    auto conj_of = [&](const std::vector<int>& set, int by) {
        std::vector<int> out;
        out.reserve(set.size());
        int byi = g.inv(by);
        for (int e : set) out.push_back(g.mul(g.mul(by, e), byi));
        std::sort(out.begin(), out.end());
        return out;
    };
    conjugates.push_back(h);
    where[h] = 0;
    for (size_t head = 0; head < conjugates.size(); ++head) {
        auto cur = conjugates[head];
        for (size_t gi = 0; gi < g.order(); ++gi) {
            auto img = conj_of(cur, int(gi));
            if (!where.count(img)) {
                where[img] = int(conjugates.size());
                conjugates.push_back(img);
            }
        }
    }
    std::sort(conjugates.begin(), conjugates.end());
    where.clear();
    for (size_t i = 0; i < conjugates.size(); ++i) where[conjugates[i]] = int(i);
    GroupAction a = action_on(g, conjugates.size(), [&](const E& e, size_t pt) {
        int ei = g.index_of(e);
        return size_t(where.at(conj_of(conjugates[pt], ei)));
    });
    return {conjugates, a};
}

// elements fixing a point, as a subgroup
template <class E>
FinGroup<E> stabilizer(const FinGroup<E>& g, const GroupAction& a, int point) {
    std::vector<int> idx;
    for (size_t i = 0; i < a.perms.size(); ++i)
        if (a.perms[i][size_t(point)] == point) idx.push_back(int(i));
    return subgroup_from_indices(g, idx);
}

// p-part extraction used for Sylow subgroups of small groups: collect the
// elements of p-power order and close
template <class E>
FinGroup<E> p_core_subgroup(const FinGroup<E>& g, int64_t p, size_t expected_order) {
    std::vector<E> pelems;
    for (size_t i = 0; i < g.order(); ++i) {
        int o = g.element_order(int(i));
        while (o % p == 0) o = int(o / p);
        if (o == 1) pelems.push_back(g.elems[i]);
    }
    FinGroup<E> s = generate<E>(pelems, g.elems[0]);
    if (expected_order != 0 && s.order() != expected_order)
        fail(Errc::NoSuitableStabilizerSubgroup,
             "p-element closure has order " + std::to_string(s.order()));
    return s;
}

// all subgroup orders reachable by closing one or two elements
template <class E>
std::vector<size_t> subgroup_order_spectrum(const FinGroup<E>& g, size_t cap = 1000) {
    if (g.order() > cap) fail(Errc::CapExceeded, "group too large for spectrum search");
    std::vector<size_t> orders{1};
    for (size_t a = 0; a < g.order(); ++a)
        for (size_t b = a; b < g.order(); ++b) {
            FinGroup<E> s = generate<E>({g.elems[a], g.elems[b]}, g.elems[0]);
            orders.push_back(s.order());
        }
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    return orders;
}

template <class E>
std::vector<E> intersect_elements(const FinGroup<E>& a, const FinGroup<E>& b) {
    std::vector<E> out;
    for (const E& e : a.elems)
        if (b.contains(e)) out.push_back(e);
    return out;
}

} // namespace gptk
