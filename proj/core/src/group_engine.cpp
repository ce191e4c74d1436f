#include "gptk/group_engine.hpp"

#include <functional>
#include <set>

namespace gptk {

size_t GroupAction::induced_order() const {
    std::set<Perm> distinct(perms.begin(), perms.end());
    return distinct.size();
}

FinGroup<Perm> GroupAction::induced_group() const {
    std::vector<Perm> distinct(perms.begin(), perms.end());
    return from_elements<Perm>(std::move(distinct), Perm::identity(npoints));
}

std::vector<int> orbit_of(const GroupAction& a, int point) {
    std::vector<bool> seen(a.npoints, false);
    std::vector<int> orbit{point};
    seen[size_t(point)] = true;
    for (size_t head = 0; head < orbit.size(); ++head) {
        int cur = orbit[head];
        for (const Perm& p : a.perms) {
            int nxt = p[size_t(cur)];
            if (!seen[size_t(nxt)]) {
                seen[size_t(nxt)] = true;
                orbit.push_back(nxt);
            }
        }
    }
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

const char* transitivity_name(Transitivity t) {
    switch (t) {
        case Transitivity::Intransitive: return "intransitive";
        case Transitivity::Transitive: return "transitive";
        case Transitivity::TwoTransitive: return "2-transitive";
        case Transitivity::SharplyTwoTransitive: return "sharply-2-transitive";
    }
    return "?";
}

Transitivity transitivity_grade(const GroupAction& a) {
    size_t n = a.npoints;
    if (n < 2) fail(Errc::InvalidParameter, "transitivity needs at least two points");
    if (orbit_of(a, 0).size() != n) return Transitivity::Intransitive;
    // a point stabilizer must be transitive on the rest
    std::vector<bool> reached(n, false);
    reached[0] = true;
    size_t cnt = 1;
    std::vector<const Perm*> stab;
    for (const Perm& p : a.perms)
        if (p[0] == 0) stab.push_back(&p);
    // orbit of point 1 under the stabilizer of 0
    if (n >= 2) {
        std::vector<bool> seen(n, false);
        std::vector<int> orb{1};
        seen[1] = true;
        for (size_t head = 0; head < orb.size(); ++head)
            for (const Perm* p : stab) {
                int nxt = (*p)[size_t(orb[head])];
                if (!seen[size_t(nxt)]) {
                    seen[size_t(nxt)] = true;
                    orb.push_back(nxt);
                }
            }
        cnt = orb.size();
    }
    if (cnt != n - 1) return Transitivity::Transitive;
    if (a.induced_order() == n * (n - 1)) return Transitivity::SharplyTwoTransitive;
    return Transitivity::TwoTransitive;
}

namespace detail {

std::vector<int> close_indices(const IndexGroup& ig, std::vector<int> seed, bool conjugate,
                               size_t cap) {
    std::set<int> have{0};
    for (int s : seed) have.insert(s);
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> snap(have.begin(), have.end());
        for (int a : snap)
            if (have.insert(ig.inv(a)).second) changed = true;
        for (int a : snap)
            for (int b : snap)
                if (have.insert(ig.mul(a, b)).second) changed = true;
        if (conjugate)
            for (int a : snap)
                for (int s : ig.gens)
                    if (have.insert(ig.mul(ig.mul(s, a), ig.inv(s))).second) changed = true;
        if (have.size() > cap) fail(Errc::ClosureCapExceeded, "index closure exceeded cap");
    }
    return std::vector<int>(have.begin(), have.end());
}

} // namespace detail

} // namespace gptk
