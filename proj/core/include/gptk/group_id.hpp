#pragma once

// Classification of a finite group-with-action against a small fixed
// vocabulary by invariant matching: order formulas of the Lie families,
// degree, kernel, center order, involution count, and point-stabilizer
// structure. Ambiguity is reported, never resolved arbitrarily.

#include <optional>
#include <string>
#include <vector>

#include "gptk/group_engine.hpp"

namespace gptk {

enum class LieFamily { PSL2, SL2, PSU3, SU3, Sz, Ree };
const char* lie_family_name(LieFamily f);

// exact order from the classical formulas; validates the parameter shape
int64_t lie_type_order(LieFamily f, int64_t q);

struct ClassLabel {
    std::string name;          // e.g. "AGL(1,4)", "SL(2,3)", "PSU(3,2)", "unrecognized"
    int64_t param = 0;         // q or m when meaningful
    std::vector<std::string> evidence;
};

struct GroupFacts {
    size_t order = 0;
    size_t center_order = 0;
    size_t involution_count = 0;
    bool solvable = false;
    bool cyclic = false;
};

template <class E>
GroupFacts group_facts(const FinGroup<E>& g) {
    StructureReport s = structure_kit(g);
    GroupFacts f;
    f.order = s.order;
    f.center_order = s.center.size();
    f.involution_count = s.involution_count;
    f.solvable = s.solvable;
    f.cyclic = s.order_histogram.count(int(s.order)) != 0 || s.order == 1;
    return f;
}

// classify the pair (abstract group, action); the induced faithful
// permutation group drives the sharply-2-transitive branch, the abstract
// invariants separate the central extensions
ClassLabel classify_action(const GroupFacts& facts, const GroupAction& action);

template <class E>
ClassLabel classify(const FinGroup<E>& g, const GroupAction& a) {
    return classify_action(group_facts(g), a);
}

} // namespace gptk
