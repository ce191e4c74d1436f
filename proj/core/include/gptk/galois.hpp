#pragma once

// Detection of inner Galois points by exhaustive perspectivity search, and
// verification of the two-point conditions (trivial intersection and the
// divisor multiset identity) for a pair of fixed points with their groups.
//
// The search covers linearly realized Galois groups only. For smooth curves
// of degree >= 4 every automorphism is linear, so a certificate there is
// complete; on singular models a missing certificate means "no linear
// witness", never "not Galois".

#include <optional>

#include "gptk/genus_tools.hpp"
#include "gptk/group_engine.hpp"
#include "gptk/group_id.hpp"
#include "gptk/plane_curve.hpp"

namespace gptk {

struct PerspectivitySearchResult {
    ProjPoint center;                 // over the search field
    FinGroup<Collineation> group;     // perspectivities with that center preserving C
    int curve_degree = 0;
    int center_multiplicity = 0;
    bool certificate = false;         // |group| == degree - multiplicity
    std::map<int, size_t> element_orders;
};

// conjugates Q to (0:0:1), scans maps (x:y:z) -> (x : y : bx + cy + az),
// a != 0, over the degree-ext_k extension, keeps those preserving C
PerspectivitySearchResult pencil_perspectivities(const CurvePoly& c, const ProjPoint& q,
                                                 int ext_k = 1);

struct OmegaReport {
    Line line;
    std::vector<LineIntersection> support; // section of the curve by the line
    int residual_degree = 0;
    bool clean = false; // all simple, all multiplicity one, count == degree
};

OmegaReport build_omega(const CurvePoly& c, const ProjPoint& p1, const ProjPoint& p2);

enum class Tri { False, True, Indeterminate };
const char* tri_name(Tri t);

struct PairReport {
    ProjPoint p1, p2;
    size_t g1_order = 0, g2_order = 0, g_order = 0;
    OmegaReport omega;
    // points the group action ran on (line support in the clean case, the
    // group orbit of p1 otherwise)
    std::vector<ProjPoint> omega_points;
    std::string omega_source; // "line" or "orbit"
    bool cond_II = false;
    Tri cond_III = Tri::Indeterminate;        // line-level verdict
    bool cond_III_multiset = false;           // multiset identity on omega_points
    bool g1_sharply_transitive = false;       // on omega_points minus p1
    bool g2_sharply_transitive = false;
    size_t kernel_order = 0;
    bool kernel_cyclic = false;
    bool g1_normal_in_stabilizer = false;     // checked as a hard invariant
    std::string transitivity;
    std::string classification_label;
    std::vector<std::string> label_evidence;
    GroupFacts facts;                         // abstract invariants of the generated group
    std::vector<Perm> omega_perms;            // induced permutations, for re-checks
    std::vector<std::string> notes;
};

// pre: g1 fixes p1, g2 fixes p2, both preserve c; everything is lifted to a
// common extension first
PairReport verify_pair(const CurvePoly& c, const ProjPoint& p1, const ProjPoint& p2,
                       const FinGroup<Collineation>& g1, const FinGroup<Collineation>& g2);

// quotient-genus-zero test: solves the genus formula for the quotient of a
// cover with group order n and the declared profile; NonIntegerGenus when
// the data are inconsistent
bool condition_I_check(int64_t group_order, const RamificationProfile& profile, int64_t g_curve);

} // namespace gptk
