#pragma once

// Smooth plane cubics with the chord-tangent group law over the rational
// points, torsion subgroups, translation permutations, exhaustive
// automorphism search (stabilizer of the origin), and the two-point
// construction on a full r-torsion orbit.

#include <optional>

#include "gptk/group_id.hpp"
#include "gptk/plane_curve.hpp"

namespace gptk {

class EllipticModel {
public:
    // checks: degree 3, smooth over the field and its quadratic extension,
    // origin an inflection point
    EllipticModel(CurvePoly curve, ProjPoint origin);

    const CurvePoly& curve() const { return curve_; }
    const ProjPoint& origin() const { return origin_; }
    const std::vector<ProjPoint>& points() const { return points_; }
    size_t point_count() const { return points_.size(); }
    int index_of(const ProjPoint& p) const;
    int origin_index() const { return oi_; }

    int add(int a, int b) const;      // chord-tangent addition by point index
    int negate(int a) const;
    int scalar_mul(int64_t n, int a) const;

private:
    CurvePoly curve_;
    ProjPoint origin_;
    std::vector<ProjPoint> points_;
    int oi_ = 0;
    int third_intersection(int a, int b) const;
};

struct TorsionSubgroup {
    int64_t r = 0;
    std::vector<int> point_indices; // indices into the model's point list
    int rank = 0;                   // 0, 1, or 2
};

TorsionSubgroup torsion(const EllipticModel& e, int64_t r);

// the permutation x -> x + a of the rational points; fixed-point free for
// a != O
Perm translation_map(const EllipticModel& e, int a_index);

struct AutomorphismGroup {
    FinGroup<Perm> on_points;             // permutations of the rational points
    std::vector<Collineation> matrices;   // plane realization, aligned with elems
};

// exhaustive search over plane collineations fixing the origin (triangular
// family in the chart where the origin is (0:1:0) with tangent z = 0,
// conjugated when it is not)
AutomorphismGroup automorphism_search(const EllipticModel& e);

struct CaseIvReport {
    int64_t r = 0;
    std::vector<int> omega;               // point indices, |omega| = r^2
    size_t aut_order = 0;
    size_t g1_order = 0, g_order = 0;
    bool g1_sharply_transitive = false;
    bool cond_II = false;
    bool cond_III_multiset = false;
    bool g1_normal_in_stabilizer = false;
    size_t kernel_order = 0;
    std::string transitivity;
    ClassLabel label;
    FinGroup<Perm> group;                 // the generated group on the points
    GroupAction omega_action;
    int p2_index = -1;
    bool used_quadratic_extension = false;
};

// builds omega = the r-torsion orbit of O, picks a stabilizer subgroup of
// the requested order, conjugates it by the first nonzero torsion
// translation, and classifies the generated group; retries once over the
// quadratic extension if the stabilizer is too small
CaseIvReport build_case_iv(const EllipticModel& e, int64_t r, size_t g1_order,
                           bool allow_extension = true);

// fixed points on the model of a prime-order automorphism permutation
std::vector<int> fixed_points(const Perm& p);

} // namespace gptk
