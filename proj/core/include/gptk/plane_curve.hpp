#pragma once

// Plane projective curves over a field context: exhaustive point
// enumeration, smoothness and tangents, line sections with multiplicity,
// the standard quadratic transformation, and substitution by collineations.

#include <map>
#include <optional>
#include <vector>

#include "gptk/collineation.hpp"
#include "gptk/proj.hpp"

namespace gptk {

struct CurveTerm {
    int i = 0, j = 0, l = 0; // exponents of x, y, z; i + j + l = degree
    uint32_t c = 0;
    auto exps() const { return std::array<int, 3>{i, j, l}; }
};

inline bool operator==(const CurveTerm& a, const CurveTerm& b) {
    return a.i == b.i && a.j == b.j && a.l == b.l && a.c == b.c;
}

class CurvePoly {
public:
    CurvePoly() = default;
    // terms need not be merged; zero coefficients are dropped
    CurvePoly(const FieldCtx* f, std::vector<CurveTerm> terms);

    const FieldCtx* ctx() const { return ctx_; }
    int degree() const { return d_; }
    const std::vector<CurveTerm>& terms() const { return terms_; }

    uint32_t eval(const ProjPoint& p) const;
    bool contains(const ProjPoint& p) const { return eval(p) == 0; }
    CurvePoly partial(int var) const; // 0 = x, 1 = y, 2 = z (formal derivative)
    // multiplicity of the curve at a point (order of vanishing at p)
    int multiplicity_at(const ProjPoint& p) const;

    CurvePoly embedded(const FieldCtx* big) const;
    // scale so the lexicographically largest exponent triple has coefficient 1
    CurvePoly normalized_leading() const;
    // equal up to a scalar factor
    bool proportional_to(const CurvePoly& o) const;

    // substitution x_i -> sum_j M[i][j] x_j (plain linear substitution)
    CurvePoly substituted(const Mat3& m) const;
    // coefficient-wise Frobenius
    CurvePoly coeff_frob(int e) const;

    bool operator==(const CurvePoly& o) const {
        return ctx_ == o.ctx_ && d_ == o.d_ && terms_ == o.terms_;
    }

private:
    const FieldCtx* ctx_ = nullptr;
    int d_ = 0;
    std::vector<CurveTerm> terms_; // sorted by exponent triple descending
};

struct LineIntersection {
    ProjPoint point;
    int multiplicity = 0;
    bool simple_on_curve = false;
};

struct LineSection {
    std::vector<LineIntersection> points; // canonical order within each extension level
    int residual_degree = 0;              // part not split within the extension ceiling
    int degree = 0;                       // always: sum of multiplicities + residual = degree
};

// all points of the curve over the degree-ext_k extension, canonical order
std::vector<ProjPoint> rational_points(const CurvePoly& c, int ext_k);

// all singular points over the degree-ext_k extension
std::vector<ProjPoint> singular_points(const CurvePoly& c, int ext_k);

// simplicity test; returns the tangent line when the point is simple
struct SimplePointInfo {
    bool simple = false;
    std::optional<Line> tangent;
};
SimplePointInfo is_simple(const CurvePoly& c, const ProjPoint& p);

// section of the curve by a line that is not a component; roots are hunted
// over extension fields up to the ceiling p^(k*e) <= max_field_size
LineSection intersect_line(const CurvePoly& c, const Line& l,
                           uint64_t max_field_size = kMaxFieldSize);

bool line_is_component(const CurvePoly& c, const Line& l);

// standard quadratic transformation with fundamental triangle at the
// coordinate vertices: substitute (x,y,z) -> (yz, zx, xy), then strip the
// maximal monomial factor
CurvePoly quadratic_transform(const CurvePoly& c);

// image curve under a collineation: P on C iff T(P) on result
CurvePoly apply_map_to_curve(const CurvePoly& c, const Collineation& t);

bool preserves_curve(const CurvePoly& c, const Collineation& t);

} // namespace gptk
