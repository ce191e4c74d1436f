#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gptk/catalog.hpp"
#include "gptk/elliptic.hpp"
#include "gptk/specfile.hpp"

using namespace gptk;

TEST_CASE("model construction checks") {
    EllipticModel e = elliptic_iva_gf7();
    CHECK(e.point_count() == 12);
    CHECK(e.curve().contains(e.origin()));

    // a singular cubic is rejected
    const FieldCtx* f7 = FieldCtx::get(7, 1);
    CurvePoly nodal(f7, {{3, 0, 0, 1}, {2, 0, 1, 1}, {0, 2, 1, f7->from_int(-1)}});
    CHECK_THROWS_AS(EllipticModel(nodal, ProjPoint(f7, 0, 1, 0)), Error);

    // a non-inflection origin is rejected: the tangent at (1,3) meets the
    // curve again at (0,-1)
    CHECK_THROWS_AS(EllipticModel(elliptic_iva_gf7().curve(), ProjPoint(f7, 1, 3, 1)), Error);
}

TEST_CASE("group law axioms") {
    for (const EllipticModel& e : {elliptic_iva_gf7(), elliptic_ivc_gf4()}) {
        int o = e.origin_index();
        std::mt19937 rng(7);
        std::uniform_int_distribution<int> dist(0, int(e.point_count()) - 1);
        for (int i = 0; i < int(e.point_count()); ++i) {
            CHECK(e.add(i, o) == i);
            CHECK(e.add(i, e.negate(i)) == o);
        }
        for (int trial = 0; trial < 60; ++trial) {
            int a = dist(rng), b = dist(rng), c = dist(rng);
            CHECK(e.add(a, b) == e.add(b, a));
            CHECK(e.add(e.add(a, b), c) == e.add(a, e.add(b, c)));
        }
    }
}

TEST_CASE("two-torsion closure on y^2 = x^3 + 1 over GF(7)") {
    EllipticModel e = elliptic_iva_gf7();
    const FieldCtx* f = e.curve().ctx();
    // the three 2-torsion abscissae are the roots of x^3 + 1
    int a = e.index_of(ProjPoint(f, 6, 0, 1));
    int b = e.index_of(ProjPoint(f, 3, 0, 1));
    int c = e.index_of(ProjPoint(f, 5, 0, 1));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    REQUIRE(c >= 0);
    CHECK(e.add(a, b) == c); // the chord y = 0 closes through the third point

    TorsionSubgroup t = torsion(e, 2);
    CHECK(t.point_indices.size() == 4);
    CHECK(t.rank == 2);
}

TEST_CASE("torsion ranks") {
    EllipticModel e4 = elliptic_ivc_gf4();
    TorsionSubgroup t3 = torsion(e4, 3);
    CHECK(t3.point_indices.size() == 9);
    CHECK(t3.rank == 2);
    // supersingular: no rational 2-torsion beyond the origin
    TorsionSubgroup t2 = torsion(e4, 2);
    CHECK(t2.point_indices.size() == 1);
    CHECK(t2.rank == 0);

    EllipticModel e16 = elliptic_ive_gf16();
    TorsionSubgroup t5 = torsion(e16, 5);
    CHECK(t5.point_indices.size() == 25);
    CHECK(t5.rank == 2);
}

TEST_CASE("translations are fixed-point free and compose additively") {
    EllipticModel e = elliptic_iva_gf7();
    int o = e.origin_index();
    CHECK(translation_map(e, o).is_identity());
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> dist(0, int(e.point_count()) - 1);
    for (int trial = 0; trial < 20; ++trial) {
        int a = dist(rng), b = dist(rng);
        Perm ta = translation_map(e, a), tb = translation_map(e, b);
        if (a != o) CHECK(fixed_points(ta).empty());
        CHECK(ta.compose(tb) == translation_map(e, e.add(a, b)));
    }
}

TEST_CASE("automorphism groups of the three models") {
    AutomorphismGroup a7 = automorphism_search(elliptic_iva_gf7());
    CHECK(a7.on_points.order() == 6); // cyclic
    bool cyclic = false;
    for (size_t i = 0; i < a7.on_points.order(); ++i)
        if (a7.on_points.element_order(int(i)) == 6) cyclic = true;
    CHECK(cyclic);

    AutomorphismGroup a4 = automorphism_search(elliptic_ivc_gf4());
    CHECK(a4.on_points.order() == 24);
    CHECK(structure_kit(a4.on_points).involution_count == 1);

    // generic j: only the hyperelliptic involution
    const FieldCtx* f7 = FieldCtx::get(7, 1);
    CurvePoly generic(f7, {{3, 0, 0, 1}, {1, 0, 2, 1}, {0, 0, 3, 1}, {0, 2, 1, f7->from_int(-1)}});
    AutomorphismGroup ag = automorphism_search(EllipticModel(generic, ProjPoint(f7, 0, 1, 0)));
    CHECK(ag.on_points.order() == 2);
}

TEST_CASE("translations are normalized by the origin stabilizer") {
    EllipticModel e = elliptic_ivc_gf4();
    AutomorphismGroup aut = automorphism_search(e);
    for (size_t i = 0; i < aut.on_points.order(); ++i) {
        const Perm& s = aut.on_points.elems[i];
        Perm si = s.inverse();
        for (int a = 0; a < int(e.point_count()); ++a) {
            Perm lhs = s.compose(translation_map(e, a)).compose(si);
            Perm rhs = translation_map(e, int(s[size_t(a)]));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("prime-order fixed point counts") {
    // order 2 fixes 4 points, order 3 fixes 3 points
    EllipticModel e = elliptic_iva_gf7();
    AutomorphismGroup aut = automorphism_search(e);
    for (size_t i = 0; i < aut.on_points.order(); ++i) {
        int o = aut.on_points.element_order(int(i));
        size_t fixed = fixed_points(aut.on_points.elems[i]).size();
        if (o == 2) CHECK(fixed == 4);
        if (o == 3) CHECK(fixed == 3);
    }
    EllipticModel e4 = elliptic_ivc_gf4();
    AutomorphismGroup aut4 = automorphism_search(e4);
    for (size_t i = 0; i < aut4.on_points.order(); ++i) {
        int o = aut4.on_points.element_order(int(i));
        size_t fixed = fixed_points(aut4.on_points.elems[i]).size();
        if (o == 3) CHECK(fixed == 3);
    }
}

TEST_CASE("case (iv) construction at m = 4") {
    CaseIvReport iv = build_case_iv(elliptic_iva_gf7(), 2, 3);
    CHECK(iv.omega.size() == 4);
    CHECK(iv.g1_order == 3);
    CHECK(iv.g1_sharply_transitive);
    CHECK(iv.g_order == 12);
    CHECK(iv.cond_II);
    CHECK(iv.cond_III_multiset);
    CHECK(iv.kernel_order == 1);
    CHECK(iv.g1_normal_in_stabilizer);
    CHECK(iv.transitivity == std::string("sharply-2-transitive"));
    CHECK(iv.label.name == "AGL(1,4)");
    CHECK_FALSE(iv.used_quadratic_extension);
}

TEST_CASE("case (iv) construction at m = 9") {
    CaseIvReport iv = build_case_iv(elliptic_ivc_gf4(), 3, 8);
    CHECK(iv.omega.size() == 9);
    CHECK(iv.aut_order == 24);
    CHECK(iv.g1_order == 8);
    CHECK(iv.g1_sharply_transitive);
    CHECK(iv.g_order == 72);
    CHECK(iv.cond_II);
    CHECK(iv.cond_III_multiset);
    CHECK(iv.label.name == "AGammaL(1,9)=PSU(3,2)");
}

TEST_CASE("case (iv) construction at m = 25") {
    CaseIvReport iv = build_case_iv(elliptic_ive_gf16(), 5, 24);
    CHECK(iv.omega.size() == 25);
    CHECK(iv.aut_order == 24);
    CHECK(iv.g_order == 600);
    CHECK(iv.cond_II);
    CHECK(iv.cond_III_multiset);
    CHECK(iv.transitivity == std::string("sharply-2-transitive"));
    CHECK(iv.label.name == "N(5)");
    CHECK_FALSE(iv.used_quadratic_extension);
}

TEST_CASE("case (iv) rejects missing torsion") {
    // 2-torsion of the supersingular char-2 curve is not rational
    CHECK_THROWS_AS(build_case_iv(elliptic_ivc_gf4(), 2, 3), Error);
}

TEST_CASE("elliptic spec files round-trip") {
    EllipticModel e = elliptic_iva_gf7();
    Json j = elliptic_to_json(e);
    CHECK(j.contains("origin"));
    EllipticModel back = elliptic_from_json(j);
    CHECK(back.point_count() == e.point_count());
    CHECK(back.origin() == e.origin());
    j.erase("origin");
    CHECK_THROWS_AS(elliptic_from_json(j), Error);
}
