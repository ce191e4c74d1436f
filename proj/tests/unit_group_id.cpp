#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gptk/catalog.hpp"
#include "gptk/group_id.hpp"

using namespace gptk;

namespace {

// the affine maps x -> ax + b on GF(q) as permutations of the field elements
FinGroup<Perm> affine_line_group(int64_t p, int k) {
    const FieldCtx* f = FieldCtx::get(p, k);
    std::vector<Perm> gens;
    {
        Perm mul;
        mul.img.resize(f->q);
        uint32_t g = f->primitive_element();
        for (uint32_t x = 0; x < f->q; ++x) mul.img[x] = uint16_t(f->mul(g, x));
        gens.push_back(mul);
        Perm add;
        add.img.resize(f->q);
        for (uint32_t x = 0; x < f->q; ++x) add.img[x] = uint16_t(f->add(x, 1));
        gens.push_back(add);
    }
    return generate<Perm>(gens, Perm::identity(f->q));
}

// the twisted multiplicative action of the regular nearfield of order 9:
// x -> a*x for square a, x -> a*x^3 for non-square a, plus translations
FinGroup<Perm> agammal19_group() {
    const FieldCtx* f = FieldCtx::get(3, 2);
    uint32_t g = f->primitive_element();
    std::vector<Perm> gens;
    {
        // non-square scalars act through the cube map, squares act plainly;
        // together with translations this is the order-72 nearfield group
        Perm tw;
        tw.img.resize(9);
        for (uint32_t x = 0; x < 9; ++x) tw.img[x] = uint16_t(f->mul(g, f->frob(x, 1)));
        gens.push_back(tw);
        Perm sq;
        sq.img.resize(9);
        uint32_t g2 = f->mul(g, g);
        for (uint32_t x = 0; x < 9; ++x) sq.img[x] = uint16_t(f->mul(g2, x));
        gens.push_back(sq);
        Perm add;
        add.img.resize(9);
        for (uint32_t x = 0; x < 9; ++x) add.img[x] = uint16_t(f->add(x, 1));
        gens.push_back(add);
    }
    return generate<Perm>(gens, Perm::identity(9));
}

GroupAction natural_action(const FinGroup<Perm>& g) {
    return action_on(g, g.elems[0].size(), [&](const Perm& p, size_t i) { return size_t(p[i]); });
}

} // namespace

TEST_CASE("lie type orders from the classical formulas") {
    CHECK(lie_type_order(LieFamily::PSU3, 2) == 72);
    CHECK(lie_type_order(LieFamily::SU3, 2) == 216);
    CHECK(lie_type_order(LieFamily::Sz, 8) == 29120);
    CHECK(lie_type_order(LieFamily::PSL2, 7) == 168);
    CHECK(lie_type_order(LieFamily::Ree, 3) == 1512);
    CHECK(lie_type_order(LieFamily::PSL2, 5) == 60);
    CHECK(lie_type_order(LieFamily::SL2, 3) == 24);
    CHECK(lie_type_order(LieFamily::PSU3, 3) == 6048);

    CHECK_THROWS_AS(lie_type_order(LieFamily::Sz, 4), Error);  // even exponent
    CHECK_THROWS_AS(lie_type_order(LieFamily::Ree, 9), Error); // even exponent
    CHECK_THROWS_AS(lie_type_order(LieFamily::PSL2, 6), Error);
}

TEST_CASE("classify the affine line groups") {
    auto agl4 = affine_line_group(2, 2);
    CHECK(agl4.order() == 12);
    ClassLabel l4 = classify(agl4, natural_action(agl4));
    CHECK(l4.name == "AGL(1,4)");

    auto agl5 = affine_line_group(5, 1);
    CHECK(agl5.order() == 20);
    ClassLabel l5 = classify(agl5, natural_action(agl5));
    CHECK(l5.name == "AGL(1,5)");

    auto agl9 = affine_line_group(3, 2);
    CHECK(agl9.order() == 72);
    ClassLabel l9 = classify(agl9, natural_action(agl9));
    CHECK(l9.name == "AGL(1,9)"); // cyclic point stabilizer

    auto agl25 = affine_line_group(5, 2);
    CHECK(agl25.order() == 600);
    ClassLabel l25 = classify(agl25, natural_action(agl25));
    CHECK(l25.name == "AGL(1,25)");
}

TEST_CASE("classify the twisted degree-9 group") {
    auto tw = agammal19_group();
    CHECK(tw.order() == 72);
    ClassLabel l = classify(tw, natural_action(tw));
    CHECK(l.name == "AGammaL(1,9)=PSU(3,2)"); // quaternion point stabilizer
}

TEST_CASE("classify the unitary model on the unital") {
    const UnitaryModel& um = su32();
    ClassLabel l = classify(um.group, um.on_isotropic);
    CHECK(l.name == "SU(3,2)");
    CHECK(l.param == 2);
}

TEST_CASE("degree and order must both match for a lie-type label") {
    // the affine group of order 72 on 9 points is sharply 2-transitive and
    // must not be mistaken for the unitary quotient
    auto agl9 = affine_line_group(3, 2);
    ClassLabel l = classify(agl9, natural_action(agl9));
    CHECK(l.name != "PSU(3,2)");
}

TEST_CASE("cyclic and unrecognized fallbacks") {
    Perm rot;
    rot.img = {1, 2, 0};
    auto c3 = generate<Perm>({rot}, Perm::identity(3));
    ClassLabel l = classify(c3, natural_action(c3));
    CHECK(l.name == "cyclic");

    // S3 on 3 points is sharply 2-transitive of prime degree
    Perm swap;
    swap.img = {1, 0, 2};
    auto s3 = generate<Perm>({rot, swap}, Perm::identity(3));
    ClassLabel ls3 = classify(s3, natural_action(s3));
    CHECK(ls3.name == "AGL(1,3)");
}

TEST_CASE("evidence lists carry the matched invariants") {
    auto agl4 = affine_line_group(2, 2);
    ClassLabel l = classify(agl4, natural_action(agl4));
    bool has_order = false, has_degree = false;
    for (const auto& e : l.evidence) {
        if (e == "order=12") has_order = true;
        if (e == "degree=4") has_degree = true;
    }
    CHECK(has_order);
    CHECK(has_degree);
}
