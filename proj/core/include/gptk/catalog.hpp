#pragma once

// Constructors and expectation records for the worked example families:
// unitary (Fermat-type) curves, the rational affine-line family, two
// rational/smooth quartics with distinguished point pairs, the invariant
// degree-9 curve over GF(8), elliptic torsion constructions, and the
// count-only Suzuki/Ree/Roquette and cyclic entries. Every expected value
// carries a provenance note naming its oracle.

#include <functional>

#include "gptk/elliptic.hpp"
#include "gptk/galois.hpp"
#include "gptk/specfile.hpp"

namespace gptk {

// ---- curve builders (shared with the test suites) ----

CurvePoly fermat_cubic_gf4();     // x^3 + y^3 + z^3 over GF(4)
CurvePoly hermitian_gf9();        // x^4 + y^4 + z^4 over GF(9)
CurvePoly rational_m4_gf4();      // x^4 + x z^3 + y z^3 over GF(4)
CurvePoly quartic_iiic_gf7();     // x^2 y^2 + y^2 z^2 + z^2 x^2 over GF(7)
CurvePoly quartic_vb_gf13();      // x^4 + y^4 + y z^3 over GF(13)
CurvePoly va_nonic_gf8();         // z^9 + x^8 y + x y^8 + (x^2 y + x y^2)^3 over GF(8)
CurvePoly via_quintic_gf7();      // x^3 y^2 - z^5 over GF(7)
CurvePoly suzuki_plane_gf8();     // x^12 + x^5 z^7 + y^8 z^4 + y z^11 over GF(8)
CurvePoly ree_plane_gf3();        // smallest Ree plane model over GF(3), degree 21
CurvePoly roquette_gf25();        // y^2 z^3 - x^5 + x z^4 over GF(25)

EllipticModel elliptic_iva_gf7();  // y^2 = x^3 + 1, origin (0:1:0)
EllipticModel elliptic_ivc_gf4();  // y^2 + y = x^3
EllipticModel elliptic_ive_gf16(); // y^2 + y = x^3 + x + 1

// ---- the special unitary group of the q=2 Hermitian form, realized
// faithfully as permutations of the 63 nonzero vectors of GF(4)^3 ----

struct UnitaryModel {
    FinGroup<Perm> group;                          // order 216
    std::vector<std::array<uint32_t, 3>> vectors;  // index -> vector
    std::vector<std::vector<int>> point_classes;   // projective classes (21)
    std::vector<int> isotropic;                    // classes on the Hermitian unital (9)
    GroupAction on_isotropic;                      // action on those 9 classes
};
const UnitaryModel& su32();

// ---- catalog registry ----

struct CheckResult {
    std::string name;
    Json expected;
    Json measured;
    bool pass = false;
    std::string provenance;
};

struct EntryReport {
    std::string name;
    std::vector<CheckResult> checks;
    std::vector<std::string> notes;
    bool pass = true;
    Json to_json() const;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::function<EntryReport()> run;
};

std::vector<std::string> catalog_names();
const CatalogEntry& catalog_entry(const std::string& name); // throws UnknownEntry
EntryReport catalog_verify(const std::string& name);

} // namespace gptk
