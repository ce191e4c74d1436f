#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gptk/catalog.hpp"

using namespace gptk;

TEST_CASE("registry") {
    auto names = catalog_names();
    CHECK(names.size() == 13);
    CHECK_THROWS_AS(catalog_entry("no-such-entry"), Error);
    CHECK(catalog_entry("va-gk2").name == "va-gk2");
}

namespace {
void expect_pass(const char* name) {
    EntryReport rep = catalog_verify(name);
    for (const auto& c : rep.checks) {
        INFO(rep.name, ": ", c.name, " expected ", c.expected.dump(), " measured ",
             c.measured.dump());
        CHECK(c.pass);
    }
    CHECK(rep.pass);
}
} // namespace

TEST_CASE("hermitian entries") {
    expect_pass("hermitian-q2");
    expect_pass("hermitian-q3");
}

TEST_CASE("rational and quartic entries") {
    expect_pass("rational-agl-4");
    expect_pass("quartic-iiic");
    expect_pass("quartic-vb");
}

TEST_CASE("degree-9 invariant curve entry") { expect_pass("va-gk2"); }

TEST_CASE("elliptic entries") {
    expect_pass("elliptic-iva-m4");
    expect_pass("elliptic-ivc-m9");
    expect_pass("elliptic-ive-m25");
}

TEST_CASE("count-only and cyclic entries") {
    expect_pass("suzuki-q8");
    expect_pass("ree-q3");
    expect_pass("roquette-q5");
    expect_pass("cyclic-via");
}

TEST_CASE("clean pairs satisfy the order relation of the divisor support") {
    // |G1| = |omega| - 1 = degree - 1 on every clean catalog pair
    struct Probe {
        const char* name;
        size_t degree;
    };
    for (const Probe& p : {Probe{"hermitian-q2", 3}, Probe{"hermitian-q3", 4},
                           Probe{"rational-agl-4", 4}, Probe{"quartic-vb", 4}}) {
        EntryReport rep = catalog_verify(p.name);
        size_t omega = 0, g1 = 0;
        for (const auto& c : rep.checks) {
            if (c.name == "omega_size") omega = c.measured.get<size_t>();
            if (c.name == "pencil_order_p1" || c.name == "g1_order")
                g1 = c.measured.get<size_t>();
        }
        CHECK(omega == p.degree);
        CHECK(g1 == p.degree - 1);
    }
}

TEST_CASE("reports serialize with stable key order") {
    EntryReport rep = catalog_verify("suzuki-q8");
    Json j = rep.to_json();
    CHECK(j.contains("checks"));
    CHECK(j["pass"].get<bool>() == rep.pass);
    std::string once = j.dump();
    std::string twice = catalog_verify("suzuki-q8").to_json().dump();
    CHECK(once == twice);
}
