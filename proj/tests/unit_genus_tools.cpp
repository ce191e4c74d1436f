#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gptk/genus_tools.hpp"

using namespace gptk;

TEST_CASE("different from a profile") {
    RamificationProfile tame{{{"P", {3}}}};
    CHECK(different_from_profile(tame) == 2);

    // a tame order-3 group fixing nine points: 9 * 2 = 18 = d^2(d-1), d = 3
    RamificationProfile aggregate;
    for (int i = 0; i < 9; ++i) aggregate.entries.push_back({"P" + std::to_string(i), {3}});
    CHECK(different_from_profile(aggregate) == 18);

    // quaternion-shaped wild filtration: six levels of 8, ten of 2
    RamificationProfile quat{{{"P", {8, 8, 8, 8, 8, 8, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2}}}};
    CHECK(different_from_profile(quat) == 7 * 6 + 10 * 1);

    RamificationProfile increasing{{{"P", {2, 4}}}};
    CHECK_THROWS_AS(different_from_profile(increasing), Error);
    RamificationProfile nondiv{{{"P", {6, 4}}}};
    CHECK_THROWS_AS(different_from_profile(nondiv), Error);
    RamificationProfile mixed{{{"P", {12, 2, 3}}}};
    CHECK_THROWS_AS(different_from_profile(mixed), Error);
    RamificationProfile empty{{{"P", {}}}};
    CHECK_THROWS_AS(different_from_profile(empty), Error);
}

TEST_CASE("tame detection") {
    CHECK(RamificationProfile{{{"P", {3}}, {"Q", {5}}}}.tame());
    CHECK_FALSE(RamificationProfile{{{"P", {3, 3}}}}.tame());
}

TEST_CASE("genus formula solutions") {
    CoverReport a = hurwitz_solve(3, 0, 4);
    CHECK(a.consistent);
    CHECK(a.solved == 0);

    // the degree-9 invariant curve: center quotient is elliptic, different 18
    CoverReport b = hurwitz_solve(3, 1, 18);
    CHECK(b.consistent);
    CHECK(b.solved == 10);

    // an involution with four fixed points on an elliptic curve
    CoverReport c = hurwitz_solve(2, 0, 4);
    CHECK(c.consistent);
    CHECK(c.solved == 1);

    // parity failure is a report state, not an exception
    CoverReport d = hurwitz_solve(2, 0, 3);
    CHECK_FALSE(d.consistent);
}

TEST_CASE("identity cover and parity invariants") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int64_t> gdist(0, 40), ndist(1, 50);
    for (int trial = 0; trial < 1000; ++trial) {
        int64_t g = gdist(rng);
        CHECK(hurwitz_solve(1, g, 0).solved == g);
        // build a consistent instance: pick n, g', g and derive the different
        int64_t n = ndist(rng), gq = gdist(rng);
        int64_t d = 2 * (gdist(rng) + n * (gq > 0 ? gq : 1)) ; // even, large enough
        int64_t rhs = n * (2 * gq - 2) + d;
        CoverReport r = hurwitz_solve(n, gq, d);
        if (r.consistent) {
            CHECK((n * (2 * gq - 2) + d) % 2 == 0);
            CHECK(2 * r.solved - 2 == rhs);
        }
    }
}

TEST_CASE("p-rank formula") {
    CoverReport a = deuring_shafarevich(2, 1, {});
    CHECK(a.consistent);
    CHECK(a.solved == 1);

    // rank-zero double cover with one fixed point
    CoverReport b = deuring_shafarevich(8, 0, {1});
    CHECK(b.consistent);
    CHECK(b.solved == 0);

    CoverReport c = deuring_shafarevich(4, 0, {1, 1});
    CHECK(c.consistent);
    CHECK(c.solved == 3);

    CHECK_THROWS_AS(deuring_shafarevich(6, 0, {}), Error);
    CHECK_THROWS_AS(deuring_shafarevich(4, 0, {3}), Error); // 3 does not divide 4
}

TEST_CASE("partition identity") {
    // single component: the group itself
    CHECK(partition_identity(7, 12, 3, {{12, 3}}));

    // sharply 2-transitive shape: m g = m g(X/N); here m = 4
    // components: one of order 4 (genus gN) and four stabilizers of order 3
    // (rational quotients)
    auto holds = [](int64_t gX, int64_t gN) {
        return partition_identity(gX, 12, 0, {{4, gN}, {3, 0}, {3, 0}, {3, 0}, {3, 0}});
    };
    CHECK(holds(0, 0));
    CHECK(holds(1, 1)); // the elliptic instance forces g(X/N) = 1
    CHECK_FALSE(holds(1, 0));

    CHECK_THROWS_AS(partition_identity(0, 12, 0, {{4, 0}, {3, 0}}), Error);
}

TEST_CASE("prime power recognition") {
    int64_t p = 0;
    int e = 0;
    CHECK(is_prime_power(8, &p, &e));
    CHECK(p == 2);
    CHECK(e == 3);
    CHECK(is_prime_power(7, &p, &e));
    CHECK(p == 7);
    CHECK(e == 1);
    CHECK_FALSE(is_prime_power(12));
    CHECK_FALSE(is_prime_power(1));
}
