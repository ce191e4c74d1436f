#pragma once

// Numeric covering-formula engines: the genus formula with filtration-based
// different, the p-rank formula for p-covers, and the partition identity.
// These operate on declared ramification data; inconsistency is a report
// state, not an error.

#include <cstdint>
#include <string>
#include <vector>

#include "gptk/error.hpp"

namespace gptk {

struct RamificationProfile {
    struct Entry {
        std::string label;
        std::vector<int64_t> filtration; // |G_P^(0)|, |G_P^(1)|, ... down to (not incl.) 1
    };
    std::vector<Entry> entries;

    // non-increasing, divisibility along the chain, and for i >= 1 each
    // quotient a power of a single prime; throws MalformedFiltration
    void validate() const;
    bool tame() const; // every entry is a single level [n]
};

struct CoverReport {
    int64_t group_order = 0;
    int64_t base_genus = 0;     // or base p-rank for the p-rank formula
    int64_t total_different = 0;
    int64_t solved = 0;         // genus or p-rank
    bool consistent = false;    // integral and non-negative
};

// sum over points of sum_i (|G_P^(i)| - 1)
int64_t different_from_profile(const RamificationProfile& prof);

// solve 2g - 2 = n(2g' - 2) + D for g
CoverReport hurwitz_solve(int64_t n, int64_t base_genus, int64_t different);

// solve r - 1 = n(r' - 1) + sum (n - l_i) for the p-rank r; n must be a
// power of some prime (NotPPower otherwise)
CoverReport deuring_shafarevich(int64_t n, int64_t base_prank,
                                const std::vector<int64_t>& short_orbit_sizes);

// checks (k-1) g + n g' = sum n_i g_i for a partition into k components;
// the component orders must partition the n-1 nonidentity elements
bool partition_identity(int64_t g_curve, int64_t n, int64_t g_quotient,
                        const std::vector<std::pair<int64_t, int64_t>>& components);

bool is_prime_power(int64_t n, int64_t* prime = nullptr, int* exponent = nullptr);

} // namespace gptk
