#include "gptk/genus_tools.hpp"

namespace gptk {

bool is_prime_power(int64_t n, int64_t* prime, int* exponent) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            int64_t m = n;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            if (m != 1) return false;
            if (prime) *prime = d;
            if (exponent) *exponent = e;
            return true;
        }
    }
    if (prime) *prime = n;
    if (exponent) *exponent = 1;
    return true; // n itself is prime
}

void RamificationProfile::validate() const {
    for (const auto& e : entries) {
        if (e.filtration.empty())
            fail(Errc::MalformedFiltration, "empty filtration at " + e.label);
        for (size_t i = 0; i < e.filtration.size(); ++i) {
            int64_t v = e.filtration[i];
            if (v < 2) fail(Errc::MalformedFiltration, "filtration order < 2 at " + e.label);
            if (i > 0) {
                int64_t prev = e.filtration[i - 1];
                if (v > prev || prev % v != 0)
                    fail(Errc::MalformedFiltration,
                         "filtration not a divisor chain at " + e.label);
            }
        }
        // from the first higher group on, every level is a power of one
        // prime (the wild prime); the top quotient is the tame complement
        int64_t p = 0;
        for (size_t i = 1; i < e.filtration.size(); ++i) {
            int64_t q = 0;
            if (!is_prime_power(e.filtration[i], &q, nullptr))
                fail(Errc::MalformedFiltration, "higher group not a prime power at " + e.label);
            if (p == 0) p = q;
            if (q != p) fail(Errc::MalformedFiltration, "mixed wild primes at " + e.label);
        }
    }
}

bool RamificationProfile::tame() const {
    for (const auto& e : entries)
        if (e.filtration.size() != 1) return false;
    return true;
}

int64_t different_from_profile(const RamificationProfile& prof) {
    prof.validate();
    int64_t d = 0;
    for (const auto& e : prof.entries)
        for (int64_t v : e.filtration) d += v - 1;
    return d;
}

CoverReport hurwitz_solve(int64_t n, int64_t base_genus, int64_t different) {
    CoverReport r;
    r.group_order = n;
    r.base_genus = base_genus;
    r.total_different = different;
    int64_t rhs = n * (2 * base_genus - 2) + different; // = 2g - 2
    r.consistent = (rhs % 2 == 0) && (rhs + 2 >= 0);
    r.solved = r.consistent ? (rhs + 2) / 2 : 0;
    return r;
}

CoverReport deuring_shafarevich(int64_t n, int64_t base_prank,
                                const std::vector<int64_t>& short_orbit_sizes) {
    if (!is_prime_power(n)) fail(Errc::NotPPower, "group order " + std::to_string(n));
    CoverReport r;
    r.group_order = n;
    r.base_genus = base_prank;
    int64_t corr = 0;
    for (int64_t l : short_orbit_sizes) {
        if (l < 1 || l > n || n % l != 0)
            fail(Errc::InvalidParameter, "short orbit size " + std::to_string(l));
        corr += n - l;
    }
    r.total_different = corr;
    int64_t rhs = n * (base_prank - 1) + corr; // = prank - 1
    r.solved = rhs + 1;
    r.consistent = r.solved >= 0;
    if (!r.consistent) r.solved = 0;
    return r;
}

bool partition_identity(int64_t g_curve, int64_t n, int64_t g_quotient,
                        const std::vector<std::pair<int64_t, int64_t>>& components) {
    int64_t nonid = 0;
    for (const auto& [ni, gi] : components) {
        if (ni < 1) fail(Errc::NotAPartition, "component order < 1");
        nonid += ni - 1;
    }
    if (nonid != n - 1) fail(Errc::NotAPartition, "components do not partition the group");
    int64_t k = int64_t(components.size());
    int64_t lhs = (k - 1) * g_curve + n * g_quotient;
    int64_t rhs = 0;
    for (const auto& [ni, gi] : components) rhs += ni * gi;
    return lhs == rhs;
}

} // namespace gptk
