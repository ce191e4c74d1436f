#include "gptk/group_id.hpp"

#include <numeric>

#include "gptk/genus_tools.hpp"

namespace gptk {

const char* lie_family_name(LieFamily f) {
    switch (f) {
        case LieFamily::PSL2: return "PSL(2,q)";
        case LieFamily::SL2: return "SL(2,q)";
        case LieFamily::PSU3: return "PSU(3,q)";
        case LieFamily::SU3: return "SU(3,q)";
        case LieFamily::Sz: return "Sz(q)";
        case LieFamily::Ree: return "Ree(q)";
    }
    return "?";
}

int64_t lie_type_order(LieFamily f, int64_t q) {
    int64_t p = 0;
    int e = 0;
    if (!is_prime_power(q, &p, &e)) fail(Errc::InvalidParameter, "q must be a prime power");
    auto gcd = [](int64_t a, int64_t b) { return std::gcd(a, b); };
    switch (f) {
        case LieFamily::PSL2:
            return (q + 1) * q * (q - 1) / gcd(2, q + 1);
        case LieFamily::SL2:
            return (q + 1) * q * (q - 1) / gcd(2, q + 1) * gcd(2, q - 1);
        case LieFamily::PSU3:
            return (q * q * q + 1) * q * q * q * (q * q - 1) / gcd(3, q + 1);
        case LieFamily::SU3:
            return (q * q * q + 1) * q * q * q * (q * q - 1);
        case LieFamily::Sz:
            if (p != 2 || e % 2 == 0 || q < 8)
                fail(Errc::InvalidParameter, "Suzuki parameter must be 2^odd >= 8");
            return (q * q + 1) * q * q * (q - 1);
        case LieFamily::Ree:
            if (p != 3 || e % 2 == 0)
                fail(Errc::InvalidParameter, "Ree parameter must be 3^odd");
            return (q * q * q + 1) * q * q * q * (q - 1);
    }
    fail(Errc::InvalidParameter, "unknown family");
}

namespace {

std::string fmt(const std::string& k, int64_t v) { return k + "=" + std::to_string(v); }

// solve degree = q^pow + 1 for a prime power q
std::optional<int64_t> match_param(int64_t pow, size_t degree) {
    int64_t target = int64_t(degree) - 1;
    if (target < 2) return std::nullopt;
    if (pow == 1) return is_prime_power(target) ? std::optional<int64_t>(target) : std::nullopt;
    for (int64_t c = 2;; ++c) {
        int64_t v = 1;
        for (int64_t i = 0; i < pow; ++i) v *= c;
        if (v == target) return is_prime_power(c) ? std::optional<int64_t>(c) : std::nullopt;
        if (v > target) return std::nullopt;
    }
}

} // namespace

ClassLabel classify_action(const GroupFacts& facts, const GroupAction& action) {
    ClassLabel label;
    size_t n = action.npoints;
    size_t induced = action.induced_order();
    size_t kernel = action.kernel.size();
    label.evidence.push_back(fmt("order", int64_t(facts.order)));
    label.evidence.push_back(fmt("degree", int64_t(n)));
    label.evidence.push_back(fmt("kernel", int64_t(kernel)));
    label.evidence.push_back(fmt("induced", int64_t(induced)));
    label.evidence.push_back(fmt("center", int64_t(facts.center_order)));
    label.evidence.push_back(fmt("involutions", int64_t(facts.involution_count)));

    Transitivity grade = transitivity_grade(action);
    label.evidence.push_back(std::string("grade=") + transitivity_name(grade));

    if (grade == Transitivity::Intransitive || grade == Transitivity::Transitive) {
        if (facts.cyclic) {
            label.name = "cyclic";
            label.param = int64_t(facts.order);
            label.evidence.push_back("single-generator group");
            return label;
        }
        label.name = "unrecognized";
        label.evidence.push_back("not 2-transitive");
        return label;
    }

    FinGroup<Perm> ind = action.induced_group();

    if (grade == Transitivity::SharplyTwoTransitive && kernel == 1) {
        // faithful sharply 2-transitive: nearfield vocabulary by degree
        GroupAction ind_action = action_on(ind, n, [&](const Perm& p, size_t i) {
            return size_t(p[i]);
        });
        FinGroup<Perm> stab = stabilizer(ind, ind_action, 0);
        GroupFacts sfacts = group_facts(stab);
        int64_t pp = 0;
        int pe = 0;
        bool npp = is_prime_power(int64_t(n), &pp, &pe);
        label.evidence.push_back(std::string("stabilizer_cyclic=") + (sfacts.cyclic ? "yes" : "no"));
        if (!npp) {
            label.name = "unrecognized";
            label.evidence.push_back("sharply 2-transitive degree is not a prime power");
            return label;
        }
        if (pe == 1) {
            label.name = "AGL(1," + std::to_string(n) + ")";
            label.param = int64_t(n);
            label.evidence.push_back("prime degree forces the affine line group");
            return label;
        }
        if (n == 4) {
            label.name = "AGL(1,4)";
            label.param = 4;
            label.evidence.push_back("unique sharply 2-transitive group of degree 4");
            return label;
        }
        if (n == 9) {
            if (sfacts.cyclic) {
                label.name = "AGL(1,9)";
                label.param = 9;
            } else {
                label.name = "AGammaL(1,9)=PSU(3,2)";
                label.param = 9;
                label.evidence.push_back("non-cyclic point stabilizer of order 8");
            }
            return label;
        }
        if (n == 25) {
            auto spectrum = subgroup_order_spectrum(stab);
            bool has12 = std::find(spectrum.begin(), spectrum.end(), size_t(12)) != spectrum.end();
            label.evidence.push_back(std::string("stabilizer_order12_subgroup=") +
                                     (has12 ? "yes" : "no"));
            if (!has12) {
                label.name = "N(5)";
                label.param = 25;
                label.evidence.push_back("irregular nearfield stabilizer");
            } else if (sfacts.cyclic) {
                label.name = "AGL(1,25)";
                label.param = 25;
            } else {
                label.name = "AGammaL(1,25)";
                label.param = 25;
            }
            return label;
        }
        if (sfacts.cyclic) {
            label.name = "AGL(1," + std::to_string(n) + ")";
            label.param = int64_t(n);
            return label;
        }
        label.name = "unrecognized";
        label.evidence.push_back("sharply 2-transitive outside the vocabulary degrees");
        return label;
    }

    // non-sharp (or sharp with kernel): match the induced order and degree
    // against the Lie-type tables, central extensions by abstract center
    struct Probe {
        LieFamily fam;
        LieFamily cover;
        int64_t deg_pow;
    };
    const Probe probes[] = {
        {LieFamily::PSL2, LieFamily::SL2, 1},
        {LieFamily::PSU3, LieFamily::SU3, 3},
    };
    for (const auto& pr : probes) {
        auto q = match_param(pr.deg_pow, n);
        if (!q) continue;
        int64_t base = 0;
        bool ok = true;
        try {
            base = lie_type_order(pr.fam, *q);
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) continue;
        if (int64_t(induced) != base) continue;
        label.param = *q;
        label.evidence.push_back(fmt("q", *q));
        int64_t cover_order = lie_type_order(pr.cover, *q);
        if (int64_t(facts.order) == base && kernel == 1) {
            label.name = std::string(pr.fam == LieFamily::PSL2 ? "PSL(2," : "PSU(3,") +
                         std::to_string(*q) + ")";
            return label;
        }
        if (int64_t(facts.order) == cover_order && facts.center_order == size_t(cover_order / base)) {
            label.name = std::string(pr.fam == LieFamily::PSL2 ? "SL(2," : "SU(3,") +
                         std::to_string(*q) + ")";
            label.evidence.push_back("center matches the covering group");
            if (pr.fam == LieFamily::PSU3 && *q == 2)
                label.evidence.push_back(
                    "certified by order/degree/center/stabilizer invariants only");
            return label;
        }
        label.name = "unrecognized";
        label.evidence.push_back("order/center do not match the natural cover");
        return label;
    }
    // Suzuki and Ree natural degrees
    if (auto q = match_param(2, n)) {
        try {
            if (int64_t(induced) == lie_type_order(LieFamily::Sz, *q) && kernel == 1) {
                label.name = "Sz(" + std::to_string(*q) + ")";
                label.param = *q;
                return label;
            }
        } catch (const Error&) {
        }
    }
    if (auto q = match_param(3, n)) {
        try {
            if (int64_t(induced) == lie_type_order(LieFamily::Ree, *q) && kernel == 1) {
                label.name = "Ree(" + std::to_string(*q) + ")";
                label.param = *q;
                return label;
            }
        } catch (const Error&) {
        }
    }
    if (n == 28 && induced == 1512) {
        label.name = "PGammaL(2,8)";
        label.param = 8;
        return label;
    }
    if (n == 4 && facts.order == 24 && facts.involution_count == 9) {
        label.name = "S4";
        label.param = 4;
        return label;
    }
    if (facts.order == 24 && facts.involution_count == 1) {
        label.name = "SL(2,3)";
        label.param = 3;
        label.evidence.push_back("order 24 with a unique involution");
        return label;
    }
    if (facts.cyclic) {
        label.name = "cyclic";
        label.param = int64_t(facts.order);
        return label;
    }
    label.name = "unrecognized";
    return label;
}

} // namespace gptk
