#pragma once

// Exact arithmetic in GF(p^k), desk scale: k <= 8 and p^k <= 2^20.
// Elements are stored as integer codes sum a_i p^i for the coefficient
// vector (a_0..a_{k-1}) in the polynomial basis mod a fixed monic
// irreducible modulus. Contexts are interned and immutable, so codes are
// comparable and the canonical element order is plain integer order.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gptk/error.hpp"

namespace gptk {

inline constexpr int kMaxDegree = 8;
inline constexpr uint64_t kMaxFieldSize = uint64_t(1) << 20;

class FieldCtx {
public:
    int64_t p;
    int k;
    uint32_t q; // p^k
    std::vector<int64_t> modulus; // length k+1, constant term first, monic

    // interned construction; canonical modulus = lexicographically smallest
    // monic irreducible tuple (c0,...,c_{k-1})
    static const FieldCtx* get(int64_t p, int k);
    static const FieldCtx* get(int64_t p, int k, const std::vector<int64_t>& modulus);

    uint32_t zero() const { return 0; }
    uint32_t one() const { return 1; }
    uint32_t from_int(int64_t n) const; // image of an integer in the prime field
    uint32_t primitive_element() const { return primitive_; }

    uint32_t add(uint32_t a, uint32_t b) const;
    uint32_t sub(uint32_t a, uint32_t b) const;
    uint32_t neg(uint32_t a) const;
    uint32_t mul(uint32_t a, uint32_t b) const;
    uint32_t inv(uint32_t a) const;
    uint32_t div(uint32_t a, uint32_t b) const { return mul(a, inv(b)); }
    uint32_t pow(uint32_t a, int64_t e) const;
    uint32_t frob(uint32_t a, int e) const; // a^(p^e), e may be any integer
    uint32_t element_order(uint32_t a) const;

    // digits of the coefficient vector, constant term first, length k
    std::vector<int64_t> digits(uint32_t a) const;
    uint32_t from_digits(const std::vector<int64_t>& d) const;

    // embedding of a subfield context (same p, sub->k | k); image of the
    // subfield generator is the smallest root of the sub modulus here
    uint32_t embed(const FieldCtx* sub, uint32_t a) const;

private:
    FieldCtx() = default;
    uint32_t primitive_ = 0;
    std::vector<uint32_t> xpow_red_; // x^(k+i) reduced, i = 0..k-2, as codes
    mutable std::map<const FieldCtx*, std::vector<uint32_t>> embed_pow_; // sub -> powers of root
    void init_tables();
    friend struct FieldRegistry;
};

struct FieldElement {
    const FieldCtx* ctx = nullptr;
    uint32_t v = 0;

    FieldElement() = default;
    FieldElement(const FieldCtx* c, uint32_t code) : ctx(c), v(code) {}
    bool operator==(const FieldElement&) const = default;
};

inline void require_same_ctx(const FieldCtx* a, const FieldCtx* b) {
    if (a != b) fail(Errc::MixedFieldContexts, "elements from different field contexts");
}

inline FieldElement operator+(FieldElement a, FieldElement b) {
    require_same_ctx(a.ctx, b.ctx);
    return {a.ctx, a.ctx->add(a.v, b.v)};
}
inline FieldElement operator-(FieldElement a, FieldElement b) {
    require_same_ctx(a.ctx, b.ctx);
    return {a.ctx, a.ctx->sub(a.v, b.v)};
}
inline FieldElement operator*(FieldElement a, FieldElement b) {
    require_same_ctx(a.ctx, b.ctx);
    return {a.ctx, a.ctx->mul(a.v, b.v)};
}

// -------- univariate polynomials (for root finding and moduli) --------

struct UniPoly {
    const FieldCtx* ctx = nullptr;
    std::vector<uint32_t> c; // c[i] multiplies x^i; normalized: no trailing zeros

    UniPoly() = default;
    UniPoly(const FieldCtx* f, std::vector<uint32_t> coeffs);
    bool is_zero() const { return c.empty(); }
    int degree() const { return int(c.size()) - 1; }
    uint32_t eval(uint32_t x) const;
    // divide by (x - r); remainder must be zero
    UniPoly deflate(uint32_t r) const;
};

// all roots in the polynomial's own field, exhaustive, with multiplicities,
// in canonical (code) order
std::vector<std::pair<uint32_t, int>> all_roots(const UniPoly& f);

// (norm, trace) of a relative to GF(p^sub_k), sub_k | k; results lie in the
// embedded subfield (checked)
std::pair<FieldElement, FieldElement> norm_trace(FieldElement a, int sub_k);

// convenience used by spec files and reports: "a0,a1,..." base-p digit string
std::string element_to_string(const FieldCtx* f, uint32_t code);
uint32_t element_from_string(const FieldCtx* f, const std::string& s);

} // namespace gptk
