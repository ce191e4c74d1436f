#include "gptk/ffield.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <mutex>
#include <sstream>

namespace gptk {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
        case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
        case Errc::MixedFieldContexts: return "MixedFieldContexts";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotADivisor: return "NotADivisor";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::PointNotOnCurve: return "PointNotOnCurve";
        case Errc::EqualPoints: return "EqualPoints";
        case Errc::LineIsComponent: return "LineIsComponent";
        case Errc::FundamentalLineComponent: return "FundamentalLineComponent";
        case Errc::SingularMatrix: return "SingularMatrix";
        case Errc::NotInvariant: return "NotInvariant";
        case Errc::ClosureCapExceeded: return "ClosureCapExceeded";
        case Errc::NonIntegerGenus: return "NonIntegerGenus";
        case Errc::MalformedFiltration: return "MalformedFiltration";
        case Errc::NotPPower: return "NotPPower";
        case Errc::NotAPartition: return "NotAPartition";
        case Errc::InvalidParameter: return "InvalidParameter";
        case Errc::UnknownEntry: return "UnknownEntry";
        case Errc::TorsionNotRational: return "TorsionNotRational";
        case Errc::NoSuitableStabilizerSubgroup: return "NoSuitableStabilizerSubgroup";
        case Errc::FixedPointViolation: return "FixedPointViolation";
        case Errc::ConsistencyCheckFailed: return "ConsistencyCheckFailed";
        case Errc::ParseError: return "ParseError";
    }
    return "Error";
}

namespace {

bool is_prime(int64_t n) {
    if (n < 2) return false;
    for (int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int64_t mod_inverse(int64_t a, int64_t p) {
    // extended Euclid over the prime field
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t quot = r / nr;
        std::swap(t -= quot * nt, nt);
        std::swap(r -= quot * nr, nr);
    }
    return t < 0 ? t + p : t;
}

// GF(p)[x] helpers on coefficient vectors (constant first, trimmed)
using PVec = std::vector<int64_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmod(PVec a, const PVec& m, int64_t p) {
    ptrim(a);
    int64_t lead_inv = mod_inverse(m.back(), p);
    while (a.size() >= m.size()) {
        int64_t f = a.back() * lead_inv % p;
        size_t shift = a.size() - m.size();
        for (size_t i = 0; i < m.size(); ++i) {
            a[i + shift] = ((a[i + shift] - f * m[i]) % p + p) % p;
        }
        ptrim(a);
        if (a.empty()) break;
    }
    return a;
}

bool is_irreducible(const PVec& m, int64_t p) {
    // trial division against all monic polynomials of degree <= deg(m)/2
    int deg = int(m.size()) - 1;
    if (deg <= 0) return false;
    if (deg == 1) return true;
    for (int d = 1; d <= deg / 2; ++d) {
        // enumerate monic degree-d candidates
        PVec cand(d + 1, 0);
        cand[d] = 1;
        int64_t total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (int64_t n = 0; n < total; ++n) {
            int64_t t = n;
            for (int i = 0; i < d; ++i) {
                cand[i] = t % p;
                t /= p;
            }
            if (pmod(m, cand, p).empty()) return false;
        }
    }
    return true;
}

PVec canonical_modulus(int64_t p, int k) {
    if (k == 1) return {0, 1}; // x
    // lexicographically smallest (c0,...,c_{k-1}) with c0 the major digit
    PVec m(k + 1, 0);
    m[k] = 1;
    std::vector<int64_t> digits(k, 0);
    while (true) {
        for (int i = 0; i < k; ++i) m[i] = digits[i];
        if (is_irreducible(m, p)) return m;
        // advance (c0,...,c_{k-1}) in lex order: bump the last digit first
        int i = k - 1;
        while (i >= 0 && digits[i] == p - 1) digits[i--] = 0;
        if (i < 0) fail(Errc::InvalidParameter, "no irreducible modulus found");
        ++digits[i];
    }
}

struct CtxKey {
    int64_t p;
    int k;
    PVec modulus;
    bool operator<(const CtxKey& o) const {
        return std::tie(p, k, modulus) < std::tie(o.p, o.k, o.modulus);
    }
};

} // namespace

struct FieldRegistry {
    std::mutex mu;
    std::map<CtxKey, std::unique_ptr<FieldCtx>> pool;

    static FieldRegistry& instance() {
        static FieldRegistry r;
        return r;
    }

    const FieldCtx* get(int64_t p, int k, std::optional<PVec> modulus) {
        if (!is_prime(p)) fail(Errc::NonPrimeCharacteristic, "p = " + std::to_string(p));
        if (k < 1 || k > kMaxDegree)
            fail(Errc::DegreeCapExceeded, "extension degree k = " + std::to_string(k));
        uint64_t q = 1;
        for (int i = 0; i < k; ++i) {
            q *= uint64_t(p);
            if (q > kMaxFieldSize) fail(Errc::DegreeCapExceeded, "p^k exceeds 2^20");
        }
        PVec m = modulus ? *modulus : canonical_modulus(p, k);
        if (int(m.size()) != k + 1 || m.back() != 1)
            fail(Errc::InvalidParameter, "modulus must be monic of degree k");
        for (auto& c : m) c = ((c % p) + p) % p;
        if (k > 1 && !is_irreducible(m, p)) fail(Errc::InvalidParameter, "modulus is reducible");

        std::lock_guard<std::mutex> lock(mu);
        CtxKey key{p, k, m};
        auto it = pool.find(key);
        if (it != pool.end()) return it->second.get();
        auto ctx = std::unique_ptr<FieldCtx>(new FieldCtx());
        ctx->p = p;
        ctx->k = k;
        ctx->q = uint32_t(q);
        ctx->modulus = m;
        ctx->init_tables();
        auto* raw = ctx.get();
        pool.emplace(std::move(key), std::move(ctx));
        return raw;
    }
};

const FieldCtx* FieldCtx::get(int64_t p, int k) {
    return FieldRegistry::instance().get(p, k, std::nullopt);
}
const FieldCtx* FieldCtx::get(int64_t p, int k, const std::vector<int64_t>& modulus) {
    return FieldRegistry::instance().get(p, k, modulus);
}

std::vector<int64_t> FieldCtx::digits(uint32_t a) const {
    std::vector<int64_t> d(k);
    for (int i = 0; i < k; ++i) {
        d[i] = a % p;
        a = uint32_t(a / p);
    }
    return d;
}

uint32_t FieldCtx::from_digits(const std::vector<int64_t>& d) const {
    uint32_t a = 0;
    for (int i = int(d.size()) - 1; i >= 0; --i) {
        int64_t x = ((d[i] % p) + p) % p;
        a = uint32_t(a * p + x);
    }
    return a;
}

uint32_t FieldCtx::from_int(int64_t n) const { return uint32_t(((n % p) + p) % p); }

uint32_t FieldCtx::add(uint32_t a, uint32_t b) const {
    if (k == 1) return uint32_t((a + b) % p);
    uint32_t r = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
        int64_t s = (a % p + b % p) % p;
        r += uint32_t(s) * pw;
        a /= uint32_t(p);
        b /= uint32_t(p);
        pw *= uint32_t(p);
    }
    return r;
}

uint32_t FieldCtx::neg(uint32_t a) const {
    if (k == 1) return uint32_t((p - a) % p);
    uint32_t r = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
        int64_t s = (p - a % p) % p;
        r += uint32_t(s) * pw;
        a /= uint32_t(p);
        pw *= uint32_t(p);
    }
    return r;
}

uint32_t FieldCtx::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

void FieldCtx::init_tables() {
    // reduction of x^(k+i) for convolution tails
    if (k > 1) {
        PVec cur(modulus.begin(), modulus.end() - 1); // x^k = -m_low
        for (auto& c : cur) c = (p - c) % p;
        cur.resize(k, 0);
        xpow_red_.clear();
        for (int i = 0; i <= k - 2; ++i) {
            xpow_red_.push_back(from_digits(cur));
            // multiply by x, reduce
            PVec nxt(k, 0);
            int64_t top = cur[k - 1];
            for (int j = k - 1; j >= 1; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top != 0) {
                for (int j = 0; j < k; ++j)
                    nxt[j] = ((nxt[j] + top * ((p - modulus[j]) % p)) % p + p) % p;
            }
            cur = nxt;
        }
    }
    // primitive element: smallest code with full multiplicative order
    uint64_t n = q - 1;
    std::vector<int64_t> prime_factors;
    {
        uint64_t m = n;
        for (uint64_t d = 2; d * d <= m; ++d)
            while (m % d == 0) {
                if (prime_factors.empty() || uint64_t(prime_factors.back()) != d)
                    prime_factors.push_back(int64_t(d));
                m /= d;
            }
        if (m > 1) prime_factors.push_back(int64_t(m));
    }
    for (uint32_t g = 1; g < q; ++g) {
        bool ok = true;
        for (int64_t r : prime_factors)
            if (pow(g, int64_t(n) / r) == 1) {
                ok = false;
                break;
            }
        if (ok) {
            primitive_ = g;
            break;
        }
    }
}

uint32_t FieldCtx::mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (k == 1) return uint32_t(int64_t(a) * int64_t(b) % p);
    std::array<int64_t, 2 * kMaxDegree> conv{};
    std::array<int64_t, kMaxDegree> da{}, db{};
    uint32_t ta = a, tb = b;
    for (int i = 0; i < k; ++i) {
        da[i] = ta % p;
        ta /= uint32_t(p);
        db[i] = tb % p;
        tb /= uint32_t(p);
    }
    for (int i = 0; i < k; ++i) {
        if (da[i] == 0) continue;
        for (int j = 0; j < k; ++j) conv[i + j] += da[i] * db[j];
    }
    // low part
    std::array<int64_t, kMaxDegree> res{};
    for (int i = 0; i < k; ++i) res[i] = conv[i] % p;
    // fold the tail through the precomputed reductions of x^(k+i)
    for (int i = 0; i <= k - 2; ++i) {
        int64_t c = conv[k + i] % p;
        if (c == 0) continue;
        uint32_t red = xpow_red_[size_t(i)];
        for (int j = 0; j < k; ++j) {
            res[j] = (res[j] + c * int64_t(red % p)) % p;
            red /= uint32_t(p);
        }
    }
    uint32_t out = 0, pw = 1;
    for (int i = 0; i < k; ++i) {
        out += uint32_t(res[i] % p) * pw;
        pw *= uint32_t(p);
    }
    return out;
}

uint32_t FieldCtx::pow(uint32_t a, int64_t e) const {
    int64_t n = q - 1;
    if (a == 0) {
        if (e <= 0) fail(Errc::DivisionByZero, "0^e with e <= 0");
        return 0;
    }
    e %= n;
    if (e < 0) e += n;
    uint32_t r = 1, base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

uint32_t FieldCtx::inv(uint32_t a) const {
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    return pow(a, int64_t(q) - 2);
}

uint32_t FieldCtx::frob(uint32_t a, int e) const {
    int ee = ((e % k) + k) % k;
    uint32_t r = a;
    for (int i = 0; i < ee; ++i) r = pow(r, p);
    return r;
}

uint32_t FieldCtx::element_order(uint32_t a) const {
    if (a == 0) fail(Errc::InvalidParameter, "order of zero");
    uint32_t r = a;
    uint32_t o = 1;
    while (r != 1) {
        r = mul(r, a);
        ++o;
    }
    return o;
}

uint32_t FieldCtx::embed(const FieldCtx* sub, uint32_t a) const {
    if (sub == this) return a;
    if (sub->p != p || k % sub->k != 0)
        fail(Errc::NotADivisor, "no subfield embedding for these contexts");
    auto it = embed_pow_.find(sub);
    if (it == embed_pow_.end()) {
        // smallest root of the subfield modulus in this field, canonical order
        UniPoly m(this, [&] {
            std::vector<uint32_t> c(sub->modulus.size());
            for (size_t i = 0; i < c.size(); ++i) c[i] = from_int(sub->modulus[i]);
            return c;
        }());
        auto roots = all_roots(m);
        if (roots.empty()) fail(Errc::ConsistencyCheckFailed, "subfield modulus has no root");
        uint32_t r = roots.front().first;
        std::vector<uint32_t> pows(size_t(sub->k), 1);
        for (int i = 1; i < sub->k; ++i) pows[size_t(i)] = mul(pows[size_t(i - 1)], r);
        it = embed_pow_.emplace(sub, std::move(pows)).first;
    }
    const auto& pows = it->second;
    auto d = sub->digits(a);
    uint32_t out = 0;
    for (int i = 0; i < sub->k; ++i)
        out = add(out, mul(from_int(d[size_t(i)]), pows[size_t(i)]));
    return out;
}

// -------- univariate polynomials --------

UniPoly::UniPoly(const FieldCtx* f, std::vector<uint32_t> coeffs) : ctx(f), c(std::move(coeffs)) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

uint32_t UniPoly::eval(uint32_t x) const {
    uint32_t r = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) r = ctx->add(ctx->mul(r, x), c[size_t(i)]);
    return r;
}

UniPoly UniPoly::deflate(uint32_t r) const {
    // synthetic division by (x - r)
    std::vector<uint32_t> out(c.size() - 1);
    uint32_t carry = 0;
    for (int i = int(c.size()) - 1; i >= 1; --i) {
        carry = ctx->add(c[size_t(i)], ctx->mul(carry, r));
        out[size_t(i - 1)] = carry;
    }
    return UniPoly(ctx, std::move(out));
}

std::vector<std::pair<uint32_t, int>> all_roots(const UniPoly& f) {
    if (f.is_zero()) fail(Errc::ZeroPolynomial, "root search on the zero polynomial");
    std::vector<std::pair<uint32_t, int>> out;
    UniPoly g = f;
    for (uint32_t x = 0; x < f.ctx->q && g.degree() > 0; ++x) {
        int mult = 0;
        while (g.degree() > 0 && g.eval(x) == 0) {
            g = g.deflate(x);
            ++mult;
        }
        if (mult > 0) out.emplace_back(x, mult);
    }
    return out;
}

std::pair<FieldElement, FieldElement> norm_trace(FieldElement a, int sub_k) {
    const FieldCtx* f = a.ctx;
    if (sub_k < 1 || f->k % sub_k != 0) fail(Errc::NotADivisor, "sub_k must divide k");
    int steps = f->k / sub_k;
    uint32_t n = a.v, t = a.v, cur = a.v;
    for (int i = 1; i < steps; ++i) {
        cur = f->frob(cur, sub_k);
        n = f->mul(n, cur);
        t = f->add(t, cur);
    }
    if (f->frob(n, sub_k) != n || f->frob(t, sub_k) != t)
        fail(Errc::ConsistencyCheckFailed, "norm/trace not fixed by subfield Frobenius");
    return {FieldElement(f, n), FieldElement(f, t)};
}

std::string element_to_string(const FieldCtx* f, uint32_t code) {
    auto d = f->digits(code);
    std::ostringstream os;
    for (int i = 0; i < f->k; ++i) {
        if (i) os << ',';
        os << d[size_t(i)];
    }
    return os.str();
}

uint32_t element_from_string(const FieldCtx* f, const std::string& s) {
    std::vector<int64_t> d;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() && d.empty() && comma == std::string::npos) break;
        int64_t val = 0;
        auto [p_, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), val);
        if (ec != std::errc() || p_ != tok.data() + tok.size())
            fail(Errc::ParseError, "bad field element digits: '" + s + "'");
        d.push_back(val);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (int(d.size()) > f->k) fail(Errc::ParseError, "too many digits for field element: '" + s + "'");
    d.resize(size_t(f->k), 0);
    return f->from_digits(d);
}

} // namespace gptk
