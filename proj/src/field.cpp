#include "invsub/field.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <utility>

namespace invsub {

namespace {

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    base = mod_p(base, p);
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

std::int64_t inv_mod_p(std::int64_t a, std::int64_t p) { return pow_mod(a, p - 2, p); }

// ---------------------------------------------------------------------
// Minimal Z_p[x] toolkit used only for modulus selection and validation.
// Polynomials are coefficient vectors, constant term first, trimmed.
// ---------------------------------------------------------------------
using ZpPoly = std::vector<std::int64_t>;

void trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod g, g monic
ZpPoly poly_rem(ZpPoly a, const ZpPoly& g, std::int64_t p) {
    const std::size_t dg = g.size() - 1;
    while (a.size() > dg) {
        std::int64_t c = a.back();
        if (c != 0) {
            std::size_t shift = a.size() - 1 - dg;
            for (std::size_t i = 0; i < dg; ++i)
                a[shift + i] = mod_p(a[shift + i] - c * g[i], p);
        }
        a.pop_back();
        trim(a);
        if (a.size() <= dg) break;
    }
    trim(a);
    return a;
}

ZpPoly poly_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& g, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = mod_p(prod[i + j] + a[i] * b[j], p);
    }
    trim(prod);
    return poly_rem(std::move(prod), g, p);
}

ZpPoly poly_powmod(ZpPoly base, std::int64_t e, const ZpPoly& g, std::int64_t p) {
    ZpPoly r{1};
    base = poly_rem(std::move(base), g, p);
    while (e > 0) {
        if (e & 1) r = poly_mulmod(r, base, g, p);
        base = poly_mulmod(base, base, g, p);
        e >>= 1;
    }
    return r;
}

ZpPoly poly_gcd(ZpPoly a, ZpPoly b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // make b monic so poly_rem applies
        std::int64_t lead = b.back();
        if (lead != 1) {
            std::int64_t il = inv_mod_p(lead, p);
            for (auto& c : b) c = mod_p(c * il, p);
        }
        ZpPoly r = poly_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::string poly_to_string(const std::vector<std::int64_t>& c) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::int64_t>& poly, std::int64_t p) {
    if (poly.size() < 2) return false;
    ZpPoly g = poly;
    for (auto& c : g) c = mod_p(c, p);
    if (g.back() != 1) throw std::invalid_argument("is_irreducible_mod_p: modulus must be monic");
    const int f = static_cast<int>(g.size()) - 1;
    if (f == 1) return true;

    // Rabin test: x^(p^f) == x mod g, and gcd(x^(p^(f/l)) - x, g) = 1 for
    // every prime l dividing f.
    ZpPoly x{0, 1};
    ZpPoly h = x;  // x^(p^k) mod g, k steps below
    for (int k = 0; k < f; ++k) h = poly_powmod(h, p, g, p);
    ZpPoly hx = h;  // h - x
    if (hx.size() < 2) hx.resize(2, 0);
    hx[1] = mod_p(hx[1] - 1, p);
    trim(hx);
    if (!hx.empty()) return false;

    for (std::int64_t l : prime_factors(f)) {
        ZpPoly hk = x;
        for (int k = 0; k < f / l; ++k) hk = poly_powmod(hk, p, g, p);
        if (hk.size() < 2) hk.resize(2, 0);
        hk[1] = mod_p(hk[1] - 1, p);
        trim(hk);
        ZpPoly d = poly_gcd(g, hk, p);
        if (d.size() != 1) return false;
    }
    return true;
}

std::vector<std::int64_t> find_irreducible(std::int64_t p, int f) {
    if (!is_prime(p)) throw std::invalid_argument("find_irreducible: p is not prime");
    if (f < 1 || f > FieldSpec::kMaxDegree)
        throw std::invalid_argument("find_irreducible: degree out of range");

    // Candidates x^f + c_{f-1} x^{f-1} + ... + c_0, ordered by the tuple
    // (c_{f-1}, ..., c_0); the index k spells that tuple with c_0 = k mod p.
    std::uint64_t total = 1;
    for (int i = 0; i < f; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t k = 0; k < total; ++k) {
        std::vector<std::int64_t> cand(f + 1, 0);
        cand[f] = 1;
        std::uint64_t v = k;
        for (int i = 0; i < f; ++i) {
            cand[i] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        if (is_irreducible_mod_p(cand, p)) return cand;
    }
    throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

// ---------------------------------------------------------------------
// FieldSpec
// ---------------------------------------------------------------------

FieldSpec::FieldSpec(std::int64_t p, int f, std::vector<std::int64_t> modulus)
    : p_(p), f_(f), modulus_(std::move(modulus)) {
    pw_[0] = 1;
    for (int i = 1; i <= f_; ++i) pw_[i] = pw_[i - 1] * static_cast<std::uint64_t>(p_);
    q_ = pw_[f_];
    if (p_ == 2) {
        for (int i = 0; i <= f_; ++i)
            if (modulus_[i]) mod_bits_ |= std::uint64_t{1} << i;
    }
}

FieldSpec::~FieldSpec() = default;

std::shared_ptr<const FieldSpec> FieldSpec::make(std::int64_t p, int f) {
    return make(p, find_irreducible(p, f));
}

std::shared_ptr<const FieldSpec> FieldSpec::make(std::int64_t p, std::vector<std::int64_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: p is not prime");
    if (modulus.size() < 2 || modulus.size() > FieldSpec::kMaxDegree + 1)
        throw std::invalid_argument("FieldSpec: modulus degree out of range");
    for (auto& c : modulus) c = mod_p(c, p);
    if (modulus.back() != 1) throw std::invalid_argument("FieldSpec: modulus must be monic");
    const int f = static_cast<int>(modulus.size()) - 1;
    long double qd = 1;
    for (int i = 0; i < f; ++i) qd *= static_cast<long double>(p);
    if (qd > static_cast<long double>(std::uint32_t(-1)))
        throw std::invalid_argument("FieldSpec: field order exceeds 2^32");
    if (!is_irreducible_mod_p(modulus, p))
        throw std::invalid_argument("FieldSpec: modulus " + poly_to_string(modulus) +
                                    " is reducible over Z_" + std::to_string(p));
    auto spec = std::shared_ptr<FieldSpec>(new FieldSpec(p, f, std::move(modulus)));
    spec->build_tables();
    return spec;
}

bool FieldSpec::same_field(const FieldSpec& other) const {
    return this == &other || (p_ == other.p_ && f_ == other.f_ && modulus_ == other.modulus_);
}

bool operator==(const FieldSpec& a, const FieldSpec& b) { return a.same_field(b); }
bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !a.same_field(b); }

void FieldSpec::decode(std::uint32_t packed, std::int32_t* digits) const {
    std::uint64_t v = packed;
    const auto p = static_cast<std::uint64_t>(p_);
    for (int i = 0; i < f_; ++i) {
        digits[i] = static_cast<std::int32_t>(v % p);
        v /= p;
    }
}

std::uint32_t FieldSpec::encode(const std::int32_t* digits) const {
    std::uint64_t v = 0;
    for (int i = f_ - 1; i >= 0; --i) v = v * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(digits[i]);
    return static_cast<std::uint32_t>(v);
}

std::uint32_t FieldSpec::packed_add(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    std::uint64_t va = a, vb = b, out = 0;
    const auto p = static_cast<std::uint64_t>(p_);
    std::uint64_t place = 1;
    for (int i = 0; i < f_; ++i) {
        std::uint64_t s = va % p + vb % p;
        if (s >= p) s -= p;
        out += s * place;
        va /= p;
        vb /= p;
        place *= p;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldSpec::packed_neg(std::uint32_t a) const {
    if (p_ == 2) return a;
    std::uint64_t va = a, out = 0;
    const auto p = static_cast<std::uint64_t>(p_);
    std::uint64_t place = 1;
    for (int i = 0; i < f_; ++i) {
        std::uint64_t d = va % p;
        out += (d == 0 ? 0 : p - d) * place;
        va /= p;
        place *= p;
    }
    return static_cast<std::uint32_t>(out);
}

std::uint32_t FieldSpec::packed_sub(std::uint32_t a, std::uint32_t b) const {
    if (p_ == 2) return a ^ b;
    return packed_add(a, packed_neg(b));
}

std::uint32_t FieldSpec::mul_generic(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (p_ == 2) {
        std::uint64_t acc = 0, x = a;
        std::uint32_t y = b;
        while (y) {
            if (y & 1) acc ^= x;
            x <<= 1;
            y >>= 1;
        }
        for (int d = 2 * f_ - 2; d >= f_; --d)
            if ((acc >> d) & 1) acc ^= mod_bits_ << (d - f_);
        return static_cast<std::uint32_t>(acc);
    }
    std::array<std::int32_t, kMaxDegree> da{}, db{};
    std::array<std::int64_t, 2 * kMaxDegree> acc{};
    decode(a, da.data());
    decode(b, db.data());
    for (int i = 0; i < f_; ++i) {
        if (!da[i]) continue;
        for (int j = 0; j < f_; ++j) acc[i + j] += static_cast<std::int64_t>(da[i]) * db[j];
    }
    for (int d = 2 * f_ - 2; d >= f_; --d) {
        std::int64_t c = mod_p(acc[d], p_);
        if (c)
            for (int i = 0; i < f_; ++i) acc[d - f_ + i] -= c * modulus_[i];
        acc[d] = 0;
    }
    std::array<std::int32_t, kMaxDegree> out{};
    for (int i = 0; i < f_; ++i) out[i] = static_cast<std::int32_t>(mod_p(acc[i], p_));
    return encode(out.data());
}

std::uint32_t FieldSpec::packed_mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    if (has_tables_) {
        std::uint64_t s = log_[a] + log_[b];
        const std::uint64_t m = q_ - 1;
        if (s >= m) s -= m;
        return exp_[s];
    }
    return mul_generic(a, b);
}

std::uint32_t FieldSpec::packed_pow(std::uint32_t a, std::uint64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    if (has_tables_) {
        const std::uint64_t m = q_ - 1;
        return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * (e % m)) % m)];
    }
    std::uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = packed_mul(r, a);
        a = packed_mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint32_t FieldSpec::packed_inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero in GF(" + std::to_string(q_) + ")");
    if (has_tables_) return inv_[a];
    return packed_pow(a, q_ - 2);
}

std::uint32_t FieldSpec::packed_frobenius(std::uint32_t a, int i) const {
    if (i < 0) throw std::invalid_argument("frobenius: negative power");
    i %= f_;
    if (has_tables_) {
        for (int k = 0; k < i; ++k) a = frob_[a];
        return a;
    }
    for (int k = 0; k < i; ++k) a = packed_pow(a, static_cast<std::uint64_t>(p_));
    return a;
}

void FieldSpec::build_tables() {
    if (q_ > kTableLimit) return;
    const auto q = static_cast<std::uint32_t>(q_);
    const std::uint64_t m = q_ - 1;
    auto factors = prime_factors(static_cast<std::int64_t>(m));

    // smallest generator of the multiplicative group, by packed index
    std::uint32_t gen = 0;
    for (std::uint32_t g = 1; g < q && !gen; ++g) {
        bool ok = m == 1;
        if (!ok) {
            ok = true;
            for (std::int64_t l : factors) {
                std::uint32_t t = 1, base = g;
                std::uint64_t e = m / static_cast<std::uint64_t>(l);
                while (e) {
                    if (e & 1) t = mul_generic(t, base);
                    base = mul_generic(base, base);
                    e >>= 1;
                }
                if (t == 1) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) gen = g;
    }

    exp_.resize(m);
    log_.assign(q, 0);
    std::uint32_t v = 1;
    for (std::uint64_t k = 0; k < m; ++k) {
        exp_[k] = v;
        log_[v] = static_cast<std::uint32_t>(k);
        v = mul_generic(v, gen);
    }
    inv_.assign(q, 0);
    for (std::uint32_t x = 1; x < q; ++x) inv_[x] = exp_[(m - log_[x]) % m];
    frob_.assign(q, 0);
    for (std::uint32_t x = 1; x < q; ++x)
        frob_[x] = exp_[static_cast<std::uint64_t>(log_[x]) * static_cast<std::uint64_t>(p_) % m];
    has_tables_ = true;
}

FieldElement FieldSpec::zero() const { return FieldElement(shared_from_this(), 0); }
FieldElement FieldSpec::one() const { return FieldElement(shared_from_this(), 1); }

FieldElement FieldSpec::element(const std::vector<std::int64_t>& coeffs) const {
    if (coeffs.size() != static_cast<std::size_t>(f_))
        throw std::invalid_argument("element: expected " + std::to_string(f_) + " coordinates, got " +
                                    std::to_string(coeffs.size()));
    std::uint64_t v = 0;
    for (int i = f_ - 1; i >= 0; --i)
        v = v * static_cast<std::uint64_t>(p_) + static_cast<std::uint64_t>(mod_p(coeffs[i], p_));
    return FieldElement(shared_from_this(), static_cast<std::uint32_t>(v));
}

FieldElement FieldSpec::from_packed(std::uint32_t packed) const {
    if (packed >= q_) throw std::invalid_argument("from_packed: index out of range");
    return FieldElement(shared_from_this(), packed);
}

FieldElement FieldSpec::from_int(std::int64_t m) const {
    return FieldElement(shared_from_this(), static_cast<std::uint32_t>(mod_p(m, p_)));
}

// ---------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------

void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field().same_field(b.field()))
        throw std::invalid_argument("field mismatch: GF(" + std::to_string(a.field().order()) + ") vs GF(" +
                                    std::to_string(b.field().order()) + ") or different moduli");
}

std::vector<std::int64_t> FieldElement::coeffs() const {
    std::vector<std::int64_t> out(static_cast<std::size_t>(spec_->f()));
    std::uint64_t v = packed_;
    const auto p = static_cast<std::uint64_t>(spec_->p());
    for (auto& c : out) {
        c = static_cast<std::int64_t>(v % p);
        v /= p;
    }
    return out;
}

FieldElement FieldElement::operator-() const { return FieldElement(spec_, spec_->packed_neg(packed_)); }

FieldElement FieldElement::inverse() const { return FieldElement(spec_, spec_->packed_inv(packed_)); }

FieldElement FieldElement::frobenius(int i) const {
    return FieldElement(spec_, spec_->packed_frobenius(packed_, i));
}

FieldElement FieldElement::pow(std::uint64_t e) const { return FieldElement(spec_, spec_->packed_pow(packed_, e)); }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.spec_, a.spec_->packed_add(a.packed_, b.packed_));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.spec_, a.spec_->packed_sub(a.packed_, b.packed_));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return FieldElement(a.spec_, a.spec_->packed_mul(a.packed_, b.packed_));
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field().same_field(b.field()) && a.packed_ == b.packed_;
}

bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

// ---------------------------------------------------------------------
// Subfields and traces
// ---------------------------------------------------------------------

std::vector<FieldElement> subfield_elements(const FieldSpec& E, int r) {
    if (r < 1 || E.f() % r != 0)
        throw std::invalid_argument("subfield_elements: r = " + std::to_string(r) + " does not divide f = " +
                                    std::to_string(E.f()));
    std::vector<FieldElement> out;
    for (std::uint32_t x = 0; x < E.order(); ++x)
        if (E.packed_frobenius(x, r) == x) out.push_back(E.from_packed(x));
    return out;
}

FieldElement quadratic_trace(const FieldElement& x, int r) {
    const FieldSpec& E = x.field();
    if (r < 1 || E.f() % (2 * r) != 0)
        throw std::invalid_argument("quadratic_trace: 2r = " + std::to_string(2 * r) + " does not divide f = " +
                                    std::to_string(E.f()));
    if (E.packed_frobenius(x.packed(), 2 * r) != x.packed())
        throw std::invalid_argument("quadratic_trace: element lies outside GF(p^{2r})");
    return x + x.frobenius(r);
}

}  // namespace invsub
