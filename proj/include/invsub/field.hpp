#ifndef INVSUB_FIELD_HPP
#define INVSUB_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "invsub/common.hpp"

namespace invsub {

class FieldElement;

/// A concrete finite field GF(p^f), realized as Z_p[x]/(modulus) with an
/// explicit monic irreducible modulus of degree f. Immutable after
/// construction and shareable read-only across threads.
///
/// Elements are stored in a packed radix-p index (for p = 2 this is the
/// bit-packed coefficient vector); the dense coefficient vector is exposed
/// through FieldElement::coeffs(). For small fields (order <= kTableLimit)
/// discrete-log, inverse and Frobenius tables are built once at construction
/// so that the exhaustive sweeps stay cheap.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    static constexpr int kMaxDegree = 16;
    static constexpr std::uint64_t kTableLimit = 4096;

    /// Field with the deterministic modulus chosen by find_irreducible(p, f).
    static std::shared_ptr<const FieldSpec> make(std::int64_t p, int f);

    /// Field with an explicit monic modulus, coefficients constant-term
    /// first (size f+1, leading coefficient 1). Verifies p prime and the
    /// modulus irreducible over Z_p.
    static std::shared_ptr<const FieldSpec> make(std::int64_t p, std::vector<std::int64_t> modulus);

    std::int64_t p() const { return p_; }
    int f() const { return f_; }
    std::uint64_t order() const { return q_; }
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    bool same_field(const FieldSpec& other) const;

    // --- element factories ---------------------------------------------
    FieldElement zero() const;
    FieldElement one() const;
    /// Element from coordinates w.r.t. the power basis (constant first);
    /// coordinates are reduced mod p, so any integers are accepted.
    FieldElement element(const std::vector<std::int64_t>& coeffs) const;
    FieldElement from_packed(std::uint32_t packed) const;
    /// Image of the integer m under the prime-field embedding.
    FieldElement from_int(std::int64_t m) const;

    // --- packed fast path ------------------------------------------------
    // Elements as radix-p indices sum(c_i * p^i) < order(). These are the
    // primitives the enumeration sweeps run on; FieldElement routes through
    // them as well so there is a single arithmetic implementation.
    std::uint32_t packed_add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t packed_sub(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t packed_neg(std::uint32_t a) const;
    std::uint32_t packed_mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t packed_inv(std::uint32_t a) const;  // throws on zero
    std::uint32_t packed_pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t packed_frobenius(std::uint32_t a, int i) const;  // a^(p^i)

    std::uint64_t radix_power(int i) const { return pw_[i]; }
    void decode(std::uint32_t packed, std::int32_t* digits) const;  // digits[0..f)
    std::uint32_t encode(const std::int32_t* digits) const;

    ~FieldSpec();
    FieldSpec(const FieldSpec&) = delete;
    FieldSpec& operator=(const FieldSpec&) = delete;

  private:
    FieldSpec(std::int64_t p, int f, std::vector<std::int64_t> modulus);
    void build_tables();
    std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;

    std::int64_t p_;
    int f_;
    std::uint64_t q_;
    std::vector<std::int64_t> modulus_;
    std::uint64_t pw_[kMaxDegree + 1];
    std::uint64_t mod_bits_ = 0;  // modulus as a bitmask when p = 2

    // tables, present when q_ <= kTableLimit
    std::vector<std::uint32_t> exp_;   // exp_[k] = g^k, k in [0, q-1)
    std::vector<std::uint32_t> log_;   // log_[exp_[k]] = k; log_[0] unused
    std::vector<std::uint32_t> inv_;   // multiplicative inverses, inv_[0] unused
    std::vector<std::uint32_t> frob_;  // frob_[x] = x^p
    bool has_tables_ = false;
};

bool operator==(const FieldSpec& a, const FieldSpec& b);
bool operator!=(const FieldSpec& a, const FieldSpec& b);

/// An element of a specific FieldSpec. Value type; all operations are pure.
/// Mixing elements of different fields throws std::invalid_argument.
class FieldElement {
  public:
    FieldElement() = delete;

    const FieldSpec& field() const { return *spec_; }
    const std::shared_ptr<const FieldSpec>& spec() const { return spec_; }
    std::uint32_t packed() const { return packed_; }
    /// Coordinates w.r.t. the power basis, constant term first (length f).
    std::vector<std::int64_t> coeffs() const;
    bool is_zero() const { return packed_ == 0; }
    bool is_one() const { return packed_ == 1; }

    FieldElement operator-() const;
    FieldElement inverse() const;           // throws on zero
    FieldElement frobenius(int i) const;    // this^(p^i), i >= 0
    FieldElement pow(std::uint64_t e) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b);

    friend FieldElement zero_like(const FieldElement& a) { return FieldElement(a.spec_, 0); }
    friend FieldElement one_like(const FieldElement& a) { return FieldElement(a.spec_, 1); }

  private:
    friend class FieldSpec;
    FieldElement(std::shared_ptr<const FieldSpec> spec, std::uint32_t packed)
        : spec_(std::move(spec)), packed_(packed) {}

    std::shared_ptr<const FieldSpec> spec_;
    std::uint32_t packed_;
};

/// Same-field guard used by every binary operation.
void require_same_field(const FieldElement& a, const FieldElement& b);

/// Deterministic modulus: the lexicographically smallest monic irreducible of
/// degree f over Z_p, coefficients compared from degree f-1 down to the
/// constant term. Returned constant-term first, length f+1.
std::vector<std::int64_t> find_irreducible(std::int64_t p, int f);

bool is_prime(std::int64_t n);
bool is_irreducible_mod_p(const std::vector<std::int64_t>& poly, std::int64_t p);

/// The subfield GF(p^r) inside E, as the fixed points of Frobenius^r.
/// Requires r | f. Elements are returned in increasing packed order.
std::vector<FieldElement> subfield_elements(const FieldSpec& E, int r);

/// Relative trace of the quadratic extension GF(p^{2r})/GF(p^r):
/// x + x^(p^r). Requires 2r | f and x in GF(p^{2r}).
FieldElement quadratic_trace(const FieldElement& x, int r);

}  // namespace invsub

#endif
