#ifndef INVSUB_SUBGROUP_HPP
#define INVSUB_SUBGROUP_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "invsub/common.hpp"
#include "invsub/field.hpp"
#include "invsub/poly.hpp"

namespace invsub {

/// An additive subgroup of GF(p^f), i.e. an F_p-subspace, held as a reduced
/// row echelon basis of packed coordinate rows. The representation is
/// canonical: two subgroups are equal iff their basis matrices are equal.
class AdditiveSubgroup {
  public:
    /// Canonical span of arbitrary generators.
    static AdditiveSubgroup span(const FieldSpec& E, const std::vector<FieldElement>& generators);
    static AdditiveSubgroup span_packed(std::shared_ptr<const FieldSpec> spec,
                                        const std::vector<std::uint32_t>& generators);
    /// Wraps rows that are already in canonical echelon form with the given
    /// pivot columns (as produced by the enumerator); not re-validated.
    static AdditiveSubgroup from_echelon(std::shared_ptr<const FieldSpec> spec, std::vector<std::uint32_t> rows,
                                         std::vector<int> pivots);

    const FieldSpec& field() const { return *spec_; }
    const std::shared_ptr<const FieldSpec>& spec() const { return spec_; }
    int dim() const { return static_cast<int>(rows_.size()); }
    std::uint64_t size() const;  // p^dim
    const std::vector<std::uint32_t>& packed_rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    std::vector<FieldElement> basis() const;
    std::vector<std::vector<std::int64_t>> basis_coeffs() const;

    bool contains(const FieldElement& x) const;
    bool contains_packed(std::uint32_t x) const;

    /// All p^dim elements in counting order (basis row 0 is the fastest
    /// digit): 0, r0, 2*r0, ..., r1, r1+r0, ...
    std::vector<FieldElement> elements(const Budget& budget = {}) const;
    std::vector<std::uint32_t> packed_elements(const Budget& budget = {}) const;

    friend bool operator==(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
        return a.spec_->same_field(*b.spec_) && a.rows_ == b.rows_;
    }
    friend bool operator!=(const AdditiveSubgroup& a, const AdditiveSubgroup& b) { return !(a == b); }
    /// Canonical order: by dimension, then lexicographically by packed rows.
    friend bool operator<(const AdditiveSubgroup& a, const AdditiveSubgroup& b) {
        if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
        return a.rows_ < b.rows_;
    }

  private:
    AdditiveSubgroup(std::shared_ptr<const FieldSpec> spec, std::vector<std::uint32_t> rows, std::vector<int> pivots)
        : spec_(std::move(spec)), rows_(std::move(rows)), pivots_(std::move(pivots)) {}

    std::shared_ptr<const FieldSpec> spec_;
    std::vector<std::uint32_t> rows_;
    std::vector<int> pivots_;
};

// -------------------------------------------------------------------------
// Packed low-level helpers shared by the exhaustive sweeps. These operate on
// echelon rows directly so the per-subspace cost stays allocation-free.
// -------------------------------------------------------------------------

/// Reusable buffers for per-subspace predicates.
struct SubspaceScratch {
    std::vector<std::uint32_t> elems;
    std::vector<std::uint64_t> member;  // bitset over packed element indices

    void prepare(const FieldSpec& E) { member.assign((E.order() + 63) / 64, 0); }
};

/// Appends all p^dim elements of the row span to out (counting order).
void enumerate_span_packed(const FieldSpec& E, std::span<const std::uint32_t> rows, std::vector<std::uint32_t>& out);

/// Inverse-closedness by direct elementwise scan over packed rows.
bool inverse_closed_packed(const FieldSpec& E, std::span<const std::uint32_t> rows, SubspaceScratch& scratch);

/// Subspace polynomial q-coefficients (monic, length dim+1) via the
/// f_{V+<b>} = f_V^p - f_V(b)^(p-1) f_V recursion over the basis rows.
std::vector<std::uint32_t> subspace_poly_packed(const FieldSpec& E, std::span<const std::uint32_t> rows);

// -------------------------------------------------------------------------
// Subgroup-level operations
// -------------------------------------------------------------------------

/// Direct test: inv(a) in A for every nonzero a in A (vacuously true for
/// the trivial subgroup).
bool is_inverse_closed_direct(const AdditiveSubgroup& A, const Budget& budget = {});

/// The monic linearized polynomial whose root set in E is exactly A.
LinearizedPolynomial subspace_polynomial(const AdditiveSubgroup& A, const Budget& budget = {});

/// Polynomial route: f_A(x)/x is self-reciprocal. Agrees with the direct
/// test on every subgroup; true for the trivial subgroup by convention
/// (f_A/x = 1).
bool is_inverse_closed_poly(const AdditiveSubgroup& A, const Budget& budget = {});

/// True iff 1 in A and A is closed under products of basis elements.
bool is_subfield(const AdditiveSubgroup& A);

/// {x in GF(p^{2r}) : x + x^(p^r) = 0}, an F_p-subspace of dimension r.
/// Requires 2r | f.
AdditiveSubgroup trace_zero_kernel(const FieldSpec& E, int r);

/// Smallest subfield of E containing S: multiplicative-additive closure of
/// span(S), then adjoin 1 and close again.
AdditiveSubgroup generated_subfield(const FieldSpec& E, const std::vector<FieldElement>& S,
                                    const Budget& budget = {});

/// F_p-span of all pairwise products of elements of A (basis products
/// suffice by bilinearity).
AdditiveSubgroup product_set_span(const AdditiveSubgroup& A, const Budget& budget = {});

// -------------------------------------------------------------------------
// Exhaustive enumeration of subspaces in canonical echelon form
// -------------------------------------------------------------------------

/// Number of dim-dimensional subspaces of F_p^f (Gaussian binomial),
/// saturating at 2^63 - 1.
std::uint64_t gaussian_binomial(std::int64_t p, int f, int dim);
/// Total subspace count over all dimensions, saturating.
std::uint64_t total_subspaces(std::int64_t p, int f);

/// All dim-element pivot column sets of {0, ..., f-1} in lexicographic order.
std::vector<std::vector<int>> pivot_column_sets(int f, int dim);

/// Odometer over the echelon bases with a fixed pivot column set. Rows carry
/// 1 at their own pivot, 0 at the other pivots and to the left, and free
/// digits at the remaining columns to the right; the free digits run in
/// odometer order with the last (row-major) position fastest.
class EchelonState {
  public:
    void reset(const FieldSpec& E, std::vector<int> pivots);
    const std::vector<std::uint32_t>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }
    /// Advances to the next free-digit assignment; false once exhausted.
    bool advance();

  private:
    const FieldSpec* spec_ = nullptr;
    std::vector<int> pivots_;
    std::vector<std::pair<int, int>> free_pos_;  // (row, col), row-major order
    std::vector<std::int32_t> digits_;
    std::vector<std::uint32_t> rows_;
};

/// Visits every subspace with the given pivot column set:
/// fn(rows, pivots) with rows in canonical echelon form.
template <typename Fn>
void for_each_echelon(const FieldSpec& E, std::vector<int> pivots, Fn&& fn) {
    EchelonState st;
    st.reset(E, std::move(pivots));
    do {
        fn(st.rows(), st.pivots());
    } while (st.advance());
}

/// Deterministic stream over all dim-dimensional subspaces of E, each
/// exactly once, grouped by pivot column set (the parallel split surface).
class SubgroupIterator {
  public:
    SubgroupIterator(std::shared_ptr<const FieldSpec> spec, int dim, const Budget& budget = {});

    std::uint64_t count() const { return count_; }
    std::size_t num_pivot_sets() const { return pivot_sets_.size(); }
    /// The same stream restricted to pivot sets [begin, end); disjoint
    /// slices partition the full enumeration.
    SubgroupIterator slice(std::size_t begin, std::size_t end) const;

    std::optional<AdditiveSubgroup> next();

  private:
    std::shared_ptr<const FieldSpec> spec_;
    int dim_;
    std::uint64_t count_;
    std::vector<std::vector<int>> pivot_sets_;
    std::size_t ps_index_ = 0;
    bool in_pivot_set_ = false;
    EchelonState state_;
};

/// Spec'd entry point; checks the subspace-count budget.
SubgroupIterator enumerate_subspaces(std::shared_ptr<const FieldSpec> spec, int dim, const Budget& budget = {});

}  // namespace invsub

#endif
