#include "invsub/subgroup.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace invsub {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::int64_t>::max();

std::int64_t pow_mod(std::int64_t base, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    base %= p;
    if (base < 0) base += p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

void check_field_budget(const FieldSpec& E, const Budget& budget, const char* what) {
    if (E.order() > budget.max_field_size)
        throw BudgetExceeded(std::string(what) + ": field order " + std::to_string(E.order()) +
                             " exceeds budget " + std::to_string(budget.max_field_size));
}

std::int32_t digit_at(const FieldSpec& E, std::uint32_t x, int col) {
    return static_cast<std::int32_t>((x / E.radix_power(col)) % static_cast<std::uint64_t>(E.p()));
}

}  // namespace

// -------------------------------------------------------------------------
// Construction
// -------------------------------------------------------------------------

AdditiveSubgroup AdditiveSubgroup::span(const FieldSpec& E, const std::vector<FieldElement>& generators) {
    std::vector<std::uint32_t> packed;
    packed.reserve(generators.size());
    for (const FieldElement& g : generators) {
        if (!g.field().same_field(E)) throw std::invalid_argument("span: generator from a different field");
        packed.push_back(g.packed());
    }
    return span_packed(E.shared_from_this(), packed);
}

AdditiveSubgroup AdditiveSubgroup::span_packed(std::shared_ptr<const FieldSpec> spec,
                                               const std::vector<std::uint32_t>& generators) {
    const FieldSpec& E = *spec;
    const int f = E.f();
    const std::int64_t p = E.p();

    // digit matrix, Gauss-Jordan to reduced row echelon form
    std::vector<std::array<std::int32_t, FieldSpec::kMaxDegree>> m(generators.size());
    for (std::size_t i = 0; i < generators.size(); ++i) E.decode(generators[i], m[i].data());

    std::vector<int> pivots;
    std::size_t rank = 0;
    for (int col = 0; col < f && rank < m.size(); ++col) {
        std::size_t sel = rank;
        while (sel < m.size() && m[sel][col] == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[rank]);
        const std::int64_t inv = pow_mod(m[rank][col], p - 2, p);
        for (int j = 0; j < f; ++j) m[rank][j] = static_cast<std::int32_t>(m[rank][j] * inv % p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            const std::int64_t c = m[i][col];
            for (int j = 0; j < f; ++j) {
                std::int64_t v = (m[i][j] - c * m[rank][j]) % p;
                m[i][j] = static_cast<std::int32_t>(v < 0 ? v + p : v);
            }
        }
        pivots.push_back(col);
        ++rank;
    }

    std::vector<std::uint32_t> rows(rank);
    for (std::size_t i = 0; i < rank; ++i) rows[i] = E.encode(m[i].data());
    return AdditiveSubgroup(std::move(spec), std::move(rows), std::move(pivots));
}

AdditiveSubgroup AdditiveSubgroup::from_echelon(std::shared_ptr<const FieldSpec> spec,
                                                std::vector<std::uint32_t> rows, std::vector<int> pivots) {
    return AdditiveSubgroup(std::move(spec), std::move(rows), std::move(pivots));
}

std::uint64_t AdditiveSubgroup::size() const {
    std::uint64_t s = 1;
    for (int i = 0; i < dim(); ++i) s *= static_cast<std::uint64_t>(spec_->p());
    return s;
}

std::vector<FieldElement> AdditiveSubgroup::basis() const {
    std::vector<FieldElement> out;
    out.reserve(rows_.size());
    for (std::uint32_t r : rows_) out.push_back(spec_->from_packed(r));
    return out;
}

std::vector<std::vector<std::int64_t>> AdditiveSubgroup::basis_coeffs() const {
    std::vector<std::vector<std::int64_t>> out;
    out.reserve(rows_.size());
    for (std::uint32_t r : rows_) out.push_back(spec_->from_packed(r).coeffs());
    return out;
}

bool AdditiveSubgroup::contains_packed(std::uint32_t x) const {
    const FieldSpec& E = *spec_;
    for (std::size_t i = 0; i < rows_.size() && x; ++i) {
        const std::int32_t d = digit_at(E, x, pivots_[i]);
        if (d) x = E.packed_sub(x, E.packed_mul(rows_[i], static_cast<std::uint32_t>(d)));
    }
    return x == 0;
}

bool AdditiveSubgroup::contains(const FieldElement& x) const {
    if (!x.field().same_field(*spec_)) throw std::invalid_argument("contains: element from a different field");
    return contains_packed(x.packed());
}

std::vector<std::uint32_t> AdditiveSubgroup::packed_elements(const Budget& budget) const {
    check_field_budget(*spec_, budget, "elements");
    std::vector<std::uint32_t> out;
    out.reserve(size());
    enumerate_span_packed(*spec_, rows_, out);
    return out;
}

std::vector<FieldElement> AdditiveSubgroup::elements(const Budget& budget) const {
    std::vector<FieldElement> out;
    out.reserve(size());
    for (std::uint32_t e : packed_elements(budget)) out.push_back(spec_->from_packed(e));
    return out;
}

// -------------------------------------------------------------------------
// Packed helpers
// -------------------------------------------------------------------------

void enumerate_span_packed(const FieldSpec& E, std::span<const std::uint32_t> rows,
                           std::vector<std::uint32_t>& out) {
    out.push_back(0);
    const int dim = static_cast<int>(rows.size());
    if (dim == 0) return;
    const auto p = static_cast<std::int32_t>(E.p());
    std::array<std::int32_t, FieldSpec::kMaxDegree> digits{};
    std::uint32_t e = 0;
    for (;;) {
        int k = 0;
        while (k < dim) {
            e = E.packed_add(e, rows[static_cast<std::size_t>(k)]);
            if (++digits[k] < p) break;
            digits[k] = 0;
            ++k;
        }
        if (k == dim) break;
        out.push_back(e);
    }
}

bool inverse_closed_packed(const FieldSpec& E, std::span<const std::uint32_t> rows, SubspaceScratch& scratch) {
    scratch.elems.clear();
    enumerate_span_packed(E, rows, scratch.elems);
    for (std::uint32_t e : scratch.elems) scratch.member[e >> 6] |= std::uint64_t{1} << (e & 63);
    bool closed = true;
    for (std::uint32_t e : scratch.elems) {
        if (e == 0) continue;
        const std::uint32_t inv = E.packed_inv(e);
        if (!((scratch.member[inv >> 6] >> (inv & 63)) & 1)) {
            closed = false;
            break;
        }
    }
    for (std::uint32_t e : scratch.elems) scratch.member[e >> 6] = 0;
    return closed;
}

std::vector<std::uint32_t> subspace_poly_packed(const FieldSpec& E, std::span<const std::uint32_t> rows) {
    std::vector<std::uint32_t> q{1};  // f_{{0}}(x) = x
    const auto pm1 = static_cast<std::uint64_t>(E.p() - 1);
    std::vector<std::uint32_t> next;
    for (std::uint32_t b : rows) {
        // fb = f_V(b), nonzero because b is independent of the earlier rows
        std::uint32_t xq = b;
        std::uint32_t fb = E.packed_mul(q[0], xq);
        for (std::size_t i = 1; i < q.size(); ++i) {
            xq = E.packed_frobenius(xq, 1);
            if (q[i]) fb = E.packed_add(fb, E.packed_mul(q[i], xq));
        }
        const std::uint32_t alpha = E.packed_pow(fb, pm1);
        next.assign(q.size() + 1, 0);
        for (std::size_t i = 0; i < q.size(); ++i) {
            next[i + 1] = E.packed_frobenius(q[i], 1);
            if (q[i]) next[i] = E.packed_sub(next[i], E.packed_mul(alpha, q[i]));
        }
        q.swap(next);
    }
    return q;
}

// -------------------------------------------------------------------------
// Subgroup-level operations
// -------------------------------------------------------------------------

bool is_inverse_closed_direct(const AdditiveSubgroup& A, const Budget& budget) {
    check_field_budget(A.field(), budget, "is_inverse_closed_direct");
    SubspaceScratch scratch;
    scratch.prepare(A.field());
    return inverse_closed_packed(A.field(), A.packed_rows(), scratch);
}

LinearizedPolynomial subspace_polynomial(const AdditiveSubgroup& A, const Budget& budget) {
    check_field_budget(A.field(), budget, "subspace_polynomial");
    return LinearizedPolynomial::from_packed(A.spec(), subspace_poly_packed(A.field(), A.packed_rows()));
}

bool is_inverse_closed_poly(const AdditiveSubgroup& A, const Budget& budget) {
    const DensePoly<FieldElement> dense = subspace_polynomial(A, budget).to_dense();
    // f_A has constant term 0 and simple roots, so dividing by x is exact:
    // shift the coefficients down one place.
    std::vector<FieldElement> shifted(dense.coeffs().begin() + 1, dense.coeffs().end());
    return is_self_reciprocal(DensePoly<FieldElement>(std::move(shifted)));
}

bool is_subfield(const AdditiveSubgroup& A) {
    if (!A.contains_packed(1)) return false;
    const FieldSpec& E = A.field();
    const auto& rows = A.packed_rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j)
            if (!A.contains_packed(E.packed_mul(rows[i], rows[j]))) return false;
    return true;
}

AdditiveSubgroup trace_zero_kernel(const FieldSpec& E, int r) {
    if (r < 1 || E.f() % (2 * r) != 0)
        throw std::invalid_argument("trace_zero_kernel: 2r = " + std::to_string(2 * r) +
                                    " does not divide f = " + std::to_string(E.f()));
    std::vector<std::uint32_t> gens;
    for (std::uint32_t x = 0; x < E.order(); ++x)
        if (E.packed_frobenius(x, 2 * r) == x && E.packed_add(x, E.packed_frobenius(x, r)) == 0)
            gens.push_back(x);
    AdditiveSubgroup K = AdditiveSubgroup::span_packed(E.shared_from_this(), gens);
    if (K.dim() != r) throw std::logic_error("trace_zero_kernel: unexpected dimension");
    return K;
}

namespace {

AdditiveSubgroup close_under_products(std::shared_ptr<const FieldSpec> spec, AdditiveSubgroup B) {
    const FieldSpec& E = *spec;
    for (;;) {
        std::vector<std::uint32_t> gens = B.packed_rows();
        const std::size_t base = gens.size();
        for (std::size_t i = 0; i < base; ++i)
            for (std::size_t j = i; j < base; ++j) gens.push_back(E.packed_mul(gens[i], gens[j]));
        AdditiveSubgroup next = AdditiveSubgroup::span_packed(spec, gens);
        if (next.dim() == B.dim()) return next;
        B = std::move(next);
    }
}

}  // namespace

AdditiveSubgroup generated_subfield(const FieldSpec& E, const std::vector<FieldElement>& S, const Budget& budget) {
    check_field_budget(E, budget, "generated_subfield");
    auto spec = E.shared_from_this();
    std::vector<std::uint32_t> gens;
    gens.reserve(S.size());
    for (const FieldElement& s : S) {
        if (!s.field().same_field(E)) throw std::invalid_argument("generated_subfield: element from another field");
        gens.push_back(s.packed());
    }
    AdditiveSubgroup B = close_under_products(spec, AdditiveSubgroup::span_packed(spec, gens));
    std::vector<std::uint32_t> with_one = B.packed_rows();
    with_one.push_back(1);
    return close_under_products(spec, AdditiveSubgroup::span_packed(spec, with_one));
}

AdditiveSubgroup product_set_span(const AdditiveSubgroup& A, const Budget& budget) {
    check_field_budget(A.field(), budget, "product_set_span");
    const FieldSpec& E = A.field();
    const auto& rows = A.packed_rows();
    std::vector<std::uint32_t> gens;
    gens.reserve(rows.size() * (rows.size() + 1) / 2);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i; j < rows.size(); ++j) gens.push_back(E.packed_mul(rows[i], rows[j]));
    return AdditiveSubgroup::span_packed(A.spec(), gens);
}

// -------------------------------------------------------------------------
// Enumeration
// -------------------------------------------------------------------------

std::uint64_t gaussian_binomial(std::int64_t p, int f, int dim) {
    if (dim < 0 || dim > f) return 0;
    // Pascal recurrence C(n,k)_p = C(n-1,k-1)_p + p^k C(n-1,k)_p, saturating.
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(f) + 1,
                                              std::vector<std::uint64_t>(static_cast<std::size_t>(f) + 1, 0));
    for (int n = 0; n <= f; ++n) {
        c[n][0] = 1;
        for (int k = 1; k <= n; ++k) {
            unsigned __int128 pk = 1;
            for (int i = 0; i < k; ++i) pk *= static_cast<unsigned __int128>(p);
            unsigned __int128 v = static_cast<unsigned __int128>(c[n - 1][k - 1]);
            if (k <= n - 1) v += pk * static_cast<unsigned __int128>(c[n - 1][k]);
            c[n][k] = v > kSaturated ? kSaturated : static_cast<std::uint64_t>(v);
        }
    }
    return c[f][dim];
}

std::uint64_t total_subspaces(std::int64_t p, int f) {
    unsigned __int128 total = 0;
    for (int k = 0; k <= f; ++k) total += gaussian_binomial(p, f, k);
    return total > kSaturated ? kSaturated : static_cast<std::uint64_t>(total);
}

std::vector<std::vector<int>> pivot_column_sets(int f, int dim) {
    std::vector<std::vector<int>> out;
    if (dim < 0 || dim > f) return out;
    std::vector<int> c(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i) c[i] = i;
    for (;;) {
        out.push_back(c);
        if (dim == 0) break;
        int i = dim - 1;
        while (i >= 0 && c[i] == f - dim + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < dim; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

void EchelonState::reset(const FieldSpec& E, std::vector<int> pivots) {
    spec_ = &E;
    pivots_ = std::move(pivots);
    const int dim = static_cast<int>(pivots_.size());
    rows_.assign(static_cast<std::size_t>(dim), 0);
    free_pos_.clear();
    for (int r = 0; r < dim; ++r) {
        rows_[r] = static_cast<std::uint32_t>(E.radix_power(pivots_[r]));
        for (int col = pivots_[r] + 1; col < E.f(); ++col)
            if (!std::binary_search(pivots_.begin(), pivots_.end(), col)) free_pos_.emplace_back(r, col);
    }
    digits_.assign(free_pos_.size(), 0);
}

bool EchelonState::advance() {
    const FieldSpec& E = *spec_;
    const auto p = static_cast<std::int32_t>(E.p());
    for (std::size_t k = free_pos_.size(); k-- > 0;) {
        const auto [r, col] = free_pos_[k];
        const std::uint32_t place = static_cast<std::uint32_t>(E.radix_power(col));
        if (++digits_[k] < p) {
            rows_[r] += place;
            return true;
        }
        digits_[k] = 0;
        rows_[r] -= static_cast<std::uint32_t>(p - 1) * place;
    }
    return false;
}

SubgroupIterator::SubgroupIterator(std::shared_ptr<const FieldSpec> spec, int dim, const Budget& budget)
    : spec_(std::move(spec)), dim_(dim) {
    if (dim < 0 || dim > spec_->f())
        throw std::invalid_argument("enumerate_subspaces: dim out of range [0, f]");
    count_ = gaussian_binomial(spec_->p(), spec_->f(), dim);
    if (count_ > budget.max_subspaces)
        throw BudgetExceeded("enumerate_subspaces: " + std::to_string(count_) + " subspaces exceed budget " +
                             std::to_string(budget.max_subspaces));
    pivot_sets_ = pivot_column_sets(spec_->f(), dim);
}

SubgroupIterator SubgroupIterator::slice(std::size_t begin, std::size_t end) const {
    SubgroupIterator it(*this);
    end = std::min(end, pivot_sets_.size());
    begin = std::min(begin, end);
    it.pivot_sets_.assign(pivot_sets_.begin() + static_cast<std::ptrdiff_t>(begin),
                          pivot_sets_.begin() + static_cast<std::ptrdiff_t>(end));
    it.ps_index_ = 0;
    it.in_pivot_set_ = false;
    it.count_ = 0;  // count of a slice is not the full Gaussian binomial
    return it;
}

std::optional<AdditiveSubgroup> SubgroupIterator::next() {
    for (;;) {
        if (!in_pivot_set_) {
            if (ps_index_ >= pivot_sets_.size()) return std::nullopt;
            state_.reset(*spec_, pivot_sets_[ps_index_]);
            in_pivot_set_ = true;
            return AdditiveSubgroup::from_echelon(spec_, state_.rows(), state_.pivots());
        }
        if (state_.advance()) return AdditiveSubgroup::from_echelon(spec_, state_.rows(), state_.pivots());
        in_pivot_set_ = false;
        ++ps_index_;
    }
}

SubgroupIterator enumerate_subspaces(std::shared_ptr<const FieldSpec> spec, int dim, const Budget& budget) {
    return SubgroupIterator(std::move(spec), dim, budget);
}

}  // namespace invsub
