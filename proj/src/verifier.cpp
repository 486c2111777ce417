#include "invsub/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace invsub {

namespace {

std::string describe_subgroup(const AdditiveSubgroup& A) {
    std::ostringstream os;
    os << "GF(" << A.field().order() << ") dim " << A.dim() << " basis ";
    for (const auto& row : A.basis_coeffs()) {
        os << "[";
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "]";
    }
    return os.str();
}

std::string describe_packed(const FieldSpec& E, std::uint32_t x) {
    std::ostringstream os;
    const auto c = E.from_packed(x).coeffs();
    os << "[";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << "]";
    return os.str();
}

std::vector<std::uint32_t> sorted_packed(std::vector<std::uint32_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

const char* to_string(SubgroupKind k) {
    switch (k) {
        case SubgroupKind::kTrivial: return "Trivial";
        case SubgroupKind::kSubfield: return "Subfield";
        case SubgroupKind::kTraceZeroKernel: return "TraceZeroKernel";
        case SubgroupKind::kNotInverseClosed: return "NotInverseClosed";
    }
    return "?";
}

// -------------------------------------------------------------------------
// classify
// -------------------------------------------------------------------------

ClassificationResult classify(const AdditiveSubgroup& A, const Budget& budget) {
    if (A.dim() == 0) return {SubgroupKind::kTrivial, 0};
    if (!is_inverse_closed_direct(A, budget)) return {SubgroupKind::kNotInverseClosed, 0};

    const FieldSpec& E = A.field();
    const LinearizedPolynomial fa = subspace_polynomial(A, budget);
    const auto& q = fa.packed_qcoeffs();
    const int r = static_cast<int>(q.size()) - 1;  // = dim(A)

    bool binomial = q.back() == 1 && (q[0] == 1 || q[0] == E.packed_neg(1));
    for (int i = 1; binomial && i < r; ++i)
        if (q[static_cast<std::size_t>(i)] != 0) binomial = false;
    if (!binomial) {
        std::ostringstream os;
        os << "classification theorem falsified: subspace polynomial of " << describe_subgroup(A)
           << " is not a binomial x^(p^r) -+ x; qcoeffs:";
        for (std::uint32_t c : q) os << " " << describe_packed(E, c);
        throw TheoremViolation(os.str());
    }

    if (q[0] == E.packed_neg(1)) {
        // x^(p^r) - x  (in characteristic 2 this also covers x^(p^r) + x)
        if (E.f() % r != 0)
            throw TheoremViolation("subfield classification with r not dividing f for " + describe_subgroup(A));
        if (!is_subfield(A))
            throw TheoremViolation("binomial x^(p^r)-x but is_subfield fails for " + describe_subgroup(A));
        std::vector<std::uint32_t> fixed;
        for (const FieldElement& x : subfield_elements(E, r)) fixed.push_back(x.packed());
        if (sorted_packed(A.packed_elements(budget)) != fixed)
            throw TheoremViolation("subfield element-set mismatch for " + describe_subgroup(A));
        return {SubgroupKind::kSubfield, r};
    }

    // x^(p^r) + x with p odd: the trace-zero kernel of GF(p^{2r})/GF(p^r)
    AdditiveSubgroup K = [&] {
        try {
            return trace_zero_kernel(E, r);
        } catch (const std::invalid_argument& e) {
            throw TheoremViolation("binomial x^(p^r)+x but 2r does not divide f for " + describe_subgroup(A) +
                                   ": " + e.what());
        }
    }();
    if (sorted_packed(A.packed_elements(budget)) != sorted_packed(K.packed_elements(budget)))
        throw TheoremViolation("trace-zero kernel element-set mismatch for " + describe_subgroup(A));
    return {SubgroupKind::kTraceZeroKernel, r};
}

std::uint64_t predicted_count(std::int64_t p, int f) {
    if (!is_prime(p) || f < 1) throw std::invalid_argument("predicted_count: need prime p and f >= 1");
    auto divisors = [](int n) {
        std::uint64_t d = 0;
        for (int i = 1; i <= n; ++i)
            if (n % i == 0) ++d;
        return d;
    };
    std::uint64_t count = divisors(f);
    if (p != 2 && f % 2 == 0) count += divisors(f / 2);
    return count;
}

// -------------------------------------------------------------------------
// parallel driver
// -------------------------------------------------------------------------

void run_parallel(std::size_t num_tasks, int workers, const std::function<void(std::size_t)>& fn) {
    if (workers < 1) workers = 1;
    if (workers == 1 || num_tasks <= 1) {
        for (std::size_t i = 0; i < num_tasks; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto body = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= num_tasks || failed.load()) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    const int n = std::min<int>(workers, static_cast<int>(num_tasks));
    pool.reserve(static_cast<std::size_t>(n));
    for (int t = 0; t < n; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

// -------------------------------------------------------------------------
// verify_theorem_finite
// -------------------------------------------------------------------------

VerificationReport verify_theorem_finite(std::shared_ptr<const FieldSpec> spec, const Budget& budget, int workers) {
    const auto start = std::chrono::steady_clock::now();
    const FieldSpec& E = *spec;
    if (E.order() > budget.max_field_size)
        throw BudgetExceeded("verify: field order " + std::to_string(E.order()) + " exceeds budget " +
                             std::to_string(budget.max_field_size));
    const std::uint64_t total = total_subspaces(E.p(), E.f());
    if (total > budget.max_subspaces)
        throw BudgetExceeded("verify: " + std::to_string(total) + " subspaces exceed budget " +
                             std::to_string(budget.max_subspaces));

    // one task per (dimension, pivot column set)
    struct Task {
        int dim;
        std::vector<int> pivots;
    };
    std::vector<Task> tasks;
    for (int dim = 0; dim <= E.f(); ++dim)
        for (auto& ps : pivot_column_sets(E.f(), dim)) tasks.push_back({dim, std::move(ps)});

    struct TaskResult {
        std::uint64_t scanned = 0;
        std::vector<std::pair<std::vector<std::uint32_t>, std::vector<int>>> closed;
    };
    std::vector<TaskResult> results(tasks.size());

    run_parallel(tasks.size(), workers, [&](std::size_t i) {
        SubspaceScratch scratch;
        scratch.prepare(E);
        TaskResult& out = results[i];
        for_each_echelon(E, tasks[i].pivots, [&](const std::vector<std::uint32_t>& rows, const std::vector<int>& pivots) {
            ++out.scanned;
            if (inverse_closed_packed(E, rows, scratch)) out.closed.emplace_back(rows, pivots);
        });
    });

    VerificationReport report;
    report.spec = spec;
    report.predicted = predicted_count(E.p(), E.f());
    for (auto& res : results) {
        report.subspaces_scanned += res.scanned;
        for (auto& [rows, pivots] : res.closed) {
            AdditiveSubgroup A = AdditiveSubgroup::from_echelon(spec, std::move(rows), std::move(pivots));
            const ClassificationResult cls = classify(A, budget);
            if (cls.kind == SubgroupKind::kNotInverseClosed)
                throw std::logic_error("verify: direct filter and classifier disagree on closedness");
            if (!is_inverse_closed_poly(A, budget))
                report.violations.push_back(
                    {"dual_oracle_disagreement",
                     "direct test closed but polynomial test open: " + describe_subgroup(A)});
            report.inverse_closed.push_back({std::move(A), cls});
        }
    }
    std::sort(report.inverse_closed.begin(), report.inverse_closed.end(),
              [](const ClassifiedSubgroup& a, const ClassifiedSubgroup& b) { return a.subgroup < b.subgroup; });
    for (const auto& cs : report.inverse_closed)
        if (cs.result.kind != SubgroupKind::kTrivial) ++report.found;
    if (report.subspaces_scanned != total)
        report.violations.push_back({"enumeration_mismatch",
                                     "scanned " + std::to_string(report.subspaces_scanned) + " subspaces, Gaussian binomial total is " +
                                         std::to_string(total)});
    if (report.found != report.predicted)
        report.violations.push_back({"census_mismatch", "found " + std::to_string(report.found) +
                                                            " non-trivial inverse-closed subgroups, predicted " +
                                                            std::to_string(report.predicted)});
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// -------------------------------------------------------------------------
// Hua identity
// -------------------------------------------------------------------------

HuaOutcome hua_check_packed(const FieldSpec& E, std::uint32_t a, std::uint32_t b) {
    if (a == 0 || b == 0) return HuaOutcome::kDegenerate;
    if (E.packed_mul(a, b) == 1) return HuaOutcome::kDegenerate;
    const std::uint32_t binv = E.packed_inv(b);
    if (binv == a) return HuaOutcome::kDegenerate;  // same condition as ab = 1, stated explicitly
    const std::uint32_t inner = E.packed_inv(E.packed_sub(binv, a));
    const std::uint32_t lhs = E.packed_sub(a, E.packed_inv(E.packed_add(E.packed_inv(a), inner)));
    const std::uint32_t rhs = E.packed_mul(E.packed_mul(a, b), a);
    return lhs == rhs ? HuaOutcome::kHolds : HuaOutcome::kViolated;
}

HuaOutcome hua_check(const FieldElement& a, const FieldElement& b) {
    require_same_field(a, b);
    return hua_check_packed(a.field(), a.packed(), b.packed());
}

HuaOutcome hua_check(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) return HuaOutcome::kDegenerate;
    if (a * b == Rational(1)) return HuaOutcome::kDegenerate;
    const Rational binv = b.inverse();
    if (binv == a) return HuaOutcome::kDegenerate;
    const Rational inner = (binv - a).inverse();
    const Rational lhs = a - (a.inverse() + inner).inverse();
    const Rational rhs = a * b * a;
    return lhs == rhs ? HuaOutcome::kHolds : HuaOutcome::kViolated;
}

HuaTally hua_exhaustive(const FieldSpec& E) {
    HuaTally t;
    for (std::uint32_t a = 0; a < E.order(); ++a) {
        for (std::uint32_t b = 0; b < E.order(); ++b) {
            ++t.scanned;
            switch (hua_check_packed(E, a, b)) {
                case HuaOutcome::kHolds: ++t.holds; break;
                case HuaOutcome::kDegenerate: ++t.degenerate; break;
                case HuaOutcome::kViolated: ++t.violated; break;
            }
        }
    }
    return t;
}

HuaTally hua_random_rationals(std::uint64_t trials, std::uint64_t seed) {
    HuaTally t;
    std::mt19937_64 rng(seed);
    // raw engine draws, reduced by hand so the stream is identical everywhere
    auto draw = [&rng](std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    for (std::uint64_t i = 0; i < trials; ++i) {
        const Rational a(draw(-1000000, 1000000), draw(1, 1000000));
        const Rational b(draw(-1000000, 1000000), draw(1, 1000000));
        ++t.scanned;
        switch (hua_check(a, b)) {
            case HuaOutcome::kHolds: ++t.holds; break;
            case HuaOutcome::kDegenerate: ++t.degenerate; break;
            case HuaOutcome::kViolated: ++t.violated; break;
        }
    }
    return t;
}

// -------------------------------------------------------------------------
// Lemma suite
// -------------------------------------------------------------------------

LemmaReport lemma_check(const AdditiveSubgroup& A, const Budget& budget) {
    if (!is_inverse_closed_direct(A, budget))
        throw std::invalid_argument("lemma_check: subgroup is not inverse-closed");
    const FieldSpec& E = A.field();
    const std::vector<std::uint32_t> elems = A.packed_elements(budget);
    std::vector<std::uint64_t> member((E.order() + 63) / 64, 0);
    for (std::uint32_t e : elems) member[e >> 6] |= std::uint64_t{1} << (e & 63);
    auto in_A = [&member](std::uint32_t x) { return ((member[x >> 6] >> (x & 63)) & 1) != 0; };

    LemmaReport rep;
    const bool odd = E.p() != 2;
    std::vector<std::uint32_t> sq_b(E.order());  // sq_b[x] = x^2 * b for the current b
    for (std::uint32_t b : elems) {
        for (std::uint32_t x : elems) sq_b[x] = E.packed_mul(E.packed_mul(x, x), b);
        for (std::uint32_t a : elems) {
            if (!in_A(sq_b[a])) {
                rep.ok = false;
                rep.violation = "a^2 b not in A for a = " + describe_packed(E, a) + ", b = " + describe_packed(E, b);
                return rep;
            }
        }
        if (!odd) continue;
        for (std::uint32_t a : elems) {
            const std::uint32_t ab = E.packed_mul(a, b);
            for (std::uint32_t c : elems) {
                const std::uint32_t abc = E.packed_mul(ab, c);
                // polarization route: 2abc = (a+c)^2 b - a^2 b - c^2 b
                const std::uint32_t rhs =
                    E.packed_sub(E.packed_sub(sq_b[E.packed_add(a, c)], sq_b[a]), sq_b[c]);
                if (rhs != E.packed_add(abc, abc)) {
                    rep.ok = false;
                    rep.violation = "polarization identity broken at a = " + describe_packed(E, a) +
                                    ", b = " + describe_packed(E, b) + ", c = " + describe_packed(E, c);
                    return rep;
                }
                if (!in_A(abc)) {
                    rep.ok = false;
                    rep.violation = "abc not in A for a = " + describe_packed(E, a) + ", b = " + describe_packed(E, b) +
                                    ", c = " + describe_packed(E, c);
                    return rep;
                }
            }
        }
    }
    return rep;
}

// -------------------------------------------------------------------------
// Structure checks
// -------------------------------------------------------------------------

bool product_set_subfield_check(const AdditiveSubgroup& A, const Budget& budget) {
    const FieldSpec& E = A.field();
    if (E.p() == 2) throw std::invalid_argument("product_set_subfield_check: requires odd characteristic");
    if (A.dim() == 0) throw std::invalid_argument("product_set_subfield_check: requires a non-trivial subgroup");
    if (!is_inverse_closed_direct(A, budget))
        throw std::invalid_argument("product_set_subfield_check: subgroup is not inverse-closed");

    const std::vector<std::uint32_t> elems = A.packed_elements(budget);

    // literal product set {ab}
    std::vector<std::uint64_t> seen((E.order() + 63) / 64, 0);
    std::vector<std::uint32_t> products;
    for (std::uint32_t a : elems)
        for (std::uint32_t b : elems) {
            const std::uint32_t ab = E.packed_mul(a, b);
            if (!((seen[ab >> 6] >> (ab & 63)) & 1)) {
                seen[ab >> 6] |= std::uint64_t{1} << (ab & 63);
                products.push_back(ab);
            }
        }
    std::sort(products.begin(), products.end());

    const AdditiveSubgroup K = product_set_span(A, budget);
    if (sorted_packed(K.packed_elements(budget)) != products) return false;  // {ab} not already a subgroup
    if (!is_subfield(K)) return false;

    // A = K a for the first nonzero element a of A, and a^2 in K
    const std::uint32_t a0 = elems[1];
    std::vector<std::uint32_t> Ka;
    Ka.reserve(products.size());
    for (std::uint32_t k : products) Ka.push_back(E.packed_mul(k, a0));
    std::sort(Ka.begin(), Ka.end());
    if (Ka != sorted_packed(elems)) return false;
    return K.contains_packed(E.packed_mul(a0, a0));
}

bool char2_theorem_check(const AdditiveSubgroup& A, const Budget& budget) {
    const FieldSpec& E = A.field();
    if (E.p() != 2) throw std::invalid_argument("char2_theorem_check: requires characteristic 2");
    if (!is_inverse_closed_direct(A, budget))
        throw std::invalid_argument("char2_theorem_check: subgroup is not inverse-closed");

    const AdditiveSubgroup F = generated_subfield(E, A.elements(budget), budget);
    for (std::uint32_t a : A.packed_elements(budget))
        if (!F.contains_packed(a)) return false;
    for (std::uint32_t s : F.packed_elements(budget))
        for (std::uint32_t a : A.packed_elements(budget))
            if (!A.contains_packed(E.packed_mul(s, a))) return false;
    return true;
}

bool char0_scalar_identity_check(const Rational& a, std::int64_t m, std::int64_t n) {
    if (a.is_zero()) throw std::invalid_argument("char0_scalar_identity_check: a must be nonzero");
    if (n == 0) throw std::invalid_argument("char0_scalar_identity_check: n must be nonzero");
    const Rational lhs = Rational(m, n) * a;
    const Rational rhs = Rational(m) * (Rational(n) * a.inverse()).inverse();
    return lhs == rhs;
}

// -------------------------------------------------------------------------
// Characteristic-2 counterexample
// -------------------------------------------------------------------------

SquareFreeMonomialAlgebra::SquareFreeMonomialAlgebra(int num_vars) : n_(num_vars) {
    if (num_vars < 1 || num_vars > 31)
        throw std::invalid_argument("SquareFreeMonomialAlgebra: variable count out of range");
}

std::uint32_t SquareFreeMonomialAlgebra::variable(int i) const {
    if (i < 0 || i >= n_) throw std::invalid_argument("SquareFreeMonomialAlgebra: no such variable");
    return std::uint32_t{1} << i;
}

std::vector<std::uint32_t> SquareFreeMonomialAlgebra::pairwise_product_monomials(
    const std::vector<std::uint32_t>& generators) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t a : generators)
        for (std::uint32_t b : generators) out.push_back(mul_monomials(a, b));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int square_free_product_span_dimension(int n) {
    SquareFreeMonomialAlgebra alg(n);
    std::vector<std::uint32_t> gens;
    gens.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) gens.push_back(alg.variable(i));
    return static_cast<int>(alg.pairwise_product_monomials(gens).size());
}

int char2_counterexample_dimension() {
    const int dim = square_free_product_span_dimension(4);
    // an intermediate field of E/E^2 would have 2-power dimension over E^2
    const bool power_of_two = dim > 0 && (dim & (dim - 1)) == 0;
    if (power_of_two)
        throw std::logic_error("char2_counterexample_dimension: span dimension unexpectedly a power of two");
    return dim;
}

}  // namespace invsub
