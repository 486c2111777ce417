#ifndef INVSUB_VERIFIER_HPP
#define INVSUB_VERIFIER_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "invsub/common.hpp"
#include "invsub/field.hpp"
#include "invsub/rational.hpp"
#include "invsub/subgroup.hpp"

namespace invsub {

// -------------------------------------------------------------------------
// Classification (finite-field theorem)
// -------------------------------------------------------------------------

enum class SubgroupKind { kTrivial, kSubfield, kTraceZeroKernel, kNotInverseClosed };

const char* to_string(SubgroupKind k);

struct ClassificationResult {
    SubgroupKind kind;
    int r = 0;  // Subfield(r): r | f; TraceZeroKernel(r): 2r | f

    friend bool operator==(const ClassificationResult& a, const ClassificationResult& b) {
        return a.kind == b.kind && a.r == b.r;
    }
};

/// Classifies A by its subspace polynomial. Every inverse-closed subgroup
/// must produce a binomial x^(p^r) -+ x; anything else throws
/// TheoremViolation (that would falsify the classification theorem, so it
/// aborts loudly instead of returning a value). In characteristic 2 the
/// minus and plus binomials coincide and the verdict is always Subfield.
/// Each verdict is cross-checked against the explicitly constructed subgroup
/// (subfield fixed points resp. trace-zero kernel).
ClassificationResult classify(const AdditiveSubgroup& A, const Budget& budget = {});

/// Derived census formula: #divisors(f) subfields plus, for p odd and f
/// even, #divisors(f/2) trace-zero kernels (disjoint families since a
/// kernel never contains 1). Validated against exhaustive enumeration,
/// never trusted alone.
std::uint64_t predicted_count(std::int64_t p, int f);

// -------------------------------------------------------------------------
// Exhaustive verification sweep
// -------------------------------------------------------------------------

struct ClassifiedSubgroup {
    AdditiveSubgroup subgroup;
    ClassificationResult result;
};

struct Violation {
    std::string kind;
    std::string detail;
};

struct VerificationReport {
    std::shared_ptr<const FieldSpec> spec;
    std::uint64_t subspaces_scanned = 0;
    std::uint64_t predicted = 0;
    std::uint64_t found = 0;  // non-trivial inverse-closed subgroups
    std::vector<ClassifiedSubgroup> inverse_closed;  // canonical order, trivial included
    std::vector<Violation> violations;
    double wall_seconds = 0;  // diagnostic only, never serialized

    bool ok() const { return violations.empty(); }
};

/// Enumerates every subspace of every dimension, filters by the direct
/// inverse-closedness test, classifies the survivors and cross-validates
/// them with the polynomial test, then compares the census against
/// predicted_count. The enumeration is partitioned by pivot column set
/// across `workers` threads; the merged report is deterministic and
/// independent of the worker count.
VerificationReport verify_theorem_finite(std::shared_ptr<const FieldSpec> spec, const Budget& budget = {},
                                         int workers = 1);

/// Runs fn(task_index) for every index in [0, num_tasks), distributing
/// indices over `workers` threads. Exceptions are rethrown on the caller.
void run_parallel(std::size_t num_tasks, int workers, const std::function<void(std::size_t)>& fn);

// -------------------------------------------------------------------------
// Identity suites
// -------------------------------------------------------------------------

enum class HuaOutcome { kHolds, kDegenerate, kViolated };

/// Evaluates a - (a^-1 + (b^-1 - a)^-1)^-1 == a*b*a by the literal chain of
/// inversions. Inputs with a = 0, b = 0, ab = 1 or b^-1 = a are reported as
/// degenerate, not failures (the last two conditions coincide in a field but
/// are both checked explicitly).
HuaOutcome hua_check(const FieldElement& a, const FieldElement& b);
HuaOutcome hua_check(const Rational& a, const Rational& b);
HuaOutcome hua_check_packed(const FieldSpec& E, std::uint32_t a, std::uint32_t b);

struct HuaTally {
    std::uint64_t scanned = 0;
    std::uint64_t holds = 0;
    std::uint64_t degenerate = 0;
    std::uint64_t violated = 0;
};

/// All q^2 ordered pairs of E.
HuaTally hua_exhaustive(const FieldSpec& E);
/// Seeded random rational pairs (numerators and denominators up to 10^6).
HuaTally hua_random_rationals(std::uint64_t trials, std::uint64_t seed);

struct LemmaReport {
    bool ok = true;
    std::string violation;  // first violating tuple, empty when ok
};

/// For inverse-closed A: a^2 b in A for all pairs; for p odd additionally
/// abc in A for all triples, with abc independently re-derived through the
/// polarization identity 2abc = (a+c)^2 b - a^2 b - c^2 b and the two routes
/// checked for agreement. Throws std::invalid_argument when A is not
/// inverse-closed.
LemmaReport lemma_check(const AdditiveSubgroup& A, const Budget& budget = {});

// -------------------------------------------------------------------------
// Structure checks from the odd- and even-characteristic theorems
// -------------------------------------------------------------------------

/// For p odd and A inverse-closed non-trivial: the literal product set
/// K = {ab | a, b in A} equals its span and is a subfield, and for the first
/// nonzero a in A, A = K*a with a^2 in K.
bool product_set_subfield_check(const AdditiveSubgroup& A, const Budget& budget = {});

/// For p = 2 and A inverse-closed: with F the subfield generated by A,
/// A is contained in F and is an F-subspace (F^2 = F in a finite field).
bool char2_theorem_check(const AdditiveSubgroup& A, const Budget& budget = {});

/// Exact rational identity (m n^-1) a == m (n a^-1)^-1 for a != 0, n != 0.
bool char0_scalar_identity_check(const Rational& a, std::int64_t m, std::int64_t n);

// -------------------------------------------------------------------------
// Characteristic-2 counterexample (symbolic)
// -------------------------------------------------------------------------

/// Square-free monomials in F_2(u_1, ..., u_n) modulo squares: a monomial is
/// an n-bit exponent vector, and the even part of any product is absorbed
/// into its (implicit) coefficient from the subfield of squares. Monomials
/// with distinct exponent vectors are independent over that subfield, so
/// span dimensions reduce to counting distinct vectors.
class SquareFreeMonomialAlgebra {
  public:
    explicit SquareFreeMonomialAlgebra(int num_vars);

    int num_vars() const { return n_; }
    std::uint32_t variable(int i) const;  // u_{i+1}, 0 <= i < n
    std::uint32_t mul_monomials(std::uint32_t a, std::uint32_t b) const { return a ^ b; }

    /// Distinct square-free monomials among all pairwise products of the
    /// generators, sorted; its size is the span dimension over squares.
    std::vector<std::uint32_t> pairwise_product_monomials(const std::vector<std::uint32_t>& generators) const;

  private:
    int n_;
};

/// Span dimension of {g_i g_j} for generators u_1, ..., u_n.
int square_free_product_span_dimension(int n);

/// The n = 4 case: 1 + C(4,2) = 7, and 7 is checked not to be a power of
/// two (so the product span cannot be an intermediate field).
int char2_counterexample_dimension();

}  // namespace invsub

#endif
