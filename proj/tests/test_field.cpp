#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "invsub/field.hpp"
#include "invsub/rational.hpp"

using namespace invsub;

namespace {

// ----------------------------------------------------------------------
// Independent Z_p[x] oracle: naive trial division, no shared code with the
// library's Rabin test.
// ----------------------------------------------------------------------

std::vector<std::int64_t> oracle_poly_mul(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
                                          std::int64_t p) {
    std::vector<std::int64_t> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    return out;
}

// every monic polynomial of degree d over Z_p, in no particular order
std::vector<std::vector<std::int64_t>> all_monic(std::int64_t p, int d) {
    std::vector<std::vector<std::int64_t>> out;
    std::uint64_t total = 1;
    for (int i = 0; i < d; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t k = 0; k < total; ++k) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
        c[static_cast<std::size_t>(d)] = 1;
        std::uint64_t v = k;
        for (int i = 0; i < d; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        out.push_back(std::move(c));
    }
    return out;
}

bool oracle_irreducible(const std::vector<std::int64_t>& g, std::int64_t p) {
    const int f = static_cast<int>(g.size()) - 1;
    for (int d = 1; d <= f / 2; ++d)
        for (const auto& a : all_monic(p, d))
            for (const auto& b : all_monic(p, f - d))
                if (oracle_poly_mul(a, b, p) == g) return false;
    return true;
}

// candidates in the library's tie order: by (c_{f-1}, ..., c_0)
std::vector<std::int64_t> oracle_smallest_irreducible(std::int64_t p, int f) {
    std::uint64_t total = 1;
    for (int i = 0; i < f; ++i) total *= static_cast<std::uint64_t>(p);
    for (std::uint64_t k = 0; k < total; ++k) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(f) + 1, 0);
        c[static_cast<std::size_t>(f)] = 1;
        std::uint64_t v = k;
        for (int i = 0; i < f; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(v % static_cast<std::uint64_t>(p));
            v /= static_cast<std::uint64_t>(p);
        }
        if (oracle_irreducible(c, p)) return c;
    }
    return {};
}

FieldElement random_element(const FieldSpec& E, std::mt19937_64& rng) {
    return E.from_packed(static_cast<std::uint32_t>(rng() % E.order()));
}

}  // namespace

TEST_CASE("find_irreducible: degree 1 is x itself") {
    CHECK(find_irreducible(2, 1) == std::vector<std::int64_t>{0, 1});
    CHECK(find_irreducible(509, 1) == std::vector<std::int64_t>{0, 1});
}

TEST_CASE("find_irreducible: GF(8) candidate set and deterministic pick") {
    // cubics over GF(2) are irreducible iff they have no root in GF(2)
    std::set<std::vector<std::int64_t>> irreducible_cubics;
    for (const auto& c : all_monic(2, 3)) {
        const std::int64_t at0 = c[0] % 2;
        const std::int64_t at1 = (c[0] + c[1] + c[2] + c[3]) % 2;
        if (at0 != 0 && at1 != 0) irreducible_cubics.insert(c);
    }
    CHECK(irreducible_cubics == std::set<std::vector<std::int64_t>>{{1, 1, 0, 1}, {1, 0, 1, 1}});
    // the lexicographic rule (compare c2, then c1, then c0) picks x^3 + x + 1
    CHECK(find_irreducible(2, 3) == std::vector<std::int64_t>{1, 1, 0, 1});
}

TEST_CASE("find_irreducible: GF(9) via brute-force root check") {
    const auto mod = find_irreducible(3, 2);
    bool has_root = false;
    for (std::int64_t x = 0; x < 3; ++x)
        if ((mod[0] + mod[1] * x + mod[2] * x * x) % 3 == 0) has_root = true;
    CHECK_FALSE(has_root);
    CHECK(mod == std::vector<std::int64_t>{1, 0, 1});  // x^2 + 1
}

TEST_CASE("find_irreducible: matches the naive oracle across small fields") {
    for (auto [p, f] : {std::pair<std::int64_t, int>{2, 2}, {2, 4}, {2, 5}, {2, 6}, {3, 3}, {3, 4}, {5, 2}, {7, 2}}) {
        CAPTURE(p);
        CAPTURE(f);
        CHECK(find_irreducible(p, f) == oracle_smallest_irreducible(p, f));
    }
}

TEST_CASE("find_irreducible rejects non-prime p") {
    CHECK_THROWS_AS(find_irreducible(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(find_irreducible(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(FieldSpec::make(6, 2), std::invalid_argument);
}

TEST_CASE("FieldSpec rejects reducible moduli") {
    CHECK_THROWS_AS(FieldSpec::make(2, std::vector<std::int64_t>{1, 0, 1}), std::invalid_argument);  // (x+1)^2
    CHECK_NOTHROW(FieldSpec::make(2, std::vector<std::int64_t>{1, 1, 1}));
}

TEST_CASE("addition examples") {
    auto F7 = FieldSpec::make(7, 1);
    CHECK(F7->from_int(3) + F7->from_int(5) == F7->from_int(1));
    auto F8 = FieldSpec::make(2, 3);
    for (std::uint32_t i = 0; i < 8; ++i) {
        const auto a = F8->from_packed(i);
        CHECK(a + F8->zero() == a);
        CHECK(a + a == F8->zero());  // characteristic two
    }
}

TEST_CASE("multiplication in GF(8) with modulus x^3+x+1") {
    auto F8 = FieldSpec::make(2, 3);
    REQUIRE(F8->modulus() == std::vector<std::int64_t>{1, 1, 0, 1});
    const auto x = F8->element({0, 1, 0});
    const auto x2 = F8->element({0, 0, 1});
    CHECK(x * x2 == F8->element({1, 1, 0}));  // x^3 = x + 1
    for (std::uint32_t i = 0; i < 8; ++i) CHECK(F8->from_packed(i) * F8->one() == F8->from_packed(i));
}

TEST_CASE("inverses match a brute-force search") {
    auto F7 = FieldSpec::make(7, 1);
    // oracle: scan for 3x = 1 mod 7
    std::int64_t found = 0;
    for (std::int64_t x = 1; x < 7; ++x)
        if (3 * x % 7 == 1) found = x;
    CHECK(found == 5);
    CHECK(F7->from_int(3).inverse() == F7->from_int(5));
    CHECK(F7->one().inverse() == F7->one());

    auto F8 = FieldSpec::make(2, 3);
    const auto x = F8->element({0, 1, 0});
    // oracle: scan all 7 nonzero elements
    for (std::uint32_t c = 1; c < 8; ++c)
        if ((x * F8->from_packed(c)).is_one()) CHECK(F8->from_packed(c) == F8->element({1, 0, 1}));
    CHECK(x.inverse() == F8->element({1, 0, 1}));
    CHECK_THROWS_AS(F8->zero().inverse(), std::invalid_argument);
}

TEST_CASE("frobenius basics") {
    auto F9 = FieldSpec::make(3, 2);
    for (std::uint32_t i = 0; i < 9; ++i) {
        const auto a = F9->from_packed(i);
        CHECK(a.frobenius(0) == a);
        CHECK(a.frobenius(2) == a);  // order divides f
        CHECK(a.frobenius(1) == a * a * a);
    }
    auto F4 = FieldSpec::make(2, 2);
    const auto omega = F4->element({0, 1});
    CHECK(omega.frobenius(1) == F4->element({1, 1}));  // omega^2 = omega + 1
    CHECK_THROWS_AS(omega.frobenius(-1), std::invalid_argument);
}

TEST_CASE("frobenius is a field automorphism on random pairs") {
    for (auto [p, f] : {std::pair<std::int64_t, int>{2, 6}, {3, 4}, {5, 3}}) {
        auto E = FieldSpec::make(p, f);
        std::mt19937_64 rng(7);
        for (int t = 0; t < 2000; ++t) {
            const auto a = random_element(*E, rng);
            const auto b = random_element(*E, rng);
            const int i = static_cast<int>(rng() % 5);
            CHECK((a + b).frobenius(i) == a.frobenius(i) + b.frobenius(i));
            CHECK((a * b).frobenius(i) == a.frobenius(i) * b.frobenius(i));
        }
    }
}

TEST_CASE("subfield_elements: whole field, prime field, GF(16)/GF(4)") {
    auto F16 = FieldSpec::make(2, 4);
    CHECK(subfield_elements(*F16, 4).size() == 16);
    const auto prime = subfield_elements(*F16, 1);
    REQUIRE(prime.size() == 2);
    CHECK(prime[0] == F16->zero());
    CHECK(prime[1] == F16->one());

    // oracle: x^4 = x scan
    std::set<std::uint32_t> fixed;
    for (std::uint32_t x = 0; x < 16; ++x) {
        auto e = F16->from_packed(x);
        if (e * e * e * e == e) fixed.insert(x);
    }
    const auto sub = subfield_elements(*F16, 2);
    REQUIRE(sub.size() == 4);
    std::set<std::uint32_t> got;
    for (const auto& e : sub) got.insert(e.packed());
    CHECK(got == fixed);
    for (const auto& a : sub)
        for (const auto& b : sub) CHECK(got.count((a * b).packed()) == 1);

    CHECK_THROWS_AS(subfield_elements(*F16, 3), std::invalid_argument);
}

TEST_CASE("subfield lattice: r | s | f gives containment") {
    for (auto [p, f] : {std::pair<std::int64_t, int>{2, 6}, {3, 4}, {2, 8}}) {
        auto E = FieldSpec::make(p, f);
        for (int r = 1; r <= f; ++r) {
            if (f % r) continue;
            std::size_t pr = 1;
            for (int i = 0; i < r; ++i) pr *= static_cast<std::size_t>(p);
            std::set<std::uint32_t> small;
            for (const auto& e : subfield_elements(*E, r)) small.insert(e.packed());
            CHECK(small.size() == pr);
            for (int s = r; s <= f; ++s) {
                if (s % r || f % s) continue;
                std::set<std::uint32_t> big;
                for (const auto& e : subfield_elements(*E, s)) big.insert(e.packed());
                CHECK(std::includes(big.begin(), big.end(), small.begin(), small.end()));
            }
        }
    }
}

TEST_CASE("quadratic_trace: prime-field inputs and GF(9) census") {
    auto F9 = FieldSpec::make(3, 2);
    for (const auto& x : subfield_elements(*F9, 1)) CHECK(quadratic_trace(x, 1) == x + x);

    // oracle: enumerate all 9 elements, compute x + x^3
    int zeros = 0;
    for (std::uint32_t i = 0; i < 9; ++i) {
        const auto x = F9->from_packed(i);
        const auto t = quadratic_trace(x, 1);
        const auto direct = x + x * x * x;
        CHECK(t == direct);
        CHECK(t.coeffs()[1] == 0);  // lands in GF(3)
        if (t.is_zero()) ++zeros;
    }
    CHECK(zeros == 3);

    auto F4 = FieldSpec::make(2, 2);
    for (const auto& x : subfield_elements(*F4, 1)) CHECK(quadratic_trace(x, 1).is_zero());

    CHECK_THROWS_AS(quadratic_trace(F9->one(), 2), std::invalid_argument);
    auto F16 = FieldSpec::make(2, 4);
    // an element outside GF(4) is rejected for r = 1
    const auto gen = F16->element({0, 1, 0, 0});
    CHECK_THROWS_AS(quadratic_trace(gen, 1), std::invalid_argument);
}

TEST_CASE("quadratic_trace is additive, surjective, with kernel of size p^r") {
    for (auto [p, f, r] : {std::tuple<std::int64_t, int, int>{3, 2, 1}, {3, 4, 2}, {5, 2, 1}, {2, 4, 2}, {7, 2, 1}}) {
        auto E = FieldSpec::make(p, f);
        const auto domain = subfield_elements(*E, 2 * r);
        std::set<std::uint32_t> image, kernel, target;
        for (const auto& x : subfield_elements(*E, r)) target.insert(x.packed());
        for (const auto& x : domain) {
            const auto t = quadratic_trace(x, r);
            image.insert(t.packed());
            if (t.is_zero()) kernel.insert(x.packed());
            for (const auto& y : domain) CHECK(quadratic_trace(x + y, r) == quadratic_trace(x, r) + quadratic_trace(y, r));
        }
        CHECK(image == target);
        CHECK(kernel.size() == target.size());  // both p^r
    }
}

TEST_CASE("field axioms hold on 10^4 random samples per field") {
    for (auto [p, f] : {std::pair<std::int64_t, int>{2, 1}, {2, 3}, {3, 2}, {7, 2}, {3, 5}}) {
        auto E = FieldSpec::make(p, f);
        std::mt19937_64 rng(42);
        for (int t = 0; t < 10000; ++t) {
            const auto a = random_element(*E, rng);
            const auto b = random_element(*E, rng);
            const auto c = random_element(*E, rng);
            if ((a * b) * c != a * (b * c)) FAIL("associativity");
            if (a * b != b * a) FAIL("commutativity");
            if (a + b != b + a) FAIL("additive commutativity");
            if (a * (b + c) != a * b + a * c) FAIL("distributivity");
            if (a - a != E->zero()) FAIL("subtraction");
            if (!a.is_zero() && a * a.inverse() != E->one()) FAIL("inverse");
        }
    }
}

TEST_CASE("packed engine matches element operations") {
    auto E = FieldSpec::make(5, 3);
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        const auto a = random_element(*E, rng);
        const auto b = random_element(*E, rng);
        CHECK(E->packed_add(a.packed(), b.packed()) == (a + b).packed());
        CHECK(E->packed_sub(a.packed(), b.packed()) == (a - b).packed());
        CHECK(E->packed_mul(a.packed(), b.packed()) == (a * b).packed());
        CHECK(E->packed_neg(a.packed()) == (-a).packed());
    }
}

TEST_CASE("coefficients round-trip and are reduced mod p") {
    auto E = FieldSpec::make(3, 2);
    const auto e = E->element({5, -1});  // reduces to (2, 2)
    CHECK(e.coeffs() == std::vector<std::int64_t>{2, 2});
    CHECK(E->element(e.coeffs()) == e);
}

TEST_CASE("elements of different fields do not mix") {
    auto F9a = FieldSpec::make(3, 2);                                    // x^2 + 1
    auto F9b = FieldSpec::make(3, std::vector<std::int64_t>{2, 2, 1});   // x^2 + 2x + 2
    auto F8 = FieldSpec::make(2, 3);
    CHECK_THROWS_AS(F9a->one() + F8->one(), std::invalid_argument);
    CHECK_THROWS_AS(F9a->one() * F9b->one(), std::invalid_argument);
    CHECK(F9a->one() != F9b->one());
    // equal field specs built twice interoperate
    auto F9c = FieldSpec::make(3, 2);
    CHECK(F9a->one() == F9c->one());
    CHECK((F9a->one() + F9c->one()).coeffs() == std::vector<std::int64_t>{2, 0});
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-2, 4) == Rational(-1, 2));
    CHECK(Rational(-2, 4).denominator() == 2);
    CHECK(Rational(-2, 4).numerator() == -1);
    CHECK(Rational(2, -4).denominator() == 2);  // sign normalized into the numerator
    CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
    CHECK(-Rational(1, 2) + Rational(1, 2) == Rational(0));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(Rational(0).inverse(), std::invalid_argument);

    std::mt19937_64 rng(3);
    for (int t = 0; t < 1000; ++t) {
        const auto num = static_cast<std::int64_t>(rng() % 2001) - 1000;
        const auto den = static_cast<std::int64_t>(rng() % 1000) + 1;
        const Rational q(num, den);
        if (!q.is_zero()) CHECK(q.inverse().inverse() == q);
        CHECK(q - q == Rational(0));
    }
}
