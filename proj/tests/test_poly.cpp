#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "invsub/field.hpp"
#include "invsub/poly.hpp"
#include "invsub/rational.hpp"

using namespace invsub;

namespace {

DensePoly<Rational> qpoly(std::initializer_list<long long> coeffs) {
    std::vector<Rational> v;
    for (long long c : coeffs) v.emplace_back(c);
    return DensePoly<Rational>(std::move(v));
}

DensePoly<FieldElement> fpoly(const std::shared_ptr<const FieldSpec>& E, std::initializer_list<std::int64_t> coeffs) {
    std::vector<FieldElement> v;
    for (std::int64_t c : coeffs) v.push_back(E->from_int(c));
    return DensePoly<FieldElement>(std::move(v));
}

std::set<std::uint32_t> roots_in_field(const FieldSpec& E, const DensePoly<FieldElement>& f) {
    std::set<std::uint32_t> out;
    for (std::uint32_t x = 0; x < E.order(); ++x)
        if (f.evaluate(E.from_packed(x)).is_zero()) out.insert(x);
    return out;
}

DensePoly<FieldElement> poly_from_roots(const FieldSpec& E, const std::set<std::uint32_t>& roots) {
    DensePoly<FieldElement> f(std::vector<FieldElement>{E.one()});
    for (std::uint32_t r : roots) {
        DensePoly<FieldElement> lin(std::vector<FieldElement>{-E.from_packed(r), E.one()});
        f = f * lin;
    }
    return f;
}

}  // namespace

TEST_CASE("reciprocal over the rationals") {
    const auto f = qpoly({2, 3, 1});       // x^2 + 3x + 2 = (x+1)(x+2)
    const auto r = reciprocal(f);
    CHECK(r == qpoly({1, 3, 2}));          // 2x^2 + 3x + 1
    // roots -1, -2 map to -1, -1/2
    CHECK(f.evaluate(Rational(-1)) == Rational(0));
    CHECK(f.evaluate(Rational(-2)) == Rational(0));
    CHECK(r.evaluate(Rational(-1)) == Rational(0));
    CHECK(r.evaluate(Rational(-1, 2)) == Rational(0));

    const auto palindrome = qpoly({1, 1, 1});
    CHECK(reciprocal(palindrome) == palindrome);
    CHECK(reciprocal(reciprocal(f)) == f);

    CHECK_THROWS_AS(reciprocal(qpoly({0, 1, 1})), std::invalid_argument);  // zero constant term
    CHECK_THROWS_AS(reciprocal(DensePoly<Rational>()), std::invalid_argument);
}

TEST_CASE("is_self_reciprocal") {
    CHECK(is_self_reciprocal(qpoly({1, 0, 1})));  // x^2 + 1
    CHECK_THROWS_AS(is_self_reciprocal(qpoly({0, 1, 1})), std::invalid_argument);  // x^2 + x

    auto F3 = FieldSpec::make(3, 1);
    // x^2 + 2 over GF(3): reciprocal is 2x^2 + 1 = 2 (x^2 + 2), so lambda = 2
    CHECK(is_self_reciprocal(fpoly(F3, {2, 0, 1})));
    CHECK(fpoly(F3, {2, 0, 1}).coeff(2) * fpoly(F3, {2, 0, 1}).coeff(0).inverse() == F3->from_int(2));
    // a non-example: x^2 + x + 2 reversed is 2x^2 + x + 1, not a scalar multiple
    CHECK_FALSE(is_self_reciprocal(fpoly(F3, {2, 1, 1})));
}

TEST_CASE("linearized_to_dense") {
    auto F3 = FieldSpec::make(3, 1);
    const auto L = LinearizedPolynomial(F3, {F3->from_int(0), F3->from_int(1)});
    const auto d = L.to_dense();
    CHECK(d.degree() == 3);
    CHECK(d == fpoly(F3, {0, 0, 0, 1}));  // x^3

    auto F5 = FieldSpec::make(5, 1);
    const auto L2 = LinearizedPolynomial(F5, {F5->from_int(-1), F5->from_int(0), F5->from_int(1)});
    const auto d2 = L2.to_dense();
    CHECK(d2.degree() == 25);
    CHECK(d2.coeff(25) == F5->one());
    CHECK(d2.coeff(1) == F5->from_int(4));
    for (std::size_t i = 0; i <= 25; ++i)
        if (i != 1 && i != 25) CHECK(d2.coeff(i).is_zero());

    CHECK(is_p_polynomial(d));
    CHECK(is_p_polynomial(d2));
    // round trip through the dense representation
    auto back = linearized_from_dense(d2);
    REQUIRE(back.has_value());
    CHECK(*back == L2);
}

TEST_CASE("is_p_polynomial") {
    auto F3 = FieldSpec::make(3, 1);
    CHECK(is_p_polynomial(fpoly(F3, {0, 1, 0, 1, 0, 0, 0, 0, 0, 1})));        // x^9 + x^3 + x
    CHECK_FALSE(is_p_polynomial(fpoly(F3, {0, 0, 1, 0, 0, 0, 0, 0, 0, 1})));  // x^9 + x^2
    CHECK(is_p_polynomial(DensePoly<FieldElement>()));                        // zero polynomial
    CHECK_FALSE(is_p_polynomial(fpoly(F3, {1, 1})));                          // nonzero constant term
}

TEST_CASE("evaluate: dense and linearized agree with field facts") {
    auto F9 = FieldSpec::make(3, 2);
    const auto xp_minus_x = LinearizedPolynomial(F9, {-F9->one(), F9->one()});  // x^3 - x
    for (const auto& s : subfield_elements(*F9, 1)) CHECK(xp_minus_x.evaluate(s).is_zero());
    CHECK(DensePoly<FieldElement>().evaluate(F9->one()).is_zero());

    // x^3 + x equals the quadratic trace on all of GF(9)
    const auto trace_poly = LinearizedPolynomial(F9, {F9->one(), F9->one()});
    for (std::uint32_t i = 0; i < 9; ++i) {
        const auto a = F9->from_packed(i);
        CHECK(trace_poly.evaluate(a) == quadratic_trace(a, 1));
        CHECK(trace_poly.to_dense().evaluate(a) == quadratic_trace(a, 1));
    }
}

TEST_CASE("poly_divides") {
    auto F9 = FieldSpec::make(3, 2);
    const auto big = x_power_q_minus_x(F9);
    CHECK(poly_divides(fpoly(F9, {0, 1}), big));  // x divides x^9 - x

    auto F3 = FieldSpec::make(3, 1);
    CHECK(poly_divides(fpoly(F3, {-1, 1}), fpoly(F3, {-1, 0, 1})));  // x - 1 | x^2 - 1

    // long division oracle: x^4 - x = (x^2+1) q(x) + r(x) with r = -x + 1
    const auto d = fpoly(F3, {1, 0, 1});
    const auto n = fpoly(F3, {0, -1, 0, 0, 1});
    const auto [q, r] = n.divmod(d);
    CHECK(r == fpoly(F3, {1, 2}));  // -x + 1 over GF(3)
    CHECK(q * d + r == n);
    CHECK_FALSE(poly_divides(d, n));

    CHECK_THROWS_AS(poly_divides(DensePoly<FieldElement>(), n), std::invalid_argument);
    CHECK_THROWS_AS(poly_divides(fpoly(F3, {1, 2}), n), std::invalid_argument);  // non-monic divisor
}

TEST_CASE("poly_divides is transitive on random monic products") {
    auto E = FieldSpec::make(5, 1);
    std::mt19937_64 rng(17);
    auto random_monic = [&](int deg) {
        std::vector<FieldElement> c;
        for (int i = 0; i < deg; ++i) c.push_back(E->from_packed(static_cast<std::uint32_t>(rng() % 5)));
        c.push_back(E->one());
        return DensePoly<FieldElement>(std::move(c));
    };
    for (int t = 0; t < 200; ++t) {
        const auto f = random_monic(1 + static_cast<int>(rng() % 3));
        const auto g = f * random_monic(1 + static_cast<int>(rng() % 3));
        const auto h = g * random_monic(1 + static_cast<int>(rng() % 3));
        CHECK(poly_divides(f, g));
        CHECK(poly_divides(g, h));
        CHECK(poly_divides(f, h));
    }
}

TEST_CASE("linearized_compose") {
    auto F5 = FieldSpec::make(5, 1);
    const auto id = LinearizedPolynomial::identity(F5);
    const auto xp = LinearizedPolynomial(F5, {F5->zero(), F5->one()});
    CHECK(linearized_compose(id, xp) == xp);
    CHECK(linearized_compose(xp, id) == xp);
    const auto xpp = linearized_compose(xp, xp);
    CHECK(xpp.qdegree() == 2);  // x^(p^2)
    CHECK(xpp.qcoeff(2) == F5->one());

    // over GF(4): L1 = x^2 + c x, L2 = x^2; L1(L2(x)) = x^4 + c x^2
    auto F4 = FieldSpec::make(2, 2);
    const auto c = F4->element({0, 1});
    const auto L1 = LinearizedPolynomial(F4, {c, F4->one()});
    const auto L2 = LinearizedPolynomial(F4, {F4->zero(), F4->one()});
    const auto L12 = linearized_compose(L1, L2);
    CHECK(L12.qcoeff(1) == c);
    // the reversed order picks up c^2: L2(L1(x)) = (x^2 + cx)^2 = x^4 + c^2 x^2
    const auto L21 = linearized_compose(L2, L1);
    CHECK(L21.qcoeff(1) == c * c);
    // exhaustive evaluation cross-check on all 4 elements
    for (std::uint32_t i = 0; i < 4; ++i) {
        const auto x = F4->from_packed(i);
        CHECK(L12.evaluate(x) == L1.evaluate(L2.evaluate(x)));
        CHECK(L21.evaluate(x) == L2.evaluate(L1.evaluate(x)));
    }
}

TEST_CASE("linearized polynomials are additive maps") {
    for (auto [p, f] : {std::pair<std::int64_t, int>{2, 4}, {3, 2}, {5, 2}}) {
        auto E = FieldSpec::make(p, f);
        std::mt19937_64 rng(23);
        for (int t = 0; t < 50; ++t) {
            std::vector<FieldElement> qc;
            const int deg = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i <= deg; ++i) qc.push_back(E->from_packed(static_cast<std::uint32_t>(rng() % E->order())));
            const LinearizedPolynomial L(E, qc);
            for (std::uint32_t a = 0; a < E->order(); ++a)
                for (std::uint32_t b = 0; b < E->order(); ++b) {
                    const auto ea = E->from_packed(a), eb = E->from_packed(b);
                    if (L.evaluate(ea + eb) != L.evaluate(ea) + L.evaluate(eb)) FAIL("not additive");
                }
        }
    }
}

TEST_CASE("compose agrees with evaluation composition on random pairs") {
    auto E = FieldSpec::make(3, 3);
    std::mt19937_64 rng(29);
    auto random_lin = [&] {
        std::vector<FieldElement> qc;
        const int deg = static_cast<int>(rng() % 3);
        for (int i = 0; i <= deg; ++i) qc.push_back(E->from_packed(static_cast<std::uint32_t>(rng() % E->order())));
        return LinearizedPolynomial(E, qc);
    };
    for (int t = 0; t < 100; ++t) {
        const auto L1 = random_lin();
        const auto L2 = random_lin();
        const auto C = linearized_compose(L1, L2);
        for (std::uint32_t x = 0; x < E->order(); ++x) {
            const auto e = E->from_packed(x);
            if (C.evaluate(e) != L1.evaluate(L2.evaluate(e))) FAIL("compose mismatch");
        }
    }
}

TEST_CASE("reciprocal inverts every root in the field") {
    for (auto [p, f] : {std::pair<std::int64_t, int>{2, 4}, {3, 2}, {7, 1}}) {
        auto E = FieldSpec::make(p, f);
        std::mt19937_64 rng(31);
        for (int t = 0; t < 100; ++t) {
            std::vector<FieldElement> c;
            const int deg = 2 + static_cast<int>(rng() % 4);
            c.push_back(E->from_packed(1 + static_cast<std::uint32_t>(rng() % (E->order() - 1))));  // a0 != 0
            for (int i = 1; i < deg; ++i) c.push_back(E->from_packed(static_cast<std::uint32_t>(rng() % E->order())));
            c.push_back(E->from_packed(1 + static_cast<std::uint32_t>(rng() % (E->order() - 1))));  // lead != 0
            const DensePoly<FieldElement> poly(std::move(c));
            const auto rec = reciprocal(poly);
            std::set<std::uint32_t> expected;
            for (std::uint32_t r : roots_in_field(*E, poly)) expected.insert(E->packed_inv(r));
            CHECK(roots_in_field(*E, rec) == expected);
        }
    }
}

TEST_CASE("self-reciprocal iff the root set is inverse-closed (split squarefree polys)") {
    for (auto [p, f] : {std::pair<std::int64_t, int>{3, 2}, {2, 4}, {13, 1}}) {
        auto E = FieldSpec::make(p, f);
        std::mt19937_64 rng(37);
        for (int t = 0; t < 150; ++t) {
            std::set<std::uint32_t> roots;
            const int n = 1 + static_cast<int>(rng() % 5);
            for (int i = 0; i < n; ++i) roots.insert(1 + static_cast<std::uint32_t>(rng() % (E->order() - 1)));
            const auto poly = poly_from_roots(*E, roots);
            std::set<std::uint32_t> inverses;
            for (std::uint32_t r : roots) inverses.insert(E->packed_inv(r));
            CHECK(is_self_reciprocal(poly) == (roots == inverses));
        }
    }
}
