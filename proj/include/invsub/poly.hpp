#ifndef INVSUB_POLY_HPP
#define INVSUB_POLY_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "invsub/field.hpp"

namespace invsub {

/// Coefficient requirements for dense polynomials: field-like values that can
/// manufacture their own additive/multiplicative identities (needed because a
/// FieldElement only exists relative to a FieldSpec).
template <typename T>
concept FieldValue = requires(const T& a, const T& b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.inverse() } -> std::convertible_to<T>;
    { zero_like(a) } -> std::convertible_to<T>;
    { one_like(a) } -> std::convertible_to<T>;
};

/// Dense univariate polynomial, index = exponent, trimmed so the leading
/// coefficient is nonzero; the zero polynomial is the empty vector.
template <FieldValue T>
class DensePoly {
  public:
    DensePoly() = default;
    explicit DensePoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static DensePoly zero() { return DensePoly(); }

    const std::vector<T>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    std::ptrdiff_t degree() const { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
    const T& coeff(std::size_t i) const { return coeffs_[i]; }
    const T& leading() const { return coeffs_.back(); }
    bool is_monic() const { return !is_zero() && coeffs_.back() == one_like(coeffs_.back()); }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        std::vector<T> out;
        const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        out.reserve(n);
        const T z = zero_like(a.coeffs_[0]);
        for (std::size_t i = 0; i < n; ++i) {
            const T& x = i < a.coeffs_.size() ? a.coeffs_[i] : z;
            const T& y = i < b.coeffs_.size() ? b.coeffs_[i] : z;
            out.push_back(x + y);
        }
        return DensePoly(std::move(out));
    }

    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }

    DensePoly operator-() const {
        std::vector<T> out;
        out.reserve(coeffs_.size());
        for (const T& c : coeffs_) out.push_back(-c);
        return DensePoly(std::move(out));
    }

    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return DensePoly();
        const T z = zero_like(a.coeffs_[0]);
        std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, z);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return DensePoly(std::move(out));
    }

    /// Horner evaluation.
    T evaluate(const T& x) const {
        T acc = zero_like(x);
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Quotient and remainder by a monic divisor.
    std::pair<DensePoly, DensePoly> divmod(const DensePoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("divmod: zero divisor");
        if (!d.is_monic()) throw std::invalid_argument("divmod: divisor must be monic");
        if (degree() < d.degree()) return {DensePoly(), *this};
        const T z = zero_like(d.coeffs_[0]);
        std::vector<T> rem = coeffs_;
        std::vector<T> quo(coeffs_.size() - d.coeffs_.size() + 1, z);
        for (std::size_t k = quo.size(); k-- > 0;) {
            T c = rem[k + d.coeffs_.size() - 1];
            if (c.is_zero()) continue;
            quo[k] = c;
            for (std::size_t i = 0; i + 1 < d.coeffs_.size(); ++i) rem[k + i] = rem[k + i] - c * d.coeffs_[i];
            rem[k + d.coeffs_.size() - 1] = z;
        }
        return {DensePoly(std::move(quo)), DensePoly(std::move(rem))};
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<T> coeffs_;
};

/// x^n f(1/x): the coefficient vector reversed. Requires a nonzero constant
/// term (and the trimmed representation guarantees a nonzero leading term).
template <FieldValue T>
DensePoly<T> reciprocal(const DensePoly<T>& f) {
    if (f.is_zero() || f.coeff(0).is_zero())
        throw std::invalid_argument("reciprocal: constant term must be nonzero");
    std::vector<T> out(f.coeffs().rbegin(), f.coeffs().rend());
    return DensePoly<T>(std::move(out));
}

/// True iff f equals its reciprocal up to a scalar factor. The scalar is
/// forced to be lambda = a_n / a_0, which is then verified against every
/// coefficient.
template <FieldValue T>
bool is_self_reciprocal(const DensePoly<T>& f) {
    if (f.is_zero() || f.coeff(0).is_zero())
        throw std::invalid_argument("is_self_reciprocal: constant term must be nonzero");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const T lambda = f.coeff(n) * f.coeff(0).inverse();
    for (std::size_t i = 0; i <= n; ++i)
        if (!(f.coeff(i) == lambda * f.coeff(n - i))) return false;
    return true;
}

/// True iff the remainder of n by the monic divisor d is zero.
template <FieldValue T>
bool poly_divides(const DensePoly<T>& d, const DensePoly<T>& n) {
    return n.divmod(d).second.is_zero();
}

/// Linearized polynomial sum c_i x^(p^i) over a fixed finite field; the
/// natural product is composition. qcoeffs are stored packed; index i is the
/// coefficient of x^(p^i). The zero polynomial has no coefficients.
class LinearizedPolynomial {
  public:
    LinearizedPolynomial(std::shared_ptr<const FieldSpec> spec, std::vector<FieldElement> qcoeffs);
    static LinearizedPolynomial from_packed(std::shared_ptr<const FieldSpec> spec,
                                            std::vector<std::uint32_t> packed_qcoeffs);
    /// The identity map x (= x^(p^0)).
    static LinearizedPolynomial identity(std::shared_ptr<const FieldSpec> spec);

    const FieldSpec& field() const { return *spec_; }
    const std::shared_ptr<const FieldSpec>& spec() const { return spec_; }
    bool is_zero() const { return qcoeffs_.empty(); }
    /// q-degree: largest i with a nonzero x^(p^i) coefficient; -1 when zero.
    std::ptrdiff_t qdegree() const { return static_cast<std::ptrdiff_t>(qcoeffs_.size()) - 1; }
    const std::vector<std::uint32_t>& packed_qcoeffs() const { return qcoeffs_; }
    std::vector<FieldElement> qcoeffs() const;
    FieldElement qcoeff(std::size_t i) const;
    bool is_monic() const { return !qcoeffs_.empty() && qcoeffs_.back() == 1; }

    FieldElement evaluate(const FieldElement& x) const;
    std::uint32_t evaluate_packed(std::uint32_t x) const;

    /// Dense form: coefficient c_i lands at exponent p^i.
    DensePoly<FieldElement> to_dense() const;

    friend bool operator==(const LinearizedPolynomial& a, const LinearizedPolynomial& b);
    friend bool operator!=(const LinearizedPolynomial& a, const LinearizedPolynomial& b) { return !(a == b); }

  private:
    std::shared_ptr<const FieldSpec> spec_;
    std::vector<std::uint32_t> qcoeffs_;
};

/// Composition L1(L2(x)), itself linearized:
/// (c x^(p^i)) o (d x^(p^j)) = c d^(p^i) x^(p^(i+j)).
LinearizedPolynomial linearized_compose(const LinearizedPolynomial& L1, const LinearizedPolynomial& L2);

/// True iff every nonzero coefficient sits at an exponent that is a power of
/// p (p^0 = 1 included). The zero polynomial qualifies vacuously.
bool is_p_polynomial(const DensePoly<FieldElement>& f);

/// Dense -> linearized, when the polynomial is a p-polynomial.
std::optional<LinearizedPolynomial> linearized_from_dense(const DensePoly<FieldElement>& f);

/// x^(p^f) - x over E, the polynomial whose roots are exactly E.
DensePoly<FieldElement> x_power_q_minus_x(const std::shared_ptr<const FieldSpec>& spec);

}  // namespace invsub

#endif
