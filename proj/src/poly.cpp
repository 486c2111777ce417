#include "invsub/poly.hpp"

#include <algorithm>

namespace invsub {

LinearizedPolynomial::LinearizedPolynomial(std::shared_ptr<const FieldSpec> spec,
                                           std::vector<FieldElement> qcoeffs)
    : spec_(std::move(spec)) {
    qcoeffs_.reserve(qcoeffs.size());
    for (const FieldElement& c : qcoeffs) {
        if (!c.field().same_field(*spec_))
            throw std::invalid_argument("LinearizedPolynomial: coefficient from a different field");
        qcoeffs_.push_back(c.packed());
    }
    while (!qcoeffs_.empty() && qcoeffs_.back() == 0) qcoeffs_.pop_back();
}

LinearizedPolynomial LinearizedPolynomial::from_packed(std::shared_ptr<const FieldSpec> spec,
                                                       std::vector<std::uint32_t> packed_qcoeffs) {
    for (std::uint32_t c : packed_qcoeffs)
        if (c >= spec->order()) throw std::invalid_argument("LinearizedPolynomial: packed value out of range");
    LinearizedPolynomial L(std::move(spec), std::vector<FieldElement>{});
    L.qcoeffs_ = std::move(packed_qcoeffs);
    while (!L.qcoeffs_.empty() && L.qcoeffs_.back() == 0) L.qcoeffs_.pop_back();
    return L;
}

LinearizedPolynomial LinearizedPolynomial::identity(std::shared_ptr<const FieldSpec> spec) {
    return from_packed(std::move(spec), {1});
}

std::vector<FieldElement> LinearizedPolynomial::qcoeffs() const {
    std::vector<FieldElement> out;
    out.reserve(qcoeffs_.size());
    for (std::uint32_t c : qcoeffs_) out.push_back(spec_->from_packed(c));
    return out;
}

FieldElement LinearizedPolynomial::qcoeff(std::size_t i) const {
    return spec_->from_packed(i < qcoeffs_.size() ? qcoeffs_[i] : 0);
}

std::uint32_t LinearizedPolynomial::evaluate_packed(std::uint32_t x) const {
    std::uint32_t acc = 0;
    std::uint32_t xq = x;  // x^(p^i)
    for (std::size_t i = 0; i < qcoeffs_.size(); ++i) {
        if (i > 0) xq = spec_->packed_frobenius(xq, 1);
        if (qcoeffs_[i]) acc = spec_->packed_add(acc, spec_->packed_mul(qcoeffs_[i], xq));
    }
    return acc;
}

FieldElement LinearizedPolynomial::evaluate(const FieldElement& x) const {
    if (!x.field().same_field(*spec_))
        throw std::invalid_argument("LinearizedPolynomial::evaluate: field mismatch");
    return spec_->from_packed(evaluate_packed(x.packed()));
}

DensePoly<FieldElement> LinearizedPolynomial::to_dense() const {
    if (qcoeffs_.empty()) return DensePoly<FieldElement>();
    const std::size_t deg = static_cast<std::size_t>(spec_->radix_power(static_cast<int>(qcoeffs_.size()) - 1));
    std::vector<FieldElement> out(deg + 1, spec_->zero());
    for (std::size_t i = 0; i < qcoeffs_.size(); ++i)
        out[static_cast<std::size_t>(spec_->radix_power(static_cast<int>(i)))] = spec_->from_packed(qcoeffs_[i]);
    return DensePoly<FieldElement>(std::move(out));
}

bool operator==(const LinearizedPolynomial& a, const LinearizedPolynomial& b) {
    return a.spec_->same_field(*b.spec_) && a.qcoeffs_ == b.qcoeffs_;
}

LinearizedPolynomial linearized_compose(const LinearizedPolynomial& L1, const LinearizedPolynomial& L2) {
    if (!L1.field().same_field(L2.field()))
        throw std::invalid_argument("linearized_compose: field mismatch");
    const FieldSpec& E = L1.field();
    if (L1.is_zero() || L2.is_zero()) return LinearizedPolynomial::from_packed(L1.spec(), {});
    const auto& c1 = L1.packed_qcoeffs();
    const auto& c2 = L2.packed_qcoeffs();
    std::vector<std::uint32_t> out(c1.size() + c2.size() - 1, 0);
    for (std::size_t i = 0; i < c1.size(); ++i) {
        if (!c1[i]) continue;
        for (std::size_t j = 0; j < c2.size(); ++j) {
            if (!c2[j]) continue;
            std::uint32_t term = E.packed_mul(c1[i], E.packed_frobenius(c2[j], static_cast<int>(i)));
            out[i + j] = E.packed_add(out[i + j], term);
        }
    }
    return LinearizedPolynomial::from_packed(L1.spec(), std::move(out));
}

namespace {

bool is_power_of(std::size_t e, std::uint64_t p) {
    if (e == 0) return false;
    while (e % p == 0) e /= static_cast<std::size_t>(p);
    return e == 1;
}

}  // namespace

bool is_p_polynomial(const DensePoly<FieldElement>& f) {
    if (f.is_zero()) return true;
    const std::uint64_t p = static_cast<std::uint64_t>(f.leading().field().p());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (!f.coeff(i).is_zero() && !is_power_of(i, p)) return false;
    return true;
}

std::optional<LinearizedPolynomial> linearized_from_dense(const DensePoly<FieldElement>& f) {
    if (f.is_zero()) return std::nullopt;  // no field to attach the zero map to
    if (!is_p_polynomial(f)) return std::nullopt;
    const auto spec = f.leading().spec();
    std::vector<std::uint32_t> q;
    for (std::uint64_t e = 1; e < f.coeffs().size(); e *= static_cast<std::uint64_t>(spec->p()))
        q.push_back(f.coeff(static_cast<std::size_t>(e)).packed());
    return LinearizedPolynomial::from_packed(spec, std::move(q));
}

DensePoly<FieldElement> x_power_q_minus_x(const std::shared_ptr<const FieldSpec>& spec) {
    std::vector<FieldElement> out(spec->order() + 1, spec->zero());
    out[1] = -spec->one();
    out[spec->order()] = spec->one();
    return DensePoly<FieldElement>(std::move(out));
}

}  // namespace invsub
