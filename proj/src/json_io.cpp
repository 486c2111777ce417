#include "invsub/json_io.hpp"

namespace invsub {

Json field_spec_to_json(const FieldSpec& E) {
    return Json{{"p", E.p()}, {"f", E.f()}, {"modulus", E.modulus()}};
}

std::shared_ptr<const FieldSpec> field_spec_from_json(const Json& j) {
    return FieldSpec::make(j.at("p").get<std::int64_t>(), j.at("modulus").get<std::vector<std::int64_t>>());
}

Json element_to_json(const FieldElement& x) { return Json(x.coeffs()); }

FieldElement element_from_json(const FieldSpec& E, const Json& j) {
    return E.element(j.get<std::vector<std::int64_t>>());
}

Json dense_poly_to_json(const DensePoly<FieldElement>& f) {
    Json coeffs = Json::array();
    for (const FieldElement& c : f.coeffs()) coeffs.push_back(element_to_json(c));
    return Json{{"coeffs", std::move(coeffs)}};
}

Json linearized_to_json(const LinearizedPolynomial& L) {
    Json qcoeffs = Json::array();
    for (const FieldElement& c : L.qcoeffs()) qcoeffs.push_back(element_to_json(c));
    return Json{{"qcoeffs", std::move(qcoeffs)}};
}

Json subgroup_to_json(const AdditiveSubgroup& A) {
    return Json{{"dim", A.dim()}, {"basis", A.basis_coeffs()}};
}

AdditiveSubgroup subgroup_from_json(const std::shared_ptr<const FieldSpec>& spec, const Json& j) {
    std::vector<FieldElement> gens;
    for (const Json& row : j.at("basis")) gens.push_back(element_from_json(*spec, row));
    return AdditiveSubgroup::span(*spec, gens);
}

Json classification_to_json(const ClassificationResult& c) {
    return Json{{"kind", to_string(c.kind)}, {"r", c.r}};
}

Json report_to_json(const VerificationReport& r) {
    const FieldSpec& E = *r.spec;
    Json list = Json::array();
    for (const ClassifiedSubgroup& cs : r.inverse_closed) {
        Json entry = subgroup_to_json(cs.subgroup);
        entry["kind"] = to_string(cs.result.kind);
        entry["r"] = cs.result.r;
        list.push_back(std::move(entry));
    }
    Json violations = Json::array();
    for (const Violation& v : r.violations) violations.push_back(Json{{"kind", v.kind}, {"detail", v.detail}});
    return Json{{"p", E.p()},
                {"f", E.f()},
                {"modulus", E.modulus()},
                {"subspaces_scanned", r.subspaces_scanned},
                {"inverse_closed", std::move(list)},
                {"predicted", r.predicted},
                {"found", r.found},
                {"violations", std::move(violations)}};
}

}  // namespace invsub
