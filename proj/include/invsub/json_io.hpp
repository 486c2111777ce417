#ifndef INVSUB_JSON_IO_HPP
#define INVSUB_JSON_IO_HPP

#include <json.hpp>

#include "invsub/field.hpp"
#include "invsub/poly.hpp"
#include "invsub/subgroup.hpp"
#include "invsub/verifier.hpp"

namespace invsub {

using Json = nlohmann::ordered_json;

// Field: {"p": int, "f": int, "modulus": [c0, ..., 1]} (constant term first);
// elements are coefficient lists in the same order.
Json field_spec_to_json(const FieldSpec& E);
std::shared_ptr<const FieldSpec> field_spec_from_json(const Json& j);

Json element_to_json(const FieldElement& x);
FieldElement element_from_json(const FieldSpec& E, const Json& j);

// Dense: {"coeffs": [[...], ...]}; linearized: {"qcoeffs": [[...], ...]}.
Json dense_poly_to_json(const DensePoly<FieldElement>& f);
Json linearized_to_json(const LinearizedPolynomial& L);

// Subgroup: {"dim": int, "basis": [[...], ...]} (echelon rows).
Json subgroup_to_json(const AdditiveSubgroup& A);
AdditiveSubgroup subgroup_from_json(const std::shared_ptr<const FieldSpec>& spec, const Json& j);

Json classification_to_json(const ClassificationResult& c);

Json report_to_json(const VerificationReport& r);

}  // namespace invsub

#endif
