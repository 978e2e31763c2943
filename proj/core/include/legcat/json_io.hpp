// JSON encodings of the library's surface data. Row and strand indices are
// 1-based on the wire; rationals serialize as "num/den" strings, prime-field
// residues as plain integers.
#pragma once

#include <json.hpp>

#include "legcat/invariants.hpp"

namespace legcat {

nlohmann::json field_to_json(const Field& field);
Field field_from_json(const nlohmann::json& j);

nlohmann::json braid_to_json(const BraidWord& word);
BraidWord braid_from_json(const nlohmann::json& j);

nlohmann::json scalar_to_json(const Field& field, const Scalar& s);
Scalar scalar_from_json(const Field& field, const nlohmann::json& j);

nlohmann::json vec_to_json(const Field& field, const Vec& v);
Vec vec_from_json(const Field& field, const nlohmann::json& j);

nlohmann::json points_to_json(const Field& field, const std::vector<VarietyPoint>& points);
std::vector<VarietyPoint> points_from_json(const Field& field, const nlohmann::json& j);

// {"pair":[i,j],"ext0":[[..]],"ext1_dim":..,"complement":[..]} with 1-based
// complement row indices; the pair indices are caller-supplied.
nlohmann::json hom_to_json(const Field& field, const GradedHom& hom, std::size_t source_index,
                           std::size_t target_index);

nlohmann::json report_to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);

}  // namespace legcat
