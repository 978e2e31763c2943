#include "legcat/json_io.hpp"

namespace legcat {

using nlohmann::json;

json field_to_json(const Field& field) {
  if (field.is_prime_field()) return json{{"p", field.characteristic()}};
  return json{{"p", "Q"}};
}

Field field_from_json(const json& j) {
  const json& p = j.at("p");
  if (p.is_string()) {
    if (p.get<std::string>() != "Q") throw ParseError("unknown field spec in JSON");
    return Field::rationals();
  }
  return Field::prime(p.get<std::int64_t>());
}

json braid_to_json(const BraidWord& word) {
  return json{{"n", word.strands()}, {"w", word.gens()}};
}

BraidWord braid_from_json(const json& j) {
  return BraidWord(j.at("n").get<int>(), j.at("w").get<std::vector<int>>());
}

json scalar_to_json(const Field& field, const Scalar& s) {
  if (s.den == 1) return json(s.num);
  return json(field.str(s));
}

Scalar scalar_from_json(const Field& field, const json& j) {
  if (j.is_string()) return field.parse(j.get<std::string>());
  return field.from_integer(j.get<std::int64_t>());
}

json vec_to_json(const Field& field, const Vec& v) {
  json out = json::array();
  for (const Scalar& s : v) out.push_back(scalar_to_json(field, s));
  return out;
}

Vec vec_from_json(const Field& field, const json& j) {
  Vec out;
  out.reserve(j.size());
  for (const json& s : j) out.push_back(scalar_from_json(field, s));
  return out;
}

json points_to_json(const Field& field, const std::vector<VarietyPoint>& points) {
  json out = json::array();
  for (const VarietyPoint& p : points) out.push_back(vec_to_json(field, p.coords));
  return out;
}

std::vector<VarietyPoint> points_from_json(const Field& field, const json& j) {
  std::vector<VarietyPoint> out;
  out.reserve(j.size());
  for (const json& p : j) out.push_back(VarietyPoint{vec_from_json(field, p)});
  return out;
}

json hom_to_json(const Field& field, const GradedHom& hom, std::size_t source_index,
                 std::size_t target_index) {
  json ext0 = json::array();
  for (const Vec& v : hom.ext0_basis()) ext0.push_back(vec_to_json(field, v));
  json complement = json::array();
  for (std::size_t r : hom.complement_rows()) complement.push_back(r + 1);
  return json{{"pair", {source_index, target_index}},
              {"ext0", ext0},
              {"ext1_dim", hom.ext1_dim()},
              {"complement", complement}};
}

json report_to_json(const Report& report) {
  json records = json::array();
  for (const CheckRecord& rec : report.records) {
    json r{{"name", rec.name}, {"pass", rec.pass}};
    if (!rec.detail.empty()) r["detail"] = rec.detail;
    records.push_back(std::move(r));
  }
  return json{{"suite", report.suite},
              {"pass", report.all_pass()},
              {"checks", std::move(records)}};
}

Report report_from_json(const json& j) {
  Report out{j.at("suite").get<std::string>(), {}};
  for (const json& r : j.at("checks")) {
    CheckRecord rec;
    rec.name = r.at("name").get<std::string>();
    rec.pass = r.at("pass").get<bool>();
    if (r.contains("detail")) rec.detail = r.at("detail").get<std::string>();
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace legcat
