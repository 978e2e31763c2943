// Objects over a braid variety, the linear map attached to each ordered pair
// of objects, its kernel and cokernel (the degree-0 and degree-1 morphism
// spaces), and the Hadamard / braided composition rules.
//
// Degrees beyond 1 vanish identically (the category is hereditary), so only
// degrees 0 and 1 are represented and compositions of total degree 2 are
// rejected outright.
#pragma once

#include <optional>
#include <string>

#include "legcat/variety.hpp"

namespace legcat {

class DegreeError : public std::runtime_error {
 public:
  explicit DegreeError(const std::string& what) : std::runtime_error(what) {}
};

// An object: a variety point for a braid word, plus an inert basis label.
// Two objects differing only in label are distinct objects with identical
// hom-data, since every hom formula depends on the points alone.
class SheafObject {
 public:
  SheafObject(Field field, BraidWord braid, VarietyPoint point,
              std::optional<std::string> basis_label = std::nullopt);

  const Field& field() const { return field_; }
  const BraidWord& braid() const { return braid_; }
  const VarietyPoint& point() const { return point_; }
  const std::optional<std::string>& basis_label() const { return basis_label_; }

  friend bool operator==(const SheafObject&, const SheafObject&) = default;

 private:
  Field field_;
  BraidWord braid_;
  VarietyPoint point_;
  std::optional<std::string> basis_label_;
};

// The l-by-n matrix of the pair map: row j sends u to
// tracked(u, j-1)[i_j] * x_j - y_j * tracked(u, j-1)[i_j + 1],
// where x is the source point and y the target point. Each row touches at
// most two columns (the conjugation identity has one off-diagonal entry).
struct DeltaMap {
  BraidWord braid;
  Vec source_point;
  Vec target_point;
  Matrix matrix;
};

// Closed-form construction, built column-by-column on basis vectors.
DeltaMap delta_matrix(const SheafObject& source, const SheafObject& target);
DeltaMap delta_matrix(const Field& field, const BraidWord& word, const Vec& x, const Vec& y);

// Reference construction of one row entry through the literal matrix product
// B(y_j)^{-1} D(tracked) B(x_j); the tests cross-check it against the rows.
Scalar delta_entry_reference(const Field& field, const BraidWord& word, const Vec& x,
                             const Vec& y, std::size_t j, const Vec& u);

// Hom data of an ordered pair: kernel basis (degree 0), cokernel dimension
// and fixed complement (degree 1), and the normal-form reducer.
class GradedHom {
 public:
  explicit GradedHom(DeltaMap delta);

  const DeltaMap& delta() const { return delta_; }
  const Field& field() const { return delta_.matrix.field(); }
  const std::vector<Vec>& ext0_basis() const { return ext0_basis_; }
  std::size_t ext0_dim() const { return ext0_basis_.size(); }
  std::size_t ext1_dim() const { return ext1_dim_; }
  // 0-based rows of the standard-basis complement of the image.
  const std::vector<std::size_t>& complement_rows() const { return reducer_.complement_rows(); }
  std::vector<Vec> complement_basis() const { return reducer_.complement_basis(); }
  const CokernelReducer& reducer() const { return reducer_; }

 private:
  DeltaMap delta_;
  std::vector<Vec> ext0_basis_;
  std::size_t ext1_dim_;
  CokernelReducer reducer_;
};

GradedHom graded_hom(const SheafObject& source, const SheafObject& target);

// dim Ext^0 - dim Ext^1; always strands - length by rank-nullity.
std::int64_t euler_characteristic(const GradedHom& hom);

// A morphism class. Degree 0: a kernel vector in K^n. Degree 1: a
// representative in K^l together with its normal form against the fixed
// complement of the target pair's image.
class ExtClass {
 public:
  static ExtClass degree0(Vec kernel_vector);
  static ExtClass degree1(Vec representative, const GradedHom& hom);

  int degree() const { return degree_; }
  const Vec& payload() const { return payload_; }           // degree-0 vector or representative
  const Vec& normal_form() const { return normal_form_; }   // degree 1 only
  bool is_zero(const Field& field) const;

 private:
  int degree_ = 0;
  Vec payload_;
  Vec normal_form_;
};

// The all-ones kernel vector; each row of the pair map collapses to
// x_j - x_j on it, so it always lies in the kernel.
ExtClass identity_morphism(const SheafObject& object);

Vec hadamard(const Field& field, const Vec& v, const Vec& u);

// Crossing-indexed products implementing the mixed-degree compositions.
// Entry j multiplies the j-th representative entry by the tracked tuple entry
// at the crossing (right: position i_j of u after j crossings; left: position
// i_j + 1 of v after j crossings).
Vec right_braided(const Field& field, const BraidWord& word, const Vec& rep, const Vec& u);
Vec left_braided(const Field& field, const BraidWord& word, const Vec& v, const Vec& rep);

// Graded composition b after a through the hom triple (F,G), (G,Q), (F,Q).
// Degrees (0,0) -> Hadamard kernel vector, (1,0) -> right braided
// representative, (0,1) -> left braided representative, total degree 2 ->
// DegreeError.
ExtClass compose(const GradedHom& hom_fg, const GradedHom& hom_gq, const GradedHom& hom_fq,
                 const ExtClass& b, const ExtClass& a);

}  // namespace legcat
