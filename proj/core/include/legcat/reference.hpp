// Reference data for the two closed-form worked examples over Z_2: the Hopf
// link and the trefoil knot, both on three strands. The tables pin variety
// points, graded dimensions, printed hom-space generators, and composition
// structure constants; `verify tables` and the acceptance suite replay them.
#pragma once

#include <array>

#include "legcat/invariants.hpp"

namespace legcat::reference {

struct PairBases {
  int source = 0;
  int target = 0;
  // Printed degree-0 generators; must match the computed kernel basis
  // exactly (same vectors, same order).
  std::vector<std::vector<int>> ext0;
  // Printed degree-1 generators; compared modulo the image (normal-form
  // equality against the computed complement basis, position by position).
  std::vector<std::vector<int>> ext1;
};

struct CompositionRow {
  std::string label;
  int f = 0, g = 0, q = 0;  // ordered triple, indices into the point list
  int degree_b = 0, degree_a = 0;
  // expected[r][s][t] = coefficient of printed target generator t in
  // (printed b-generator r composed after printed a-generator s). Empty when
  // either input space is zero-dimensional.
  std::vector<std::vector<std::vector<int>>> expected;
};

struct WorkedExample {
  std::string name;
  std::string braid_spec;
  std::vector<std::vector<int>> points;  // expected variety, lexicographic
  // Graded dimensions for the ordered pair (i, j).
  std::array<int, 2> (*dims)(int i, int j);
  std::vector<PairBases> bases;
  std::vector<CompositionRow> compositions;
};

const WorkedExample& hopf_example();
const WorkedExample& trefoil_example();

Report check_points(const Field& field, const WorkedExample& example);
Report check_hom_tables(const Field& field, const WorkedExample& example);
Report check_compositions(const Field& field, const WorkedExample& example);

// Full golden replay over Z_2: points, hom tables and compositions for both
// examples.
Report verify_reference_tables(const Field& field);

}  // namespace legcat::reference
