// Structural checks over whole varieties: the Euler-characteristic identity,
// the knot-case dimension dichotomy, endomorphism ring structure constants,
// and the punctured-surface ring comparison. Results are data records so the
// CLI can render them as text or JSON.
#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "legcat/category.hpp"

namespace legcat {

struct CheckRecord {
  std::string name;
  bool pass = false;
  std::string detail;  // witness or obstruction, empty when passing
};

struct Report {
  std::string suite;
  std::vector<CheckRecord> records;

  bool all_pass() const;
  std::size_t failure_count() const;
};

// Asserts dim Ext^0 - dim Ext^1 = strands - length on ordered pairs of
// variety points; all pairs when sample_pairs is 0, otherwise that many
// seeded random pairs.
Report verify_euler(const Field& field, const BraidWord& word, std::size_t sample_pairs = 0,
                    std::uint64_t seed = 0, const EnumerateOptions& options = {});

// Knots: dims must be (1, tb+1) on torus-equivalent ordered pairs and
// (0, tb) otherwise.
Report knot_dimension_check(const Field& field, const BraidWord& word,
                            const EnumerateOptions& options = {});

// Structure constants of the graded endomorphism ring of one object, with
// products expressed in the deterministic kernel/complement bases.
struct EndoRing {
  std::size_t d0 = 0;
  std::size_t d1 = 0;
  Vec unit_coords;  // coordinates of the all-ones class in the kernel basis
  // table00[i][j] = coordinates of (basis0_i composed after basis0_j).
  std::vector<std::vector<Vec>> table00;
  // table10[i][j] = coordinates of (basis1_i after basis0_j), in the
  // complement basis; table01[i][j] = (basis0_i after basis1_j).
  std::vector<std::vector<Vec>> table10;
  std::vector<std::vector<Vec>> table01;
};

EndoRing endo_ring(const SheafObject& object);

// The cohomology ring of a once-punctured genus-g surface: K in degree zero,
// K^{2g} in degree one, product (v, y) o (u, x) = (vu, vx + uy).
struct SurfaceRingModel {
  Field field;
  std::int64_t genus = 0;

  std::size_t degree1_dim() const { return static_cast<std::size_t>(2 * genus); }
  std::pair<Scalar, Vec> compose(const std::pair<Scalar, Vec>& b,
                                 const std::pair<Scalar, Vec>& a) const;
};

struct SurfaceRingCheck {
  bool isomorphic = false;
  std::int64_t genus = 0;      // d1 / 2 when isomorphic
  std::string obstruction;     // first structural failure, e.g. "d0 = 2"
};

// Structural test: degree zero is spanned by the unit and both mixed actions
// are scalar multiplication by the degree-zero coefficient. With vanishing
// degree-2 products these conditions pin the ring down to the surface model.
SurfaceRingCheck surface_ring_isomorphic(const Field& field, const EndoRing& ring,
                                         std::int64_t tb);

// Closure properties making the composition rules well defined, checked on
// ordered point triples: Hadamard products of kernels stay in the outer
// kernel, braided products move images into the outer image, and perturbing
// a degree-1 representative by an image vector leaves composed normal forms
// fixed. All triples when sample_triples is 0, otherwise that many seeded
// random ones.
Report well_definedness_suite(const Field& field, const BraidWord& word,
                              std::size_t sample_triples = 0, std::uint64_t seed = 0,
                              const EnumerateOptions& options = {});

// Unit laws, associativity at total degree <= 1, and bilinearity of the
// composition maps, on ordered point quadruples.
Report category_laws_suite(const Field& field, const BraidWord& word,
                           std::size_t sample_tuples = 0, std::uint64_t seed = 0,
                           const EnumerateOptions& options = {});

}  // namespace legcat
