// Braid-variety membership and enumeration, the subvariety cut out by unit
// leading principal minors, and the torus action with orbit analysis.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "legcat/braid.hpp"
#include "legcat/braidmat.hpp"
#include "legcat/linalg.hpp"

namespace legcat {

class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

class NonMemberError : public std::runtime_error {
 public:
  explicit NonMemberError(const std::string& what) : std::runtime_error(what) {}
};

class FactorizationError : public std::runtime_error {
 public:
  explicit FactorizationError(const std::string& what) : std::runtime_error(what) {}
};

// Cost accounting is in field multiplications: n per incremental crossing
// update and n^3 per admissibility test.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

struct EnumerateOptions {
  std::uint64_t budget = kDefaultBudget;
  unsigned threads = 1;  // workers partition the leading coordinate
};

// Tuple passing the LU-admissibility test for its braid word.
struct VarietyPoint {
  Vec coords;

  friend bool operator==(const VarietyPoint&, const VarietyPoint&) = default;
};

// Diagonal rescaling tuple: all entries nonzero with product one.
class TorusElement {
 public:
  TorusElement(const Field& field, Vec entries);

  const Vec& entries() const { return entries_; }
  TorusElement inverse(const Field& field) const;
  TorusElement hadamard(const Field& field, const TorusElement& other) const;

 private:
  Vec entries_;
};

bool is_member(const Field& field, const BraidWord& word, const Vec& coords);
bool is_reduced_member(const Field& field, const BraidWord& word, const Vec& coords);

// All members of K^l in lexicographic order (coordinates ordered by canonical
// residue). Finite fields only.
std::vector<VarietyPoint> enumerate_variety(const Field& field, const BraidWord& word,
                                            const EnumerateOptions& options = {});
std::vector<VarietyPoint> enumerate_reduced(const Field& field, const BraidWord& word,
                                            const EnumerateOptions& options = {});

// The rescaled point t * z determined by the crossing-wise intertwining
// relations; always again a member.
VarietyPoint torus_act(const Field& field, const BraidWord& word, const TorusElement& t,
                       const VarietyPoint& z);

// All torus elements, lexicographic in the first n-1 entries (finite field).
std::vector<TorusElement> enumerate_torus(const Field& field, int strands,
                                          std::uint64_t budget = kDefaultBudget);

bool orbit_equivalent(const Field& field, const BraidWord& word, const VarietyPoint& a,
                      const VarietyPoint& b, std::uint64_t budget = kDefaultBudget);

// Knots only: the unique factorization z = t * z' with z' having all leading
// principal minors equal to one. Throws FactorizationError when existence or
// uniqueness fails, which would contradict the free-action hypothesis.
std::pair<TorusElement, VarietyPoint> reduced_representative(
    const Field& field, const BraidWord& word, const VarietyPoint& z,
    std::uint64_t budget = kDefaultBudget);

}  // namespace legcat
