// Positive braid words, their permutations, strand tracking and the classical
// invariants read off the word. Generator indices are 1-based everywhere in
// the public interface; algorithms convert at the point of use.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "legcat/matrix.hpp"

namespace legcat {

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

class BraidWord {
 public:
  // gens: generator indices i_1..i_l, each in [1, n-1]; empty = trivial word.
  BraidWord(int strand_count, std::vector<int> gens);

  int strands() const { return strands_; }
  std::size_t length() const { return gens_.size(); }
  const std::vector<int>& gens() const { return gens_; }
  int gen(std::size_t j) const { return gens_[j]; }  // 0-based position

  // Grammar: "n=<int>; w=<comma-separated indices>"; empty w is the trivial
  // word. Whitespace-insensitive.
  static BraidWord parse(const std::string& text);
  std::string spec_string() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<int> gens_;
};

// A permutation of {1..n} in one-line notation: image(i) is where strand i
// ends up. Composition is left-to-right: (a then b)(i) = b(a(i)).
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  explicit Permutation(std::vector<int> one_line);

  int size() const { return static_cast<int>(image_.size()); }
  int image(int i) const { return image_[i - 1]; }
  Permutation inverse() const;
  Permutation then(const Permutation& next) const;
  int cycle_count() const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;  // image_[i-1] = image of strand i, values 1..n
};

// Permutation of the first j crossings; j = 0 gives the identity.
Permutation permutation_of(const BraidWord& word, std::size_t j);

// Pushes an n-tuple of values through the first j crossings by swapping the
// two entries at each crossing. Position p of the result carries the value of
// the strand occupying p after j crossings: result[p] = u[perm.inverse()(p)].
Vec tracked_tuple(const BraidWord& word, std::size_t j, const Vec& u);

// Index-image variant result[k] = u[perm(k)]. It does NOT agree with
// tracked_tuple beyond the first crossing; kept so the tests can demonstrate
// which convention reproduces the worked hom tables.
Vec permuted_tuple_by_image(const BraidWord& word, std::size_t j, const Vec& u);

BraidWord truncate(const BraidWord& word, std::size_t j);

// tb of the rainbow closure: length - strands.
std::int64_t thurston_bennequin(const BraidWord& word);

// Number of components of the closure = cycles of the word's permutation.
int component_count(const BraidWord& word);
bool is_knot(const BraidWord& word);

}  // namespace legcat
