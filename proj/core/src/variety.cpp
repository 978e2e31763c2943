#include "legcat/variety.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace legcat {
namespace {

void require_finite(const Field& field, const char* what) {
  if (!field.is_prime_field())
    throw std::invalid_argument(std::string(what) + " requires a finite field");
}

std::uint64_t cube(std::uint64_t n) { return n * n * n; }

// Lexicographic order on canonical representatives.
bool lex_less(const VarietyPoint& a, const VarietyPoint& b) {
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    if (a.coords[i].num != b.coords[i].num) return a.coords[i].num < b.coords[i].num;
  }
  return false;
}

// Depth-first sweep over the remaining coordinates, reusing the prefix
// product. `prefix` is P_{beta_depth}(z_1..z_depth).
struct Sweeper {
  const Field& field;
  const BraidWord& word;
  bool reduced;
  std::atomic<std::uint64_t>& cost;
  std::uint64_t budget;
  std::vector<VarietyPoint>& out;
  Vec current;

  void run(const Matrix& prefix, std::size_t depth) {
    std::uint64_t n = word.strands();
    if (depth == word.length()) {
      if (cost.fetch_add(cube(n)) + cube(n) > budget)
        throw BudgetError("enumeration budget exceeded");
      bool keep;
      if (reduced) {
        std::vector<Scalar> minors = leading_principal_minors(prefix);
        keep = std::all_of(minors.begin(), minors.end(),
                           [&](const Scalar& m) { return field.is_one(m); });
      } else {
        keep = lu_admissible(prefix);
      }
      if (keep) out.push_back(VarietyPoint{current});
      return;
    }
    std::int64_t q = field.characteristic();
    for (std::int64_t v = 0; v < q; ++v) {
      if (cost.fetch_add(n) + n > budget) throw BudgetError("enumeration budget exceeded");
      Scalar z = field.from_integer(v);
      current[depth] = z;
      run(fast_right_mul(prefix, word.gen(depth), z), depth + 1);
    }
  }
};

std::vector<VarietyPoint> enumerate_impl(const Field& field, const BraidWord& word,
                                         const EnumerateOptions& options, bool reduced) {
  require_finite(field, "enumeration");
  std::atomic<std::uint64_t> cost{0};
  std::size_t l = word.length();
  Matrix id = Matrix::identity(field, word.strands());

  if (l == 0) {
    std::vector<VarietyPoint> out;
    Sweeper sweeper{field, word, reduced, cost, options.budget, out, Vec{}};
    sweeper.run(id, 0);
    return out;
  }

  std::int64_t q = field.characteristic();
  unsigned workers = std::max(1u, std::min(options.threads, static_cast<unsigned>(q)));

  // Each worker owns a disjoint block of leading-coordinate values and its
  // own prefix stack; blocks are lex-ordered, so concatenation stays sorted.
  std::vector<std::vector<VarietyPoint>> results(q);
  auto sweep_leading = [&](std::int64_t v) {
    Scalar z = field.from_integer(v);
    cost.fetch_add(word.strands());
    Sweeper sweeper{field, word, reduced, cost, options.budget,
                    results[v], Vec(l, field.zero())};
    sweeper.current[0] = z;
    sweeper.run(fast_right_mul(id, word.gen(0), z), 1);
  };

  if (workers == 1) {
    for (std::int64_t v = 0; v < q; ++v) sweep_leading(v);
  } else {
    std::vector<std::thread> pool;
    std::atomic<std::int64_t> next{0};
    std::atomic<bool> exceeded{false};
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::int64_t v = next.fetch_add(1); v < q; v = next.fetch_add(1)) {
          try {
            sweep_leading(v);
          } catch (const BudgetError&) {
            exceeded = true;
            return;
          }
        }
      });
    for (std::thread& t : pool) t.join();
    if (exceeded) throw BudgetError("enumeration budget exceeded");
  }

  std::vector<VarietyPoint> out;
  for (auto& block : results)
    out.insert(out.end(), std::make_move_iterator(block.begin()),
               std::make_move_iterator(block.end()));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace

TorusElement::TorusElement(const Field& field, Vec entries) : entries_(std::move(entries)) {
  Scalar product = field.one();
  for (const Scalar& t : entries_) {
    if (field.is_zero(t)) throw std::invalid_argument("torus element has a zero entry");
    product = field.mul(product, t);
  }
  if (!field.is_one(product))
    throw std::invalid_argument("torus element entries must multiply to one");
}

TorusElement TorusElement::inverse(const Field& field) const {
  Vec out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) out[i] = field.inv(entries_[i]);
  return TorusElement(field, std::move(out));
}

TorusElement TorusElement::hadamard(const Field& field, const TorusElement& other) const {
  if (entries_.size() != other.entries_.size())
    throw std::invalid_argument("torus element size mismatch");
  Vec out(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i)
    out[i] = field.mul(entries_[i], other.entries_[i]);
  return TorusElement(field, std::move(out));
}

bool is_member(const Field& field, const BraidWord& word, const Vec& coords) {
  return lu_admissible(path_matrix(field, word, coords));
}

bool is_reduced_member(const Field& field, const BraidWord& word, const Vec& coords) {
  std::vector<Scalar> minors = leading_principal_minors(path_matrix(field, word, coords));
  return std::all_of(minors.begin(), minors.end(),
                     [&](const Scalar& m) { return field.is_one(m); });
}

std::vector<VarietyPoint> enumerate_variety(const Field& field, const BraidWord& word,
                                            const EnumerateOptions& options) {
  return enumerate_impl(field, word, options, /*reduced=*/false);
}

std::vector<VarietyPoint> enumerate_reduced(const Field& field, const BraidWord& word,
                                            const EnumerateOptions& options) {
  return enumerate_impl(field, word, options, /*reduced=*/true);
}

VarietyPoint torus_act(const Field& field, const BraidWord& word, const TorusElement& t,
                       const VarietyPoint& z) {
  if (t.entries().size() != static_cast<std::size_t>(word.strands()))
    throw std::invalid_argument("torus element size does not match strand count");
  if (z.coords.size() != word.length())
    throw std::invalid_argument("point length does not match word length");
  Vec tracked = t.entries();
  Vec out(z.coords.size());
  for (std::size_t j = 0; j < word.length(); ++j) {
    int k = word.gen(j) - 1;
    // z'_j = t_k z_j / t_{k+1} with t tracked through the first j crossings;
    // the denominator is nonzero by the torus invariant.
    out[j] = field.div(field.mul(tracked[k], z.coords[j]), tracked[k + 1]);
    std::swap(tracked[k], tracked[k + 1]);
  }
  return VarietyPoint{std::move(out)};
}

std::vector<TorusElement> enumerate_torus(const Field& field, int strands,
                                          std::uint64_t budget) {
  require_finite(field, "torus enumeration");
  std::int64_t q = field.characteristic();
  std::uint64_t count = 1;
  for (int i = 0; i < strands - 1; ++i) count *= static_cast<std::uint64_t>(q - 1);
  if (count * strands > budget) throw BudgetError("torus enumeration budget exceeded");

  std::vector<TorusElement> out;
  out.reserve(count);
  Vec entries(strands, field.one());
  // Odometer over the first n-1 entries (nonzero values); the last entry is
  // forced by the determinant-one constraint.
  std::vector<std::int64_t> digits(strands - 1, 1);
  while (true) {
    Scalar product = field.one();
    for (int i = 0; i < strands - 1; ++i) {
      entries[i] = field.from_integer(digits[i]);
      product = field.mul(product, entries[i]);
    }
    entries[strands - 1] = field.inv(product);
    out.push_back(TorusElement(field, entries));
    int pos = strands - 2;
    while (pos >= 0 && digits[pos] == q - 1) digits[pos--] = 1;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

bool orbit_equivalent(const Field& field, const BraidWord& word, const VarietyPoint& a,
                      const VarietyPoint& b, std::uint64_t budget) {
  for (const TorusElement& t : enumerate_torus(field, word.strands(), budget)) {
    if (torus_act(field, word, t, a) == b) return true;
  }
  return false;
}

std::pair<TorusElement, VarietyPoint> reduced_representative(const Field& field,
                                                             const BraidWord& word,
                                                             const VarietyPoint& z,
                                                             std::uint64_t budget) {
  if (!is_knot(word))
    throw std::invalid_argument("reduced_representative is defined for knots only");
  std::optional<std::pair<TorusElement, VarietyPoint>> found;
  for (const TorusElement& t : enumerate_torus(field, word.strands(), budget)) {
    VarietyPoint candidate = torus_act(field, word, t.inverse(field), z);
    if (!is_reduced_member(field, word, candidate.coords)) continue;
    if (found)
      throw FactorizationError("torus factorization is not unique for " +
                               str(field, z.coords));
    found.emplace(t, std::move(candidate));
  }
  if (!found)
    throw FactorizationError("no torus factorization found for " + str(field, z.coords));
  return *found;
}

}  // namespace legcat
