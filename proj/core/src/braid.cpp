#include "legcat/braid.hpp"

#include <algorithm>
#include <charconv>

namespace legcat {
namespace {

void check_truncation_index(const BraidWord& word, std::size_t j) {
  if (j > word.length())
    throw std::invalid_argument("truncation index " + std::to_string(j) +
                                " out of range for word of length " +
                                std::to_string(word.length()));
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw ParseError("bad " + what + ": '" + s + "'");
  return value;
}

}  // namespace

BraidWord::BraidWord(int strand_count, std::vector<int> gens)
    : strands_(strand_count), gens_(std::move(gens)) {
  if (strands_ < 2) throw std::invalid_argument("strand count must be at least 2");
  for (int g : gens_)
    if (g < 1 || g > strands_ - 1)
      throw std::invalid_argument("generator index " + std::to_string(g) +
                                  " outside [1, " + std::to_string(strands_ - 1) + "]");
}

BraidWord BraidWord::parse(const std::string& text) {
  std::string s = strip_spaces(text);
  if (s.rfind("n=", 0) != 0) throw ParseError("braid spec must start with 'n='");
  std::size_t semi = s.find(';');
  if (semi == std::string::npos) throw ParseError("braid spec missing ';'");
  int n = parse_int(s.substr(2, semi - 2), "strand count");
  std::string rest = s.substr(semi + 1);
  if (rest.rfind("w=", 0) != 0) throw ParseError("braid spec missing 'w='");
  rest = rest.substr(2);
  std::vector<int> gens;
  if (!rest.empty()) {
    std::size_t start = 0;
    while (true) {
      std::size_t comma = rest.find(',', start);
      std::string tok = rest.substr(start, comma == std::string::npos ? comma : comma - start);
      gens.push_back(parse_int(tok, "generator index"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (n < 2) throw ParseError("strand count must be at least 2");
  for (int g : gens)
    if (g < 1 || g > n - 1) throw ParseError("generator index " + std::to_string(g) +
                                             " outside [1, " + std::to_string(n - 1) + "]");
  return BraidWord(n, std::move(gens));
}

std::string BraidWord::spec_string() const {
  std::string out = "n=" + std::to_string(strands_) + "; w=";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens_[i]);
  }
  return out;
}

Permutation::Permutation(int n) {
  if (n < 1) throw std::invalid_argument("permutation size must be positive");
  image_.resize(n);
  for (int i = 0; i < n; ++i) image_[i] = i + 1;
}

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 1 || v > static_cast<int>(image_.size()) || seen[v - 1])
      throw std::invalid_argument("one-line notation is not a bijection");
    seen[v - 1] = true;
  }
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 1; i <= size(); ++i) inv[image(i) - 1] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::then(const Permutation& next) const {
  if (size() != next.size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> out(image_.size());
  for (int i = 1; i <= size(); ++i) out[i - 1] = next.image(image(i));
  return Permutation(std::move(out));
}

int Permutation::cycle_count() const {
  std::vector<bool> seen(image_.size(), false);
  int cycles = 0;
  for (int i = 1; i <= size(); ++i) {
    if (seen[i - 1]) continue;
    ++cycles;
    int j = i;
    while (!seen[j - 1]) {
      seen[j - 1] = true;
      j = image(j);
    }
  }
  return cycles;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if (image(i) != i) return false;
  return true;
}

Permutation permutation_of(const BraidWord& word, std::size_t j) {
  check_truncation_index(word, j);
  std::vector<int> image(word.strands());
  for (int i = 0; i < word.strands(); ++i) image[i] = i + 1;
  // Appending crossing s_k maps whatever currently lands on position k to
  // k+1 and vice versa.
  for (std::size_t c = 0; c < j; ++c) {
    int k = word.gen(c);
    for (int& v : image) {
      if (v == k)
        v = k + 1;
      else if (v == k + 1)
        v = k;
    }
  }
  return Permutation(std::move(image));
}

Vec tracked_tuple(const BraidWord& word, std::size_t j, const Vec& u) {
  check_truncation_index(word, j);
  if (u.size() != static_cast<std::size_t>(word.strands()))
    throw std::invalid_argument("tuple length does not match strand count");
  Vec v = u;
  for (std::size_t c = 0; c < j; ++c) {
    int k = word.gen(c) - 1;
    std::swap(v[k], v[k + 1]);
  }
  return v;
}

Vec permuted_tuple_by_image(const BraidWord& word, std::size_t j, const Vec& u) {
  check_truncation_index(word, j);
  if (u.size() != static_cast<std::size_t>(word.strands()))
    throw std::invalid_argument("tuple length does not match strand count");
  Permutation perm = permutation_of(word, j);
  Vec v(u.size());
  for (int i = 1; i <= perm.size(); ++i) v[i - 1] = u[perm.image(i) - 1];
  return v;
}

BraidWord truncate(const BraidWord& word, std::size_t j) {
  check_truncation_index(word, j);
  return BraidWord(word.strands(),
                   std::vector<int>(word.gens().begin(), word.gens().begin() + j));
}

std::int64_t thurston_bennequin(const BraidWord& word) {
  return static_cast<std::int64_t>(word.length()) - word.strands();
}

int component_count(const BraidWord& word) {
  return permutation_of(word, word.length()).cycle_count();
}

bool is_knot(const BraidWord& word) { return component_count(word) == 1; }

}  // namespace legcat
