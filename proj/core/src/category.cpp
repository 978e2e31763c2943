#include "legcat/category.hpp"

#include <algorithm>

namespace legcat {
namespace {

void check_same_braid(const DeltaMap& a, const DeltaMap& b, const char* ctx) {
  if (!(a.braid == b.braid))
    throw std::invalid_argument(std::string("mismatched braid words in ") + ctx);
}

}  // namespace

SheafObject::SheafObject(Field field, BraidWord braid, VarietyPoint point,
                         std::optional<std::string> basis_label)
    : field_(field),
      braid_(std::move(braid)),
      point_(std::move(point)),
      basis_label_(std::move(basis_label)) {
  if (point_.coords.size() != braid_.length())
    throw std::invalid_argument("point length does not match word length");
  if (!is_member(field_, braid_, point_.coords))
    throw NonMemberError("point " + str(field_, point_.coords) +
                         " is not in the braid variety of " + braid_.spec_string());
}

DeltaMap delta_matrix(const Field& field, const BraidWord& word, const Vec& x, const Vec& y) {
  if (x.size() != word.length() || y.size() != word.length())
    throw std::invalid_argument("point length does not match word length");
  std::size_t l = word.length();
  std::size_t n = word.strands();
  Matrix m(field, l, n);
  // Column c is the image of the c-th basis vector. Tracking e_c through the
  // crossings keeps a single moving position per column.
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pos = c;
    for (std::size_t j = 0; j < l; ++j) {
      std::size_t k = word.gen(j) - 1;
      if (pos == k)
        m.at(j, c) = field.add(m.at(j, c), x[j]);
      else if (pos == k + 1)
        m.at(j, c) = field.sub(m.at(j, c), y[j]);
      if (pos == k)
        pos = k + 1;
      else if (pos == k + 1)
        pos = k;
    }
  }
  return DeltaMap{word, x, y, std::move(m)};
}

DeltaMap delta_matrix(const SheafObject& source, const SheafObject& target) {
  if (!(source.braid() == target.braid()))
    throw std::invalid_argument("mismatched braid words in delta_matrix");
  if (!(source.field() == target.field()))
    throw std::invalid_argument("mismatched fields in delta_matrix");
  return delta_matrix(source.field(), source.braid(), source.point().coords,
                      target.point().coords);
}

Scalar delta_entry_reference(const Field& field, const BraidWord& word, const Vec& x,
                             const Vec& y, std::size_t j, const Vec& u) {
  int k = word.gen(j);
  Matrix left = braid_matrix_inverse(field, word.strands(), k, y[j]);
  Matrix middle = Matrix::diagonal(field, tracked_tuple(word, j, u));
  Matrix right = braid_matrix(field, word.strands(), k, x[j]);
  Matrix product = left * middle * right;
  return product.at(k, k - 1);
}

GradedHom::GradedHom(DeltaMap delta)
    : delta_(std::move(delta)),
      ext0_basis_(kernel_basis(delta_.matrix)),
      ext1_dim_(0),
      reducer_(complement_and_reduce(delta_.matrix)) {
  ext1_dim_ = reducer_.codim();
  // Rank-nullity pins dim ker - dim coker to strands - length.
  std::int64_t n = delta_.braid.strands();
  std::int64_t l = static_cast<std::int64_t>(delta_.braid.length());
  if (static_cast<std::int64_t>(ext0_basis_.size()) - static_cast<std::int64_t>(ext1_dim_) !=
      n - l)
    throw std::logic_error("rank-nullity violated in GradedHom");
}

GradedHom graded_hom(const SheafObject& source, const SheafObject& target) {
  return GradedHom(delta_matrix(source, target));
}

std::int64_t euler_characteristic(const GradedHom& hom) {
  return static_cast<std::int64_t>(hom.ext0_dim()) - static_cast<std::int64_t>(hom.ext1_dim());
}

ExtClass ExtClass::degree0(Vec kernel_vector) {
  ExtClass out;
  out.degree_ = 0;
  out.payload_ = std::move(kernel_vector);
  return out;
}

ExtClass ExtClass::degree1(Vec representative, const GradedHom& hom) {
  if (representative.size() != hom.delta().braid.length())
    throw std::invalid_argument("degree-1 representative length does not match word length");
  ExtClass out;
  out.degree_ = 1;
  out.normal_form_ = hom.reducer().normal_form(representative);
  out.payload_ = std::move(representative);
  return out;
}

bool ExtClass::is_zero(const Field& field) const {
  return degree_ == 0 ? is_zero_vec(field, payload_) : is_zero_vec(field, normal_form_);
}

ExtClass identity_morphism(const SheafObject& object) {
  const Field& f = object.field();
  Vec unit = ones(f, object.braid().strands());
  DeltaMap self = delta_matrix(object, object);
  if (!is_zero_vec(f, self.matrix.apply(unit)))
    throw std::logic_error("all-ones vector escaped the kernel of the self pair map");
  return ExtClass::degree0(std::move(unit));
}

Vec hadamard(const Field& field, const Vec& v, const Vec& u) {
  if (v.size() != u.size()) throw std::invalid_argument("length mismatch in hadamard");
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = field.mul(v[i], u[i]);
  return out;
}

Vec right_braided(const Field& field, const BraidWord& word, const Vec& rep, const Vec& u) {
  if (rep.size() != word.length() || u.size() != static_cast<std::size_t>(word.strands()))
    throw std::invalid_argument("length mismatch in right_braided");
  Vec tracked = u;
  Vec out(rep.size());
  for (std::size_t j = 0; j < word.length(); ++j) {
    std::size_t k = word.gen(j) - 1;
    std::swap(tracked[k], tracked[k + 1]);
    out[j] = field.mul(rep[j], tracked[k]);
  }
  return out;
}

Vec left_braided(const Field& field, const BraidWord& word, const Vec& v, const Vec& rep) {
  if (rep.size() != word.length() || v.size() != static_cast<std::size_t>(word.strands()))
    throw std::invalid_argument("length mismatch in left_braided");
  Vec tracked = v;
  Vec out(rep.size());
  for (std::size_t j = 0; j < word.length(); ++j) {
    std::size_t k = word.gen(j) - 1;
    std::swap(tracked[k], tracked[k + 1]);
    out[j] = field.mul(tracked[k + 1], rep[j]);
  }
  return out;
}

ExtClass compose(const GradedHom& hom_fg, const GradedHom& hom_gq, const GradedHom& hom_fq,
                 const ExtClass& b, const ExtClass& a) {
  check_same_braid(hom_fg.delta(), hom_gq.delta(), "compose");
  check_same_braid(hom_fg.delta(), hom_fq.delta(), "compose");
  const Field& f = hom_fq.field();
  const BraidWord& word = hom_fq.delta().braid;

  int total = a.degree() + b.degree();
  if (total >= 2)
    throw DegreeError(
        "cannot compose classes of total degree 2: Ext^2 vanishes "
        "(hereditary property), so only total degree <= 1 is defined");

  if (a.degree() == 0 && !is_zero_vec(f, hom_fg.delta().matrix.apply(a.payload())))
    throw std::invalid_argument("degree-0 class is not in the kernel of its pair map");
  if (b.degree() == 0 && !is_zero_vec(f, hom_gq.delta().matrix.apply(b.payload())))
    throw std::invalid_argument("degree-0 class is not in the kernel of its pair map");

  if (a.degree() == 0 && b.degree() == 0) {
    Vec product = hadamard(f, b.payload(), a.payload());
    if (!is_zero_vec(f, hom_fq.delta().matrix.apply(product)))
      throw std::logic_error("Hadamard product escaped the kernel of the outer pair");
    return ExtClass::degree0(std::move(product));
  }
  if (b.degree() == 1) {  // degree (1,0): b's representative acted on by a
    return ExtClass::degree1(right_braided(f, word, b.payload(), a.payload()), hom_fq);
  }
  // degree (0,1): b acts on a's representative
  return ExtClass::degree1(left_braided(f, word, b.payload(), a.payload()), hom_fq);
}

}  // namespace legcat
