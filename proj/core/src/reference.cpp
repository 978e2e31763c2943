#include "legcat/reference.hpp"

namespace legcat::reference {
namespace {

std::array<int, 2> hopf_dims(int i, int j) {
  if (i == 0 && j == 0) return {2, 2};
  return {1, 1};
}

std::array<int, 2> trefoil_dims(int i, int j) {
  if (i == j) return {1, 2};
  return {0, 1};
}

// Structure constants of a diagonal rule out[r][s] = delta_{rs} e_r.
std::vector<std::vector<std::vector<int>>> diagonal_rule(int dim_b, int dim_a, int dim_out) {
  std::vector<std::vector<std::vector<int>>> out(
      dim_b, std::vector<std::vector<int>>(dim_a, std::vector<int>(dim_out, 0)));
  for (int r = 0; r < dim_b && r < dim_a && r < dim_out; ++r) out[r][r][r] = 1;
  return out;
}

std::vector<std::vector<std::vector<int>>> zero_rule(int dim_b, int dim_a, int dim_out) {
  return std::vector<std::vector<std::vector<int>>>(
      dim_b, std::vector<std::vector<int>>(dim_a, std::vector<int>(dim_out, 0)));
}

WorkedExample build_hopf() {
  WorkedExample ex;
  ex.name = "hopf";
  ex.braid_spec = "n=3; w=1,2,1";
  ex.points = {{0, 1, 0}, {0, 1, 1}, {1, 1, 0}};
  ex.dims = hopf_dims;

  ex.bases = {
      {0, 0, {{0, 1, 0}, {1, 0, 1}}, {{1, 0, 0}, {0, 0, 1}}},
      {1, 1, {{1, 1, 1}}, {{1, 0, 0}}},
      {2, 2, {{1, 1, 1}}, {{0, 0, 1}}},
      {2, 0, {{0, 1, 0}}, {{0, 0, 1}}},
      {0, 1, {{0, 1, 0}}, {{1, 0, 0}}},
      {2, 1, {{0, 1, 0}}, {{1, 1, 1}}},
  };

  // Endomorphism table of the first object: diagonal products in degrees
  // (0,0) and (1,0), crossed products in degree (0,1).
  CompositionRow endo1_00{"hopf endo F1 (0,0)", 0, 0, 0, 0, 0, diagonal_rule(2, 2, 2)};
  CompositionRow endo1_10{"hopf endo F1 (1,0)", 0, 0, 0, 1, 0, diagonal_rule(2, 2, 2)};
  CompositionRow endo1_01{"hopf endo F1 (0,1)", 0, 0, 0, 0, 1, zero_rule(2, 2, 2)};
  endo1_01.expected[1][0][0] = 1;  // second degree-0 generator acts on the first
  endo1_01.expected[0][1][1] = 1;  // first degree-0 generator acts on the second

  CompositionRow endo2_00{"hopf endo F2 (0,0)", 1, 1, 1, 0, 0, diagonal_rule(1, 1, 1)};
  CompositionRow endo2_10{"hopf endo F2 (1,0)", 1, 1, 1, 1, 0, diagonal_rule(1, 1, 1)};
  CompositionRow endo2_01{"hopf endo F2 (0,1)", 1, 1, 1, 0, 1, diagonal_rule(1, 1, 1)};
  CompositionRow endo3_00{"hopf endo F3 (0,0)", 2, 2, 2, 0, 0, diagonal_rule(1, 1, 1)};
  CompositionRow endo3_10{"hopf endo F3 (1,0)", 2, 2, 2, 1, 0, diagonal_rule(1, 1, 1)};
  CompositionRow endo3_01{"hopf endo F3 (0,1)", 2, 2, 2, 0, 1, diagonal_rule(1, 1, 1)};

  // Ordered triple (F3, F1, F2). The printed mixed rows are zero maps.
  CompositionRow triple_00{"hopf triple (0,0)", 2, 0, 1, 0, 0, diagonal_rule(1, 1, 1)};
  CompositionRow triple_10{"hopf triple (1,0)", 2, 0, 1, 1, 0, zero_rule(1, 1, 1)};
  CompositionRow triple_01{"hopf triple (0,1)", 2, 0, 1, 0, 1, zero_rule(1, 1, 1)};

  ex.compositions = {endo1_00, endo1_10, endo1_01, endo2_00, endo2_10, endo2_01,
                     endo3_00, endo3_10, endo3_01, triple_00, triple_10, triple_01};
  return ex;
}

WorkedExample build_trefoil() {
  WorkedExample ex;
  ex.name = "trefoil";
  ex.braid_spec = "n=3; w=1,2,1,2";
  ex.points = {{0, 1, 0, 1}, {0, 1, 1, 0}, {1, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 0, 1}};
  ex.dims = trefoil_dims;

  // Only the pairs whose printed generators feed the composition tables; the
  // remaining pairs are pinned by the dimension dichotomy alone.
  ex.bases = {
      {0, 0, {{1, 1, 1}}, {{1, 0, 0, 0}, {0, 0, 1, 0}}},
      {0, 1, {}, {{1, 0, 0, 0}}},
      {1, 2, {}, {{0, 0, 0, 1}}},
  };

  CompositionRow endo1_00{"trefoil endo F1 (0,0)", 0, 0, 0, 0, 0, diagonal_rule(1, 1, 1)};
  CompositionRow endo1_10{"trefoil endo F1 (1,0)", 0, 0, 0, 1, 0, zero_rule(2, 1, 2)};
  endo1_10.expected[0][0] = {1, 0};
  endo1_10.expected[1][0] = {0, 1};
  CompositionRow endo1_01{"trefoil endo F1 (0,1)", 0, 0, 0, 0, 1, zero_rule(1, 2, 2)};
  endo1_01.expected[0][0] = {1, 0};
  endo1_01.expected[0][1] = {0, 1};

  // Ordered triple (F1, F2, F3): every degree-0 space vanishes, so all three
  // printed rows are compositions with a zero space.
  CompositionRow distinct_00{"trefoil triple distinct (0,0)", 0, 1, 2, 0, 0, {}};
  CompositionRow distinct_10{"trefoil triple distinct (1,0)", 0, 1, 2, 1, 0, {}};
  CompositionRow distinct_01{"trefoil triple distinct (0,1)", 0, 1, 2, 0, 1, {}};

  // Ordered triple (F1, F1, F2).
  CompositionRow repeat_00{"trefoil triple repeated (0,0)", 0, 0, 1, 0, 0, {}};
  CompositionRow repeat_10{"trefoil triple repeated (1,0)", 0, 0, 1, 1, 0,
                           diagonal_rule(1, 1, 1)};
  CompositionRow repeat_01{"trefoil triple repeated (0,1)", 0, 0, 1, 0, 1, {}};

  ex.compositions = {endo1_00,    endo1_10,    endo1_01,  distinct_00, distinct_10,
                     distinct_01, repeat_00,   repeat_10, repeat_01};
  return ex;
}

Vec to_vec(const Field& field, const std::vector<int>& values) {
  Vec out;
  out.reserve(values.size());
  for (int v : values) out.push_back(field.from_integer(v));
  return out;
}

void require_binary(const Field& field) {
  if (!field.is_prime_field() || field.characteristic() != 2)
    throw std::invalid_argument("reference tables are stated over the two-element field");
}

GradedHom hom_for(const Field& field, const BraidWord& word, const WorkedExample& ex, int i,
                  int j) {
  return GradedHom(
      delta_matrix(field, word, to_vec(field, ex.points[i]), to_vec(field, ex.points[j])));
}

}  // namespace

const WorkedExample& hopf_example() {
  static const WorkedExample ex = build_hopf();
  return ex;
}

const WorkedExample& trefoil_example() {
  static const WorkedExample ex = build_trefoil();
  return ex;
}

Report check_points(const Field& field, const WorkedExample& example) {
  require_binary(field);
  Report report{example.name + " points", {}};
  BraidWord word = BraidWord::parse(example.braid_spec);
  std::vector<VarietyPoint> expected;
  for (const auto& p : example.points) expected.push_back(VarietyPoint{to_vec(field, p)});
  std::vector<VarietyPoint> got = enumerate_variety(field, word);
  CheckRecord rec{example.name + " variety enumeration", got == expected, ""};
  if (!rec.pass) {
    rec.detail = "enumerated " + std::to_string(got.size()) + " points, expected " +
                 std::to_string(expected.size());
  }
  report.records.push_back(std::move(rec));
  return report;
}

Report check_hom_tables(const Field& field, const WorkedExample& example) {
  require_binary(field);
  Report report{example.name + " hom tables", {}};
  BraidWord word = BraidWord::parse(example.braid_spec);
  int count = static_cast<int>(example.points.size());

  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < count; ++j) {
      GradedHom hom = hom_for(field, word, example, i, j);
      std::array<int, 2> want = example.dims(i, j);
      CheckRecord rec;
      rec.name = example.name + " dims (" + std::to_string(i + 1) + "," +
                 std::to_string(j + 1) + ")";
      rec.pass = static_cast<int>(hom.ext0_dim()) == want[0] &&
                 static_cast<int>(hom.ext1_dim()) == want[1];
      if (!rec.pass)
        rec.detail = "got (" + std::to_string(hom.ext0_dim()) + ", " +
                     std::to_string(hom.ext1_dim()) + "), expected (" +
                     std::to_string(want[0]) + ", " + std::to_string(want[1]) + ")";
      report.records.push_back(std::move(rec));
    }
  }

  for (const PairBases& pb : example.bases) {
    GradedHom hom = hom_for(field, word, example, pb.source, pb.target);
    std::string pair = "(" + std::to_string(pb.source + 1) + "," +
                       std::to_string(pb.target + 1) + ")";

    std::vector<Vec> want0;
    for (const auto& v : pb.ext0) want0.push_back(to_vec(field, v));
    report.records.push_back(
        CheckRecord{example.name + " ext0 basis " + pair, hom.ext0_basis() == want0, ""});

    bool ext1_ok = pb.ext1.size() == hom.ext1_dim();
    std::vector<Vec> complement = hom.complement_basis();
    for (std::size_t t = 0; ext1_ok && t < pb.ext1.size(); ++t) {
      Vec printed = to_vec(field, pb.ext1[t]);
      ext1_ok = hom.reducer().normal_form(printed) == hom.reducer().normal_form(complement[t]);
    }
    report.records.push_back(CheckRecord{
        example.name + " ext1 generators mod image " + pair, ext1_ok, ""});
  }
  return report;
}

Report check_compositions(const Field& field, const WorkedExample& example) {
  require_binary(field);
  Report report{example.name + " compositions", {}};
  BraidWord word = BraidWord::parse(example.braid_spec);

  auto printed_bases = [&](int i, int j) -> const PairBases* {
    for (const PairBases& pb : example.bases)
      if (pb.source == i && pb.target == j) return &pb;
    return nullptr;
  };

  for (const CompositionRow& row : example.compositions) {
    GradedHom hom_fg = hom_for(field, word, example, row.f, row.g);
    GradedHom hom_gq = hom_for(field, word, example, row.g, row.q);
    GradedHom hom_fq = hom_for(field, word, example, row.f, row.q);
    const PairBases* fg = printed_bases(row.f, row.g);
    const PairBases* gq = printed_bases(row.g, row.q);
    const PairBases* fq = printed_bases(row.f, row.q);

    std::size_t dim_b = row.degree_b == 0 ? hom_gq.ext0_dim() : hom_gq.ext1_dim();
    std::size_t dim_a = row.degree_a == 0 ? hom_fg.ext0_dim() : hom_fg.ext1_dim();
    if (dim_b == 0 || dim_a == 0) {
      // Composition against a zero space: nothing to compare.
      report.records.push_back(CheckRecord{row.label + " [zero space]", true, ""});
      continue;
    }

    auto input_gen = [&](const PairBases* pb, const GradedHom& hom, int degree,
                         std::size_t idx) -> Vec {
      if (pb) {
        const auto& printed = degree == 0 ? pb->ext0 : pb->ext1;
        return to_vec(field, printed.at(idx));
      }
      return degree == 0 ? hom.ext0_basis().at(idx) : hom.complement_basis().at(idx);
    };

    bool pass = true;
    std::string detail;
    for (std::size_t r = 0; pass && r < dim_b; ++r) {
      for (std::size_t s = 0; pass && s < dim_a; ++s) {
        ExtClass b = row.degree_b == 0
                         ? ExtClass::degree0(input_gen(gq, hom_gq, 0, r))
                         : ExtClass::degree1(input_gen(gq, hom_gq, 1, r), hom_gq);
        ExtClass a = row.degree_a == 0
                         ? ExtClass::degree0(input_gen(fg, hom_fg, 0, s))
                         : ExtClass::degree1(input_gen(fg, hom_fg, 1, s), hom_fg);
        ExtClass got = compose(hom_fg, hom_gq, hom_fq, b, a);

        int out_degree = row.degree_b + row.degree_a;
        std::size_t dim_out = out_degree == 0 ? hom_fq.ext0_dim() : hom_fq.ext1_dim();
        Vec expected(out_degree == 0 ? word.strands() : word.length(), field.zero());
        for (std::size_t t = 0; t < dim_out; ++t) {
          if (row.expected.at(r).at(s).at(t) == 0) continue;
          Scalar coeff = field.from_integer(row.expected[r][s][t]);
          Vec gen = input_gen(fq, hom_fq, out_degree, t);
          expected = add(field, expected, scale(field, coeff, gen));
        }

        bool equal = out_degree == 0
                         ? got.payload() == expected
                         : got.normal_form() == hom_fq.reducer().normal_form(expected);
        if (!equal) {
          pass = false;
          detail = "generator pair (" + std::to_string(r + 1) + "," +
                   std::to_string(s + 1) + "): computed class " +
                   str(field, out_degree == 0 ? got.payload()
                                              : hom_fq.reducer().reduce(got.payload())) +
                   " differs from printed " +
                   str(field, out_degree == 0 ? expected : hom_fq.reducer().reduce(expected));
        }
      }
    }
    report.records.push_back(CheckRecord{row.label, pass, detail});
  }
  return report;
}

Report verify_reference_tables(const Field& field) {
  Report combined{"tables", {}};
  for (const WorkedExample* ex : {&hopf_example(), &trefoil_example()}) {
    for (const Report& part : {check_points(field, *ex), check_hom_tables(field, *ex),
                               check_compositions(field, *ex)}) {
      combined.records.insert(combined.records.end(), part.records.begin(),
                              part.records.end());
    }
  }
  return combined;
}

}  // namespace legcat::reference
