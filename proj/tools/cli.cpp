#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "legcat/json_io.hpp"
#include "legcat/reference.hpp"

namespace legcat::cli {
namespace {

struct CommonOpts {
  std::string field_spec = "2";
  std::string braid_spec;
  std::uint64_t budget = kDefaultBudget;
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool braid_required) {
  cmd->add_option("--field", opts.field_spec, "Field: a prime p, or Q for the rationals");
  CLI::Option* braid = cmd->add_option("--braid", opts.braid_spec,
                                       "Braid word, e.g. \"n=3; w=1,2,1\"");
  if (braid_required) braid->required();
  cmd->add_option("--budget", opts.budget, "Field-multiplication budget for enumeration");
  cmd->add_option("--format", opts.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--seed", opts.seed, "Seed for randomized checks");
  cmd->add_option("--threads", opts.threads, "Worker threads for enumeration");
}

std::uint64_t env_budget() {
  if (const char* env = std::getenv("LEGCAT_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

Field parse_field(const std::string& spec) {
  if (spec == "Q" || spec == "q") return Field::rationals();
  try {
    return Field::prime(std::stoll(spec));
  } catch (const FieldError&) {
    throw ParseError("field spec must be a prime or Q: '" + spec + "'");
  } catch (const std::exception&) {
    throw ParseError("field spec must be a prime or Q: '" + spec + "'");
  }
}

// Accepts "(a, b, c)" or "a,b,c"; entries are integers or fractions. The
// empty tuple is "()" or "".
Vec parse_tuple(const Field& field, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '(') {
    if (s.back() != ')') throw ParseError("unbalanced parentheses in tuple: '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  Vec out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = s.find(',', start);
    out.push_back(field.parse(s.substr(start, comma == std::string::npos ? comma
                                                                         : comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

void print_report_text(const Report& report, std::ostream& out) {
  for (const CheckRecord& rec : report.records) {
    out << (rec.pass ? "  ok   " : "  FAIL ") << rec.name;
    if (!rec.detail.empty()) out << "  [" << rec.detail << "]";
    out << "\n";
  }
  out << report.suite << ": " << (report.records.size() - report.failure_count()) << "/"
      << report.records.size() << " checks passed\n";
}

int finish_report(const Report& report, const CommonOpts& opts, std::ostream& out) {
  if (opts.format == "json")
    out << report_to_json(report).dump(2) << "\n";
  else
    print_report_text(report, out);
  return report.all_pass() ? kExitOk : kExitVerifyFailed;
}

int run_variety(const CommonOpts& opts, bool reduced, std::ostream& out) {
  Field field = parse_field(opts.field_spec);
  if (!field.is_prime_field())
    throw ParseError("enumeration requires a finite field; Q is pointwise only");
  BraidWord word = BraidWord::parse(opts.braid_spec);
  EnumerateOptions eopts{opts.budget, opts.threads};
  std::vector<VarietyPoint> points = reduced ? enumerate_reduced(field, word, eopts)
                                             : enumerate_variety(field, word, eopts);
  if (opts.format == "json") {
    nlohmann::json doc{{"braid", braid_to_json(word)},
                       {"field", field_to_json(field)},
                       {"points", points_to_json(field, points)}};
    out << doc.dump(2) << "\n";
  } else {
    for (const VarietyPoint& p : points) out << str(field, p.coords) << "\n";
    out << points.size() << (reduced ? " reduced" : "") << " point"
        << (points.size() == 1 ? "" : "s") << "\n";
  }
  return kExitOk;
}

int run_ext(const CommonOpts& opts, const std::string& x_spec, const std::string& y_spec,
            std::ostream& out) {
  Field field = parse_field(opts.field_spec);
  BraidWord word = BraidWord::parse(opts.braid_spec);
  Vec x = parse_tuple(field, x_spec);
  Vec y = parse_tuple(field, y_spec);
  SheafObject source(field, word, VarietyPoint{x});
  SheafObject target(field, word, VarietyPoint{y});
  GradedHom hom = graded_hom(source, target);

  if (opts.format == "json") {
    nlohmann::json doc{{"braid", braid_to_json(word)},
                       {"field", field_to_json(field)},
                       {"points", points_to_json(field, {VarietyPoint{x}, VarietyPoint{y}})},
                       {"homs", nlohmann::json::array({hom_to_json(field, hom, 0, 1)})}};
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "pair: " << str(field, x) << " -> " << str(field, y) << "\n";
  out << "ext0 dim: " << hom.ext0_dim() << "\n";
  for (const Vec& v : hom.ext0_basis()) out << "  ext0 basis: " << str(field, v) << "\n";
  out << "ext1 dim: " << hom.ext1_dim() << "\n";
  out << "complement rows:";
  for (std::size_t r : hom.complement_rows()) out << " " << (r + 1);
  out << "\n";
  out << "euler characteristic: " << euler_characteristic(hom) << "\n";
  return kExitOk;
}

int run_compose(const CommonOpts& opts, const std::array<std::string, 3>& point_specs,
                const std::string& degrees_spec, const std::string& b_spec,
                const std::string& a_spec, std::ostream& out) {
  Field field = parse_field(opts.field_spec);
  BraidWord word = BraidWord::parse(opts.braid_spec);

  Vec degrees_raw = parse_tuple(Field::rationals(), degrees_spec);
  if (degrees_raw.size() != 2 || degrees_raw[0].den != 1 || degrees_raw[1].den != 1)
    throw ParseError("--degrees wants two integers: deg_b,deg_a");
  int deg_b = static_cast<int>(degrees_raw[0].num);
  int deg_a = static_cast<int>(degrees_raw[1].num);
  if (deg_b < 0 || deg_b > 1 || deg_a < 0 || deg_a > 1 || deg_b + deg_a > 1)
    throw DegreeError("degree pair (" + std::to_string(deg_b) + "," + std::to_string(deg_a) +
                      ") has total degree 2: Ext^2 vanishes (hereditary property), so "
                      "only total degree <= 1 is defined");

  SheafObject f(field, word, VarietyPoint{parse_tuple(field, point_specs[0])});
  SheafObject g(field, word, VarietyPoint{parse_tuple(field, point_specs[1])});
  SheafObject q(field, word, VarietyPoint{parse_tuple(field, point_specs[2])});
  GradedHom hom_fg = graded_hom(f, g);
  GradedHom hom_gq = graded_hom(g, q);
  GradedHom hom_fq = graded_hom(f, q);

  auto build_class = [&](const GradedHom& hom, int degree, const std::string& spec,
                         const char* which) {
    Vec coords = parse_tuple(field, spec);
    const std::vector<Vec> basis =
        degree == 0 ? hom.ext0_basis() : hom.complement_basis();
    if (coords.size() != basis.size())
      throw ParseError(std::string(which) + " coordinates want length " +
                       std::to_string(basis.size()));
    Vec v(degree == 0 ? word.strands() : word.length(), field.zero());
    for (std::size_t i = 0; i < basis.size(); ++i)
      v = add(field, v, scale(field, coords[i], basis[i]));
    return degree == 0 ? ExtClass::degree0(v) : ExtClass::degree1(v, hom);
  };
  ExtClass b = build_class(hom_gq, deg_b, b_spec, "--b");
  ExtClass a = build_class(hom_fg, deg_a, a_spec, "--a");
  ExtClass result = compose(hom_fg, hom_gq, hom_fq, b, a);

  Vec coords;
  if (result.degree() == 0) {
    auto in_basis = coordinates_in_span(field, hom_fq.ext0_basis(), result.payload());
    if (!in_basis) throw std::logic_error("composed kernel vector outside the kernel basis");
    coords = *in_basis;
  } else {
    coords = hom_fq.reducer().reduce(result.payload());
  }

  if (opts.format == "json") {
    nlohmann::json doc{{"braid", braid_to_json(word)},
                       {"field", field_to_json(field)},
                       {"degree", result.degree()},
                       {"coords", vec_to_json(field, coords)}};
    if (result.degree() == 1)
      doc["representative"] = vec_to_json(field, result.payload());
    out << doc.dump(2) << "\n";
    return kExitOk;
  }
  out << "degree: " << result.degree() << "\n";
  out << "class coordinates: " << str(field, coords) << "\n";
  if (result.degree() == 1)
    out << "representative: " << str(field, result.payload()) << "\n";
  return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& suite, std::size_t sample,
               std::ostream& out) {
  Field field = parse_field(opts.field_spec);
  EnumerateOptions eopts{opts.budget, opts.threads};
  if (suite == "tables") {
    return finish_report(reference::verify_reference_tables(field), opts, out);
  }
  if (opts.braid_spec.empty())
    throw ParseError("verify " + suite + " needs --braid");
  BraidWord word = BraidWord::parse(opts.braid_spec);
  if (suite == "euler")
    return finish_report(verify_euler(field, word, sample, opts.seed, eopts), opts, out);
  if (suite == "knot")
    return finish_report(knot_dimension_check(field, word, eopts), opts, out);
  if (suite == "composition-laws") {
    Report combined{"composition-laws", {}};
    for (const Report& part :
         {well_definedness_suite(field, word, sample, opts.seed, eopts),
          category_laws_suite(field, word, sample, opts.seed, eopts)}) {
      combined.records.insert(combined.records.end(), part.records.begin(),
                              part.records.end());
    }
    return finish_report(combined, opts, out);
  }
  throw ParseError("unknown verify suite: '" + suite + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Braid-variety sheaf category calculator"};
  app.require_subcommand(1);

  CommonOpts variety_opts, ext_opts, compose_opts, verify_opts;
  variety_opts.budget = ext_opts.budget = compose_opts.budget = verify_opts.budget =
      env_budget();

  CLI::App* variety = app.add_subcommand("variety", "Enumerate braid-variety points");
  add_common(variety, variety_opts, true);
  bool reduced = false;
  variety->add_flag("--reduced", reduced, "Only points with all leading minors equal to 1");

  CLI::App* ext = app.add_subcommand("ext", "Graded hom data for an ordered pair of points");
  add_common(ext, ext_opts, true);
  std::string x_spec, y_spec;
  ext->add_option("--x", x_spec, "Source point, e.g. \"(0,1,0)\"")->required();
  ext->add_option("--y", y_spec, "Target point")->required();

  CLI::App* comp = app.add_subcommand("compose", "Compose two morphism classes");
  add_common(comp, compose_opts, true);
  std::array<std::string, 3> point_specs;
  std::string degrees_spec, b_spec, a_spec;
  comp->add_option("--px", point_specs[0], "Point of the source object")->required();
  comp->add_option("--py", point_specs[1], "Point of the middle object")->required();
  comp->add_option("--pz", point_specs[2], "Point of the target object")->required();
  comp->add_option("--degrees", degrees_spec, "deg_b,deg_a (b composes after a)")->required();
  comp->add_option("--b", b_spec, "Coordinates of b in its basis")->required();
  comp->add_option("--a", a_spec, "Coordinates of a in its basis")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify, verify_opts, false);
  std::string suite;
  verify->add_option("suite", suite, "euler | knot | tables | composition-laws")->required();
  std::size_t sample = 0;
  verify->add_option("--sample", sample, "Random sample size (0 = exhaustive)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }

  try {
    if (variety->parsed()) return run_variety(variety_opts, reduced, out);
    if (ext->parsed()) return run_ext(ext_opts, x_spec, y_spec, out);
    if (comp->parsed())
      return run_compose(compose_opts, point_specs, degrees_spec, b_spec, a_spec, out);
    return run_verify(verify_opts, suite, sample, out);
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const NonMemberError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidPoint;
  } catch (const DegreeError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIllegalDegree;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const FieldError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
}

}  // namespace legcat::cli
