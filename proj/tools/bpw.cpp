#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpw/serialize.hpp"

namespace {

using nlohmann::json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kBadArgs = 2;

// Raised for argument combinations CLI11 cannot validate on its own.
struct BadArgs : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Common {
  bool quiet = false;
  bool no_cap = false;
};

// Human-readable report text goes to stderr; stdout carries the machine format.
std::ostream& report(const Common& common) {
  static std::ostringstream sink;
  if (common.quiet) {
    sink.str("");
    return sink;
  }
  return std::cerr;
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

bpw::WeightSystem weights_arg(const std::string& text, const Common& common) {
  if (text.empty()) throw BadArgs("missing weight list (-p)");
  bpw::WeightSystem ws = bpw::WeightSystem::parse(text);
  if (!common.no_cap && ws.cuboid_size() > 512) {
    throw BadArgs("prod(p_i - 1) = " + std::to_string(ws.cuboid_size()) + " exceeds 512; pass --no-cap to override");
  }
  return ws;
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    size_t used = 0;
    out.push_back(std::stoi(item, &used));
    if (used != item.size()) throw BadArgs("bad integer '" + item + "'");
  }
  return out;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream os(path);
  if (!os) throw BadArgs("cannot write " + path);
  os << body;
}

std::vector<std::string> labels(const std::vector<bpw::StableObject>& objs) {
  std::vector<std::string> out;
  for (const auto& o : objs) out.push_back(o.to_string());
  return out;
}

void print_matrix(std::ostream& os, const bpw::IntMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) os << std::setw(3) << m.at(r, c);
    os << '\n';
  }
}

int cmd_describe(const Common& common, const std::string& p) {
  const bpw::WeightSystem ws = weights_arg(p, common);
  const bpw::Specials sp = bpw::specials(ws);
  std::vector<int> lo(static_cast<size_t>(ws.n()), 0), hi;
  for (int i = 0; i < ws.n(); ++i) hi.push_back(ws.p(i) - 2);
  std::vector<bpw::GradeElement> degrees = bpw::box(ws, lo, hi);
  degrees.push_back(sp.c);
  degrees.push_back(sp.omega);
  json dims = json::array();
  std::ostream& os = report(common);
  os << "weights " << ws.to_string() << ", n = " << ws.n() << ", cuboid size " << ws.cuboid_size() << '\n'
     << "c = " << sp.c.pretty() << ", omega = " << sp.omega.pretty() << ", delta = " << sp.delta.pretty()
     << ", s = " << sp.s.pretty() << '\n'
     << std::left << std::setw(24) << "degree" << std::setw(8) << "dim_R" << "dim_S\n";
  for (const auto& x : degrees) {
    dims.push_back({{"degree", x}, {"text", x.pretty()}, {"dim_R", bpw::dim_R(x)}, {"dim_S", bpw::dim_S(x)}});
    os << std::setw(24) << x.pretty() << std::setw(8) << bpw::dim_R(x) << bpw::dim_S(x) << '\n';
  }
  emit({{"weights", ws},
        {"n", ws.n()},
        {"specials", {{"c", sp.c}, {"omega", sp.omega}, {"delta", sp.delta}, {"s", sp.s}}},
        {"cuboid_size", ws.cuboid_size()},
        {"dims", dims}});
  return kPass;
}

int cmd_tilt(const Common& common, const std::string& p, const std::string& kind) {
  const bpw::TiltingFamily fam = bpw::make_family(weights_arg(p, common), bpw::FamilySpec::parse(kind));
  std::ostream& os = report(common);
  os << fam.spec.to_string() << " family over " << fam.weights.to_string() << ", " << fam.objects.size()
     << " summands\n";
  for (size_t i = 0; i < fam.objects.size(); ++i) os << "  " << i << "  " << fam.objects[i].to_string() << '\n';
  emit(fam);
  return kPass;
}

int cmd_endo(const Common& common, const std::string& p, const std::string& kind, const std::string& csv,
             const std::string& diff_csv) {
  const bpw::WeightSystem ws = weights_arg(p, common);
  const bpw::TiltingFamily fam = bpw::make_family(ws, bpw::FamilySpec::parse(kind));
  bpw::IntMatrix h;
  try {
    h = bpw::hom_matrix(fam);
  } catch (const bpw::UnknownHom& e) {
    report(common) << e.what() << '\n';
    emit({{"weights", ws}, {"kind", fam.spec}, {"error", e.what()}, {"equal", false}});
    return kFail;
  }
  const bpw::IntMatrix predicted = bpw::expected_cartan(ws, fam.spec);
  const bpw::IntMatrix diff = h - predicted;
  const bool equal = diff.is_zero();
  const std::vector<std::string> names = labels(fam.objects);
  if (!csv.empty()) write_file(csv, bpw::to_csv(h, names));
  if (!diff_csv.empty()) write_file(diff_csv, bpw::to_csv(diff, names));
  std::ostream& os = report(common);
  os << "hom_matrix (" << fam.spec.to_string() << " over " << ws.to_string() << "):\n";
  print_matrix(os, h);
  os << (equal ? "equals the predicted Cartan matrix\n" : "differs from the predicted Cartan matrix:\n");
  if (!equal) print_matrix(os, diff);
  emit({{"weights", ws},
        {"kind", fam.spec},
        {"objects", names},
        {"hom_matrix", h},
        {"predicted", predicted},
        {"diff", diff},
        {"equal", equal}});
  return equal ? kPass : kFail;
}

int cmd_verify(const Common& common, const std::string& p, const std::string& kind, const std::string& window) {
  const bpw::WeightSystem ws = weights_arg(p, common);
  const bpw::TiltingFamily fam = bpw::make_family(ws, bpw::FamilySpec::parse(kind));
  bpw::ShiftWindow w = bpw::ShiftWindow::for_weights(ws);
  if (!window.empty()) {
    const std::vector<int> v = int_list(window);
    if (v.size() != 2 || v[0] > v[1]) throw BadArgs("--window expects lo,hi");
    w = {v[0], v[1]};
  }
  const bpw::TiltingReport rep = bpw::verify_tilting(fam.objects, w);
  std::ostream& os = report(common);
  os << fam.spec.to_string() << " over " << ws.to_string() << ", window [" << w.lo << ", " << w.hi
     << "]: rigid " << rep.rigid << ", exceptional " << rep.exceptional << ", ordered " << rep.ordered
     << ", unknown " << rep.unknown_pairs.size() << '\n';
  for (const auto& f : rep.rigidity_failures) os << "  " << f << '\n';
  json j = rep;
  j["weights"] = ws;
  j["kind"] = fam.spec;
  j["window"] = {w.lo, w.hi};
  emit(j);
  return rep.passed() ? kPass : kFail;
}

int cmd_ladder(const Common& common, const std::string& p, int split, const bpw::RecollementWindow& window) {
  const bpw::WeightSystem ws = weights_arg(p, common);
  const bpw::Ladder ladder = bpw::Ladder::build(ws, split);
  const bpw::RecollementReport rep = bpw::check_recollement(ladder, window, bpw::WorkingField::from_env());
  report(common) << "ladder " << rep.weights << " split (" << rep.p1n << "," << rep.p2n
                 << "): composite-zero " << rep.composite_zero << ", fully faithful " << rep.fully_faithful()
                 << " (" << rep.fully_faithful_samples.size() << " samples), periodicity " << rep.periodicity
                 << ", partition " << rep.partition << ", adjunction " << rep.adjunction_ok() << " ("
                 << rep.adjunction.size() << " samples)\n";
  emit(rep);
  return rep.passed() ? kPass : kFail;
}

struct GlueArgs {
  std::string preset;
  std::string p;
  int split = 0;
  int k2 = 0;
  std::string kind1 = "cuboid";
  std::string kind2 = "cuboid";
  std::string expect;
};

int cmd_glue(const Common& common, const GlueArgs& a) {
  std::optional<bpw::GluePreset> preset;
  if (!a.preset.empty()) {
    preset = bpw::glue_preset(a.preset);
  } else {
    const bpw::WeightSystem ws = weights_arg(a.p, common);
    if (a.split == 0) throw BadArgs("custom gluing needs --split");
    bpw::Ladder ladder = bpw::Ladder::build(ws, a.split);
    auto t1 = bpw::make_family(ladder.reduced(1), bpw::FamilySpec::parse(a.kind1)).objects;
    auto t2 = bpw::make_family(ladder.reduced(2), bpw::FamilySpec::parse(a.kind2)).objects;
    const int k1 = a.k2 + ladder.q() - 1;
    bpw::FamilySpec expect = a.expect.empty() ? bpw::FamilySpec::cuboid() : bpw::FamilySpec::parse(a.expect);
    preset = bpw::GluePreset{std::move(ladder), std::move(t1), std::move(t2), k1, a.k2, expect};
  }
  const bool check_expect = !a.preset.empty() || !a.expect.empty();
  const bpw::GlueResult res = bpw::glue(preset->ladder, preset->t1, preset->t2, preset->k1, preset->k2);
  const bpw::TiltingReport tilt = bpw::verify_tilting(res.objects, bpw::ShiftWindow::for_weights(preset->ladder.full()));
  const bool matches =
      !check_expect || bpw::same_family(res.objects, bpw::make_family(preset->ladder.full(), preset->expect).objects);
  std::ostream& os = report(common);
  os << "glue over " << preset->ladder.full().to_string() << " with k1 = " << preset->k1 << ", k2 = " << preset->k2
     << ": " << res.objects.size() << " objects, obstructions " << res.report.obstructions.size()
     << ", tilting " << tilt.passed();
  if (check_expect) os << ", equals " << preset->expect.to_string() << " family " << matches;
  os << '\n';
  for (const auto& o : res.objects) os << "  " << o.to_string() << '\n';
  json j{{"weights", preset->ladder.full()},
         {"split", {preset->ladder.pjn(1), preset->ladder.pjn(2)}},
         {"objects", res.objects},
         {"report", res.report},
         {"tilting", tilt}};
  if (check_expect) {
    j["expect"] = preset->expect;
    j["matches_expect"] = matches;
  }
  emit(j);
  return res.report.passed() && tilt.passed() && matches ? kPass : kFail;
}

int cmd_coxeter(const Common& common, const std::string& suite) {
  const std::vector<bpw::InvariantCheck> checks = bpw::coxeter_suite(bpw::parse_suite(suite));
  std::ostream& os = report(common);
  bool all = true;
  for (const auto& c : checks) {
    all = all && c.equal();
    os << (c.equal() ? "equal  " : "DIFFER ") << c.label << '\n';
    for (size_t i = 0; i < c.names.size(); ++i) {
      os << "    " << std::left << std::setw(28) << c.names[i] << " |det| " << std::setw(4) << c.abs_dets[i] << ' '
         << c.polys[i].to_string() << '\n';
    }
  }
  emit({{"suite", suite}, {"checks", checks}, {"passed", all}});
  return all ? kPass : kFail;
}

int cmd_oracle_check(const Common& common, const std::string& p, const bpw::AuditWindow& window) {
  const bpw::WeightSystem ws = weights_arg(p, common);
  const bpw::AuditReport rep = bpw::audit_calculus(ws, window, bpw::WorkingField::from_env());
  std::ostream& os = report(common);
  os << "calculus vs oracle over " << rep.weights << " (" << rep.field << "): " << rep.pairs << " pairs, "
     << rep.agree << " agree, " << rep.disagree << " disagree, " << rep.unknown << " unknown, "
     << rep.configuration_unknown << " settled along the ladder\n";
  for (const auto& d : rep.disagreements) {
    os << "  Hom(" << d.a << ", " << d.b << "): calculus " << d.calculus << ", oracle " << d.oracle
       << (d.oracle_field_stable ? "" : " (oracle depends on the field)") << '\n';
  }
  emit(rep);
  return rep.passed() ? kPass : kFail;
}

struct QuiverArgs {
  std::string p;
  std::string lambda;
  int gamma = -1;
  std::string nakayama;
  std::string dynkin;
  bool dot = false;
  std::string csv;
};

bpw::AlgebraPresentation quiver_of(const Common& common, const QuiverArgs& a) {
  const int chosen = !a.lambda.empty() + (a.gamma >= 0) + !a.nakayama.empty() + !a.dynkin.empty();
  if (chosen != 1) throw BadArgs("choose exactly one of --lambda, --gamma, --nakayama, --dynkin");
  if (!a.lambda.empty()) return bpw::lambda_q(weights_arg(a.p, common), int_list(a.lambda));
  if (a.gamma >= 0) return bpw::gamma_quiver(weights_arg(a.p, common), a.gamma);
  if (!a.nakayama.empty()) {
    const std::vector<int> v = int_list(a.nakayama);
    if (v.size() != 2 || v[0] < 1 || v[1] < 1) throw BadArgs("--nakayama expects n,m with n, m >= 1");
    return bpw::nakayama(v[0], v[1]);
  }
  const std::string& d = a.dynkin;
  if (d == "D4") return bpw::dynkin_path_algebra(bpw::DynkinType::D4);
  if (d == "D4-alt") return bpw::dynkin_path_algebra(bpw::DynkinType::D4Alt);
  if (d == "E6") return bpw::dynkin_path_algebra(bpw::DynkinType::E6);
  if (d == "E8") return bpw::dynkin_path_algebra(bpw::DynkinType::E8);
  if (d.size() > 1 && d[0] == 'A') {
    const int k = std::stoi(d.substr(1));
    if (k >= 1) return bpw::dynkin_path_algebra(bpw::DynkinType::A, k);
  }
  throw BadArgs("unknown Dynkin type '" + d + "'");
}

int cmd_quiver(const Common& common, const QuiverArgs& a) {
  const bpw::AlgebraPresentation alg = quiver_of(common, a);
  alg.check_support();
  if (!a.csv.empty()) write_file(a.csv, bpw::to_csv(alg.cartan, alg.vertices));
  report(common) << alg.name << ": " << alg.size() << " vertices, " << alg.arrows.size() << " arrows, "
                 << alg.count(bpw::RelationKind::Commutativity) << " commutativity, "
                 << alg.count(bpw::RelationKind::Nilpotency) << " nilpotency, "
                 << alg.count(bpw::RelationKind::Connecting) << " connecting relations\n";
  if (a.dot) {
    std::cout << bpw::to_dot(alg);
  } else {
    json j = alg;
    j["coxeter"] = bpw::coxeter_polynomial(alg);
    emit(j);
  }
  return kPass;
}

int cmd_hom(const Common& common, const std::string& p, const std::string& a, const std::string& b, bool oracle) {
  const bpw::WeightSystem ws = weights_arg(p, common);
  const bpw::StableObject A = bpw::StableObject::parse(ws, a);
  const bpw::StableObject B = bpw::StableObject::parse(ws, b);
  const bpw::HomAnswer h = bpw::hom_dim(A, B);
  json j{{"a", A}, {"b", B}, {"dim", h}, {"configuration", bpw::configuration_hom_dim(A, B)}};
  report(common) << "dim Hom(" << A.to_string() << ", " << B.to_string() << ") = " << h.to_string();
  bool ok = h.known();
  if (oracle) {
    const int o = bpw::stable_hom_dim_oracle(bpw::mf_of(A), bpw::mf_of(B), 0, bpw::WorkingField::from_env());
    j["oracle"] = o;
    ok = ok && *h.dim == o;
    report(common) << ", oracle " << o;
  }
  report(common) << '\n';
  emit(j);
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Calculus of graded Brieskorn-Pham singularities: Homs, ladders, tilting families, invariants"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("-q,--quiet", common.quiet, "Suppress the report text on stderr");
  app.add_flag("--no-cap", common.no_cap, "Allow weight lists with prod(p_i - 1) > 512");

  int rc = kPass;
  std::string p, kind = "cuboid";

  auto* describe = app.add_subcommand("describe", "Special elements and graded dimensions");
  describe->add_option("-p,--weights", p, "Weights, e.g. 3,4")->required();
  describe->callback([&] { rc = cmd_describe(common, p); });

  auto* tilt = app.add_subcommand("tilt", "List a tilting family");
  tilt->add_option("-p,--weights", p, "Weights")->required();
  tilt->add_option("--kind", kind, "cuboid | koszul | extended:I | replicated:t (0-based)");
  tilt->callback([&] { rc = cmd_tilt(common, p, kind); });

  std::string csv, diff_csv;
  auto* endo = app.add_subcommand("endo", "Hom matrix of a family against the predicted Cartan matrix");
  endo->add_option("-p,--weights", p, "Weights")->required();
  endo->add_option("--kind", kind, "Family kind");
  endo->add_option("--csv", csv, "Write the Hom matrix as CSV");
  endo->add_option("--diff-csv", diff_csv, "Write computed minus predicted as CSV");
  endo->callback([&] { rc = cmd_endo(common, p, kind, csv, diff_csv); });

  std::string window;
  auto* verify = app.add_subcommand("verify", "Rigidity, exceptionality and ordering of a family");
  verify->add_option("-p,--weights", p, "Weights")->required();
  verify->add_option("--kind", kind, "Family kind");
  verify->add_option("--window", window, "Shift window lo,hi (default -2n-4,2n+4)");
  verify->callback([&] { rc = cmd_verify(common, p, kind, window); });

  int split = 0;
  bpw::RecollementWindow rwin;
  auto* ladder = app.add_subcommand("ladder", "Recollement checks for a split of the last weight");
  ladder->add_option("-p,--weights", p, "Weights")->required();
  ladder->add_option("--split", split, "p_{1,n}, between 2 and p_n - 1")->required();
  ladder->add_option("--levels", rwin.level_radius, "Level radius for the composite-zero check");
  ladder->add_option("--k-min", rwin.k_min, "Smallest functor index sampled");
  ladder->add_option("--k-max", rwin.k_max, "Largest functor index sampled");
  ladder->add_option("--samples", rwin.adjunction_samples, "Module-level adjunction samples")
      ->check(CLI::NonNegativeNumber);
  ladder->add_option("--seed", rwin.seed, "Sampling seed");
  ladder->callback([&] { rc = cmd_ladder(common, p, split, rwin); });

  GlueArgs g;
  auto* glue = app.add_subcommand("glue", "Glue two families along a recollement");
  glue->add_option("--preset", g.preset, "cuboid | koszul (over (3,4), split (3,2))");
  glue->add_option("-p,--weights", g.p, "Weights of the glued category");
  glue->add_option("--split", g.split, "p_{1,n}");
  glue->add_option("--k2", g.k2, "Index of j_*; k1 = k2 + q - 1");
  glue->add_option("--kind1", g.kind1, "Family in the first reduced category");
  glue->add_option("--kind2", g.kind2, "Family in the second reduced category");
  glue->add_option("--expect", g.expect, "Family the result should equal");
  glue->callback([&] {
    if (!g.preset.empty() && !g.p.empty()) throw BadArgs("--preset and -p are exclusive");
    rc = cmd_glue(common, g);
  });

  std::string suite;
  auto* coxeter = app.add_subcommand("coxeter", "Coxeter polynomial suites");
  coxeter->add_option("--suite", suite, "happel-seidel | replicated | dynkin")->required();
  coxeter->callback([&] { rc = cmd_coxeter(common, suite); });

  bpw::AuditWindow awin;
  auto* oracle = app.add_subcommand("oracle-check", "Hom calculus against the matrix-factorization oracle");
  oracle->add_option("-p,--weights", p, "Weights")->required();
  oracle->add_option("--levels", awin.level_radius, "Level radius of the twists")->check(CLI::NonNegativeNumber);
  oracle->add_option("--shift-min", awin.shift_min, "Smallest shift");
  oracle->add_option("--shift-max", awin.shift_max, "Largest shift");
  oracle->callback([&] {
    if (awin.shift_min > awin.shift_max) throw BadArgs("--shift-min exceeds --shift-max");
    rc = cmd_oracle_check(common, p, awin);
  });

  QuiverArgs qa;
  auto* quiver = app.add_subcommand("quiver", "Quiver with relations of an algebra");
  quiver->add_option("-p,--weights", qa.p, "Weights (for --lambda and --gamma)");
  quiver->add_option("--lambda", qa.lambda, "Lambda(q) for q = q_1,...,q_n");
  quiver->add_option("--gamma", qa.gamma, "Gamma^t for coordinate t (0-based)");
  quiver->add_option("--nakayama", qa.nakayama, "n,m: linear A_n modulo paths of length m");
  quiver->add_option("--dynkin", qa.dynkin, "Ak | D4 | D4-alt | E6 | E8");
  quiver->add_flag("--dot", qa.dot, "Emit Graphviz DOT instead of JSON");
  quiver->add_option("--csv", qa.csv, "Write the Cartan matrix as CSV");
  quiver->callback([&] { rc = cmd_quiver(common, qa); });

  std::string obj_a, obj_b;
  bool with_oracle = false;
  auto* hom = app.add_subcommand("hom", "dim Hom(A, B) for two objects such as U[1,2](0,1;0)[0]");
  hom->add_option("-p,--weights", p, "Weights")->required();
  hom->add_option("A", obj_a, "Source object")->required();
  hom->add_option("B", obj_b, "Target object")->required();
  hom->add_flag("--oracle", with_oracle, "Also run the matrix-factorization oracle");
  hom->callback([&] { rc = cmd_hom(common, p, obj_a, obj_b, with_oracle); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kBadArgs;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return rc;
}
