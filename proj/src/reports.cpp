#include "centext/reports.hpp"

#include <cstdlib>

#include "centext/io.hpp"
#include "json.hpp"

#ifndef CENTEXT_DATA_DIR
#define CENTEXT_DATA_DIR "data"
#endif

namespace centext::reports {

namespace fs = std::filesystem;

namespace {

std::string central_word(bool central) { return central ? "CENTRAL" : "NOT-CENTRAL"; }
std::string perfect_word(bool perfect) { return perfect ? "PERFECT" : "NOT-PERFECT"; }
std::string num(Index n) { return std::to_string(n); }

}  // namespace

bool TowerReport::all_hold() const {
  return f_central && g_central && !composite_central && composite_commutator_dim > 0 && centre_b == 1 &&
         kernel_f == 1 && centre_c == 1 && kernel_g == 1 && b_perfect && a_perfect;
}

TowerReport check_tower(const fs::path& dir) {
  const io::AlgebraFile a = io::load_algebra(dir / "A.json");
  const io::AlgebraFile b = io::load_algebra(dir / "B.json");
  const Extension f = io::load_extension(dir / "f.json", naalg(), vect());
  const Extension g = io::load_extension(dir / "g.json", naalg(), vect());
  require(f.codomain() == a.algebra && f.domain() == b.algebra && g.codomain() == b.algebra,
          "tower files do not compose: f.json must map B to A and g.json must map C to B");
  TowerReport r;
  r.f_central = is_central(f);
  r.g_central = is_central(g);
  const Extension fg = compose(f, g);
  r.composite_commutator_dim = relative_commutator(fg).dim();
  r.composite_central = r.composite_commutator_dim == 0;
  r.centre_b = centre(f.domain()).dim();
  r.kernel_f = f.kernel.subspace.dim();
  r.centre_c = centre(g.domain()).dim();
  r.kernel_g = g.kernel.subspace.dim();
  r.b_perfect = is_perfect(f.domain(), vect());
  r.a_perfect = is_perfect(f.codomain(), vect());
  return r;
}

WorkedExamples worked_examples(const fs::path& data_dir) {
  WorkedExamples out;
  out.tower = check_tower(data_dir / "nonassociative");
  const TowerReport& t = out.tower;
  auto& l = out.lines;
  l.push_back("non-associative tower C -> B -> A (ambient NAAlg, coefficients Vect)");
  l.push_back("  f: B -> A    " + central_word(t.f_central) + "  (expected CENTRAL)");
  l.push_back("  g: C -> B    " + central_word(t.g_central) + "  (expected CENTRAL)");
  l.push_back("  f.g: C -> A  " + central_word(t.composite_central) + "  dim [K,C] = " +
              num(t.composite_commutator_dim) + "  (expected NOT-CENTRAL)");
  l.push_back("  dim Z(B) = " + num(t.centre_b) + ", dim ker f = " + num(t.kernel_f) + "  (expected 1, 1)");
  l.push_back("  dim Z(C) = " + num(t.centre_c) + ", dim ker g = " + num(t.kernel_g) + "  (expected 1, 1)");
  l.push_back("  B " + perfect_word(t.b_perfect) + ", A " + perfect_word(t.a_perfect) + "  (expected PERFECT)");
  l.push_back("  tower: " + std::string(t.all_hold() ? "PASS" : "FAIL"));

  out.pruefer = pruefer::check_stages(3, 6);
  for (const auto& line : out.pruefer.lines()) l.push_back(line);
  l.push_back("  pruefer: " + std::string(out.pruefer.all_hold() ? "PASS" : "FAIL"));
  l.push_back(out.all_hold() ? "all expectations hold" : "EXPECTATIONS FAILED");
  return out;
}

std::vector<std::string> uce_lines(const UceResult& r) {
  std::vector<std::string> out;
  out.push_back("dim U = " + num(r.u.domain().dim()) + ", dim H2 = " + num(r.h2.dim()));
  out.push_back("dim H1(U) = " + num(r.h1_dim));
  for (const auto& entry : r.construction_log) out.push_back("  " + entry);
  return out;
}

std::vector<std::string> nested_lines(const NestedReport& r) {
  auto yes = [](bool b) { return std::string(b ? "holds" : "FAILS"); };
  return {
      "dim B = " + num(r.dim_b),
      "Leib: dim U = " + num(r.dim_u_leib) + ", dim H2 = " + num(r.h2_leib),
      "Lie:  dim U = " + num(r.dim_u_lie) + ", dim H2 = " + num(r.h2_lie),
      "dim [U_Leib, U_Leib]_Lie = " + num(r.lie_verbal_of_u_leib),
      "dim H2(U_Lie) in Leib = " + num(r.h2_u_lie_in_leib),
      "Lie reflection of U_Leib is U_Lie: " + yes(r.reflection_is_uce),
      "H2(B, Leib) = [U,U]_Lie + H2(B, Lie): " + yes(r.exact_sequence_holds),
      "[U,U]_Lie = H2(U_Lie, Leib): " + yes(r.refinement_holds),
  };
}

std::string violations_json(const UceSearchOptions& options, const std::vector<UceViolation>& found) {
  using Json = nlohmann::ordered_json;
  Json j;
  j["ambient"] = io::variety_spec(options.ambient);
  j["field"] = options.field.name();
  j["trials"] = options.trials;
  j["dim"] = options.dim_bound;
  j["seed"] = options.seed;
  j["injected"] = options.inject_known_counterexample;
  Json list = Json::array();
  for (const auto& v : found) {
    Json e;
    e["trial"] = v.trial;
    e["trial_seed"] = v.trial_seed;
    e["injected"] = v.injected;
    e["dims"] = Json::array({v.g.domain().dim(), v.f.domain().dim(), v.f.codomain().dim()});
    e["commutator_dim"] = v.commutator_dim;
    e["f"] = Json::parse(io::morphism_to_json(v.f.map));
    e["g"] = Json::parse(io::morphism_to_json(v.g.map));
    list.push_back(e);
  }
  j["violations"] = list;
  return j.dump(2) + "\n";
}

fs::path default_data_dir() {
  if (const char* env = std::getenv("CENTEXT_DATA")) return env;
  return CENTEXT_DATA_DIR;
}

}  // namespace centext::reports
