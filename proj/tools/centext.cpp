#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "centext/io.hpp"
#include "centext/reports.hpp"

using namespace centext;

namespace {

// Exit codes: 0 success, 1 assertion failure (or failed expectations), 2 bad input or precondition.
constexpr int kAssertion = 1;
constexpr int kInput = 2;

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

void print(const std::vector<std::string>& lines) {
  for (const auto& l : lines) std::cout << l << "\n";
}

Field parse_field_option(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.size() > 1 && s[0] == 'F' && s.find_first_not_of("0123456789", 1) == std::string::npos) {
    const std::uint64_t p = std::stoull(s.substr(1));
    if (is_prime(p)) return Field::prime(p);
  }
  throw InputError("field must be Q or F<p> with p prime, got '" + s + "'");
}

std::optional<Variety> optional_variety(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return parse_variety(s);
}

Variety variety_or(const std::string& s, const std::optional<Variety>& from_file, const char* what) {
  if (!s.empty()) return parse_variety(s);
  if (from_file) return *from_file;
  throw InputError(std::string("no ") + what + " given and the algebra file names none");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Central extensions of finite-dimensional algebras over Q and F_p"};
  app.require_subcommand(1);

  std::string ext_path, algebra_path, out_path, coeff_spec, ambient_spec, variety_spec, data_dir, field_spec = "Q",
                                                                                               json_path;
  std::uint64_t trials = 100, seed = 0;
  Index dim_bound = 3;
  bool inject = false;

  auto* check = app.add_subcommand("check", "Checks a property of an extension");
  check->require_subcommand(1);
  auto* central = check->add_subcommand("central", "Is the extension central relative to a subvariety?");
  central->add_option("--ext", ext_path, "Morphism file of the extension")->required();
  central->add_option("--coeff", coeff_spec, "Coefficient subvariety (default Vect)");
  central->add_option("--ambient", ambient_spec, "Ambient variety (default from the file, else NAAlg)");

  auto* centralise_cmd = app.add_subcommand("centralise", "Quotients an extension by its relative commutator");
  centralise_cmd->add_option("--ext", ext_path, "Morphism file of the extension")->required();
  centralise_cmd->add_option("--coeff", coeff_spec, "Coefficient subvariety (default Vect)");
  centralise_cmd->add_option("--ambient", ambient_spec, "Ambient variety");
  centralise_cmd->add_option("--out", out_path, "Where to write the centralised extension")->required();

  auto* uce_cmd = app.add_subcommand("uce", "Builds the universal central extension");
  uce_cmd->add_option("--algebra", algebra_path, "Algebra file")->required();
  uce_cmd->add_option("--variety", variety_spec, "Ambient variety (default from the file)");
  uce_cmd->add_option("--out", out_path, "Write U -> A as a morphism file");

  auto* h2_cmd = app.add_subcommand("h2", "Dimension of H2 of a perfect algebra");
  h2_cmd->add_option("--algebra", algebra_path, "Algebra file")->required();
  h2_cmd->add_option("--variety", variety_spec, "Ambient variety (default from the file)");

  auto* perfect_cmd = app.add_subcommand("perfect", "Is the algebra perfect relative to a subvariety?");
  perfect_cmd->add_option("--algebra", algebra_path, "Algebra file")->required();
  perfect_cmd->add_option("--coeff", coeff_spec, "Coefficient subvariety (default Vect)");

  auto* examples_cmd = app.add_subcommand("paper-examples", "Runs the bundled worked examples");
  examples_cmd->add_option("--data", data_dir, "Data directory (default: the bundled one)");

  auto* search_cmd = app.add_subcommand("search-uce-violation", "Randomised search for (UCE) violations");
  search_cmd->add_option("--ambient", ambient_spec, "Ambient variety: NAAlg, Lie or Leib")->required();
  search_cmd->add_option("--trials", trials, "Number of random trials")->capture_default_str();
  search_cmd->add_option("--dim", dim_bound, "Bound on the dimension of the perfect middle object")
      ->capture_default_str();
  search_cmd->add_option("--seed", seed, "Seed")->capture_default_str();
  search_cmd->add_option("--field", field_spec, "Q or F<p>")->capture_default_str();
  search_cmd->add_flag("--inject-known", inject, "Also test the non-associative tower");
  search_cmd->add_option("--json", json_path, "Write the violations as JSON");

  auto* nested_cmd = app.add_subcommand("nested-compare", "Compares the Leibniz and Lie universal central extensions");
  nested_cmd->add_option("--algebra", algebra_path, "Algebra file (a perfect Lie algebra)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << one_line(e.what()) << "\n";
    return kInput;
  }

  try {
    if (central->parsed()) {
      const Extension e = io::load_extension(ext_path, optional_variety(ambient_spec), optional_variety(coeff_spec));
      const Index d = relative_commutator(e).dim();
      std::cout << (d == 0 ? "CENTRAL" : "NOT-CENTRAL") << "\n";
      std::cout << "dim [K,B]_" << e.coefficient.name << " = " << d << "\n";
    } else if (centralise_cmd->parsed()) {
      const Extension e = io::load_extension(ext_path, optional_variety(ambient_spec), optional_variety(coeff_spec));
      const Centralisation c = centralise(e);
      io::save_extension(out_path, c.extension);
      std::cout << "dim B = " << e.domain().dim() << ", dim B/[K,B] = " << c.extension.domain().dim() << "\n";
      std::cout << "wrote " << out_path << "\n";
    } else if (uce_cmd->parsed()) {
      const io::AlgebraFile a = io::load_algebra(algebra_path);
      const UceResult r = build_uce(a.algebra, variety_or(variety_spec, a.variety, "variety"));
      print(reports::uce_lines(r));
      if (!out_path.empty()) {
        io::save_extension(out_path, r.u);
        std::cout << "wrote " << out_path << "\n";
      }
    } else if (h2_cmd->parsed()) {
      const io::AlgebraFile a = io::load_algebra(algebra_path);
      const Variety v = variety_or(variety_spec, a.variety, "variety");
      require(is_perfect(a.algebra, vect()), "object not perfect; H2 unavailable");
      std::cout << "dim H2 = " << h2_dimension(a.algebra, v) << "\n";
    } else if (perfect_cmd->parsed()) {
      const io::AlgebraFile a = io::load_algebra(algebra_path);
      const Variety coeff = coeff_spec.empty() ? vect() : parse_variety(coeff_spec);
      std::cout << (is_perfect(a.algebra, coeff) ? "PERFECT" : "NOT-PERFECT") << "\n";
    } else if (examples_cmd->parsed()) {
      const reports::WorkedExamples r =
          reports::worked_examples(data_dir.empty() ? reports::default_data_dir() : std::filesystem::path(data_dir));
      print(r.lines);
      return r.all_hold() ? 0 : kAssertion;
    } else if (search_cmd->parsed()) {
      UceSearchOptions o{parse_variety(ambient_spec), trials, dim_bound, parse_field_option(field_spec), seed, inject};
      const auto found = check_uce_condition(o);
      for (const auto& v : found) {
        std::cout << "violation trial=" << v.trial << " trial_seed=" << v.trial_seed
                  << (v.injected ? " injected" : "") << " dims " << v.g.domain().dim() << "->" << v.f.domain().dim()
                  << "->" << v.f.codomain().dim() << " commutator_dim=" << v.commutator_dim << "\n";
      }
      std::cout << "violations: " << found.size() << "\n";
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw InputError(json_path + ": cannot write file");
        out << reports::violations_json(o, found);
      }
    } else if (nested_cmd->parsed()) {
      print(reports::nested_lines(nested_compare(io::load_algebra(algebra_path).algebra)));
    }
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failure: " << one_line(e.what()) << "\n";
    return kAssertion;
  } catch (const InputError& e) {
    std::cerr << "error: " << one_line(e.what()) << "\n";
    return kInput;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << one_line(e.what()) << "\n";
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << one_line(e.what()) << "\n";
    return kInput;
  }
  return 0;
}
