#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "centext/pruefer.hpp"
#include "centext/uce.hpp"

/// Deterministic text reports shared by the command-line tool and the acceptance binary.
namespace centext::reports {

struct TowerReport {
  bool f_central = false;
  bool g_central = false;
  bool composite_central = true;
  Index composite_commutator_dim = 0;
  Index centre_b = 0, kernel_f = 0, centre_c = 0, kernel_g = 0;
  bool b_perfect = false;
  bool a_perfect = false;
  bool all_hold() const;
};

/// Reads A.json, B.json, C.json, f.json, g.json from `dir` (ambient NAAlg, coefficients Vect).
TowerReport check_tower(const std::filesystem::path& dir);

struct WorkedExamples {
  TowerReport tower;
  pruefer::StageReport pruefer;
  std::vector<std::string> lines;
  bool all_hold() const { return tower.all_hold() && pruefer.all_hold(); }
};

/// The non-associative tower under data_dir/nonassociative and the Pruefer
/// checks at p = 3 over stages 1..6.
WorkedExamples worked_examples(const std::filesystem::path& data_dir);

std::vector<std::string> uce_lines(const UceResult& r);
std::vector<std::string> nested_lines(const NestedReport& r);

/// The search options and every violation, each with its replay key (trial,
/// trial_seed) and both extensions in morphism-file form.
std::string violations_json(const UceSearchOptions& options, const std::vector<UceViolation>& found);

/// The bundled data directory; the CENTEXT_DATA environment variable overrides it.
std::filesystem::path default_data_dir();

}  // namespace centext::reports
