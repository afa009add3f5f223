#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "centext/extensions.hpp"

/// JSON file formats.
///
/// Algebra file:
///   {"field": "Q" | {"Fp": p}, "dim": n, "basis": [labels],
///    "products": [[i, j, k, "c"], ...], "variety": "Lie" | ["law", ...]}
/// with 0-based indices and [e_i, e_j] = sum c e_k. Only nonzero constants
/// are listed; a repeated (i, j, k) is an error.
///
/// Morphism file:
///   {"domain": path | algebra, "codomain": path | algebra,
///    "matrix": [["c", ...], ...], "ambient": variety, "coefficient": variety}
/// Row r of the matrix is the image of domain basis vector r. Paths are
/// relative to the morphism file. "ambient" and "coefficient" are optional
/// and only read when the file is loaded as an extension.
namespace centext::io {

struct AlgebraFile {
  Algebra algebra;
  std::optional<Variety> variety;
};

struct MorphismFile {
  LinearMap map;  // certified
  std::optional<Variety> domain_variety;
  std::optional<Variety> codomain_variety;
  std::optional<Variety> ambient;
  std::optional<Variety> coefficient;
};

/// All loaders throw InputError naming the file and the offending entry.
AlgebraFile load_algebra(const std::filesystem::path& path);
AlgebraFile parse_algebra(const std::string& text, const std::string& source = "<string>");
std::string algebra_to_json(const Algebra& a, const std::optional<Variety>& variety = std::nullopt);
void save_algebra(const std::filesystem::path& path, const Algebra& a,
                  const std::optional<Variety>& variety = std::nullopt);

MorphismFile load_morphism(const std::filesystem::path& path);
/// Domain and codomain are written inline.
std::string morphism_to_json(const LinearMap& f, const std::optional<Variety>& ambient = std::nullopt,
                             const std::optional<Variety>& coefficient = std::nullopt);
void save_morphism(const std::filesystem::path& path, const LinearMap& f);

/// Ambient: `ambient` if given, else the file's "ambient", else the domain's
/// variety, else NAAlg. Coefficient: likewise, defaulting to Vect.
Extension load_extension(const std::filesystem::path& path, const std::optional<Variety>& ambient = std::nullopt,
                         const std::optional<Variety>& coefficient = std::nullopt);
void save_extension(const std::filesystem::path& path, const Extension& e);

/// A built-in name, or the laws of a custom variety.
std::string variety_spec(const Variety& v);

}  // namespace centext::io
