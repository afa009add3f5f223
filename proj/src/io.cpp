#include "centext/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace centext::io {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& where, const std::string& what) {
  throw InputError(source + ": " + (where.empty() ? "" : where + ": ") + what);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path.string() + ": cannot open file");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path.string() + ": cannot write file");
  out << text;
  if (!out) throw InputError(path.string() + ": write failed");
}

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(source, "", e.what());
  }
}

const Json& member(const Json& j, const char* key, const std::string& source, const std::string& where) {
  if (!j.is_object()) fail(source, where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(source, where, std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t to_index(const Json& j, const std::string& source, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(source, where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

Field parse_field(const Json& j, const std::string& source) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.size() == 1 && j.contains("Fp")) {
    const std::uint64_t p = to_index(j["Fp"], source, "field.Fp");
    if (!is_prime(p)) fail(source, "field.Fp", std::to_string(p) + " is not prime");
    return Field::prime(p);
  }
  fail(source, "field", "expected \"Q\" or {\"Fp\": p}");
}

Json field_to_json(const Field& f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.characteristic()}};
}

Scalar parse_coefficient(const Json& j, const Field& field, const std::string& source, const std::string& where) {
  std::string text;
  if (j.is_string()) {
    text = j.get<std::string>();
  } else if (j.is_number_integer()) {
    text = std::to_string(j.get<long long>());
  } else {
    fail(source, where, "coefficient must be a string or an integer");
  }
  try {
    return field.parse(text);
  } catch (const std::exception& e) {
    fail(source, where, "bad coefficient \"" + text + "\" over " + field.name() + ": " + e.what());
  }
}

Variety parse_variety_json(const Json& j, const std::string& source, const std::string& where) {
  try {
    if (j.is_string()) return parse_variety(j.get<std::string>());
    if (j.is_array() && !j.empty()) {
      std::string joined;
      for (const auto& law : j) {
        if (!law.is_string()) fail(source, where, "laws must be strings");
        joined += (joined.empty() ? "" : "; ") + law.get<std::string>();
      }
      return parse_variety(joined);
    }
  } catch (const InputError& e) {
    fail(source, where, e.what());
  }
  fail(source, where, "expected a variety name or a non-empty list of laws");
}

// Objects one key per line, arrays of arrays one row per line, everything else compact.
std::string layout(const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_object() && !j.empty()) {
    std::string out = "{\n";
    std::size_t n = 0;
    for (auto it = j.begin(); it != j.end(); ++it) {
      out += inner + Json(it.key()).dump() + ": " + layout(it.value(), indent + 2);
      out += (++n < j.size() ? ",\n" : "\n");
    }
    return out + pad + "}";
  }
  if (j.is_array() && !j.empty() && j.front().is_array()) {
    std::string out = "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) out += inner + j[i].dump() + (i + 1 < j.size() ? ",\n" : "\n");
    return out + pad + "]";
  }
  return j.dump();
}

bool is_builtin(const Variety& v) {
  for (const Variety& b : {naalg(), vect(), leib(), lie()}) {
    if (v.name == b.name && same_variety(v, b)) return true;
  }
  return false;
}

Json variety_to_json(const Variety& v) {
  if (is_builtin(v)) return v.name;
  Json laws = Json::array();
  for (const Law& law : v.laws) laws.push_back(law.to_string());
  return laws;
}

Json algebra_json(const Algebra& a, const std::optional<Variety>& variety) {
  Json j;
  j["field"] = field_to_json(a.field());
  j["dim"] = a.dim();
  j["basis"] = a.labels();
  Json products = Json::array();
  for (const auto& p : a.nonzero_products()) {
    products.push_back(Json::array({p.left, p.right, p.target, p.coefficient.to_string()}));
  }
  j["products"] = products;
  if (variety) j["variety"] = variety_to_json(*variety);
  return j;
}

AlgebraFile algebra_from_json(const Json& j, const std::string& source) {
  const Field field = parse_field(member(j, "field", source, ""), source);
  const Index dim = static_cast<Index>(to_index(member(j, "dim", source, ""), source, "dim"));
  const Json& basis = member(j, "basis", source, "");
  if (!basis.is_array() || static_cast<Index>(basis.size()) != dim) {
    fail(source, "basis", "expected " + std::to_string(dim) + " labels");
  }
  std::vector<std::string> labels;
  std::set<std::string> seen;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string where = "basis[" + std::to_string(i) + "]";
    if (!basis[i].is_string() || basis[i].get<std::string>().empty()) fail(source, where, "expected a non-empty label");
    if (!seen.insert(basis[i].get<std::string>()).second) fail(source, where, "duplicate label");
    labels.push_back(basis[i].get<std::string>());
  }
  const Json& products = member(j, "products", source, "");
  if (!products.is_array()) fail(source, "products", "expected a list");
  std::vector<Algebra::Product> entries;
  std::set<std::tuple<Index, Index, Index>> keys;
  for (std::size_t n = 0; n < products.size(); ++n) {
    const std::string where = "products[" + std::to_string(n) + "]";
    const Json& e = products[n];
    if (!e.is_array() || e.size() != 4) fail(source, where, "expected [i, j, k, coefficient]");
    Index idx[3];
    for (int t = 0; t < 3; ++t) {
      const std::uint64_t v = to_index(e[static_cast<std::size_t>(t)], source, where);
      if (static_cast<Index>(v) >= dim) fail(source, where, "index " + std::to_string(v) + " out of range");
      idx[t] = static_cast<Index>(v);
    }
    if (!keys.insert({idx[0], idx[1], idx[2]}).second) fail(source, where, "duplicate entry");
    const Scalar c = parse_coefficient(e[3], field, source, where);
    if (c.is_zero()) fail(source, where, "zero coefficient; list nonzero constants only");
    entries.push_back({idx[0], idx[1], idx[2], c});
  }
  AlgebraFile out{Algebra::from_products(field, std::move(labels), entries), std::nullopt};
  if (j.contains("variety")) {
    out.variety = parse_variety_json(j["variety"], source, "variety");
    check_field_supported(*out.variety, field);
    if (!satisfies(out.algebra, *out.variety)) fail(source, "variety", "algebra does not satisfy " + out.variety->name);
  }
  return out;
}

AlgebraFile algebra_ref(const Json& j, const fs::path& base, const std::string& source, const std::string& key) {
  if (j.is_string()) return load_algebra(base / j.get<std::string>());
  if (j.is_object()) return algebra_from_json(j, source + ":" + key);
  fail(source, key, "expected a file path or an inline algebra");
}

Json extension_json(const LinearMap& f, const std::optional<Variety>& ambient, const std::optional<Variety>& coefficient) {
  Json j;
  j["domain"] = algebra_json(f.domain(), std::nullopt);
  j["codomain"] = algebra_json(f.codomain(), std::nullopt);
  Json rows = Json::array();
  for (Index r = 0; r < f.matrix().rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < f.matrix().cols(); ++c) row.push_back(f.matrix()(r, c).to_string());
    rows.push_back(row);
  }
  j["matrix"] = rows;
  if (ambient) j["ambient"] = variety_to_json(*ambient);
  if (coefficient) j["coefficient"] = variety_to_json(*coefficient);
  return j;
}

MorphismFile morphism_from_json(const Json& j, const fs::path& base, const std::string& source) {
  AlgebraFile dom = algebra_ref(member(j, "domain", source, ""), base, source, "domain");
  AlgebraFile cod = algebra_ref(member(j, "codomain", source, ""), base, source, "codomain");
  if (!(dom.algebra.field() == cod.algebra.field())) fail(source, "", "domain and codomain fields differ");
  const Field& field = dom.algebra.field();
  const Json& rows = member(j, "matrix", source, "");
  const Index n = dom.algebra.dim();
  const Index m = cod.algebra.dim();
  if (!rows.is_array() || static_cast<Index>(rows.size()) != n) {
    fail(source, "matrix", "expected " + std::to_string(n) + " rows (one per domain basis vector)");
  }
  Matrix mat(n, m);
  for (Index r = 0; r < n; ++r) {
    const Json& row = rows[static_cast<std::size_t>(r)];
    const std::string where = "matrix[" + std::to_string(r) + "]";
    if (!row.is_array() || static_cast<Index>(row.size()) != m) {
      fail(source, where, "expected " + std::to_string(m) + " entries");
    }
    for (Index c = 0; c < m; ++c) {
      mat(r, c) = parse_coefficient(row[static_cast<std::size_t>(c)], field, source,
                                    where + "[" + std::to_string(c) + "]");
    }
  }
  LinearMap f(dom.algebra, cod.algebra, mat);
  if (!is_morphism(f)) fail(source, "matrix", "not an algebra morphism");
  MorphismFile out{f.certified(), dom.variety, cod.variety, std::nullopt, std::nullopt};
  if (j.contains("ambient")) out.ambient = parse_variety_json(j["ambient"], source, "ambient");
  if (j.contains("coefficient")) out.coefficient = parse_variety_json(j["coefficient"], source, "coefficient");
  return out;
}

}  // namespace

std::string variety_spec(const Variety& v) {
  if (is_builtin(v)) return v.name;
  std::string out;
  for (const Law& law : v.laws) out += (out.empty() ? "" : "; ") + law.to_string();
  return out;
}

AlgebraFile parse_algebra(const std::string& text, const std::string& source) {
  return algebra_from_json(parse_json(text, source), source);
}

AlgebraFile load_algebra(const fs::path& path) { return parse_algebra(read_file(path), path.string()); }

std::string algebra_to_json(const Algebra& a, const std::optional<Variety>& variety) {
  return layout(algebra_json(a, variety), 0) + "\n";
}

void save_algebra(const fs::path& path, const Algebra& a, const std::optional<Variety>& variety) {
  write_file(path, algebra_to_json(a, variety));
}

MorphismFile load_morphism(const fs::path& path) {
  const std::string source = path.string();
  return morphism_from_json(parse_json(read_file(path), source), path.parent_path(), source);
}

std::string morphism_to_json(const LinearMap& f, const std::optional<Variety>& ambient,
                             const std::optional<Variety>& coefficient) {
  return layout(extension_json(f, ambient, coefficient), 0) + "\n";
}

void save_morphism(const fs::path& path, const LinearMap& f) { write_file(path, morphism_to_json(f)); }

Extension load_extension(const fs::path& path, const std::optional<Variety>& ambient,
                         const std::optional<Variety>& coefficient) {
  MorphismFile m = load_morphism(path);
  Variety amb = ambient ? *ambient : m.ambient ? *m.ambient : m.domain_variety ? *m.domain_variety : naalg();
  Variety coeff = coefficient ? *coefficient : m.coefficient ? *m.coefficient : vect();
  return make_extension(m.map, std::move(amb), std::move(coeff));
}

void save_extension(const fs::path& path, const Extension& e) {
  write_file(path, morphism_to_json(e.map, e.ambient, e.coefficient));
}

}  // namespace centext::io
