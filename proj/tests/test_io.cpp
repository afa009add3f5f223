#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include <gtest/gtest.h>

#include "centext/catalog.hpp"
#include "centext/io.hpp"
#include "centext/random.hpp"
#include "centext/reports.hpp"
#include "json.hpp"

using namespace centext;
namespace fs = std::filesystem;

namespace {

const fs::path kData = CENTEXT_TEST_DATA;
const Field Q = Field::rationals();
const Field F5 = Field::prime(5);

fs::path scratch(const std::string& name) {
  static std::atomic<int> counter{0};
  const fs::path dir = fs::temp_directory_path() / ("centext_io_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / (std::to_string(counter++) + "_" + name);
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

std::string error_of(const std::string& json) {
  try {
    io::parse_algebra(json, "t.json");
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

const char* kValid = R"({"field": "Q", "dim": 2, "basis": ["x", "y"], "products": [[0, 1, 1, "1"]]})";

}  // namespace

TEST(AlgebraFile, BundledTowerHasTheStatedConstants) {
  // [a2,a1]=a2, [a2,a2]=a1; [b2,b2]=b1, [b3,b2]=b3, [b3,b3]=b2;
  // [c3,c2]=c1, [c3,c3]=c2, [c4,c3]=c4, [c4,c4]=c3; zero elsewhere.
  const Algebra a = Algebra::from_products(Q, {"a1", "a2"}, {{1, 0, 1, 1}, {1, 1, 0, 1}});
  const Algebra b = Algebra::from_products(Q, {"b1", "b2", "b3"}, {{1, 1, 0, 1}, {2, 1, 2, 1}, {2, 2, 1, 1}});
  const Algebra c = Algebra::from_products(Q, {"c1", "c2", "c3", "c4"},
                                           {{2, 1, 0, 1}, {2, 2, 1, 1}, {3, 2, 3, 1}, {3, 3, 2, 1}});
  EXPECT_EQ(io::load_algebra(kData / "nonassociative/A.json").algebra, a);
  EXPECT_EQ(io::load_algebra(kData / "nonassociative/B.json").algebra, b);
  EXPECT_EQ(io::load_algebra(kData / "nonassociative/C.json").algebra, c);
  const auto f = io::load_morphism(kData / "nonassociative/f.json");
  const auto g = io::load_morphism(kData / "nonassociative/g.json");
  // f(b1, b2, b3) = (0, a1, a2); g(c1, ..., c4) = (0, b1, b2, b3).
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 2; ++j) EXPECT_EQ(f.map.matrix()(i, j), Scalar(i == j + 1 ? 1 : 0));
  }
  for (Index i = 0; i < 4; ++i) {
    for (Index j = 0; j < 3; ++j) EXPECT_EQ(g.map.matrix()(i, j), Scalar(i == j + 1 ? 1 : 0));
  }
  const auto t = catalog::nonassociative_tower();
  EXPECT_EQ(f.map.matrix(), t.f.matrix());
  EXPECT_EQ(g.map.matrix(), t.g.matrix());
}

TEST(AlgebraFile, RoundTripRandomAlgebras) {
  random::Rng rng(17);
  for (const Field& field : {Q, F5}) {
    for (int t = 0; t < 40; ++t) {
      const Algebra a = t % 2 ? random::lie(rng, field, 5) : random::naalg(rng, field, 4);
      const std::optional<Variety> v = t % 2 ? std::optional<Variety>(lie()) : std::nullopt;
      const fs::path p = scratch("alg.json");
      io::save_algebra(p, a, v);
      const io::AlgebraFile back = io::load_algebra(p);
      EXPECT_EQ(back.algebra, a);
      EXPECT_EQ(back.variety.has_value(), v.has_value());
      EXPECT_EQ(io::algebra_to_json(back.algebra, back.variety), io::algebra_to_json(a, v));
    }
  }
}

TEST(AlgebraFile, CustomVarietyRoundTrip) {
  const Variety v = parse_variety("[x1,x2] + [x2,x1]; 2*[[x1,x2],x3] - 1/2*[x1,[x2,x3]]");
  const fs::path p = scratch("custom.json");
  io::save_algebra(p, Algebra::abelian(Q, 2), v);
  const io::AlgebraFile back = io::load_algebra(p);
  ASSERT_TRUE(back.variety.has_value());
  EXPECT_TRUE(same_variety(*back.variety, v));
  EXPECT_FALSE(back.variety->uce_condition);
}

TEST(AlgebraFile, RejectsMalformedInput) {
  EXPECT_EQ(error_of(kValid), "");
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 2,)").find("line 1"), std::string::npos);
  EXPECT_NE(error_of(R"({"field": "R", "dim": 1, "basis": ["x"], "products": []})").find("field"), std::string::npos);
  EXPECT_NE(error_of(R"({"field": {"Fp": 6}, "dim": 1, "basis": ["x"], "products": []})").find("not prime"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 2, "basis": ["x"], "products": []})").find("basis"), std::string::npos);
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 2, "basis": ["x", "x"], "products": []})").find("duplicate label"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 2, "basis": ["x", "y"], "products": [[0, 2, 1, "1"]]})")
                .find("products[0]: index 2 out of range"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 2, "basis": ["x", "y"],
                         "products": [[0, 1, 1, "1"], [0, 1, 1, "2"]]})")
                .find("products[1]: duplicate entry"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": {"Fp": 5}, "dim": 1, "basis": ["x"], "products": [[0, 0, 0, "1/5"]]})")
                .find("bad coefficient"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 1, "basis": ["x"], "products": [[0, 0, 0, 0.5]]})")
                .find("string or an integer"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 1, "basis": ["x"], "products": [[0, 0, 0, "1"]], "variety": "Lie"})")
                .find("does not satisfy Lie"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 1, "basis": ["x"], "products": [], "variety": "Foo"})")
                .find("unknown variety"),
            std::string::npos);
  EXPECT_NE(error_of(R"({"field": "Q", "dim": 1, "basis": ["x"]})").find("missing key \"products\""),
            std::string::npos);
}

TEST(AlgebraFile, CoefficientsReduceModP) {
  const auto a = io::parse_algebra(R"({"field": {"Fp": 5}, "dim": 1, "basis": ["x"], "products": [[0, 0, 0, "7/2"]]})");
  // 7/2 = 2 * 3 = 6 = 1 mod 5.
  EXPECT_EQ(a.algebra.table()(0, 0), F5.one());
}

TEST(MorphismFile, RoundTripAndCertification) {
  random::Rng rng(5);
  for (const Field& field : {Q, F5}) {
    for (int t = 0; t < 20; ++t) {
      const Algebra a = random::lie(rng, field, 4);
      const LinearMap f = random::morphism_into(rng, a);
      const fs::path p = scratch("map.json");
      io::save_morphism(p, f);
      const io::MorphismFile back = io::load_morphism(p);
      EXPECT_EQ(back.map.domain(), f.domain());
      EXPECT_EQ(back.map.codomain(), f.codomain());
      EXPECT_EQ(back.map.matrix(), f.matrix());
      EXPECT_TRUE(back.map.morphism_certified());
    }
  }
}

TEST(MorphismFile, RejectsNonMorphismsAndBadShapes) {
  const fs::path dir = scratch("dir");
  fs::create_directories(dir);
  write(dir / "a.json", kValid);
  write(dir / "m.json", R"({"domain": "a.json", "codomain": "a.json", "matrix": [["0", "1"], ["1", "0"]]})");
  try {
    io::load_morphism(dir / "m.json");
    FAIL() << "swap of x and y is not a morphism";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("not an algebra morphism"), std::string::npos);
  }
  write(dir / "s.json", R"({"domain": "a.json", "codomain": "a.json", "matrix": [["1", "0"]]})");
  EXPECT_THROW(io::load_morphism(dir / "s.json"), InputError);
  write(dir / "r.json", R"({"domain": "nothere.json", "codomain": "a.json", "matrix": []})");
  EXPECT_THROW(io::load_morphism(dir / "r.json"), InputError);
  write(dir / "i.json", R"({"domain": "a.json", "codomain": "a.json", "matrix": [["1", "0"], ["0", "1"]]})");
  EXPECT_TRUE(is_isomorphism(io::load_morphism(dir / "i.json").map));
}

TEST(ExtensionFile, RoundTripKeepsVarieties) {
  const auto t = catalog::nonassociative_tower();
  const Extension e = make_extension(t.f, naalg(), vect());
  const fs::path p = scratch("ext.json");
  io::save_extension(p, e);
  const Extension back = io::load_extension(p);
  EXPECT_EQ(back.map.matrix(), e.map.matrix());
  EXPECT_EQ(back.domain(), e.domain());
  EXPECT_EQ(back.ambient.name, "NAAlg");
  EXPECT_EQ(back.coefficient.name, "Vect");
  const Extension over_lie_domain = io::load_extension(kData / "leibniz_square_to_line.json");
  EXPECT_EQ(over_lie_domain.ambient.name, "Leib");
  EXPECT_EQ(over_lie_domain.coefficient.name, "Vect");
  EXPECT_EQ(io::load_extension(kData / "leibniz_square_to_line.json", std::nullopt, lie()).coefficient.name, "Lie");
}

TEST(Reports, WorkedExamplesHold) {
  const reports::WorkedExamples r = reports::worked_examples(kData);
  EXPECT_TRUE(r.tower.all_hold());
  EXPECT_TRUE(r.pruefer.all_hold());
  EXPECT_EQ(r.tower.composite_commutator_dim, 1);
  for (const auto& line : r.lines) {
    EXPECT_EQ(line.find("Example"), std::string::npos) << line;
    EXPECT_EQ(line.find("\xc2\xa7"), std::string::npos) << line;
  }
  EXPECT_EQ(r.lines, reports::worked_examples(kData).lines);
}

TEST(Reports, ViolationsJsonIsReplayable) {
  UceSearchOptions o{naalg(), 12, 3, Q, 4, true};
  const auto found = check_uce_condition(o);
  ASSERT_FALSE(found.empty());
  const auto j = nlohmann::json::parse(reports::violations_json(o, found));
  ASSERT_EQ(j["violations"].size(), found.size());
  EXPECT_TRUE(j["violations"][0]["injected"].get<bool>());
  for (const auto& v : j["violations"]) {
    if (v["injected"].get<bool>()) continue;
    const auto again = replay_uce_trial(o, v["trial"].get<std::uint64_t>(), v["trial_seed"].get<std::uint64_t>());
    ASSERT_TRUE(again.has_value());
    EXPECT_EQ(again->commutator_dim, v["commutator_dim"].get<Index>());
    const fs::path p = scratch("g.json");
    write(p, v["g"].dump());
    EXPECT_EQ(io::load_morphism(p).map.matrix(), again->g.map.matrix());
  }
}
