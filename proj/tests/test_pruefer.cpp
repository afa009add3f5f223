#include <random>
#include <set>

#include <boost/multiprecision/cpp_int.hpp>
#include <gtest/gtest.h>

#include "centext/errors.hpp"
#include "centext/pruefer.hpp"

using namespace centext;
using namespace centext::pruefer;
using boost::multiprecision::cpp_rational;

namespace {

// Independent model: an element is a rational in [0, 1).
cpp_rational mod_one(cpp_rational q) {
  const BigInt floor_q = numerator(q) / denominator(q) - (numerator(q) < 0 && numerator(q) % denominator(q) != 0 ? 1 : 0);
  return q - cpp_rational(floor_q);
}

cpp_rational as_rational(const PrueferElement& x) { return cpp_rational(x.num(), power(x.p(), x.k())); }

PrueferElement random_element(std::mt19937_64& rng, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(rng() % 8);
  return PrueferElement(p, BigInt(rng() % 100000) - 50000, k);
}

}  // namespace

TEST(Pruefer, NormalForm) {
  PrueferElement x(3, 6, 2);  // 6/9 = 2/3
  EXPECT_EQ(x.num(), 2);
  EXPECT_EQ(x.k(), 1u);
  EXPECT_TRUE(PrueferElement(3, 9, 2).is_zero());
  EXPECT_EQ(PrueferElement(3, 9, 2).k(), 0u);
  EXPECT_EQ(PrueferElement(5, -1, 1), PrueferElement(5, 4, 1));
  EXPECT_EQ(PrueferElement(3, 2, 1).to_string(), "2/3^1");
}

TEST(Pruefer, DocumentedValues) {
  const std::uint64_t p = 3;
  EXPECT_EQ(act_c(PrueferElement(p, 1, 1)), PrueferElement(p, 1, 1));
  EXPECT_TRUE(add(PrueferElement(p, 1, 1), PrueferElement(p, p - 1, 1)).is_zero());
  EXPECT_EQ(mul_int(BigInt(p), PrueferElement(p, 1, 2)), PrueferElement(p, 1, 1));
  EXPECT_TRUE(u_map(PrueferElement(p, 1, 1)).is_zero());
  EXPECT_EQ(u_map(PrueferElement(p, 1, 2)), PrueferElement(p, 1, 1));
  EXPECT_EQ(kernel_of_u(5).size(), 5u);
}

TEST(Pruefer, RejectsBadPrimes) {
  EXPECT_THROW(PrueferElement(2, 1, 1), PreconditionError);
  EXPECT_THROW(PrueferElement(9, 1, 1), PreconditionError);
  EXPECT_THROW(check_stages(2, 3), PreconditionError);
  EXPECT_THROW(check_stages(1, 3), PreconditionError);
  EXPECT_THROW(add(PrueferElement(3, 1, 1), PrueferElement(5, 1, 1)), PreconditionError);
}

TEST(Pruefer, ArithmeticMatchesRationalModel) {
  std::mt19937_64 rng(54);
  for (std::uint64_t p : {3, 5, 7}) {
    for (int t = 0; t < 500; ++t) {
      const PrueferElement x = random_element(rng, p);
      const PrueferElement y = random_element(rng, p);
      const BigInt n = BigInt(rng() % 1000) - 500;
      EXPECT_EQ(as_rational(add(x, y)), mod_one(as_rational(x) + as_rational(y)));
      EXPECT_EQ(as_rational(mul_int(n, x)), mod_one(cpp_rational(n) * as_rational(x)));
      EXPECT_EQ(as_rational(act_c(x)), mod_one(cpp_rational(1 - static_cast<long>(p)) * as_rational(x)));
      // c is additive, (c - 1) is multiplication by -p, u is onto.
      EXPECT_EQ(act_c(add(x, y)), add(act_c(x), act_c(y)));
      EXPECT_EQ(add(act_c(x), negate(x)), mul_int(-BigInt(p), x));
      EXPECT_EQ(u_map(preimage(x)), x);
    }
  }
}

TEST(Pruefer, CActsInvertibly) {
  // (1 - p) is a unit mod p^k, so c is a bijection on each stage.
  for (unsigned k = 1; k <= 4; ++k) {
    std::set<std::string> images;
    const auto n = static_cast<std::uint64_t>(power(3, k));
    for (std::uint64_t l = 0; l < n; ++l) images.insert(act_c(embed_stage(3, k, l)).to_string());
    EXPECT_EQ(images.size(), n);
  }
}

TEST(Pruefer, KernelIsFixedByC) {
  for (std::uint64_t p : {3, 5, 7, 11}) {
    for (const auto& x : kernel_of_u(p)) {
      EXPECT_TRUE(u_map(x).is_zero());
      EXPECT_EQ(act_c(x), x);
    }
  }
}

TEST(Pruefer, StageTorsionHasOrderP) {
  for (unsigned k = 1; k <= 6; ++k) EXPECT_EQ(stage_h2_order(3, k), 3u);
  for (unsigned k = 1; k <= 4; ++k) EXPECT_EQ(stage_h2_order(5, k), 5u);
}

TEST(Pruefer, FinitaryReport) {
  const StageReport r = check_stages(3, 6);
  EXPECT_TRUE(r.perfectness_witnesses);
  EXPECT_TRUE(r.centrality);
  EXPECT_TRUE(r.inclusions_natural);
  EXPECT_EQ(r.kernel_order, 3u);
  EXPECT_EQ(r.stage_h2_orders, (std::vector<std::uint64_t>{3, 3, 3, 3, 3, 3}));
  EXPECT_TRUE(r.all_hold());
  EXPECT_EQ(r.elements_tested, 3u + 9 + 27 + 81 + 243 + 729);

  const StageReport r5 = check_stages(5, 4);
  EXPECT_TRUE(r5.all_hold());
  EXPECT_EQ(r5.stage_h2_orders.back(), 5u);
  EXPECT_EQ(r5.lines(), check_stages(5, 4).lines());
}
