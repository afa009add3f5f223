#include "centext/pruefer.hpp"

#include <limits>

#include "centext/errors.hpp"

namespace centext::pruefer {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_odd_prime(std::uint64_t p) {
  require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
  require(p != 2, "p = 2 is excluded: c = 1 - p = -1 would not fix the p-torsion");
}

BigInt power(std::uint64_t p, unsigned k) { return boost::multiprecision::pow(BigInt(p), k); }

PrueferElement::PrueferElement(std::uint64_t p, BigInt num, unsigned k) : p_(p), num_(std::move(num)), k_(k) {
  require_odd_prime(p);
  const BigInt modulus = power(p_, k_);
  num_ %= modulus;
  if (num_ < 0) num_ += modulus;
  while (k_ > 0 && num_ % p_ == 0) {
    num_ /= p_;
    --k_;
  }
  if (num_ == 0) k_ = 0;
}

std::string PrueferElement::to_string() const {
  if (is_zero()) return "0";
  return num_.str() + "/" + std::to_string(p_) + "^" + std::to_string(k_);
}

namespace {

void require_same_prime(const PrueferElement& x, const PrueferElement& y) {
  require(x.p() == y.p(), "prime mismatch: " + std::to_string(x.p()) + " vs " + std::to_string(y.p()));
}

}  // namespace

PrueferElement add(const PrueferElement& x, const PrueferElement& y) {
  require_same_prime(x, y);
  const unsigned k = std::max(x.k(), y.k());
  return PrueferElement(x.p(), x.num() * power(x.p(), k - x.k()) + y.num() * power(x.p(), k - y.k()), k);
}

PrueferElement negate(const PrueferElement& x) { return PrueferElement(x.p(), -x.num(), x.k()); }

PrueferElement mul_int(const BigInt& n, const PrueferElement& x) { return PrueferElement(x.p(), n * x.num(), x.k()); }

PrueferElement act_c(const PrueferElement& x) { return mul_int(BigInt(1) - BigInt(x.p()), x); }

PrueferElement u_map(const PrueferElement& x) { return mul_int(BigInt(x.p()), x); }

PrueferElement preimage(const PrueferElement& x) { return PrueferElement(x.p(), x.num(), x.k() + 1); }

std::vector<PrueferElement> kernel_of_u(std::uint64_t p) {
  require_odd_prime(p);
  std::vector<PrueferElement> out;
  for (std::uint64_t l = 0; l < p; ++l) out.emplace_back(p, l, 1);
  return out;
}

PrueferElement embed_stage(std::uint64_t p, unsigned k, std::uint64_t l) { return PrueferElement(p, l, k); }

std::uint64_t include_stage(std::uint64_t p, unsigned k, std::uint64_t l) {
  const BigInt next = power(p, k + 1);
  return static_cast<std::uint64_t>((BigInt(p) * l) % next);
}

std::uint64_t stage_h2_order(std::uint64_t p, unsigned k) {
  require_odd_prime(p);
  const BigInt modulus = power(p, k);
  require(modulus <= BigInt(std::numeric_limits<std::uint32_t>::max()), "stage too large to enumerate");
  const auto n = static_cast<std::uint64_t>(modulus);
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < n; ++m) {
    if ((p * m) % n == 0) ++count;
  }
  return count;
}

bool StageReport::all_hold() const {
  return perfectness_witnesses && centrality && kernel_order == p && stage_h2_all_p && inclusions_natural;
}

std::vector<std::string> StageReport::lines() const {
  auto verdict = [](bool b) { return std::string(b ? "yes" : "NO"); };
  std::vector<std::string> out;
  out.push_back("pruefer module p = " + std::to_string(p) + ", stages 1.." + std::to_string(k_max));
  out.push_back("  elements tested: " + std::to_string(elements_tested));
  out.push_back("  perfect (every m = p y = (c-1) z): " + verdict(perfectness_witnesses));
  out.push_back("  |ker u| = " + std::to_string(kernel_order));
  out.push_back("  c fixes ker u (central): " + verdict(centrality));
  std::string orders;
  for (std::size_t i = 0; i < stage_h2_orders.size(); ++i) {
    orders += (i ? " " : "") + std::to_string(stage_h2_orders[i]);
  }
  out.push_back("  stage H2 orders: " + orders);
  out.push_back("  stage inclusions commute with c and u: " + verdict(inclusions_natural));
  out.push_back("  H2 = Z_" + std::to_string(p) + " at every stage: " + verdict(stage_h2_all_p));
  return out;
}

StageReport check_stages(std::uint64_t p, unsigned k_max) {
  require_odd_prime(p);
  require(k_max >= 1, "k_max must be at least 1");
  require(power(p, k_max + 1) <= BigInt(std::numeric_limits<std::uint32_t>::max()), "stages too large to enumerate");
  StageReport r;
  r.p = p;
  r.k_max = k_max;
  r.perfectness_witnesses = true;
  r.inclusions_natural = true;
  const PrueferElement zero = PrueferElement::zero(p);

  for (unsigned k = 1; k <= k_max; ++k) {
    const auto n = static_cast<std::uint64_t>(power(p, k));
    const auto n_next = static_cast<std::uint64_t>(power(p, k + 1));
    for (std::uint64_t l = 0; l < n; ++l) {
      const PrueferElement m = embed_stage(p, k, l);
      ++r.elements_tested;
      // (c - 1) acts as -p, so z = -y witnesses m in (c-1)M.
      const PrueferElement y = preimage(m);
      const PrueferElement z = negate(y);
      if (!(u_map(y) == m) || !(add(act_c(z), negate(z)) == m)) r.perfectness_witnesses = false;

      const std::uint64_t inc = include_stage(p, k, l);
      const std::uint64_t c_l = ((1 + n - p % n) % n * l) % n;  // (1 - p) l mod p^k
      const std::uint64_t c_inc = ((1 + n_next - p) % n_next * inc) % n_next;
      const std::uint64_t u_l = (p * l) % n;
      const std::uint64_t u_inc = (p * inc) % n_next;
      const bool commutes_c = include_stage(p, k, c_l) == c_inc;
      const bool commutes_u = include_stage(p, k, u_l) == u_inc;
      const bool compatible = embed_stage(p, k + 1, inc) == m && embed_stage(p, k, c_l) == act_c(m) &&
                              embed_stage(p, k, u_l) == u_map(m);
      if (!(commutes_c && commutes_u && compatible)) r.inclusions_natural = false;
    }
  }

  const auto kernel = kernel_of_u(p);
  r.kernel_order = kernel.size();
  r.centrality = true;
  for (const auto& x : kernel) {
    if (!(u_map(x) == zero) || !(act_c(x) == x)) r.centrality = false;
  }

  r.stage_h2_all_p = true;
  for (unsigned k = 1; k <= k_max; ++k) {
    r.stage_h2_orders.push_back(stage_h2_order(p, k));
    if (r.stage_h2_orders.back() != p) r.stage_h2_all_p = false;
  }
  return r;
}

}  // namespace centext::pruefer
