#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace centext::pruefer {

using BigInt = boost::multiprecision::cpp_int;

/// num / p^k in Z[1/p]/Z. Normal form: 0 <= num < p^k, and either num = 0
/// with k = 0 or p does not divide num.
class PrueferElement {
 public:
  /// Requires p an odd prime and k >= 0; reduces to normal form.
  PrueferElement(std::uint64_t p, BigInt num, unsigned k);
  static PrueferElement zero(std::uint64_t p) { return PrueferElement(p, 0, 0); }

  std::uint64_t p() const { return p_; }
  const BigInt& num() const { return num_; }
  unsigned k() const { return k_; }
  bool is_zero() const { return num_ == 0; }
  std::string to_string() const;

  friend bool operator==(const PrueferElement&, const PrueferElement&) = default;

 private:
  std::uint64_t p_;
  BigInt num_;
  unsigned k_;
};

bool is_prime(std::uint64_t n);
/// Throws PreconditionError unless p is an odd prime.
void require_odd_prime(std::uint64_t p);

BigInt power(std::uint64_t p, unsigned k);

PrueferElement add(const PrueferElement& x, const PrueferElement& y);
PrueferElement negate(const PrueferElement& x);
PrueferElement mul_int(const BigInt& n, const PrueferElement& x);
/// The generator c of the group ring acts as multiplication by 1 - p.
PrueferElement act_c(const PrueferElement& x);
/// u(m) = p m.
PrueferElement u_map(const PrueferElement& x);
/// y with u(y) = x: num / p^(k+1).
PrueferElement preimage(const PrueferElement& x);
/// ker u = {l/p : 0 <= l < p}.
std::vector<PrueferElement> kernel_of_u(std::uint64_t p);

/// Stage M_k = Z_{p^k}, embedded in the colimit as l -> l / p^k.
PrueferElement embed_stage(std::uint64_t p, unsigned k, std::uint64_t l);
/// (l + p^k Z) -> (p l + p^(k+1) Z).
std::uint64_t include_stage(std::uint64_t p, unsigned k, std::uint64_t l);
/// Order of the p-torsion {m in Z_{p^k} : p m = 0}, by enumeration.
std::uint64_t stage_h2_order(std::uint64_t p, unsigned k);

struct StageReport {
  std::uint64_t p = 0;
  unsigned k_max = 0;
  std::uint64_t elements_tested = 0;
  bool perfectness_witnesses = false;  // every tested m = u(y) = (c-1) z
  bool centrality = false;             // c fixes ker u pointwise
  std::uint64_t kernel_order = 0;
  std::vector<std::uint64_t> stage_h2_orders;  // index k-1
  bool stage_h2_all_p = false;
  bool inclusions_natural = false;  // inclusions commute with c and u and with the embeddings
  bool all_hold() const;
  std::vector<std::string> lines() const;
};

/// Finitary checks for the Pruefer module over stages 1..k_max (all elements).
StageReport check_stages(std::uint64_t p, unsigned k_max);

}  // namespace centext::pruefer
