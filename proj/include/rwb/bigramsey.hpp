#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rwb/chains.hpp"
#include "rwb/error.hpp"
#include "rwb/expansion.hpp"
#include "rwb/mset.hpp"
#include "rwb/transport.hpp"

namespace rwb {

/// Subsets of the s-chain containing its least element, as sorted position
/// lists. Entry l holds position 0 plus position j+1 for every bit j of l.
std::vector<std::vector<std::size_t>> subchains_containing_min(std::size_t s);

/// pi(f) = f*: the subchain index and the chain embedding into omega_N.
struct PiImage {
  std::size_t ell = 0;
  Map f_star;

  friend bool operator==(const PiImage&, const PiImage&) = default;
  friend auto operator<=>(const PiImage&, const PiImage&) = default;
};

struct ReductionRecord {
  /// f(a) as an index into hat_E(omega_N), per carrier element a.
  Map f;
  /// Blocks of rho as chain positions, ordered by their minima.
  std::vector<std::vector<std::size_t>> rho_blocks;
  std::size_t ell = 0;
  /// Positions j_1 < ... < j_m of the block minima; j_1 = 0.
  std::vector<std::size_t> subchain;
  ChainEmbedding f_star;

  PiImage image() const { return PiImage{ell, f_star.map()}; }
};

/// R = hom(A, hat_E(omega_N)) in canonical order, with a lookup index.
struct BigRamseyInstance {
  OrderedMSet a;
  std::size_t n = 0;
  LexLift lift;
  std::vector<Map> r;
  std::map<Map, std::size_t> index;
};

inline constexpr std::size_t kDefaultRCap = 100'000;

/// Throws Errc::size_overflow when |R| exceeds `r_cap`.
BigRamseyInstance make_big_instance(const OrderedMSet& a, std::size_t n, std::size_t r_cap = kDefaultRCap);

/// Asserts h_1(1) <= ... <= h_s(1). Throws Errc::not_an_embedding when f is not
/// an order-embedding A -> hat_E(omega_N).
ReductionRecord pi_star(const OrderedMSet& a, const LexLift& lift, std::span<const std::size_t> f);

/// Claim 1: pi is injective on R.
bool pi_is_injective(const BigRamseyInstance& inst);

struct EquivarianceCheck {
  bool holds = true;
  std::size_t checked = 0;
};

/// Claim 2: pi(hat_E(u) . R') = u . pi(R') for u : omega_N' -> omega_N, with
/// g* = u . f* checked element by element.
EquivarianceCheck equivariance_of_pi(const OrderedMSet& a, const ChainEmbedding& u);

struct ReduceStep {
  std::size_t subchain = 0;
  std::size_t input_size = 0;
  std::size_t kept = 0;
  std::uint32_t color = 0;
};

struct BigRamseyRun {
  ChainEmbedding u;
  std::size_t colors_used = 0;
  std::size_t bound = 0;
  /// omega_N, then the chain size after each step.
  std::vector<std::size_t> tower;
  std::vector<ReduceStep> steps;
};

/// Runs the subchain steps i = n..1, each keeping a largest subset of the
/// current chain on which gamma'_i is constant, then recounts
/// |chi(hat_E(u) . R')| directly. Throws Errc::truncation_too_small (witness i)
/// when a step keeps fewer than `n_inner` points.
BigRamseyRun big_ramsey_reduce(const BigRamseyInstance& inst, std::span<const std::uint32_t> chi, std::size_t k,
                               std::size_t n_inner);

std::vector<std::uint32_t> random_coloring(std::size_t size, std::size_t k, std::uint64_t seed);

struct TrialResult {
  std::uint64_t seed = 0;
  bool ok = false;
  std::optional<BigRamseyRun> run;
  std::string error;
  std::size_t error_step = 0;
};

/// Trial i uses seed + i. Results do not depend on `threads`.
std::vector<TrialResult> run_trials(const BigRamseyInstance& inst, std::size_t k, std::size_t trials,
                                    std::uint64_t seed, std::size_t n_inner, std::size_t threads = 1);

struct UnorderedBound {
  std::size_t aggregate = 0;
  std::size_t formula = 0;
  bool within = false;
};

/// Sums the per-ordering bounds over the order fiber of A and compares with
/// n! * 2^(n-1). Throws Errc::missing_ordering.
UnorderedBound unordered_degree_bound(const MSet& a, const std::map<Ordering, std::optional<std::size_t>>& bounds);

}  // namespace rwb
