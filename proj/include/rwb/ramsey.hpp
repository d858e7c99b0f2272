#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rwb/error.hpp"
#include "rwb/mset.hpp"

namespace rwb {

/// Categories the arrow engine works in. Every object is reduced to an
/// ActionView; morphisms are the injective maps commuting with the
/// generators (and monotone when both sides carry an order).
enum class Ctx { chains, msets, ordered_msets, forests };

std::string_view ctx_name(Ctx c) noexcept;
/// Throws Errc::invalid_argument on an unknown name.
Ctx parse_ctx(std::string_view name);
/// Whether the context consists of ordered objects.
bool ctx_is_ordered(Ctx c, const ActionView& sample) noexcept;

/// The n-chain as an ActionView.
ActionView chain_view(std::size_t n);

/// Disjoint union; b's elements follow a's in the order. Both views must have
/// the same number of generators.
ActionView disjoint_union(const ActionView& a, const ActionView& b);

using Color = std::uint8_t;

/// A k-coloring of the canonical enumeration of hom(A, C).
struct Coloring {
  std::size_t k = 0;
  std::vector<Color> colors;
};

enum class ArrowStatus { holds, refuted, inconclusive };

std::string_view status_name(ArrowStatus s) noexcept;

/// A partial coloring (colors of the first prefix.size() morphisms of
/// hom(A, C)) together with a w in hom(B, C) that every completion leaves
/// with at most t colors.
struct WitnessEntry {
  std::vector<Color> prefix;
  std::size_t w = 0;
};

struct ArrowVerdict {
  ArrowStatus status = ArrowStatus::inconclusive;
  /// Why the verdict was reached: "search", "sampling", "empty_hom_BC",
  /// "empty_hom_AC", "t_at_least_k", "node_budget".
  std::string reason;
  std::size_t hom_ac = 0, hom_bc = 0, hom_ab = 0;
  std::optional<Coloring> bad_coloring;
  /// For holds: one entry per pruned coloring class (first `kMaxWitnesses`).
  std::vector<WitnessEntry> witnesses;
  std::size_t witness_classes = 0;
  std::size_t samples_tried = 0;
};

inline constexpr std::size_t kMaxWitnesses = 4096;

struct ArrowOptions {
  std::size_t k = 2;
  std::size_t t = 1;
  /// Exhaustive search only when |hom(A, C)| is at most this.
  std::size_t exhaustive_cap = 64;
  std::size_t hom_cap = kDefaultHomCap;
  std::size_t threads = 1;
  std::uint64_t seed = 0;
  /// Random colorings tried beyond the exhaustive cap.
  std::size_t samples = 2000;
  /// Search nodes allowed before giving up with status inconclusive.
  std::size_t node_budget = 200'000'000;
};

/// The data the engine needs: the three hom-sets.
struct ArrowInstance {
  std::vector<Map> hom_ac, hom_bc, hom_ab;
};

ArrowInstance make_instance(const ActionView& a, const ActionView& b, const ActionView& c,
                            std::size_t hom_cap = kDefaultHomCap);

/// copies[w] = indices into hom_ac of w . f for f in hom_ab.
std::vector<std::vector<std::size_t>> copy_indices(const ArrowInstance& inst);

/// C -> (B)^A_{k,t}. Backtracking over colorings of hom(A, C) in index order
/// with color canonicalization, pruning a branch as soon as some w can no
/// longer see more than t colors. Thread count does not affect the result.
ArrowVerdict holds_arrow(const ArrowInstance& inst, const ArrowOptions& opt);
ArrowVerdict holds_arrow(const ActionView& a, const ActionView& b, const ActionView& c, const ArrowOptions& opt);

/// True iff every w in hom(B, C) sees more than t colors.
bool is_bad_coloring(const ArrowInstance& inst, const Coloring& coloring, std::size_t t);

struct WitnessSearch {
  /// Position in the candidate stream of the first C with C -> (B)^A_{k,t}.
  std::optional<std::size_t> found;
  /// Number of candidates examined (the search bound when nothing was found).
  std::size_t examined = 0;
  std::vector<ArrowVerdict> verdicts;
};

/// Walks `candidates` (each embedding in the next) and stops at the first
/// success, or at the first inconclusive verdict, since nothing further can
/// be claimed from there.
WitnessSearch find_witness(const ActionView& a, const ActionView& b, const std::vector<ActionView>& candidates,
                           const ArrowOptions& opt);

/// Chain candidates n = max(a, b) .. max_n. Returns the chain size found.
std::optional<std::size_t> find_chain_witness(std::size_t a, std::size_t b, std::size_t max_n, const ArrowOptions& opt,
                                              WitnessSearch* trace = nullptr);

struct DegreeBudget {
  /// Largest B (carrier size) used for the lower bound.
  std::size_t max_b = 6;
  /// Largest C used when corroborating with explicit refutations.
  std::size_t max_c = 6;
  std::size_t exhaustive_cap = 64;
};

/// Named budgets: "small", "medium".
DegreeBudget parse_budget(std::string_view name);

struct DegreeProbe {
  std::size_t lower = 1;
  std::optional<std::size_t> upper;
  std::vector<std::string> evidence;
};

/// Interval for the small Ramsey degree of A in the given context.
///
/// Lower bound: for a candidate B, m(B) = min over orderings B* of B of the
/// number of distinct orderings induced on A by hom(A, B). Coloring each
/// e in hom(A, C) by the ordering it pulls back from any fixed ordering of C
/// gives every copy of B at least m(B) colors, so t(A) >= m(B) for all C.
/// Explicit holds_arrow refutations on small C are recorded as evidence.
///
/// Upper bound: ordered contexts have the Ramsey property (t = 1); unordered
/// contexts get the sum over the order fiber, |A|!.
DegreeProbe probe_small_degree(const ActionView& a, Ctx ctx, const DegreeBudget& budget, const ArrowOptions& opt);

}  // namespace rwb
