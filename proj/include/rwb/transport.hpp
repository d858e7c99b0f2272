#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rwb/chains.hpp"
#include "rwb/comonad.hpp"
#include "rwb/error.hpp"
#include "rwb/monoid.hpp"
#include "rwb/mset.hpp"
#include "rwb/ramsey.hpp"

namespace rwb {

/// The ordered cofree M-set on a chain X: carrier X^M in lex order (index
/// order), action gamma(m, h)(m') = h(m*m').
struct LexLift {
  FiniteMonoid monoid;
  std::size_t base_size = 0;
  OrderedMSet lifted;

  std::size_t size() const noexcept { return lifted.size(); }
  /// h as a table M -> X.
  Map function(std::size_t index) const { return function_of(index, base_size, monoid); }
  std::size_t index_of(std::span<const std::size_t> h) const { return index_of_function(h, base_size, monoid); }
};

LexLift hat_E(std::size_t base_size, const FiniteMonoid& monoid, std::size_t cap = kDefaultHomCap);

/// hat_E on morphisms: h |-> f . h, as an index map hat_E(X) -> hat_E(Y).
Map hat_E_map(const FiniteMonoid& monoid, const ChainEmbedding& f);

/// delta-hat(h)(v) = gamma(v, h) as an element of hat_E(X), i.e. the function
/// w |-> h(v*w). Pluggable so that a corrupted version can be tested.
using DeltaHat = std::function<EValue(const LexLift& lift, std::size_t h)>;

EValue standard_delta_hat(const LexLift& lift, std::size_t h);

/// delta-hat as an index map hat_E(X) -> hat_E(hat_E(X)). Asserts that it is
/// an order-embedding and that the weak-EM square commutes.
Map hat_delta(const LexLift& lift, std::size_t cap = kDefaultHomCap);

/// Weak Eilenberg-Moore coalgebra for hat_E: a chain (carrier indices in
/// increasing order) with structure[a][m] in the carrier.
struct WeakCoalgebra {
  FiniteMonoid monoid;
  std::vector<std::string> labels;
  std::vector<EValue> structure;

  std::size_t size() const noexcept { return labels.size(); }
};

/// alpha(a)(g) = alpha'(g, a), with the carrier re-indexed along A's order.
/// Asserts that alpha is an order-embedding and the weak-EM square.
WeakCoalgebra mset_as_weak_coalgebra(const OrderedMSet& a);

/// (hat_E(X), delta-hat_X).
WeakCoalgebra hat_cofree(const LexLift& lift, const DeltaHat& delta = standard_delta_hat);

/// First a where delta-hat . alpha != hat_E(alpha) . alpha.
std::optional<std::size_t> weak_square_failure(const WeakCoalgebra& c);
/// alpha is strictly increasing into (carrier^M, lex).
bool structure_is_order_embedding(const WeakCoalgebra& c);
/// Order-embedding square: beta . f == hat_E(f) . alpha, f strictly increasing.
bool is_weak_hom(const WeakCoalgebra& a, const WeakCoalgebra& b, std::span<const std::size_t> f);

/// Every weak-EM coalgebra structure on the n-chain whose structure map is
/// an order-embedding, in lex order of the structure tables.
std::vector<WeakCoalgebra> enumerate_weak_coalgebras(const FiniteMonoid& monoid, std::size_t n);

/// Phi(u) = hat_E(u) . beta : B -> hat_E(C) as indices into hat_E(C), where
/// u : chain(B) -> C. Asserts the homomorphism square into
/// (hat_E(C), delta-hat_C) unless `check` is false.
Map phi(const WeakCoalgebra& b, const ChainEmbedding& u, bool check = true);

/// Whether Phi(u) is a coalgebra hom into (hat_E(C), delta) and an order-embedding.
bool phi_square_holds(const WeakCoalgebra& b, const ChainEmbedding& u, const DeltaHat& delta);

struct PACheck {
  bool holds = false;
  Map v;
};

/// Phi_B(u) . f == Phi_A(u . v) with v = f.
PACheck check_PA(const ChainEmbedding& u, std::span<const std::size_t> f, const WeakCoalgebra& a,
                 const WeakCoalgebra& b);

/// hat_E(f) . beta for f : chain(B) -> omega_N, validated as an injective
/// order-embedding and coalgebra hom.
Map universal_embed(const WeakCoalgebra& b, const ChainEmbedding& f);

enum class Certification { certified, refuted, inconclusive, square_failure };

std::string_view certification_name(Certification c) noexcept;

struct TransportOptions {
  std::size_t k = 2;
  /// Largest chain W tried.
  std::size_t max_chain = 8;
  /// Exhaustive certification only when |hom(U, hat_E(W))| is at most this.
  std::size_t certify_cap = 20;
  ArrowOptions arrow;
  DeltaHat delta = standard_delta_hat;
};

struct TransportedWitness {
  std::size_t w = 0;
  OrderedMSet target;
  Certification status = Certification::inconclusive;
  ArrowVerdict chain_verdict;
  std::optional<ArrowVerdict> verdict;
  std::size_t phi_checked = 0;
  std::string detail;
};

/// Finds a chain W with W -> (|V|)^{|U|}_k, lifts it to hat_E(W), checks the
/// Phi square for every u : chain(V) -> W, and certifies
/// hat_E(W) -> (V)^U_k when hom(U, hat_E(W)) is small enough.
/// Throws Errc::no_chain_witness_in_budget.
TransportedWitness transport_witness(const OrderedMSet& u, const OrderedMSet& v, const TransportOptions& opt);

}  // namespace rwb
