#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rwb/chains.hpp"
#include "rwb/monoid.hpp"

namespace rwb {

/// Finite M-set (A, alpha). Convention: act(m, act(n, a)) == act(n*m, a),
/// i.e. words act leftmost factor first.
class MSet {
 public:
  /// action[m][a] = alpha(m, a). Throws Errc::identity_axiom_fails (witness a)
  /// or Errc::composition_fails (witness m1, m2, a).
  static MSet validate(FiniteMonoid monoid, std::vector<std::string> carrier, const Table& action);

  const FiniteMonoid& monoid() const noexcept { return monoid_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::string& label(std::size_t a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  std::size_t act(std::size_t m, std::size_t a) const { return action_[m * labels_.size() + a]; }
  Table action() const;

  friend bool operator==(const MSet&, const MSet&) = default;

 private:
  FiniteMonoid monoid_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> action_;
};

/// M-set with a linear order on its carrier.
class OrderedMSet {
 public:
  /// `order` lists the carrier elements in increasing order.
  OrderedMSet(MSet base, std::vector<std::size_t> order);

  const MSet& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  std::span<const std::size_t> order() const noexcept { return order_; }
  std::size_t rank(std::size_t a) const { return rank_.at(a); }
  std::span<const std::size_t> ranks() const noexcept { return rank_; }
  Chain chain() const;

  friend bool operator==(const OrderedMSet&, const OrderedMSet&) = default;

 private:
  MSet base_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
};

enum class MorphismKind { morphism, embedding, order_embedding };

struct MSetMorphism {
  Map map;
  MorphismKind kind = MorphismKind::morphism;

  friend bool operator==(const MSetMorphism&, const MSetMorphism&) = default;
};

/// The common shape the hom-set enumerator works on: a carrier, the
/// self-maps a morphism must commute with, and an optional order
/// (empty `rank` means unordered).
struct ActionView {
  std::size_t size = 0;
  std::vector<Map> generators;
  std::vector<std::size_t> rank;
};

ActionView view_of(const MSet& a);
ActionView view_of(const OrderedMSet& a);

inline constexpr std::size_t kDefaultHomCap = 1'000'000;

/// All maps a -> b commuting with the generators (injective and monotone when
/// requested), in lexicographic order of the image tuple read along the
/// source order. Throws Errc::size_overflow past `cap` results.
std::vector<Map> enumerate_homs(const ActionView& a, const ActionView& b, bool injective,
                                std::size_t cap = kDefaultHomCap);

bool is_equivariant(const MSet& a, const MSet& b, std::span<const std::size_t> f);
bool is_order_embedding(std::span<const std::size_t> source_rank, std::span<const std::size_t> target_rank,
                        std::span<const std::size_t> f);
bool is_injective(std::span<const std::size_t> f, std::size_t target_size);

/// Embeddings in canonical order. Throws Errc::monoid_mismatch.
std::vector<MSetMorphism> enumerate_embeddings(const MSet& a, const MSet& b, std::size_t cap = kDefaultHomCap);
std::vector<MSetMorphism> enumerate_embeddings(const OrderedMSet& a, const OrderedMSet& b,
                                               std::size_t cap = kDefaultHomCap);
/// All equivariant maps, injective or not.
std::vector<Map> enumerate_morphisms(const MSet& a, const MSet& b, std::size_t cap = kDefaultHomCap);

/// Cofree M-set on x_size generators: carrier X^M, gamma(m, h)(m') = h(m*m').
/// Carrier index order coincides with the lex order on X^M taken along the
/// monoid's well-order; `function_of` recovers the function table.
MSet cofree_mset(std::size_t x_size, const FiniteMonoid& monoid, std::size_t cap = kDefaultHomCap);
OrderedMSet cofree_ordered_mset(std::size_t x_size, const FiniteMonoid& monoid, std::size_t cap = kDefaultHomCap);

/// Table h : M -> X of the index-th element of X^M (indexing as above).
Map function_of(std::size_t index, std::size_t x_size, const FiniteMonoid& monoid);
/// Inverse of function_of.
std::size_t index_of_function(std::span<const std::size_t> h, std::size_t x_size, const FiniteMonoid& monoid);

struct SubMSet {
  MSet sub;
  std::vector<std::size_t> elements;  // increasing carrier indices of the parent
  MSetMorphism inclusion;
};

/// Smallest action-closed subset containing `seed`, with the restricted action.
SubMSet generated_sub_mset(const MSet& b, std::span<const std::size_t> seed);
/// Ordered variant: the order is restricted as well.
OrderedMSet generated_sub_ordered_mset(const OrderedMSet& b, std::span<const std::size_t> seed,
                                       std::vector<std::size_t>* elements = nullptr);

/// Unary algebra over a finite alphabet, stored by one self-map per symbol.
class UnaryAlgebra {
 public:
  static UnaryAlgebra validate(std::vector<std::string> alphabet, std::vector<std::string> carrier,
                               std::vector<Map> generator_actions,
                               std::optional<std::vector<std::size_t>> order = std::nullopt);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Map>& generators() const noexcept { return generators_; }
  const std::optional<std::vector<std::size_t>>& order() const noexcept { return order_; }

  std::size_t symbol(std::string_view name) const;
  /// Leftmost symbol is applied first. Throws Errc::unknown_symbol.
  std::size_t evaluate_word(std::span<const std::size_t> word, std::size_t a) const;
  std::size_t evaluate_word(std::span<const std::string> word, std::size_t a) const;

  /// Word action closed to the truncation: action[w][a].
  Table word_action(const WordTruncation& words) const;

  ActionView view() const;

 private:
  std::vector<std::string> alphabet_;
  std::vector<std::string> labels_;
  std::vector<Map> generators_;
  std::optional<std::vector<std::size_t>> order_;
};

}  // namespace rwb
