#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rwb/comonad.hpp"
#include "rwb/mset.hpp"

namespace rwb {

/// Rooted forest as a monounary algebra: every element reaches a fixed point
/// of `parent`. `order`, when present, lists the carrier in increasing order.
struct RootedForest {
  std::vector<std::string> labels;
  Map parent;
  std::optional<std::vector<std::size_t>> order;

  std::size_t size() const noexcept { return labels.size(); }
  /// Position of each element in `order` (index order when unordered).
  std::vector<std::size_t> ranks() const;
  ActionView view() const;

  friend bool operator==(const RootedForest&, const RootedForest&) = default;
};

struct ForestCheck {
  bool ok = true;
  /// A cycle of length >= 2, listed from its least element, when !ok.
  std::vector<std::size_t> cycle;
};

ForestCheck is_rooted_forest(std::span<const std::size_t> parent);

/// Validates totality, the forest condition and the order. Throws
/// Errc::not_a_forest (witness = cycle) or Errc::invalid_argument.
RootedForest make_forest(std::vector<std::string> labels, Map parent,
                         std::optional<std::vector<std::size_t>> order = std::nullopt);

/// (a, f(a), f^2(a), ..., r).
std::vector<std::size_t> root_path(const RootedForest& forest, std::size_t a);

/// Coalgebra over the duplicate-free list functor sending a to its root path.
/// Throws Errc::not_a_forest when the order is missing.
Coalgebra encode_forest(const RootedForest& forest);

/// Inverse of encode_forest. Throws Errc::not_path_shaped(a) when alpha(a) does
/// not start with a or alpha(alpha(a)[1]) is not the tail of alpha(a).
RootedForest decode_coalgebra(const Coalgebra& c, std::optional<std::vector<std::size_t>> order = std::nullopt);

/// Lex comparison of duplicate-free sequences over a chain given by `ranks`;
/// a proper prefix precedes its extensions.
std::strong_ordering dagger_compare(std::span<const std::size_t> x, std::span<const std::size_t> y,
                                    std::span<const std::size_t> ranks);

/// alpha is injective and strictly increasing from the forest's order into
/// (A-dagger, lex).
bool structure_is_order_embedding(const RootedForest& forest, const Coalgebra& encoded);

/// Order-embeddings (ordered forests) or embeddings (unordered) of monounary
/// algebras, in canonical order.
std::vector<Map> forest_embeddings(const RootedForest& a, const RootedForest& b, std::size_t cap = kDefaultHomCap);

/// All labeled rooted forests on n vertices with carrier order 0 < ... < n-1.
std::vector<RootedForest> enumerate_forests(std::size_t n);

RootedForest forget_order(const RootedForest& forest);

}  // namespace rwb
