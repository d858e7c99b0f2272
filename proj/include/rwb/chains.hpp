#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace rwb {

/// A total map between finite index sets {0..n-1} -> {0..m-1}.
using Map = std::vector<std::size_t>;

/// Finite chain. Elements are identified with 0..n-1 in increasing order;
/// the user-facing labels live in a side table.
class Chain {
 public:
  Chain() = default;
  /// Throws Errc::invalid_argument on duplicate labels.
  explicit Chain(std::vector<std::string> labels);

  /// The finite prefix {0 < 1 < ... < n-1} of omega.
  static Chain omega(std::size_t n);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  std::vector<std::string> labels_;
};

bool is_strictly_increasing(std::span<const std::size_t> map, std::size_t target_size) noexcept;

/// Strictly increasing map between two finite chains (given by their sizes).
class ChainEmbedding {
 public:
  ChainEmbedding() = default;
  /// Throws Errc::not_an_embedding unless `map` is strictly increasing into
  /// 0..target_size-1.
  static ChainEmbedding make(std::size_t source_size, std::size_t target_size, Map map);
  static ChainEmbedding identity(std::size_t n);

  std::size_t source_size() const noexcept { return map_.size(); }
  std::size_t target_size() const noexcept { return target_size_; }
  const Map& map() const noexcept { return map_; }
  std::size_t operator()(std::size_t i) const { return map_.at(i); }

  friend bool operator==(const ChainEmbedding&, const ChainEmbedding&) = default;
  friend auto operator<=>(const ChainEmbedding&, const ChainEmbedding&) = default;

 private:
  ChainEmbedding(std::size_t target_size, Map map) : target_size_(target_size), map_(std::move(map)) {}
  std::size_t target_size_ = 0;
  Map map_;
};

/// outer . inner (inner applied first).
ChainEmbedding compose(const ChainEmbedding& outer, const ChainEmbedding& inner);

struct OrdinalSum {
  Chain chain;
  /// For each element of the sum: (index in family, element of that factor).
  std::vector<std::pair<std::size_t, std::size_t>> parts;
};

/// (i, a) < (j, b) iff i < j, or i == j and a < b.
OrdinalSum ordinal_sum(std::span<const Chain> family);

struct LexProduct {
  Chain chain;
  /// Coordinates of each element, in increasing lex order.
  std::vector<std::vector<std::size_t>> coords;
};

/// Cartesian product ordered by the first coordinate of disagreement.
LexProduct lex_product(std::span<const Chain> family);

/// Compare f, g : S -> A at the least point of S (w.r.t. `domain_order`, which
/// lists S in increasing order) where they disagree. Throws
/// Errc::invalid_argument if either function is not total on S or takes a
/// value outside A.
std::strong_ordering lex_compare(std::span<const std::size_t> f, std::span<const std::size_t> g,
                                 std::span<const std::size_t> domain_order, std::size_t codomain_size);

/// Same, with S ordered by index.
std::strong_ordering lex_compare(std::span<const std::size_t> f, std::span<const std::size_t> g,
                                 std::size_t domain_size, std::size_t codomain_size);

/// All strictly increasing maps a-chain -> c-chain, in lexicographic order.
/// There are exactly binomial(c, a) of them.
std::vector<ChainEmbedding> enumerate_chain_embeddings(std::size_t a, std::size_t c);

inline std::vector<ChainEmbedding> enumerate_chain_embeddings(const Chain& a, const Chain& c) {
  return enumerate_chain_embeddings(a.size(), c.size());
}

std::size_t binomial(std::size_t n, std::size_t k) noexcept;

}  // namespace rwb
