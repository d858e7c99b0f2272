#include "rwb/chains.hpp"

#include <algorithm>
#include <unordered_set>

#include "rwb/error.hpp"

namespace rwb {

Chain::Chain(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!seen.insert(labels_[i]).second)
      throw Error(Errc::invalid_argument, "chain has duplicate element '" + labels_[i] + "'", {i});
  }
}

Chain Chain::omega(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Chain(std::move(labels));
}

std::optional<std::size_t> Chain::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool is_strictly_increasing(std::span<const std::size_t> map, std::size_t target_size) noexcept {
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map[i] >= target_size) return false;
    if (i > 0 && map[i - 1] >= map[i]) return false;
  }
  return true;
}

ChainEmbedding ChainEmbedding::make(std::size_t source_size, std::size_t target_size, Map map) {
  if (map.size() != source_size)
    throw Error(Errc::not_an_embedding, "chain map is not total on its source");
  if (!is_strictly_increasing(map, target_size))
    throw Error(Errc::not_an_embedding, "chain map is not strictly increasing");
  return ChainEmbedding(target_size, std::move(map));
}

ChainEmbedding ChainEmbedding::identity(std::size_t n) {
  Map map(n);
  for (std::size_t i = 0; i < n; ++i) map[i] = i;
  return ChainEmbedding(n, std::move(map));
}

ChainEmbedding compose(const ChainEmbedding& outer, const ChainEmbedding& inner) {
  if (inner.target_size() != outer.source_size())
    throw Error(Errc::invalid_argument, "chain embeddings are not composable");
  Map map(inner.source_size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = outer(inner(i));
  return ChainEmbedding::make(inner.source_size(), outer.target_size(), std::move(map));
}

OrdinalSum ordinal_sum(std::span<const Chain> family) {
  OrdinalSum sum;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t a = 0; a < family[i].size(); ++a) {
      labels.push_back("(" + std::to_string(i) + "," + family[i].label(a) + ")");
      sum.parts.emplace_back(i, a);
    }
  }
  sum.chain = Chain(std::move(labels));
  return sum;
}

LexProduct lex_product(std::span<const Chain> family) {
  LexProduct product;
  for (const auto& factor : family)
    if (factor.empty()) return product;

  // Odometer with the last coordinate fastest is exactly increasing lex order.
  std::vector<std::size_t> coord(family.size(), 0);
  std::vector<std::string> labels;
  while (true) {
    std::string label = "(";
    for (std::size_t i = 0; i < coord.size(); ++i) {
      if (i) label += ",";
      label += family[i].label(coord[i]);
    }
    label += ")";
    labels.push_back(std::move(label));
    product.coords.push_back(coord);

    std::size_t pos = coord.size();
    bool carry = true;
    while (carry && pos > 0) {
      --pos;
      if (++coord[pos] < family[pos].size())
        carry = false;
      else
        coord[pos] = 0;
    }
    if (carry) break;
  }
  product.chain = Chain(std::move(labels));
  return product;
}

std::strong_ordering lex_compare(std::span<const std::size_t> f, std::span<const std::size_t> g,
                                 std::span<const std::size_t> domain_order, std::size_t codomain_size) {
  const std::size_t n = domain_order.size();
  if (f.size() != n || g.size() != n)
    throw Error(Errc::invalid_argument, "lex_compare: function is not total on its domain");
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i] >= codomain_size || g[i] >= codomain_size)
      throw Error(Errc::invalid_argument, "lex_compare: value outside the codomain chain", {i});
  }
  for (std::size_t point : domain_order) {
    if (point >= n) throw Error(Errc::invalid_argument, "lex_compare: bad domain order");
    if (f[point] != g[point]) return f[point] <=> g[point];
  }
  return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(std::span<const std::size_t> f, std::span<const std::size_t> g,
                                 std::size_t domain_size, std::size_t codomain_size) {
  std::vector<std::size_t> order(domain_size);
  for (std::size_t i = 0; i < domain_size; ++i) order[i] = i;
  return lex_compare(f, g, order, codomain_size);
}

std::vector<ChainEmbedding> enumerate_chain_embeddings(std::size_t a, std::size_t c) {
  std::vector<ChainEmbedding> out;
  if (a > c) return out;
  Map pick(a);
  for (std::size_t i = 0; i < a; ++i) pick[i] = i;
  while (true) {
    out.push_back(ChainEmbedding::make(a, c, pick));
    // Advance to the next a-subset of c in lexicographic order.
    std::size_t i = a;
    while (i > 0 && pick[i - 1] == c - a + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < a; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace rwb
