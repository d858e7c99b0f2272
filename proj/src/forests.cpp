#include "rwb/forests.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace rwb {

std::vector<std::size_t> RootedForest::ranks() const {
  std::vector<std::size_t> r(size());
  if (!order) {
    std::iota(r.begin(), r.end(), std::size_t{0});
    return r;
  }
  for (std::size_t i = 0; i < order->size(); ++i) r[(*order)[i]] = i;
  return r;
}

ActionView RootedForest::view() const {
  ActionView v;
  v.size = size();
  v.generators.push_back(parent);
  if (order) v.rank = ranks();
  return v;
}

ForestCheck is_rooted_forest(std::span<const std::size_t> parent) {
  const std::size_t n = parent.size();
  // 0 = unvisited, 1 = on the current walk, 2 = reaches a root
  std::vector<char> state(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    std::vector<std::size_t> walk;
    std::size_t a = start;
    while (state[a] == 0) {
      state[a] = 1;
      walk.push_back(a);
      if (parent[a] == a) break;
      a = parent[a];
    }
    if (state[a] == 1 && parent[a] != a) {
      auto it = std::find(walk.begin(), walk.end(), a);
      std::vector<std::size_t> cycle(it, walk.end());
      std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
      return {false, cycle};
    }
    for (std::size_t x : walk) state[x] = 2;
  }
  return {};
}

RootedForest make_forest(std::vector<std::string> labels, Map parent, std::optional<std::vector<std::size_t>> order) {
  const std::size_t n = labels.size();
  if (std::unordered_set<std::string>(labels.begin(), labels.end()).size() != n)
    throw Error(Errc::invalid_argument, "forest carrier labels are not distinct");
  if (parent.size() != n) throw Error(Errc::invalid_argument, "parent map must be total on the carrier");
  for (std::size_t a = 0; a < n; ++a)
    if (parent[a] >= n)
      throw Error(Errc::invalid_argument, "parent of '" + labels[a] + "' is outside the carrier", {a});
  ForestCheck check = is_rooted_forest(parent);
  if (!check.ok) {
    std::string msg = "parent map has a cycle:";
    for (std::size_t a : check.cycle) msg += " " + labels[a];
    throw Error(Errc::not_a_forest, msg, check.cycle);
  }
  if (order) {
    std::vector<std::size_t> sorted = *order;
    std::sort(sorted.begin(), sorted.end());
    bool perm = sorted.size() == n;
    for (std::size_t i = 0; perm && i < n; ++i) perm = sorted[i] == i;
    if (!perm) throw Error(Errc::invalid_argument, "forest order is not a permutation of the carrier");
  }
  return RootedForest{std::move(labels), std::move(parent), std::move(order)};
}

std::vector<std::size_t> root_path(const RootedForest& forest, std::size_t a) {
  std::vector<std::size_t> path{a};
  while (forest.parent[a] != a) {
    a = forest.parent[a];
    path.push_back(a);
  }
  return path;
}

Coalgebra encode_forest(const RootedForest& forest) {
  if (!forest.order) throw Error(Errc::not_a_forest, "encoding needs an ordered forest");
  if (!is_rooted_forest(forest.parent).ok) throw Error(Errc::not_a_forest, "parent map is not a rooted forest");
  std::vector<EValue> structure;
  for (std::size_t a = 0; a < forest.size(); ++a) structure.push_back(root_path(forest, a));
  return make_coalgebra(Functor::duplicate_free_list(), forest.labels, std::move(structure));
}

RootedForest decode_coalgebra(const Coalgebra& c, std::optional<std::vector<std::size_t>> order) {
  if (c.functor.kind() != FunctorKind::duplicate_free_list)
    throw Error(Errc::invalid_argument, "forest decoding needs a coalgebra over the list functor");
  const std::size_t n = c.size();
  Map parent(n);
  for (std::size_t a = 0; a < n; ++a) {
    const EValue& path = c.structure[a];
    if (!c.functor.is_value(path, n) || path.front() != a)
      throw Error(Errc::not_path_shaped, "structure value of '" + c.labels[a] + "' does not start with it", {a});
    if (path.size() > 1 && !std::equal(path.begin() + 1, path.end(), c.structure[path[1]].begin(),
                                       c.structure[path[1]].end()))
      throw Error(Errc::not_path_shaped, "structure value of '" + c.labels[a] + "' is not suffix-coherent", {a});
    parent[a] = path.size() > 1 ? path[1] : a;
  }
  return make_forest(c.labels, std::move(parent), std::move(order));
}

std::strong_ordering dagger_compare(std::span<const std::size_t> x, std::span<const std::size_t> y,
                                    std::span<const std::size_t> ranks) {
  const std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i)
    if (x[i] != y[i]) return ranks[x[i]] <=> ranks[y[i]];
  return x.size() <=> y.size();
}

bool structure_is_order_embedding(const RootedForest& forest, const Coalgebra& encoded) {
  if (!forest.order) return false;
  const auto ranks = forest.ranks();
  const auto& order = *forest.order;
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    if (dagger_compare(encoded.structure[order[i]], encoded.structure[order[i + 1]], ranks) !=
        std::strong_ordering::less)
      return false;
  return true;
}

std::vector<Map> forest_embeddings(const RootedForest& a, const RootedForest& b, std::size_t cap) {
  ActionView va = a.view(), vb = b.view();
  if (!a.order || !b.order) {
    va.rank.clear();
    vb.rank.clear();
  }
  return enumerate_homs(va, vb, true, cap);
}

std::vector<RootedForest> enumerate_forests(std::size_t n) {
  std::vector<RootedForest> out;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const std::size_t count = saturating_pow(n, n);
  Map parent(n);
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t r = i;
    for (std::size_t j = n; j-- > 0;) {
      parent[j] = r % n;
      r /= n;
    }
    if (is_rooted_forest(parent).ok) out.push_back(RootedForest{labels, parent, order});
  }
  return out;
}

RootedForest forget_order(const RootedForest& forest) {
  return RootedForest{forest.labels, forest.parent, std::nullopt};
}

}  // namespace rwb
