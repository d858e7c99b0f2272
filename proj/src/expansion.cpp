#include "rwb/expansion.hpp"

#include <algorithm>
#include <numeric>

namespace rwb {

std::vector<Ordering> all_orderings(std::size_t n) {
  std::vector<Ordering> out;
  Ordering p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

MSet forget_order(const OrderedMSet& a) { return a.base(); }

std::vector<OrderedMSet> fibers(const MSet& a) {
  std::vector<OrderedMSet> out;
  for (Ordering& o : all_orderings(a.size())) out.emplace_back(a, std::move(o));
  return out;
}

Ordering pull_back_order(std::span<const std::size_t> target_rank, std::span<const std::size_t> e) {
  Ordering o(e.size());
  std::iota(o.begin(), o.end(), std::size_t{0});
  std::sort(o.begin(), o.end(), [&](std::size_t x, std::size_t y) { return target_rank[e[x]] < target_rank[e[y]]; });
  return o;
}

namespace {

void require_embedding(const OrderedMSet& b, const MSet& a, std::span<const std::size_t> e) {
  if (!a.monoid().same_monoid(b.base().monoid()))
    throw Error(Errc::monoid_mismatch, "restriction between M-sets over different monoids");
  if (e.size() != a.size()) throw Error(Errc::not_an_embedding, "map is not total on the source");
  for (std::size_t x : e)
    if (x >= b.size()) throw Error(Errc::not_an_embedding, "map leaves the target carrier");
  if (!is_injective(e, b.size())) throw Error(Errc::not_an_embedding, "map is not injective");
  if (!is_equivariant(a, b.base(), e)) throw Error(Errc::not_an_embedding, "map is not equivariant");
}

}  // namespace

OrderedMSet restrict_along(const OrderedMSet& b, const MSet& a, std::span<const std::size_t> e) {
  require_embedding(b, a, e);
  OrderedMSet out(a, pull_back_order(b.ranks(), e));
  if (!is_order_embedding(out.ranks(), b.ranks(), e))
    throw Error(Errc::internal, "pulled-back order does not make e monotone");
  return out;
}

std::size_t count_admitting(const OrderedMSet& b, const MSet& a, std::span<const std::size_t> e) {
  require_embedding(b, a, e);
  std::size_t count = 0;
  for (const OrderedMSet& candidate : fibers(a))
    if (is_order_embedding(candidate.ranks(), b.ranks(), e)) ++count;
  return count;
}

Ordering extend_along(std::size_t b_size, std::span<const std::size_t> e, const Ordering& a_order) {
  Ordering out;
  std::vector<char> used(b_size, 0);
  for (std::size_t x : a_order) {
    out.push_back(e[x]);
    used[e[x]] = 1;
  }
  for (std::size_t y = 0; y < b_size; ++y)
    if (!used[y]) out.push_back(y);
  return out;
}

ReasonableCheck check_reasonable(const MSet& a, const MSet& b, std::size_t cap) {
  ReasonableCheck out;
  const std::vector<Ordering> orders = all_orderings(a.size());
  for (const MSetMorphism& e : enumerate_embeddings(a, b, cap)) {
    for (const Ordering& ao : orders) {
      ++out.checked;
      OrderedMSet as(a, ao);
      OrderedMSet bs(b, extend_along(b.size(), e.map, ao));
      if (!is_order_embedding(as.ranks(), bs.ranks(), e.map)) {
        out.ok = false;
        out.failure = ReasonableFailure{e.map, ao};
        return out;
      }
    }
  }
  return out;
}

std::size_t factorial(std::size_t n) noexcept {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r = saturating_mul(r, i);
  return r;
}

std::size_t degree_sum_bound(std::size_t carrier_size,
                             const std::map<Ordering, std::optional<std::size_t>>& ordered_degrees) {
  std::size_t sum = 0;
  for (const Ordering& o : all_orderings(carrier_size)) {
    auto it = ordered_degrees.find(o);
    if (it == ordered_degrees.end() || !it->second) {
      std::string msg = "no degree for ordering (";
      for (std::size_t i = 0; i < o.size(); ++i) msg += (i ? "," : "") + std::to_string(o[i]);
      throw Error(Errc::incomplete_fiber, msg + ")", o);
    }
    sum += *it->second;
  }
  return sum;
}

std::size_t degree_sum_bound(const MSet& a, const std::map<Ordering, std::optional<std::size_t>>& ordered_degrees) {
  return degree_sum_bound(a.size(), ordered_degrees);
}

}  // namespace rwb
