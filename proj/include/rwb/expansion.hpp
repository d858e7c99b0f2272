#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "rwb/error.hpp"
#include "rwb/mset.hpp"

namespace rwb {

/// A linear order on {0..n-1}, listed in increasing order.
using Ordering = std::vector<std::size_t>;

/// All n! orderings, lexicographically.
std::vector<Ordering> all_orderings(std::size_t n);

MSet forget_order(const OrderedMSet& a);

/// U^{-1}(A): every ordering of A, without merging isomorphic ones.
std::vector<OrderedMSet> fibers(const MSet& a);

/// The ordering of the source induced by `e` from the target ranks.
/// Requires e to be injective.
Ordering pull_back_order(std::span<const std::size_t> target_rank, std::span<const std::size_t> e);

/// The unique A* over A making e : A* -> B* an order-embedding. Throws
/// Errc::not_an_embedding when e is not an embedding A -> U(B*).
OrderedMSet restrict_along(const OrderedMSet& b, const MSet& a, std::span<const std::size_t> e);

/// Number of fiber elements over A admitting e as an order-embedding.
std::size_t count_admitting(const OrderedMSet& b, const MSet& a, std::span<const std::size_t> e);

struct ReasonableFailure {
  Map e;
  Ordering a_order;
};

struct ReasonableCheck {
  bool ok = true;
  std::size_t checked = 0;
  std::optional<ReasonableFailure> failure;
};

/// For every embedding e : A -> B and every A* over A, extends the order along
/// e (image first in A*'s order, remaining elements after in index order) and
/// checks that e becomes an order-embedding.
ReasonableCheck check_reasonable(const MSet& a, const MSet& b, std::size_t cap = kDefaultHomCap);

/// Ordering of B extending A* along e as above.
Ordering extend_along(std::size_t b_size, std::span<const std::size_t> e, const Ordering& a_order);

/// Sum of the fiber degrees over all |A|! orderings. Throws
/// Errc::incomplete_fiber when an ordering is missing or its degree unknown.
std::size_t degree_sum_bound(std::size_t carrier_size,
                             const std::map<Ordering, std::optional<std::size_t>>& ordered_degrees);
std::size_t degree_sum_bound(const MSet& a, const std::map<Ordering, std::optional<std::size_t>>& ordered_degrees);

std::size_t factorial(std::size_t n) noexcept;

}  // namespace rwb
