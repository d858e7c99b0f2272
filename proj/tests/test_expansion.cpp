#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rwb/expansion.hpp"

using namespace rwb;

namespace {

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

std::vector<MSet> z2_sets(std::size_t n) {
  std::vector<MSet> out;
  oracle::for_each_map(n, n, [&](const Map& g) {
    Map id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    try {
      out.push_back(MSet::validate(FiniteMonoid::cyclic(2), names(n), Table{id, g}));
    } catch (const Error&) {
    }
  });
  return out;
}

bool monotone_into(const Ordering& source, std::span<const std::size_t> target_rank, const Map& e) {
  for (std::size_t i = 0; i + 1 < source.size(); ++i)
    if (!(target_rank[e[source[i]]] < target_rank[e[source[i + 1]]])) return false;
  return true;
}

}  // namespace

TEST_SUITE("expansion") {
  TEST_CASE("orderings and fibers") {
    const auto all = all_orderings(3);
    CHECK(all.size() == 6);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(all.front() == Ordering{0, 1, 2});
    for (std::size_t n = 1; n <= 3; ++n)
      for (const MSet& a : z2_sets(n)) {
        const auto fib = fibers(a);
        CHECK(fib.size() == oracle::factorial(n));
        for (const OrderedMSet& o : fib) CHECK(forget_order(o) == a);
      }
  }

  TEST_CASE("pulling back an order along an injection") {
    const std::vector<std::size_t> ranks{2, 0, 1};
    CHECK(pull_back_order(ranks, Map{0, 1}) == Ordering{1, 0});
    CHECK(pull_back_order(ranks, Map{2, 1, 0}) == Ordering{1, 0, 2});
  }

  TEST_CASE("restriction along an embedding is the unique admissible order") {
    for (std::size_t na = 1; na <= 2; ++na)
      for (std::size_t nb = na; nb <= 3; ++nb)
        for (const MSet& a : z2_sets(na))
          for (const MSet& b : z2_sets(nb))
            for (const OrderedMSet& bo : fibers(b))
              for (const MSetMorphism& e : enumerate_embeddings(a, b)) {
                std::vector<Ordering> admissible;
                for (const Ordering& o : all_orderings(na))
                  if (monotone_into(o, bo.ranks(), e.map)) admissible.push_back(o);
                REQUIRE(admissible.size() == 1);
                const OrderedMSet r = restrict_along(bo, a, e.map);
                CHECK(std::equal(r.order().begin(), r.order().end(), admissible.front().begin(),
                                 admissible.front().end()));
                CHECK(count_admitting(bo, a, e.map) == 1);
              }
  }

  TEST_CASE("restriction rejects non-embeddings") {
    const MSet one = z2_sets(1).front();
    const MSet two = z2_sets(2).front();
    const OrderedMSet b = fibers(two).front();
    try {
      restrict_along(b, two, Map{0, 0});
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::not_an_embedding);
    }
    CHECK_NOTHROW(restrict_along(b, one, Map{1}));
  }

  TEST_CASE("order extension along an embedding") {
    const Ordering ext = extend_along(4, Map{3, 1}, Ordering{1, 0});
    CHECK(ext == Ordering{1, 3, 0, 2});
    for (std::size_t na = 1; na <= 2; ++na)
      for (std::size_t nb = na; nb <= 3; ++nb) {
        const ReasonableCheck chk = check_reasonable(z2_sets(na).back(), z2_sets(nb).back());
        CHECK(chk.ok);
        CHECK(!chk.failure);
      }
    std::size_t total = 0;
    for (const MSet& a : z2_sets(2))
      for (const MSet& b : z2_sets(3)) {
        const ReasonableCheck chk = check_reasonable(a, b);
        CHECK(chk.ok);
        total += chk.checked;
      }
    CHECK(total > 0);
  }

  TEST_CASE("degree sums over the order fiber") {
    CHECK(degree_sum_bound(1, {{Ordering{0}, 1}}) == 1);
    CHECK(degree_sum_bound(2, {{Ordering{0, 1}, 1}, {Ordering{1, 0}, 1}}) == 2);
    CHECK(degree_sum_bound(2, {{Ordering{0, 1}, 2}, {Ordering{1, 0}, 2}}) == 4);
    try {
      degree_sum_bound(2, {{Ordering{0, 1}, 2}});
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::incomplete_fiber);
    }
    CHECK_THROWS_AS(degree_sum_bound(2, {{Ordering{0, 1}, 2}, {Ordering{1, 0}, std::nullopt}}), Error);
    CHECK(factorial(5) == 120);
  }
}
