#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "rwb/bigramsey.hpp"

using namespace rwb;

namespace {

FiniteMonoid z2() { return FiniteMonoid::cyclic(2); }

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

OrderedMSet ordered(const FiniteMonoid& m, const Table& t) {
  const std::size_t n = t.front().size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return OrderedMSet(MSet::validate(m, names(n), t), order);
}

OrderedMSet trivial_chain(std::size_t n) {
  Map id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return ordered(FiniteMonoid::trivial(), Table{id});
}

OrderedMSet swap_pair() { return ordered(z2(), Table{{0, 1}, {1, 0}}); }
OrderedMSet fixed_point() { return ordered(z2(), Table{{0}, {0}}); }

/// Colors of the morphisms of R whose every value lies in the image of u.
std::set<std::uint32_t> recount(const BigRamseyInstance& inst, const std::vector<std::uint32_t>& chi,
                                const ChainEmbedding& u) {
  const Map& image = u.map();
  const std::set<std::size_t> im(image.begin(), image.end());
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < inst.r.size(); ++i) {
    bool inside = true;
    for (std::size_t y : inst.r[i])
      for (std::size_t v : inst.lift.function(y)) inside = inside && im.count(v) > 0;
    if (inside) seen.insert(chi[i]);
  }
  return seen;
}

}  // namespace

TEST_SUITE("bigramsey") {
  TEST_CASE("subchains containing the least element") {
    CHECK(subchains_containing_min(3) == std::vector<std::vector<std::size_t>>{{0}, {0, 1}, {0, 2}, {0, 1, 2}});
    for (std::size_t s = 1; s <= 6; ++s) {
      const auto all = subchains_containing_min(s);
      CHECK(all.size() == oracle::power(2, s - 1));
      CHECK(std::set<std::vector<std::size_t>>(all.begin(), all.end()).size() == all.size());
      for (const auto& c : all) {
        CHECK(c.front() == 0);
        CHECK(std::is_sorted(c.begin(), c.end()));
        CHECK(c.back() < s);
      }
    }
  }

  TEST_CASE("R is the set of order-embeddings into the lift") {
    for (const OrderedMSet& a : {trivial_chain(2), swap_pair(), fixed_point()})
      for (std::size_t n = 1; n <= 4; ++n) {
        const BigRamseyInstance inst = make_big_instance(a, n);
        CHECK(inst.r == oracle::homs(view_of(a), view_of(inst.lift.lifted), true));
      }
    CHECK(make_big_instance(trivial_chain(2), 5).r.size() == 10);
    CHECK(make_big_instance(swap_pair(), 5).r.size() == 10);
    CHECK_THROWS_AS(make_big_instance(trivial_chain(2), 50, 100), Error);
  }

  TEST_CASE("pi over the trivial monoid is the identity on values") {
    const OrderedMSet a = trivial_chain(2);
    const LexLift lift = hat_E(5, FiniteMonoid::trivial());
    const ReductionRecord r = pi_star(a, lift, Map{1, 4});
    CHECK(r.ell == 1);
    CHECK(r.subchain == std::vector<std::size_t>{0, 1});
    CHECK(r.f_star.map() == Map{1, 4});
    CHECK_THROWS_AS(pi_star(a, lift, Map{4, 1}), Error);
  }

  TEST_CASE("pi on the swap pair collapses to one block") {
    const LexLift lift = hat_E(4, z2());
    const Map f{lift.index_of(Map{1, 3}), lift.index_of(Map{3, 1})};
    const ReductionRecord r = pi_star(swap_pair(), lift, f);
    CHECK(r.ell == 1);
    CHECK(r.f_star.map() == Map{1, 3});
  }

  TEST_CASE("pi is injective on small instances") {
    for (const OrderedMSet& a : {trivial_chain(2), trivial_chain(3), swap_pair(), fixed_point()})
      for (std::size_t n = 1; n <= 4; ++n) {
        const BigRamseyInstance inst = make_big_instance(a, n);
        CHECK(pi_is_injective(inst));
        std::set<PiImage> images;
        for (const Map& f : inst.r) images.insert(pi_star(a, inst.lift, f).image());
        CHECK(images.size() == inst.r.size());
      }
  }

  TEST_CASE("pi is equivariant along chain embeddings") {
    std::mt19937_64 rng(5);
    for (const OrderedMSet& a : {trivial_chain(2), swap_pair()})
      for (int trial = 0; trial < 10; ++trial) {
        const std::size_t src = 2 + rng() % 3, dst = src + rng() % 3;
        const auto all = enumerate_chain_embeddings(src, dst);
        const ChainEmbedding& u = all[rng() % all.size()];
        const EquivarianceCheck chk = equivariance_of_pi(a, u);
        CHECK(chk.holds);
        CHECK(chk.checked == make_big_instance(a, src).r.size());
      }
  }

  TEST_CASE("a one-element A reduces to a single color") {
    const BigRamseyInstance inst = make_big_instance(fixed_point(), 12);
    REQUIRE(inst.r.size() == 12);
    const auto chi = random_coloring(inst.r.size(), 3, 9);
    const BigRamseyRun run = big_ramsey_reduce(inst, chi, 3, 1);
    CHECK(run.bound == 1);
    CHECK(run.colors_used == 1);
    CHECK(run.tower.front() == 12);
    CHECK(recount(inst, chi, run.u).size() == 1);
  }

  TEST_CASE("reduction colors agree with an independent recount") {
    for (const OrderedMSet& a : {trivial_chain(2), swap_pair()}) {
      const BigRamseyInstance inst = make_big_instance(a, 16);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto chi = random_coloring(inst.r.size(), 2, seed);
        const BigRamseyRun run = big_ramsey_reduce(inst, chi, 2, 2);
        const auto seen = recount(inst, chi, run.u);
        CHECK(seen.size() == run.colors_used);
        CHECK(run.colors_used <= run.bound);
        CHECK(run.u.source_size() >= 2);
      }
    }
  }

  TEST_CASE("a short chain is reported as too small") {
    const BigRamseyInstance inst = make_big_instance(trivial_chain(2), 4);
    const auto chi = random_coloring(inst.r.size(), 2, 1);
    try {
      big_ramsey_reduce(inst, chi, 2, 10);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::truncation_too_small);
      CHECK(e.witness().size() == 1);
    }
  }

  TEST_CASE("random colorings are reproducible") {
    const auto a = random_coloring(100, 3, 42), b = random_coloring(100, 3, 42);
    CHECK(a == b);
    CHECK(std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c < 3; }));
    CHECK(random_coloring(100, 3, 43) != a);
  }

  TEST_CASE("trials do not depend on the thread count") {
    const BigRamseyInstance inst = make_big_instance(swap_pair(), 10);
    const auto one = run_trials(inst, 2, 12, 7, 2, 1), many = run_trials(inst, 2, 12, 7, 2, 4);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
      CHECK(one[i].seed == 7 + i);
      CHECK(one[i].ok == many[i].ok);
      if (one[i].run && many[i].run) {
        CHECK(one[i].run->u == many[i].run->u);
        CHECK(one[i].run->colors_used == many[i].run->colors_used);
      }
    }
  }

  TEST_CASE("unordered bound sums over the orderings") {
    const auto triv = [](std::size_t n) {
      Map id(n);
      for (std::size_t i = 0; i < n; ++i) id[i] = i;
      return MSet::validate(FiniteMonoid::trivial(), names(n), Table{id});
    };
    const UnorderedBound one = unordered_degree_bound(triv(1), {{Ordering{0}, 1}});
    CHECK(one.aggregate == 1);
    CHECK(one.formula == 1);
    CHECK(one.within);
    const UnorderedBound two = unordered_degree_bound(triv(2), {{Ordering{0, 1}, 2}, {Ordering{1, 0}, 2}});
    CHECK(two.aggregate == 4);
    CHECK(two.formula == 4);
    CHECK(two.within);
    try {
      unordered_degree_bound(triv(2), {{Ordering{0, 1}, 2}});
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::missing_ordering);
    }
  }
}
