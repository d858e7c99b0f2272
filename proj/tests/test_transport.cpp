#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "rwb/transport.hpp"

using namespace rwb;

namespace {

FiniteMonoid z2() { return FiniteMonoid::cyclic(2); }

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

OrderedMSet swap_pair() {
  return OrderedMSet(MSet::validate(z2(), {"x", "y"}, Table{{0, 1}, {1, 0}}), {0, 1});
}

OrderedMSet fixed_points(std::size_t n) {
  Map id(n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = order[i] = i;
  return OrderedMSet(MSet::validate(z2(), names(n), Table{id, id}), order);
}

/// Weak-EM structures on the n-chain with an order-embedding structure map,
/// straight from the definitions.
std::vector<std::vector<EValue>> naive_weak(const FiniteMonoid& m, std::size_t n) {
  std::vector<std::vector<EValue>> out;
  oracle::for_each_map(n * m.size(), n, [&](const Map& flat) {
    std::vector<EValue> s(n);
    for (std::size_t a = 0; a < n; ++a) s[a].assign(flat.begin() + a * m.size(), flat.begin() + (a + 1) * m.size());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t m1 = 0; m1 < m.size(); ++m1)
        for (std::size_t m2 = 0; m2 < m.size(); ++m2)
          if (s[a][m.multiply(m1, m2)] != s[s[a][m1]][m2]) return;
    std::vector<EValue> along(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t w : m.well_order()) along[a].push_back(s[a][w]);
    for (std::size_t a = 0; a + 1 < n; ++a)
      if (!(along[a] < along[a + 1])) return;
    out.push_back(s);
  });
  return out;
}

}  // namespace

TEST_SUITE("transport") {
  TEST_CASE("lex lift of the 2-chain over Z2") {
    const LexLift lift = hat_E(2, z2());
    REQUIRE(lift.size() == 4);
    CHECK(lift.function(0) == Map{0, 0});
    CHECK(lift.function(1) == Map{0, 1});
    CHECK(lift.function(2) == Map{1, 0});
    CHECK(lift.function(3) == Map{1, 1});
    for (std::size_t i = 0; i < 4; ++i) {
      CHECK(lift.lifted.rank(i) == i);
      CHECK(lift.index_of(lift.function(i)) == i);
    }
    CHECK(lift.lifted.base().act(1, 1) == 2);
  }

  TEST_CASE("hat_E on morphisms post-composes") {
    const ChainEmbedding f = ChainEmbedding::make(2, 3, {0, 2});
    const Map m = hat_E_map(z2(), f);
    const LexLift x = hat_E(2, z2()), y = hat_E(3, z2());
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(y.function(m[i]) == oracle::compose(f.map(), x.function(i)));
    CHECK(std::is_sorted(m.begin(), m.end()));
  }

  TEST_CASE("delta-hat is an order-embedding") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const Map d = hat_delta(hat_E(n, z2()));
      CHECK(oracle::injective(d));
      CHECK(std::is_sorted(d.begin(), d.end()));
    }
    const LexLift lift = hat_E(2, z2());
    CHECK(standard_delta_hat(lift, 1) == EValue{1, 2});
  }

  TEST_CASE("the ordered swap pair as a weak coalgebra") {
    const WeakCoalgebra c = mset_as_weak_coalgebra(swap_pair());
    CHECK(c.structure == std::vector<EValue>{{0, 1}, {1, 0}});
    CHECK(structure_is_order_embedding(c));
    CHECK(!weak_square_failure(c));
  }

  TEST_CASE("weak coalgebra enumeration matches the definitions") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto got = enumerate_weak_coalgebras(z2(), n);
      const auto want = naive_weak(z2(), n);
      REQUIRE(got.size() == want.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(got[i].structure == want[i]);
        CHECK(!weak_square_failure(got[i]));
        CHECK(structure_is_order_embedding(got[i]));
      }
    }
  }

  TEST_CASE("PA and the Phi square on small coalgebras") {
    std::size_t checked = 0;
    for (std::size_t na = 1; na <= 2; ++na)
      for (std::size_t nb = na; nb <= 2; ++nb)
        for (const WeakCoalgebra& a : enumerate_weak_coalgebras(z2(), na))
          for (const WeakCoalgebra& b : enumerate_weak_coalgebras(z2(), nb))
            oracle::for_each_map(na, nb, [&](const Map& f) {
              if (!is_weak_hom(a, b, f)) return;
              for (std::size_t c = nb; c <= 3; ++c)
                for (const ChainEmbedding& u : enumerate_chain_embeddings(nb, c)) {
                  CHECK(phi_square_holds(b, u, standard_delta_hat));
                  const PACheck pa = check_PA(u, f, a, b);
                  CHECK(pa.holds);
                  CHECK(pa.v == f);
                  ++checked;
                }
            });
    CHECK(checked > 10);
  }

  TEST_CASE("a corrupted delta-hat breaks the Phi square") {
    const DeltaHat broken = [](const LexLift& lift, std::size_t h) {
      EValue out = standard_delta_hat(lift, h);
      std::reverse(out.begin(), out.end());
      return out;
    };
    const WeakCoalgebra b = mset_as_weak_coalgebra(swap_pair());
    CHECK(!phi_square_holds(b, ChainEmbedding::identity(2), broken));
    TransportOptions opt;
    opt.delta = broken;
    const TransportedWitness t = transport_witness(swap_pair(), swap_pair(), opt);
    CHECK(t.status == Certification::square_failure);
  }

  TEST_CASE("transporting a chain witness to fixed points") {
    const TransportedWitness t = transport_witness(fixed_points(1), fixed_points(2), TransportOptions{});
    CHECK(t.w == 3);
    CHECK(t.target.size() == 9);
    CHECK(t.status == Certification::certified);
    REQUIRE(t.verdict);
    CHECK(t.verdict->hom_ac == 3);
    const ArrowInstance inst = make_instance(view_of(fixed_points(1)), view_of(fixed_points(2)), view_of(t.target));
    CHECK(oracle::count_bad(inst.hom_ac, inst.hom_bc, inst.hom_ab, 2, 1) == 0);
  }

  TEST_CASE("transport reports an empty budget") {
    TransportOptions opt;
    opt.max_chain = 2;
    try {
      transport_witness(fixed_points(1), fixed_points(2), opt);
      FAIL("accepted");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::no_chain_witness_in_budget);
    }
  }

  TEST_CASE("universal embedding into the lift of a long chain") {
    const WeakCoalgebra b = mset_as_weak_coalgebra(swap_pair());
    const Map e = universal_embed(b, ChainEmbedding::make(2, 16, {0, 1}));
    CHECK(e == Map{0 * 16 + 1, 1 * 16 + 0});
    CHECK(std::is_sorted(e.begin(), e.end()));
    CHECK(universal_embed(b, ChainEmbedding::make(2, 4, {0, 3})) == Map{0 * 4 + 3, 3 * 4 + 0});
  }
}
