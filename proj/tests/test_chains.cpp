#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "rwb/chains.hpp"
#include "rwb/error.hpp"

using namespace rwb;

TEST_SUITE("chains") {
  TEST_CASE("ordinal sum of the empty family is empty") { CHECK(ordinal_sum({}).chain.empty()); }

  TEST_CASE("ordinal sum orders by factor, then within the factor") {
    const std::vector<Chain> family{Chain({"x"}), Chain({"y", "z"})};
    const OrdinalSum s = ordinal_sum(family);
    REQUIRE(s.chain.size() == 3);
    CHECK(s.parts[0] == std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(s.parts[1] == std::pair<std::size_t, std::size_t>{1, 0});
    CHECK(s.parts[2] == std::pair<std::size_t, std::size_t>{1, 1});
  }

  TEST_CASE("ordinal sum size is the sum of the sizes") {
    for (std::size_t a = 0; a <= 3; ++a)
      for (std::size_t b = 0; b <= 3; ++b)
        for (std::size_t c = 0; c <= 3; ++c) {
          const std::vector<Chain> family{Chain::omega(a), Chain::omega(b), Chain::omega(c)};
          CHECK(ordinal_sum(family).chain.size() == a + b + c);
        }
  }

  TEST_CASE("lex product of two 2-chains is 00 < 01 < 10 < 11") {
    const std::vector<Chain> family{Chain::omega(2), Chain::omega(2)};
    const LexProduct p = lex_product(family);
    const std::vector<std::vector<std::size_t>> expected{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(p.coords == expected);
  }

  TEST_CASE("lex product agrees with sorting all tuples") {
    const std::vector<Chain> family{Chain::omega(3), Chain::omega(2)};
    const LexProduct p = lex_product(family);
    auto tuples = oracle::all_maps(2, 3);
    tuples.erase(std::remove_if(tuples.begin(), tuples.end(), [](const Map& t) { return t[1] >= 2; }), tuples.end());
    std::sort(tuples.begin(), tuples.end());
    CHECK(p.chain.size() == 6);
    CHECK(p.coords == tuples);
    CHECK(p.coords.front() == std::vector<std::size_t>{0, 0});
  }

  TEST_CASE("lex product of one factor is that factor") {
    const std::vector<Chain> family{Chain::omega(4)};
    CHECK(lex_product(family).chain.size() == 4);
  }

  TEST_CASE("lex compare decides at the least point of disagreement") {
    const Map f{0, 1}, g{0, 2};
    CHECK(lex_compare(f, g, 2, 3) == std::strong_ordering::less);
    CHECK(lex_compare(g, f, 2, 3) == std::strong_ordering::greater);
    CHECK(lex_compare(f, f, 2, 3) == std::strong_ordering::equal);
    const std::vector<std::size_t> reversed{1, 0};
    CHECK(lex_compare(Map{0, 2}, Map{1, 0}, reversed, 3) == std::strong_ordering::greater);
  }

  TEST_CASE("lex compare rejects partial functions and values outside the codomain") {
    CHECK_THROWS_AS(lex_compare(Map{0}, Map{0, 1}, 2, 3), Error);
    CHECK_THROWS_AS(lex_compare(Map{0, 3}, Map{0, 1}, 2, 3), Error);
  }

  TEST_CASE("lex compare is a total order on A^S for |S|, |A| <= 3") {
    for (std::size_t s = 1; s <= 3; ++s)
      for (std::size_t a = 1; a <= 3; ++a) {
        const auto fs = oracle::all_maps(s, a);
        for (const Map& f : fs)
          for (const Map& g : fs) {
            const auto fg = lex_compare(f, g, s, a);
            CHECK((fg == std::strong_ordering::equal) == (f == g));
            const auto reversed = 0 <=> fg;
            CHECK(lex_compare(g, f, s, a) == reversed);
            // index-ordered lex compare is std::vector's comparison
            CHECK(fg == (f <=> g));
          }
      }
  }

  TEST_CASE("chain embeddings are the monotone injections") {
    CHECK(enumerate_chain_embeddings(2, 4).size() == 6);
    CHECK(enumerate_chain_embeddings(5, 3).empty());
    const auto ids = enumerate_chain_embeddings(4, 4);
    REQUIRE(ids.size() == 1);
    CHECK(ids.front() == ChainEmbedding::identity(4));
    for (std::size_t a = 0; a <= 4; ++a)
      for (std::size_t c = 0; c <= 6; ++c) {
        std::set<Map> expected;
        oracle::for_each_map(a, c, [&](const Map& f) {
          if (std::is_sorted(f.begin(), f.end()) && oracle::injective(f)) expected.insert(f);
        });
        const auto got = enumerate_chain_embeddings(a, c);
        std::vector<Map> maps;
        for (const auto& e : got) maps.push_back(e.map());
        CHECK(std::is_sorted(maps.begin(), maps.end()));
        CHECK(std::set<Map>(maps.begin(), maps.end()) == expected);
        CHECK(got.size() == binomial(c, a));
      }
  }

  TEST_CASE("chain embeddings validate and compose") {
    CHECK_THROWS_AS(ChainEmbedding::make(2, 3, {1, 1}), Error);
    CHECK_THROWS_AS(ChainEmbedding::make(2, 3, {0, 3}), Error);
    const auto inner = ChainEmbedding::make(2, 3, {0, 2});
    const auto outer = ChainEmbedding::make(3, 5, {1, 2, 4});
    CHECK(compose(outer, inner).map() == Map{1, 4});
    CHECK(compose(outer, inner).target_size() == 5);
  }

  TEST_CASE("chains reject duplicate labels") { CHECK_THROWS_AS(Chain({"a", "a"}), Error); }
}
