// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rwb/bigramsey.hpp"
#include "rwb/comonad.hpp"
#include "rwb/expansion.hpp"
#include "rwb/forests.hpp"
#include "rwb/ramsey.hpp"
#include "rwb/transport.hpp"

using namespace rwb;

namespace {

constexpr double kLawsSeconds = 10.0;
constexpr double kArrowSeconds = 60.0;
constexpr double kBigRamseySeconds = 600.0;
constexpr std::size_t kBigRamseyColors = 2;
constexpr std::size_t kEquivarianceSamples = 50;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<std::string> names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

Map identity_map(std::size_t n) {
  Map id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = i;
  return id;
}

FiniteMonoid z2() { return FiniteMonoid::cyclic(2); }
FiniteMonoid idempotent3() { return FiniteMonoid::validate(3, {{0, 1, 2}, {1, 1, 1}, {2, 2, 2}}, 0); }

std::vector<MSet> all_msets(const FiniteMonoid& m, std::size_t n) {
  std::vector<MSet> out;
  oracle::for_each_map(n * m.size(), n, [&](const Map& flat) {
    Table t(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) t[i].assign(flat.begin() + i * n, flat.begin() + (i + 1) * n);
    try {
      out.push_back(MSet::validate(m, names(n), t));
    } catch (const Error&) {
    }
  });
  return out;
}

std::vector<Coalgebra> all_action_coalgebras(const FiniteMonoid& m, std::size_t n) {
  const Functor e = Functor::monoid_action(m);
  std::vector<Coalgebra> out;
  oracle::for_each_map(n * m.size(), n, [&](const Map& flat) {
    std::vector<EValue> s(n);
    for (std::size_t a = 0; a < n; ++a) s[a].assign(flat.begin() + a * m.size(), flat.begin() + (a + 1) * m.size());
    out.push_back(make_coalgebra(e, names(n), s));
  });
  return out;
}

OrderedMSet ordered(const FiniteMonoid& m, const Table& t) {
  const std::size_t n = t.front().size();
  return OrderedMSet(MSet::validate(m, names(n), t), identity_map(n));
}

Outcome comonad_laws() {
  Outcome out;
  const auto t0 = Clock::now();
  std::size_t laws = 0;
  for (const FiniteMonoid& m : {FiniteMonoid::trivial(), z2(), idempotent3()})
    for (std::size_t n = 0; n <= 2; ++n) {
      const LawReport r = check_comonad_laws(Functor::monoid_action(m), n);
      out.require(r.all_passed(), "monoid-action law failure at |M| = " + std::to_string(m.size()));
      laws += r.laws.size();
    }
  for (std::size_t n = 1; n <= 3; ++n) {
    const LawReport r = check_comonad_laws(Functor::duplicate_free_list(), n);
    out.require(r.all_passed(), "list functor law failure at n = " + std::to_string(n));
    laws += r.laws.size();
  }

  const Functor e = Functor::monoid_action(z2());
  ComonadOps bad_delta = standard_ops(e);
  const auto delta = bad_delta.delta;
  bad_delta.delta = [delta](const EValue& h) {
    if (h == EValue{0, 1}) return delta(EValue{1, 0});
    if (h == EValue{1, 0}) return delta(EValue{0, 1});
    return delta(h);
  };
  ComonadOps bad_epsilon = standard_ops(e);
  bad_epsilon.epsilon = [](const EValue& h) { return h[1]; };
  bad_epsilon.epsilon_e = [](const EEValue& h) { return h[1]; };
  const std::vector<std::pair<const ComonadOps*, std::string>> mutations{{&bad_delta, "coassociativity"},
                                                                        {&bad_epsilon, "counit_left"}};
  for (const auto& [ops, expected] : mutations) {
    const LawReport r = check_comonad_laws(e, 2, *ops);
    std::size_t failing = 0;
    for (const LawResult& l : r.laws)
      if (!l.passed) {
        ++failing;
        out.require(!l.counterexample.empty(), "failing law " + l.law + " without a counterexample");
      }
    out.require(!r.at(expected).passed, "mutation not caught by " + expected);
    out.require(failing < r.laws.size(), "mutation not localized");
  }
  const double secs = seconds_since(t0);
  out.require(secs < kLawsSeconds, "too slow");
  if (out.ok)
    out.detail = std::to_string(laws) + " laws checked exhaustively, both mutations caught, " +
                 std::to_string(secs) + " s";
  return out;
}

Outcome cofree_universality() {
  Outcome out;
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 2; ++n)
    for (const Coalgebra& c : all_action_coalgebras(z2(), n)) {
      if (classify_coalgebra(c).kind != CoalgebraClass::em) continue;
      for (std::size_t x = 1; x <= 2; ++x) {
        const Coalgebra cofree = cofree_coalgebra(c.functor, x);
        const std::vector<EValue> objs = c.functor.objects(x);
        oracle::for_each_map(n, x, [&](const Map& f) {
          std::vector<Map> lifts;
          oracle::for_each_map(n, cofree.size(), [&](const Map& g) {
            if (!is_coalgebra_hom(c, cofree, g)) return;
            for (std::size_t a = 0; a < n; ++a)
              if (objs[g[a]][0] != f[a]) return;
            lifts.push_back(g);
          });
          ++cases;
          out.require(lifts.size() == 1, "found " + std::to_string(lifts.size()) + " lifts");
          if (lifts.size() != 1) return;
          for (std::size_t a = 0; a < n; ++a) {
            EValue expected;
            for (std::size_t v : c.structure[a]) expected.push_back(f[v]);
            out.require(objs[lifts.front()[a]] == expected, "lift differs from E(f) . alpha");
          }
          out.require(sharp_lift(c, x, f).map == lifts.front(), "sharp_lift differs from the brute-force lift");
        });
      }
    }
  if (out.ok) out.detail = std::to_string(cases) + " (coalgebra, f) pairs, each with exactly one lift";
  return out;
}

Outcome arrow_calibration() {
  Outcome out;
  ArrowOptions opt;
  opt.k = 2;
  opt.t = 1;

  auto t0 = Clock::now();
  const ArrowInstance six = make_instance(chain_view(2), chain_view(3), chain_view(6));
  const ArrowVerdict holds = holds_arrow(six, opt);
  const double holds_secs = seconds_since(t0);
  out.require(holds.status == ArrowStatus::holds, "6-chain verdict is not holds");
  out.require(holds_secs < kArrowSeconds, "6-chain too slow");
  out.require(oracle::count_bad(six.hom_ac, six.hom_bc, six.hom_ab, 2, 1) == 0,
              "naive oracle finds a bad coloring of the 6-chain");

  t0 = Clock::now();
  const ArrowInstance five = make_instance(chain_view(2), chain_view(3), chain_view(5));
  const ArrowVerdict refuted = holds_arrow(five, opt);
  const double refuted_secs = seconds_since(t0);
  out.require(refuted.status == ArrowStatus::refuted && refuted.bad_coloring.has_value(),
              "5-chain verdict is not refuted");
  out.require(refuted_secs < kArrowSeconds, "5-chain too slow");
  std::size_t naive = 0;
  if (refuted.bad_coloring) {
    const std::vector<std::size_t> colors(refuted.bad_coloring->colors.begin(), refuted.bad_coloring->colors.end());
    out.require(oracle::is_bad(five.hom_ac, five.hom_bc, five.hom_ab, colors, 1), "reported coloring is not bad");
    naive = oracle::count_bad(five.hom_ac, five.hom_bc, five.hom_ab, 2, 1);
    out.require(naive > 0, "naive oracle finds no bad coloring of the 5-chain");
  }
  if (out.ok)
    out.detail = "6-chain holds in " + std::to_string(holds_secs) + " s, 5-chain refuted in " +
                 std::to_string(refuted_secs) + " s, naive oracle: " + std::to_string(naive) + " of 1024 bad";
  return out;
}

Outcome mset_coalgebra_correspondence() {
  Outcome out;
  std::size_t objects = 0, pairs = 0;
  for (const FiniteMonoid& m : {FiniteMonoid::trivial(), z2()}) {
    std::vector<std::vector<MSet>> by_size(4);
    for (std::size_t n = 1; n <= 3; ++n) {
      by_size[n] = all_msets(m, n);
      for (const MSet& a : by_size[n]) {
        ++objects;
        out.require(mset_of(coalgebra_of(a)) == a, "MSet -> coalgebra -> MSet is not the identity");
        out.require(classify_coalgebra(coalgebra_of(a)).kind == CoalgebraClass::em, "M-set is not EM");
      }
      for (const Coalgebra& c : all_action_coalgebras(m, n)) {
        if (classify_coalgebra(c).kind != CoalgebraClass::em) continue;
        out.require(coalgebra_of(mset_of(c)).structure == c.structure, "coalgebra -> MSet -> coalgebra differs");
      }
    }
    for (std::size_t na = 1; na <= 3; ++na)
      for (std::size_t nb = 1; nb <= 3; ++nb)
        for (const MSet& a : by_size[na])
          for (const MSet& b : by_size[nb]) {
            ++pairs;
            const Coalgebra ca = coalgebra_of(a), cb = coalgebra_of(b);
            std::vector<Map> coalgebra_homs;
            oracle::for_each_map(na, nb, [&](const Map& f) {
              if (is_coalgebra_hom(ca, cb, f)) coalgebra_homs.push_back(f);
            });
            out.require(enumerate_morphisms(a, b) == coalgebra_homs, "hom-sets differ");
          }
  }
  if (out.ok) out.detail = std::to_string(objects) + " M-sets, " + std::to_string(pairs) + " hom-set pairs";
  return out;
}

Outcome forest_encoding() {
  Outcome out;
  const RootedForest f = make_forest({"a", "b", "c", "d", "e", "f", "g", "h", "i", "j"},
                                     Map{3, 7, 1, 3, 6, 1, 6, 3, 6, 6}, identity_map(10));
  const std::vector<std::string> expected{"a,d", "b,h,d", "c,b,h,d", "d", "e,g",
                                          "f,b,h,d", "g", "h,d", "i,g", "j,g"};
  const Coalgebra c = encode_forest(f);
  for (std::size_t a = 0; a < 10; ++a) {
    std::string got;
    for (std::size_t x : c.structure[a]) got += (got.empty() ? "" : ",") + f.labels[x];
    out.require(got == expected[a], "alpha(" + f.labels[a] + ") = (" + got + ")");
  }
  std::size_t forests = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto all = enumerate_forests(n);
    out.require(all.size() == oracle::power(n + 1, n - 1), "wrong forest count");
    for (const RootedForest& g : all) {
      ++forests;
      out.require(decode_coalgebra(encode_forest(g), g.order) == g, "decode . encode is not the identity");
    }
  }
  if (out.ok) out.detail = "10 of 10 table values, " + std::to_string(forests) + " forests round-trip";
  return out;
}

Outcome pre_adjunction() {
  Outcome out;
  std::size_t checked = 0;
  for (std::size_t na = 1; na <= 2; ++na)
    for (std::size_t nb = 1; nb <= 2; ++nb)
      for (const WeakCoalgebra& a : enumerate_weak_coalgebras(z2(), na))
        for (const WeakCoalgebra& b : enumerate_weak_coalgebras(z2(), nb))
          oracle::for_each_map(na, nb, [&](const Map& f) {
            if (!is_weak_hom(a, b, f)) return;
            for (std::size_t c = nb; c <= 3; ++c)
              for (const ChainEmbedding& u : enumerate_chain_embeddings(nb, c)) {
                ++checked;
                const PACheck pa = check_PA(u, f, a, b);
                out.require(pa.holds && pa.v == f, "PA fails");
                out.require(phi_square_holds(b, u, standard_delta_hat), "Phi(u) is not a coalgebra hom");
                out.require(phi_square_holds(a, compose(u, ChainEmbedding::make(na, nb, f)), standard_delta_hat),
                            "Phi(u . f) is not a coalgebra hom");
              }
          });
  out.require(checked > 0, "no instances");
  if (out.ok) out.detail = std::to_string(checked) + " (f, u) instances";
  return out;
}

Outcome witness_transport() {
  Outcome out;
  const OrderedMSet u = ordered(z2(), Table{{0}, {0}});
  const OrderedMSet v = ordered(z2(), Table{{0, 1}, {0, 1}});
  TransportOptions opt;
  opt.k = 2;
  const TransportedWitness t = transport_witness(u, v, opt);
  out.require(t.w == 3, "chain witness is not the 3-chain");
  out.require(t.status == Certification::certified, "not certified");
  const ArrowInstance inst = make_instance(view_of(u), view_of(v), view_of(t.target));
  out.require(inst.hom_ac.size() == 3, "expected 3 fixed points in the lift");
  out.require(oracle::count_bad(inst.hom_ac, inst.hom_bc, inst.hom_ab, 2, 1) == 0, "a bad 2-coloring exists");
  if (out.ok) out.detail = "W = 3, target of size " + std::to_string(t.target.size()) + ", 8 of 8 colorings fine";
  return out;
}

struct BigCase {
  std::string name;
  OrderedMSet a;
  std::size_t n, k, trials;
};

std::vector<BigCase> big_cases() {
  return {{"trivial 2-chain", ordered(FiniteMonoid::trivial(), Table{{0, 1}}), 20, 4, 200},
          {"Z2 swap pair", ordered(z2(), Table{{0, 1}, {1, 0}}), 5, 3, 100}};
}

/// Colors of the morphisms of R whose values all lie in the image of u.
std::size_t recount(const BigRamseyInstance& inst, const std::vector<std::uint32_t>& chi, const ChainEmbedding& u) {
  const std::set<std::size_t> im(u.map().begin(), u.map().end());
  std::set<std::uint32_t> seen;
  for (std::size_t i = 0; i < inst.r.size(); ++i) {
    bool inside = true;
    for (std::size_t y : inst.r[i])
      for (std::size_t x : inst.lift.function(y)) inside = inside && im.count(x) > 0;
    if (inside) seen.insert(chi[i]);
  }
  return seen.size();
}

Outcome big_ramsey_bound() {
  Outcome out;
  const auto t0 = Clock::now();
  std::string detail;
  for (const BigCase& bc : big_cases()) {
    const BigRamseyInstance inst = make_big_instance(bc.a, bc.n);
    std::size_t within = 0, max_colors = 0, min_kept = bc.n;
    for (std::size_t i = 0; i < bc.trials; ++i) {
      const std::uint64_t seed = i;
      const auto chi = random_coloring(inst.r.size(), bc.k, seed);
      try {
        const BigRamseyRun run = big_ramsey_reduce(inst, chi, bc.k, bc.a.size());
        const std::size_t colors = recount(inst, chi, run.u);
        out.require(colors == run.colors_used, bc.name + ": recount disagrees with the run");
        max_colors = std::max(max_colors, colors);
        min_kept = std::min(min_kept, run.u.source_size());
        if (colors <= kBigRamseyColors) ++within;
      } catch (const Error& e) {
        out.require(false, bc.name + ": trial " + std::to_string(i) + " failed: " + e.what());
      }
    }
    out.require(within == bc.trials, bc.name + ": " + std::to_string(bc.trials - within) + " trials above the bound");
    detail += bc.name + " " + std::to_string(within) + "/" + std::to_string(bc.trials) + " (max " +
              std::to_string(max_colors) + " colors, kept chains >= " + std::to_string(min_kept) + "); ";
  }
  const double secs = seconds_since(t0);
  out.require(secs < kBigRamseySeconds, "too slow");
  if (out.ok) out.detail = detail + std::to_string(secs) + " s";
  return out;
}

Outcome pi_claims() {
  Outcome out;
  std::size_t r_total = 0;
  for (const BigCase& bc : big_cases()) {
    const BigRamseyInstance inst = make_big_instance(bc.a, bc.n);
    out.require(pi_is_injective(inst), bc.name + ": pi is not injective");
    std::set<std::pair<std::size_t, Map>> images;
    for (const Map& f : inst.r) {
      const ReductionRecord rec = pi_star(bc.a, inst.lift, f);
      images.emplace(rec.ell, rec.f_star.map());
    }
    out.require(images.size() == inst.r.size(), bc.name + ": recomputed images collide");
    r_total += inst.r.size();
  }
  std::mt19937_64 rng(2024);
  std::size_t failures = 0;
  const auto cases = big_cases();
  for (std::size_t i = 0; i < kEquivarianceSamples; ++i) {
    const BigCase& bc = cases[i % cases.size()];
    const std::size_t src = 2 + rng() % (bc.n - 1);
    const auto us = enumerate_chain_embeddings(src, bc.n);
    const ChainEmbedding& u = us[rng() % us.size()];
    if (!equivariance_of_pi(bc.a, u).holds) ++failures;
  }
  out.require(failures == 0, std::to_string(failures) + " equivariance failures");
  if (out.ok)
    out.detail = "pi injective on " + std::to_string(r_total) + " morphisms, " +
                 std::to_string(kEquivarianceSamples) + " equivariance samples";
  return out;
}

Outcome degree_machinery() {
  Outcome out;
  ArrowOptions opt;
  const DegreeBudget budget = parse_budget("small");
  const MSet two = MSet::validate(FiniteMonoid::trivial(), names(2), Table{identity_map(2)});
  const DegreeProbe probe = probe_small_degree(view_of(two), Ctx::msets, budget, opt);
  out.require(probe.lower == 2, "lower bound for the 2-element set is " + std::to_string(probe.lower));
  const std::size_t upper = degree_sum_bound(two, {{Ordering{0, 1}, 1}, {Ordering{1, 0}, 1}});
  out.require(upper == 2, "degree sum is " + std::to_string(upper));

  for (const FiniteMonoid& m : {FiniteMonoid::trivial(), z2(), idempotent3()}) {
    Table t(m.size(), Map{0});
    const MSet one = MSet::validate(m, names(1), t);
    const DegreeProbe p = probe_small_degree(view_of(one), Ctx::msets, budget, opt);
    out.require(p.lower == 1 && p.upper == std::optional<std::size_t>{1},
                "1-element set over |M| = " + std::to_string(m.size()) + " is not [1, 1]");
    out.require(degree_sum_bound(one, {{Ordering{0}, 1}}) == 1, "degree sum for a 1-element set");
  }

  std::string aggregates;
  const std::vector<MSet> pairs{two, MSet::validate(z2(), names(2), Table{{0, 1}, {1, 0}})};
  for (const MSet& a : pairs) {
    std::map<Ordering, std::optional<std::size_t>> bounds;
    for (const OrderedMSet& o : fibers(a)) {
      const BigRamseyInstance inst = make_big_instance(o, 8);
      std::size_t bound = 0;
      for (const TrialResult& tr : run_trials(inst, 2, 10, 0, 2)) {
        out.require(tr.ok && tr.run, "bigramsey trial failed: " + tr.error);
        if (tr.run) bound = std::max(bound, tr.run->bound);
      }
      bounds[Ordering(o.order().begin(), o.order().end())] = bound;
    }
    const UnorderedBound ub = unordered_degree_bound(a, bounds);
    out.require(ub.formula == 4 && ub.aggregate <= 4 && ub.within, "aggregate " + std::to_string(ub.aggregate));
    aggregates += " " + std::to_string(ub.aggregate);
  }
  if (out.ok) out.detail = "t = 2 for the 2-element set, [1, 1] for 1-element sets, aggregates" + aggregates + " <= 4";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"comonad laws and mutations", comonad_laws},
      {"cofree universality", cofree_universality},
      {"arrow engine calibration", arrow_calibration},
      {"M-set / coalgebra correspondence", mset_coalgebra_correspondence},
      {"forest encoding", forest_encoding},
      {"pre-adjunction", pre_adjunction},
      {"witness transport", witness_transport},
      {"big Ramsey bound", big_ramsey_bound},
      {"pi injectivity and equivariance", pi_claims},
      {"degree machinery", degree_machinery},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2zu %s: %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failed += o.ok ? 0 : 1;
  }
  return failed;
}
