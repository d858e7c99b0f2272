#include "rwb/bigramsey.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <thread>

namespace rwb {

std::vector<std::vector<std::size_t>> subchains_containing_min(std::size_t s) {
  if (s == 0) throw Error(Errc::invalid_argument, "subchains need a nonempty chain");
  if (s > 20) throw Error(Errc::size_overflow, "too many subchains");
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << (s - 1)); ++mask) {
    std::vector<std::size_t> sub{0};
    for (std::size_t j = 0; j + 1 < s; ++j)
      if (mask >> j & 1) sub.push_back(j + 1);
    out.push_back(std::move(sub));
  }
  return out;
}

BigRamseyInstance make_big_instance(const OrderedMSet& a, std::size_t n, std::size_t r_cap) {
  BigRamseyInstance inst{a, n, hat_E(n, a.base().monoid()), {}, {}};
  inst.r = enumerate_homs(view_of(a), view_of(inst.lift.lifted), true, r_cap);
  for (std::size_t i = 0; i < inst.r.size(); ++i) inst.index.emplace(inst.r[i], i);
  return inst;
}

ReductionRecord pi_star(const OrderedMSet& a, const LexLift& lift, std::span<const std::size_t> f) {
  if (f.size() != a.size()) throw Error(Errc::not_an_embedding, "f is not total on A");
  for (std::size_t y : f)
    if (y >= lift.size()) throw Error(Errc::not_an_embedding, "f leaves hat_E(omega_N)");
  if (!is_injective(f, lift.size()) || !is_equivariant(a.base(), lift.lifted.base(), f) ||
      !is_order_embedding(a.ranks(), lift.lifted.ranks(), f))
    throw Error(Errc::not_an_embedding, "f is not an order-embedding A -> hat_E(omega_N)");

  const std::size_t s = a.size();
  const std::size_t one = lift.monoid.identity();
  std::vector<std::size_t> value(s);
  for (std::size_t i = 0; i < s; ++i) value[i] = lift.function(f[a.order()[i]])[one];
  for (std::size_t i = 0; i + 1 < s; ++i)
    if (value[i] > value[i + 1]) throw Error(Errc::internal, "h_i(1) is not monotone", {i});

  ReductionRecord rec;
  rec.f.assign(f.begin(), f.end());
  for (std::size_t i = 0; i < s; ++i) {
    if (i == 0 || value[i] != value[i - 1]) {
      rec.rho_blocks.push_back({});
      rec.subchain.push_back(i);
      if (i > 0) rec.ell |= std::size_t{1} << (i - 1);
    }
    rec.rho_blocks.back().push_back(i);
  }
  Map star;
  for (std::size_t p : rec.subchain) star.push_back(value[p]);
  const std::size_t m = star.size();
  rec.f_star = ChainEmbedding::make(m, lift.base_size, std::move(star));
  return rec;
}

bool pi_is_injective(const BigRamseyInstance& inst) {
  std::set<PiImage> seen;
  for (const Map& f : inst.r)
    if (!seen.insert(pi_star(inst.a, inst.lift, f).image()).second) return false;
  return true;
}

EquivarianceCheck equivariance_of_pi(const OrderedMSet& a, const ChainEmbedding& u) {
  EquivarianceCheck out;
  const FiniteMonoid& monoid = a.base().monoid();
  const BigRamseyInstance source = make_big_instance(a, u.source_size());
  const LexLift target = hat_E(u.target_size(), monoid);
  const Map lifted_u = hat_E_map(monoid, u);
  std::set<PiImage> lhs, rhs;
  for (const Map& f : source.r) {
    ++out.checked;
    Map g(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) g[x] = lifted_u[f[x]];
    const PiImage pg = pi_star(a, target, g).image();
    const ReductionRecord rf = pi_star(a, source.lift, f);
    const PiImage expected{rf.ell, compose(u, rf.f_star).map()};
    if (pg != expected) out.holds = false;
    lhs.insert(pg);
    rhs.insert(expected);
  }
  if (lhs != rhs) out.holds = false;
  return out;
}

namespace {

/// Largest Y in {0..size-1} with every r-subset colored c, searched in
/// increasing vertex order.
class HomogeneousSearch {
 public:
  HomogeneousSearch(std::size_t size, std::size_t r, std::function<std::uint32_t(const Map&)> color)
      : size_(size), r_(r), color_(std::move(color)) {}

  std::vector<std::size_t> best(std::uint32_t c) {
    c_ = c;
    best_.clear();
    current_.clear();
    extend(0);
    return best_;
  }

 private:
  bool compatible(std::size_t v) {
    if (current_.size() + 1 < r_) return true;
    // every (r-1)-subset of current_ together with v
    std::vector<std::size_t> pick(r_ - 1);
    for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
    Map tuple(r_);
    for (;;) {
      for (std::size_t i = 0; i < pick.size(); ++i) tuple[i] = current_[pick[i]];
      tuple[r_ - 1] = v;
      if (color_(tuple) != c_) return false;
      std::size_t i = pick.size();
      while (i > 0 && pick[i - 1] == current_.size() - pick.size() + i - 1) --i;
      if (i == 0) return true;
      ++pick[i - 1];
      for (std::size_t j = i; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
    }
  }

  void extend(std::size_t from) {
    if (current_.size() > best_.size()) best_ = current_;
    for (std::size_t v = from; v < size_; ++v) {
      if (current_.size() + (size_ - v) <= best_.size()) return;
      if (!compatible(v)) continue;
      current_.push_back(v);
      extend(v + 1);
      current_.pop_back();
    }
  }

  std::size_t size_, r_;
  std::function<std::uint32_t(const Map&)> color_;
  std::uint32_t c_ = 0;
  std::vector<std::size_t> current_, best_;
};

}  // namespace

BigRamseyRun big_ramsey_reduce(const BigRamseyInstance& inst, std::span<const std::uint32_t> chi, std::size_t k,
                               std::size_t n_inner) {
  if (chi.size() != inst.r.size())
    throw Error(Errc::invalid_argument, "coloring must assign a color to every element of R");
  for (std::uint32_t c : chi)
    if (c >= k) throw Error(Errc::invalid_argument, "coloring uses a color >= k");

  const std::size_t s = inst.a.size();
  const auto subchains = subchains_containing_min(s);
  std::map<PiImage, std::uint32_t> gamma;
  for (std::size_t i = 0; i < inst.r.size(); ++i) gamma.emplace(pi_star(inst.a, inst.lift, inst.r[i]).image(), chi[i]);

  BigRamseyRun run;
  run.bound = subchains.size();
  run.tower.push_back(inst.n);
  ChainEmbedding outer = ChainEmbedding::identity(inst.n);
  for (std::size_t step = subchains.size(); step-- > 0;) {
    const std::size_t r = subchains[step].size();
    const std::size_t current = outer.source_size();
    auto color = [&](const Map& tuple) -> std::uint32_t {
      PiImage key{step, Map(tuple.size())};
      for (std::size_t i = 0; i < tuple.size(); ++i) key.f_star[i] = outer(tuple[i]);
      auto it = gamma.find(key);
      return it == gamma.end() ? 0 : it->second;
    };
    HomogeneousSearch search(current, r, color);
    std::vector<std::size_t> best;
    std::uint32_t best_color = 0;
    for (std::uint32_t c = 0; c < k; ++c) {
      std::vector<std::size_t> y = search.best(c);
      if (y.size() > best.size()) {
        best = std::move(y);
        best_color = c;
      }
    }
    run.steps.push_back({step, current, best.size(), best_color});
    if (best.size() < n_inner)
      throw Error(Errc::truncation_too_small,
                  "step " + std::to_string(step + 1) + " keeps " + std::to_string(best.size()) + " of " +
                      std::to_string(current) + " points, fewer than " + std::to_string(n_inner),
                  {step + 1});
    outer = compose(outer, ChainEmbedding::make(best.size(), current, best));
    run.tower.push_back(best.size());
  }
  run.u = outer;

  // Independent recount over hat_E(u) . hom(A, hat_E(omega_final)).
  const FiniteMonoid& monoid = inst.a.base().monoid();
  const LexLift final_lift = hat_E(run.u.source_size(), monoid);
  const Map lifted_u = hat_E_map(monoid, run.u);
  std::set<std::uint32_t> used;
  for (const Map& f : enumerate_homs(view_of(inst.a), view_of(final_lift.lifted), true)) {
    Map g(f.size());
    for (std::size_t x = 0; x < f.size(); ++x) g[x] = lifted_u[f[x]];
    auto it = inst.index.find(g);
    if (it == inst.index.end()) throw Error(Errc::internal, "hat_E(u) . f is not in R");
    used.insert(chi[it->second]);
  }
  run.colors_used = used.size();
  return run;
}

std::vector<std::uint32_t> random_coloring(std::size_t size, std::size_t k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> out(size);
  for (auto& c : out) c = static_cast<std::uint32_t>(rng() % k);
  return out;
}

std::vector<TrialResult> run_trials(const BigRamseyInstance& inst, std::size_t k, std::size_t trials,
                                    std::uint64_t seed, std::size_t n_inner, std::size_t threads) {
  std::vector<TrialResult> out(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < trials;) {
      TrialResult& t = out[i];
      t.seed = seed + i;
      try {
        t.run = big_ramsey_reduce(inst, random_coloring(inst.r.size(), k, t.seed), k, n_inner);
        t.ok = t.run->colors_used <= t.run->bound;
      } catch (const Error& e) {
        t.error = std::string(errc_name(e.code())) + ": " + e.what();
        if (!e.witness().empty()) t.error_step = e.witness().front();
      }
    }
  };
  threads = std::max<std::size_t>(1, std::min(threads, trials));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  return out;
}

UnorderedBound unordered_degree_bound(const MSet& a, const std::map<Ordering, std::optional<std::size_t>>& bounds) {
  UnorderedBound out;
  try {
    out.aggregate = degree_sum_bound(a, bounds);
  } catch (const Error& e) {
    if (e.code() != Errc::incomplete_fiber) throw;
    throw Error(Errc::missing_ordering, e.what(), e.witness());
  }
  const std::size_t n = a.size();
  out.formula = saturating_mul(factorial(n), n == 0 ? 1 : saturating_pow(2, n - 1));
  out.within = out.aggregate <= out.formula;
  return out;
}

}  // namespace rwb
