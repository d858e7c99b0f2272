#include "rwb/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <thread>

#include "rwb/expansion.hpp"

namespace rwb {

std::string_view ctx_name(Ctx c) noexcept {
  switch (c) {
    case Ctx::chains: return "chains";
    case Ctx::msets: return "msets";
    case Ctx::ordered_msets: return "ordered_msets";
    case Ctx::forests: return "forests";
  }
  return "chains";
}

Ctx parse_ctx(std::string_view name) {
  for (Ctx c : {Ctx::chains, Ctx::msets, Ctx::ordered_msets, Ctx::forests})
    if (ctx_name(c) == name) return c;
  throw Error(Errc::invalid_argument, "unknown category '" + std::string(name) +
                                          "' (expected chains, msets, ordered_msets or forests)");
}

bool ctx_is_ordered(Ctx c, const ActionView& sample) noexcept {
  switch (c) {
    case Ctx::chains:
    case Ctx::ordered_msets: return true;
    case Ctx::msets: return false;
    case Ctx::forests: return !sample.rank.empty();
  }
  return false;
}

ActionView chain_view(std::size_t n) {
  ActionView v;
  v.size = n;
  v.rank.resize(n);
  std::iota(v.rank.begin(), v.rank.end(), std::size_t{0});
  return v;
}

ActionView disjoint_union(const ActionView& a, const ActionView& b) {
  if (a.generators.size() != b.generators.size())
    throw Error(Errc::invalid_argument, "disjoint union of objects with different signatures");
  ActionView u;
  u.size = a.size + b.size;
  for (std::size_t g = 0; g < a.generators.size(); ++g) {
    Map m = a.generators[g];
    for (std::size_t x : b.generators[g]) m.push_back(x + a.size);
    u.generators.push_back(std::move(m));
  }
  if (!a.rank.empty() && !b.rank.empty()) {
    u.rank = a.rank;
    for (std::size_t r : b.rank) u.rank.push_back(r + a.size);
  }
  return u;
}

std::string_view status_name(ArrowStatus s) noexcept {
  switch (s) {
    case ArrowStatus::holds: return "holds";
    case ArrowStatus::refuted: return "refuted";
    case ArrowStatus::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

ArrowInstance make_instance(const ActionView& a, const ActionView& b, const ActionView& c, std::size_t hom_cap) {
  ArrowInstance inst;
  inst.hom_ac = enumerate_homs(a, c, true, hom_cap);
  inst.hom_bc = enumerate_homs(b, c, true, hom_cap);
  inst.hom_ab = enumerate_homs(a, b, true, hom_cap);
  return inst;
}

std::vector<std::vector<std::size_t>> copy_indices(const ArrowInstance& inst) {
  std::map<Map, std::size_t> index;
  for (std::size_t i = 0; i < inst.hom_ac.size(); ++i) index.emplace(inst.hom_ac[i], i);
  std::vector<std::vector<std::size_t>> copies(inst.hom_bc.size());
  for (std::size_t w = 0; w < inst.hom_bc.size(); ++w) {
    const Map& wm = inst.hom_bc[w];
    for (const Map& f : inst.hom_ab) {
      Map wf(f.size());
      for (std::size_t x = 0; x < f.size(); ++x) wf[x] = wm[f[x]];
      auto it = index.find(wf);
      if (it == index.end()) throw Error(Errc::internal, "w . f is missing from hom(A, C)", {w});
      copies[w].push_back(it->second);
    }
    std::sort(copies[w].begin(), copies[w].end());
    copies[w].erase(std::unique(copies[w].begin(), copies[w].end()), copies[w].end());
  }
  return copies;
}

bool is_bad_coloring(const ArrowInstance& inst, const Coloring& coloring, std::size_t t) {
  if (coloring.colors.size() != inst.hom_ac.size()) return false;
  for (const auto& copy : copy_indices(inst)) {
    std::set<Color> seen;
    for (std::size_t i : copy) seen.insert(coloring.colors[i]);
    if (seen.size() <= t) return false;
  }
  return true;
}

namespace {

constexpr std::size_t kSplitDepth = 8;

/// Incremental state of a partial coloring of hom(A, C) in index order.
class ColoringState {
 public:
  ColoringState(const std::vector<std::vector<std::size_t>>& copies, std::size_t n, std::size_t k, std::size_t t)
      : copies_(copies), k_(k), t_(t), containing_(n), count_(copies.size(), std::vector<std::uint32_t>(k, 0)),
        distinct_(copies.size(), 0), unassigned_(copies.size(), 0) {
    for (std::size_t w = 0; w < copies.size(); ++w) {
      unassigned_[w] = static_cast<std::uint32_t>(copies[w].size());
      for (std::size_t i : copies[w]) containing_[i].push_back(w);
    }
  }

  std::size_t depth() const noexcept { return colors_.size(); }
  const std::vector<Color>& colors() const noexcept { return colors_; }
  std::size_t next_max_color() const noexcept {
    std::size_t m = max_used_.empty() ? 0 : max_used_.back() + 1;
    return std::min(m, k_ - 1);
  }

  bool undefeatable(std::size_t w) const noexcept {
    const std::size_t d = distinct_[w];
    return d + std::min<std::size_t>(unassigned_[w], k_ - d) <= t_;
  }

  /// Least w that can no longer be defeated, if any (checked globally).
  std::optional<std::size_t> first_undefeatable() const {
    for (std::size_t w = 0; w < copies_.size(); ++w)
      if (undefeatable(w)) return w;
    return std::nullopt;
  }

  /// Assigns the next index; returns the least w made undefeatable.
  std::optional<std::size_t> push(Color c) {
    const std::size_t i = colors_.size();
    colors_.push_back(c);
    max_used_.push_back(max_used_.empty() ? c : std::max<std::size_t>(max_used_.back(), c));
    std::optional<std::size_t> hit;
    for (std::size_t w : containing_[i]) {
      if (count_[w][c]++ == 0) ++distinct_[w];
      --unassigned_[w];
      if (!hit && undefeatable(w)) hit = w;
    }
    return hit;
  }

  void pop() {
    const std::size_t i = colors_.size() - 1;
    const Color c = colors_.back();
    for (std::size_t w : containing_[i]) {
      if (--count_[w][c] == 0) --distinct_[w];
      ++unassigned_[w];
    }
    colors_.pop_back();
    max_used_.pop_back();
  }

 private:
  const std::vector<std::vector<std::size_t>>& copies_;
  std::size_t k_, t_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<std::vector<std::uint32_t>> count_;
  std::vector<std::uint32_t> distinct_, unassigned_;
  std::vector<Color> colors_;
  std::vector<std::size_t> max_used_;
};

/// A unit of work: either a subtree rooted at `prefix`, or a prefix already
/// closed by `pruned_by`.
struct Item {
  std::vector<Color> prefix;
  std::optional<std::size_t> pruned_by;
};

struct ItemResult {
  std::optional<std::vector<Color>> bad;
  std::vector<WitnessEntry> witnesses;
  std::size_t witness_classes = 0;
  std::size_t nodes = 0;
  bool aborted = false;
  bool done = false;
};

class Searcher {
 public:
  Searcher(const std::vector<std::vector<std::size_t>>& copies, std::size_t n, const ArrowOptions& opt)
      : state_(copies, n, opt.k, opt.t), n_(n), budget_(opt.node_budget) {}

  /// Depth-first search below the current state; stops at the first bad
  /// coloring or when the node budget is spent.
  void run(ItemResult& out, std::size_t stop_depth) {
    if (out.aborted || out.bad) return;
    if (state_.depth() == stop_depth) {
      if (stop_depth == n_) out.bad = state_.colors();
      return;
    }
    const std::size_t top = state_.next_max_color();
    for (std::size_t c = 0; c <= top; ++c) {
      if (++out.nodes > budget_) {
        out.aborted = true;
        return;
      }
      if (auto w = state_.push(static_cast<Color>(c))) {
        ++out.witness_classes;
        if (out.witnesses.size() < kMaxWitnesses) out.witnesses.push_back({state_.colors(), *w});
      } else {
        run(out, stop_depth);
      }
      state_.pop();
      if (out.aborted || out.bad) return;
    }
  }

  void generate(std::vector<Item>& items, std::size_t& nodes, std::size_t stop_depth) {
    if (state_.depth() == stop_depth) {
      items.push_back({state_.colors(), std::nullopt});
      return;
    }
    const std::size_t top = state_.next_max_color();
    for (std::size_t c = 0; c <= top; ++c) {
      ++nodes;
      if (auto w = state_.push(static_cast<Color>(c)))
        items.push_back({state_.colors(), w});
      else
        generate(items, nodes, stop_depth);
      state_.pop();
    }
  }

  ColoringState& state() noexcept { return state_; }

 private:
  ColoringState state_;
  std::size_t n_;
  std::size_t budget_;
};

ArrowVerdict sampled(const ArrowInstance& inst, const ArrowOptions& opt, ArrowVerdict v) {
  std::mt19937_64 rng(opt.seed);
  Coloring col{opt.k, std::vector<Color>(inst.hom_ac.size())};
  const auto copies = copy_indices(inst);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    ++v.samples_tried;
    for (auto& c : col.colors) c = static_cast<Color>(rng() % opt.k);
    bool bad = true;
    for (const auto& copy : copies) {
      std::set<Color> seen;
      for (std::size_t i : copy) seen.insert(col.colors[i]);
      if (seen.size() <= opt.t) {
        bad = false;
        break;
      }
    }
    if (bad) {
      v.status = ArrowStatus::refuted;
      v.bad_coloring = col;
      return v;
    }
  }
  v.status = ArrowStatus::inconclusive;
  return v;
}

}  // namespace

ArrowVerdict holds_arrow(const ArrowInstance& inst, const ArrowOptions& opt) {
  if (opt.k == 0 || opt.k > 255) throw Error(Errc::invalid_argument, "color count k must be in 1..255");
  ArrowVerdict v;
  v.hom_ac = inst.hom_ac.size();
  v.hom_bc = inst.hom_bc.size();
  v.hom_ab = inst.hom_ab.size();
  const std::size_t n = inst.hom_ac.size();

  if (inst.hom_bc.empty()) {
    // No w exists, so every coloring (the empty one included) is bad.
    v.status = ArrowStatus::refuted;
    v.reason = "empty_hom_BC";
    v.bad_coloring = Coloring{opt.k, std::vector<Color>(n, 0)};
    return v;
  }
  if (n == 0) {
    v.status = ArrowStatus::holds;
    v.reason = "empty_hom_AC";
    v.witnesses.push_back({{}, 0});
    v.witness_classes = 1;
    return v;
  }

  const auto copies = copy_indices(inst);
  Searcher root(copies, n, opt);
  if (auto w = root.state().first_undefeatable()) {
    v.status = ArrowStatus::holds;
    v.reason = opt.t >= opt.k ? "t_at_least_k" : "search";
    v.witnesses.push_back({{}, *w});
    v.witness_classes = 1;
    return v;
  }
  if (n > opt.exhaustive_cap) {
    v.reason = "sampling";
    return sampled(inst, opt, std::move(v));
  }

  std::vector<Item> items;
  std::size_t gen_nodes = 0;
  root.generate(items, gen_nodes, std::min(n, kSplitDepth));

  std::vector<ItemResult> results(items.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_bad{items.size()};
  auto worker = [&] {
    Searcher s(copies, n, opt);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      if (i > first_bad.load()) continue;
      const Item& item = items[i];
      ItemResult& r = results[i];
      if (item.pruned_by) {
        r.witness_classes = 1;
        r.witnesses.push_back({item.prefix, *item.pruned_by});
      } else {
        for (Color c : item.prefix) s.state().push(c);
        s.run(r, n);
        for (std::size_t j = 0; j < item.prefix.size(); ++j) s.state().pop();
        if (r.bad) {
          std::size_t cur = first_bad.load();
          while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
          }
        }
      }
      r.done = true;
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(opt.threads, items.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::size_t nodes = gen_nodes;
  for (std::size_t i = 0; i < items.size(); ++i) {
    ItemResult& r = results[i];
    nodes += r.nodes;
    if (r.aborted || nodes > opt.node_budget) {
      v.status = ArrowStatus::inconclusive;
      v.reason = "node_budget";
      v.witnesses.clear();
      v.witness_classes = 0;
      return v;
    }
    if (r.bad) {
      v.status = ArrowStatus::refuted;
      v.reason = "search";
      v.bad_coloring = Coloring{opt.k, *r.bad};
      v.witnesses.clear();
      v.witness_classes = 0;
      return v;
    }
    v.witness_classes += r.witness_classes;
    for (auto& e : r.witnesses)
      if (v.witnesses.size() < kMaxWitnesses) v.witnesses.push_back(std::move(e));
  }
  v.status = ArrowStatus::holds;
  v.reason = "search";
  return v;
}

ArrowVerdict holds_arrow(const ActionView& a, const ActionView& b, const ActionView& c, const ArrowOptions& opt) {
  return holds_arrow(make_instance(a, b, c, opt.hom_cap), opt);
}

WitnessSearch find_witness(const ActionView& a, const ActionView& b, const std::vector<ActionView>& candidates,
                           const ArrowOptions& opt) {
  WitnessSearch out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    ++out.examined;
    out.verdicts.push_back(holds_arrow(a, b, candidates[i], opt));
    const ArrowStatus s = out.verdicts.back().status;
    if (s == ArrowStatus::holds) {
      out.found = i;
      break;
    }
    if (s == ArrowStatus::inconclusive) break;
  }
  return out;
}

std::optional<std::size_t> find_chain_witness(std::size_t a, std::size_t b, std::size_t max_n, const ArrowOptions& opt,
                                              WitnessSearch* trace) {
  const std::size_t start = std::max(a, b);
  std::vector<ActionView> candidates;
  for (std::size_t n = start; n <= max_n; ++n) candidates.push_back(chain_view(n));
  WitnessSearch ws = find_witness(chain_view(a), chain_view(b), candidates, opt);
  std::optional<std::size_t> found;
  if (ws.found) found = start + *ws.found;
  if (trace) *trace = std::move(ws);
  return found;
}

DegreeBudget parse_budget(std::string_view name) {
  if (name == "small") return DegreeBudget{6, 6, 64};
  if (name == "medium") return DegreeBudget{8, 8, 96};
  throw Error(Errc::invalid_argument, "unknown budget '" + std::string(name) + "' (expected small or medium)");
}

namespace {

ActionView unordered(ActionView v) {
  v.rank.clear();
  return v;
}

std::size_t ordering_index(const std::vector<Ordering>& orders, const Ordering& o) {
  return static_cast<std::size_t>(std::lower_bound(orders.begin(), orders.end(), o) - orders.begin());
}

/// min over orderings of B of the number of orderings induced on A by hom(A, B).
std::size_t induced_order_count(const std::vector<Map>& hom_ab, std::size_t b_size) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (const Ordering& bo : all_orderings(b_size)) {
    std::vector<std::size_t> rank(b_size);
    for (std::size_t r = 0; r < b_size; ++r) rank[bo[r]] = r;
    std::set<Ordering> seen;
    for (const Map& f : hom_ab) seen.insert(pull_back_order(rank, f));
    best = std::min(best, seen.size());
    if (best <= 1) break;
  }
  return best;
}

}  // namespace

DegreeProbe probe_small_degree(const ActionView& a, Ctx ctx, const DegreeBudget& budget, const ArrowOptions& opt) {
  DegreeProbe p;
  const std::size_t n = a.size;
  if (ctx_is_ordered(ctx, a)) {
    p.lower = 1;
    p.upper = 1;
    p.evidence.push_back("lower=1: every degree is at least 1");
    p.evidence.push_back(ctx == Ctx::chains ? "upper=1: finite chains have the Ramsey property"
                                            : "upper=1: the ordered class has the Ramsey property");
    if (ctx == Ctx::chains && n >= 1) {
      ArrowOptions o = opt;
      o.k = 2;
      o.t = 1;
      o.exhaustive_cap = budget.exhaustive_cap;
      WitnessSearch trace;
      auto found = find_chain_witness(n, n + 1, std::max(budget.max_c, n + 1), o, &trace);
      if (found)
        p.evidence.push_back("corroboration: " + std::to_string(*found) + "-chain -> (" + std::to_string(n + 1) +
                             "-chain)^" + std::to_string(n) + "-chain_2 holds");
      else
        p.evidence.push_back("corroboration not reached: no chain C of size <= " +
                             std::to_string(std::max(budget.max_c, n + 1)) + " was confirmed to witness B = " +
                             std::to_string(n + 1) + "-chain at k = 2");
    }
    return p;
  }

  const ActionView au = unordered(a);
  std::vector<ActionView> bs{au};
  if (2 * n <= budget.max_b) bs.push_back(disjoint_union(au, au));
  std::size_t best_b = 0;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    if (bs[i].size > budget.max_b) continue;
    const auto hom_ab = enumerate_homs(au, bs[i], true, opt.hom_cap);
    const std::size_t m = hom_ab.empty() ? 1 : induced_order_count(hom_ab, bs[i].size);
    p.evidence.push_back("B of size " + std::to_string(bs[i].size) + ": every ordering of B induces " +
                         std::to_string(m) + " distinct orderings on the copies of A");
    if (m > p.lower) {
      p.lower = m;
      best_b = i;
    }
  }
  if (p.lower > 1 && n <= 5) {
    // Order-type coloring of hom(A, C) for C = B, against t = lower - 1.
    const ActionView& b = bs[best_b];
    ArrowInstance inst = make_instance(au, b, b, opt.hom_cap);
    const std::vector<Ordering> orders = all_orderings(n);
    Coloring col{orders.size(), {}};
    const std::vector<std::size_t> c_rank = chain_view(b.size).rank;
    for (const Map& e : inst.hom_ac)
      col.colors.push_back(static_cast<Color>(ordering_index(orders, pull_back_order(c_rank, e))));
    const bool bad = is_bad_coloring(inst, col, p.lower - 1);
    p.evidence.push_back(std::string("order-type coloring of hom(A, C) with C = B ") +
                         (bad ? "defeats" : "does not defeat") + " every copy of B at t = " +
                         std::to_string(p.lower - 1));
    if (inst.hom_ac.size() <= budget.exhaustive_cap) {
      ArrowOptions o = opt;
      o.k = orders.size();
      o.t = p.lower - 1;
      o.exhaustive_cap = budget.exhaustive_cap;
      const ArrowVerdict v = holds_arrow(inst, o);
      p.evidence.push_back("holds_arrow(A, B, C = B, k = " + std::to_string(o.k) + ", t = " + std::to_string(o.t) +
                           ") = " + std::string(status_name(v.status)));
    }
  }
  std::map<Ordering, std::optional<std::size_t>> degrees;
  for (Ordering& o : all_orderings(n)) degrees.emplace(std::move(o), 1);
  p.upper = degree_sum_bound(n, degrees);
  p.evidence.push_back("upper=" + std::to_string(*p.upper) + ": sum of degree 1 over the " + std::to_string(n) +
                       "! orderings of A");
  return p;
}

}  // namespace rwb
