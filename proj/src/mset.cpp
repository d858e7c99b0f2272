#include "rwb/mset.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "rwb/error.hpp"

namespace rwb {

namespace {

void check_distinct(const std::vector<std::string>& labels, std::string_view what) {
  std::unordered_set<std::string_view> seen;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!seen.insert(labels[i]).second)
      throw Error(Errc::invalid_argument, std::string(what) + " has duplicate element '" + labels[i] + "'", {i});
}

std::vector<std::size_t> ranks_of(std::span<const std::size_t> order, std::size_t n) {
  if (order.size() != n) throw Error(Errc::invalid_argument, "order does not list every carrier element");
  std::vector<std::size_t> rank(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (order[r] >= n || rank[order[r]] != n)
      throw Error(Errc::invalid_argument, "order is not a permutation of the carrier", {r});
    rank[order[r]] = r;
  }
  return rank;
}

// Backtracking hom enumerator. Assigning a -> b forces g_A(a) -> g_B(b) for
// every generator g; forced assignments are undone through the trail.
class HomSearch {
 public:
  HomSearch(const ActionView& a, const ActionView& b, bool injective, std::size_t cap)
      : a_(a), b_(b), injective_(injective), ordered_(!a.rank.empty() && !b.rank.empty()), cap_(cap),
        image_(a.size, kUnset), used_(b.size, 0) {
    if (a.generators.size() != b.generators.size())
      throw Error(Errc::monoid_mismatch, "structures act by different numbers of generators");
    source_order_.resize(a.size);
    target_order_.resize(b.size);
    for (std::size_t i = 0; i < a.size; ++i) source_order_[i] = i;
    for (std::size_t i = 0; i < b.size; ++i) target_order_[i] = i;
    if (ordered_) {
      for (std::size_t i = 0; i < a.size; ++i) source_order_[a.rank[i]] = i;
      for (std::size_t i = 0; i < b.size; ++i) target_order_[b.rank[i]] = i;
    }
  }

  std::vector<Map> run() {
    search(0);
    return std::move(out_);
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  bool assign(std::size_t x, std::size_t y) {
    if (image_[x] != kUnset) return image_[x] == y;
    if (injective_ && used_[y]) return false;
    if (ordered_) {
      for (std::size_t z : trail_) {
        bool below_src = a_.rank[z] < a_.rank[x];
        if (image_[z] == y) return false;
        bool below_tgt = b_.rank[image_[z]] < b_.rank[y];
        if (below_src != below_tgt) return false;
      }
    }
    image_[x] = y;
    ++used_[y];
    trail_.push_back(x);
    for (std::size_t g = 0; g < a_.generators.size(); ++g)
      if (!assign(a_.generators[g][x], b_.generators[g][y])) return false;
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      std::size_t x = trail_.back();
      trail_.pop_back();
      --used_[image_[x]];
      image_[x] = kUnset;
    }
  }

  void search(std::size_t pos) {
    while (pos < source_order_.size() && image_[source_order_[pos]] != kUnset) ++pos;
    if (pos == source_order_.size()) {
      if (out_.size() >= cap_)
        throw Error(Errc::size_overflow, "hom-set exceeds cap of " + std::to_string(cap_));
      out_.push_back(image_);
      return;
    }
    const std::size_t x = source_order_[pos];
    for (std::size_t y : target_order_) {
      std::size_t mark = trail_.size();
      if (assign(x, y)) search(pos + 1);
      undo(mark);
    }
  }

  const ActionView& a_;
  const ActionView& b_;
  bool injective_;
  bool ordered_;
  std::size_t cap_;
  Map image_;
  std::vector<std::size_t> used_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> source_order_;
  std::vector<std::size_t> target_order_;
  std::vector<Map> out_;
};

}  // namespace

MSet MSet::validate(FiniteMonoid monoid, std::vector<std::string> carrier, const Table& action) {
  check_distinct(carrier, "carrier");
  const std::size_t n = carrier.size();
  const std::size_t msize = monoid.size();
  if (action.size() != msize)
    throw Error(Errc::invalid_argument, "action has " + std::to_string(action.size()) +
                                            " rows, expected one per monoid element (" + std::to_string(msize) + ")");
  MSet s;
  s.action_.resize(msize * n);
  for (std::size_t m = 0; m < msize; ++m) {
    if (action[m].size() != n)
      throw Error(Errc::invalid_argument, "action row " + std::to_string(m) + " has wrong length", {m});
    for (std::size_t a = 0; a < n; ++a) {
      if (action[m][a] >= n) throw Error(Errc::invalid_argument, "action value out of range", {m, a});
      s.action_[m * n + a] = action[m][a];
    }
  }
  s.monoid_ = std::move(monoid);
  s.labels_ = std::move(carrier);

  const std::size_t one = s.monoid_.identity();
  for (std::size_t a = 0; a < n; ++a)
    if (s.act(one, a) != a)
      throw Error(Errc::identity_axiom_fails, "alpha(1, " + s.labels_[a] + ") != " + s.labels_[a], {a});
  for (std::size_t m1 = 0; m1 < msize; ++m1)
    for (std::size_t m2 = 0; m2 < msize; ++m2)
      for (std::size_t a = 0; a < n; ++a)
        if (s.act(m1, s.act(m2, a)) != s.act(s.monoid_.multiply(m2, m1), a))
          throw Error(Errc::composition_fails,
                      "alpha(" + s.monoid_.label(m1) + ", alpha(" + s.monoid_.label(m2) + ", " + s.labels_[a] +
                          ")) != alpha(" + s.monoid_.label(m2) + "*" + s.monoid_.label(m1) + ", " + s.labels_[a] + ")",
                      {m1, m2, a});
  return s;
}

std::optional<std::size_t> MSet::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

Table MSet::action() const {
  Table t(monoid_.size(), std::vector<std::size_t>(size()));
  for (std::size_t m = 0; m < monoid_.size(); ++m)
    for (std::size_t a = 0; a < size(); ++a) t[m][a] = act(m, a);
  return t;
}

OrderedMSet::OrderedMSet(MSet base, std::vector<std::size_t> order)
    : base_(std::move(base)), order_(std::move(order)), rank_(ranks_of(order_, base_.size())) {}

Chain OrderedMSet::chain() const {
  std::vector<std::string> labels;
  for (std::size_t a : order_) labels.push_back(base_.label(a));
  return Chain(std::move(labels));
}

ActionView view_of(const MSet& a) {
  ActionView v;
  v.size = a.size();
  for (std::size_t m = 0; m < a.monoid().size(); ++m) {
    Map row(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) row[x] = a.act(m, x);
    v.generators.push_back(std::move(row));
  }
  return v;
}

ActionView view_of(const OrderedMSet& a) {
  ActionView v = view_of(a.base());
  v.rank.assign(a.ranks().begin(), a.ranks().end());
  return v;
}

std::vector<Map> enumerate_homs(const ActionView& a, const ActionView& b, bool injective, std::size_t cap) {
  if (injective && a.size > b.size) return {};
  return HomSearch(a, b, injective, cap).run();
}

bool is_equivariant(const MSet& a, const MSet& b, std::span<const std::size_t> f) {
  if (f.size() != a.size() || !a.monoid().same_monoid(b.monoid())) return false;
  for (std::size_t x : f)
    if (x >= b.size()) return false;
  for (std::size_t m = 0; m < a.monoid().size(); ++m)
    for (std::size_t x = 0; x < a.size(); ++x)
      if (f[a.act(m, x)] != b.act(m, f[x])) return false;
  return true;
}

bool is_injective(std::span<const std::size_t> f, std::size_t target_size) {
  std::vector<char> seen(target_size, 0);
  for (std::size_t y : f) {
    if (y >= target_size || seen[y]) return false;
    seen[y] = 1;
  }
  return true;
}

bool is_order_embedding(std::span<const std::size_t> source_rank, std::span<const std::size_t> target_rank,
                        std::span<const std::size_t> f) {
  if (f.size() != source_rank.size()) return false;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] >= target_rank.size()) return false;
    for (std::size_t y = 0; y < f.size(); ++y)
      if (source_rank[x] < source_rank[y] && !(target_rank[f[x]] < target_rank[f[y]])) return false;
  }
  return true;
}

std::vector<MSetMorphism> enumerate_embeddings(const MSet& a, const MSet& b, std::size_t cap) {
  if (!a.monoid().same_monoid(b.monoid())) throw Error(Errc::monoid_mismatch, "M-sets are over different monoids");
  std::vector<MSetMorphism> out;
  for (auto& m : enumerate_homs(view_of(a), view_of(b), true, cap))
    out.push_back({std::move(m), MorphismKind::embedding});
  return out;
}

std::vector<MSetMorphism> enumerate_embeddings(const OrderedMSet& a, const OrderedMSet& b, std::size_t cap) {
  if (!a.base().monoid().same_monoid(b.base().monoid()))
    throw Error(Errc::monoid_mismatch, "M-sets are over different monoids");
  std::vector<MSetMorphism> out;
  for (auto& m : enumerate_homs(view_of(a), view_of(b), true, cap))
    out.push_back({std::move(m), MorphismKind::order_embedding});
  return out;
}

std::vector<Map> enumerate_morphisms(const MSet& a, const MSet& b, std::size_t cap) {
  if (!a.monoid().same_monoid(b.monoid())) throw Error(Errc::monoid_mismatch, "M-sets are over different monoids");
  return enumerate_homs(view_of(a), view_of(b), false, cap);
}

Map function_of(std::size_t index, std::size_t x_size, const FiniteMonoid& monoid) {
  Map h(monoid.size());
  auto order = monoid.well_order();
  for (std::size_t r = order.size(); r-- > 0;) {
    h[order[r]] = index % x_size;
    index /= x_size;
  }
  return h;
}

std::size_t index_of_function(std::span<const std::size_t> h, std::size_t x_size, const FiniteMonoid& monoid) {
  if (h.size() != monoid.size()) throw Error(Errc::invalid_argument, "function is not total on the monoid");
  std::size_t index = 0;
  for (std::size_t m : monoid.well_order()) {
    if (h[m] >= x_size) throw Error(Errc::invalid_argument, "function value out of range");
    index = index * x_size + h[m];
  }
  return index;
}

MSet cofree_mset(std::size_t x_size, const FiniteMonoid& monoid, std::size_t cap) {
  const std::size_t count = saturating_pow(x_size, monoid.size());
  if (count > cap)
    throw Error(Errc::size_overflow, "|X^M| = " + std::to_string(x_size) + "^" + std::to_string(monoid.size()) +
                                         " exceeds cap " + std::to_string(cap));
  std::vector<std::string> labels;
  std::vector<Map> functions;
  labels.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Map h = function_of(i, x_size, monoid);
    std::string label = "(";
    bool first = true;
    for (std::size_t m : monoid.well_order()) {
      if (!first) label += ",";
      first = false;
      label += std::to_string(h[m]);
    }
    labels.push_back(label + ")");
    functions.push_back(std::move(h));
  }
  Table action(monoid.size(), std::vector<std::size_t>(count));
  Map moved(monoid.size());
  for (std::size_t m = 0; m < monoid.size(); ++m)
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t mp = 0; mp < monoid.size(); ++mp) moved[mp] = functions[i][monoid.multiply(m, mp)];
      action[m][i] = index_of_function(moved, x_size, monoid);
    }
  return MSet::validate(monoid, std::move(labels), action);
}

OrderedMSet cofree_ordered_mset(std::size_t x_size, const FiniteMonoid& monoid, std::size_t cap) {
  MSet base = cofree_mset(x_size, monoid, cap);
  std::vector<std::size_t> order(base.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  return OrderedMSet(std::move(base), std::move(order));
}

SubMSet generated_sub_mset(const MSet& b, std::span<const std::size_t> seed) {
  std::vector<char> in(b.size(), 0);
  std::deque<std::size_t> queue;
  for (std::size_t s : seed) {
    if (s >= b.size()) throw Error(Errc::invalid_argument, "seed element outside the carrier", {s});
    if (!in[s]) {
      in[s] = 1;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t m = 0; m < b.monoid().size(); ++m) {
      std::size_t y = b.act(m, x);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  }
  std::vector<std::size_t> elements;
  std::vector<std::size_t> local(b.size(), 0);
  for (std::size_t x = 0; x < b.size(); ++x)
    if (in[x]) {
      local[x] = elements.size();
      elements.push_back(x);
    }
  std::vector<std::string> labels;
  for (std::size_t x : elements) labels.push_back(b.label(x));
  Table action(b.monoid().size(), std::vector<std::size_t>(elements.size()));
  for (std::size_t m = 0; m < b.monoid().size(); ++m)
    for (std::size_t i = 0; i < elements.size(); ++i) action[m][i] = local[b.act(m, elements[i])];
  MSet sub = MSet::validate(b.monoid(), std::move(labels), action);
  return SubMSet{std::move(sub), elements, MSetMorphism{elements, MorphismKind::embedding}};
}

OrderedMSet generated_sub_ordered_mset(const OrderedMSet& b, std::span<const std::size_t> seed,
                                       std::vector<std::size_t>* elements) {
  SubMSet s = generated_sub_mset(b.base(), seed);
  std::vector<std::size_t> order(s.elements.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return b.rank(s.elements[x]) < b.rank(s.elements[y]); });
  if (elements) *elements = s.elements;
  return OrderedMSet(std::move(s.sub), std::move(order));
}

UnaryAlgebra UnaryAlgebra::validate(std::vector<std::string> alphabet, std::vector<std::string> carrier,
                                    std::vector<Map> generator_actions,
                                    std::optional<std::vector<std::size_t>> order) {
  check_distinct(alphabet, "alphabet");
  check_distinct(carrier, "carrier");
  if (generator_actions.size() != alphabet.size())
    throw Error(Errc::invalid_argument, "need exactly one generator action per symbol");
  for (std::size_t s = 0; s < generator_actions.size(); ++s) {
    if (generator_actions[s].size() != carrier.size())
      throw Error(Errc::invalid_argument, "generator action for '" + alphabet[s] + "' is not total", {s});
    for (std::size_t x : generator_actions[s])
      if (x >= carrier.size())
        throw Error(Errc::invalid_argument, "generator action for '" + alphabet[s] + "' leaves the carrier", {s});
  }
  if (order) ranks_of(*order, carrier.size());
  UnaryAlgebra u;
  u.alphabet_ = std::move(alphabet);
  u.labels_ = std::move(carrier);
  u.generators_ = std::move(generator_actions);
  u.order_ = std::move(order);
  return u;
}

std::size_t UnaryAlgebra::symbol(std::string_view name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) throw Error(Errc::unknown_symbol, "unknown symbol '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::size_t UnaryAlgebra::evaluate_word(std::span<const std::size_t> word, std::size_t a) const {
  if (a >= size()) throw Error(Errc::invalid_argument, "element outside the carrier", {a});
  for (std::size_t s : word) {
    if (s >= generators_.size()) throw Error(Errc::unknown_symbol, "symbol index out of range", {s});
    a = generators_[s][a];
  }
  return a;
}

std::size_t UnaryAlgebra::evaluate_word(std::span<const std::string> word, std::size_t a) const {
  std::vector<std::size_t> symbols;
  for (const auto& s : word) symbols.push_back(symbol(s));
  return evaluate_word(symbols, a);
}

Table UnaryAlgebra::word_action(const WordTruncation& words) const {
  if (words.alphabet() != alphabet_) throw Error(Errc::invalid_argument, "truncation is over a different alphabet");
  Table t(words.size(), std::vector<std::size_t>(size()));
  for (std::size_t w = 0; w < words.size(); ++w)
    for (std::size_t a = 0; a < size(); ++a) t[w][a] = evaluate_word(words.word(w), a);
  return t;
}

ActionView UnaryAlgebra::view() const {
  ActionView v;
  v.size = size();
  v.generators = generators_;
  if (order_) v.rank = ranks_of(*order_, size());
  return v;
}

}  // namespace rwb
