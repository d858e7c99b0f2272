#include "rwb/comonad.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace rwb {

namespace {

std::string show(const EValue& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

std::string show(const Map& f, const char* name) { return std::string(name) + "=" + show(EValue(f)); }

void list_objects(std::vector<EValue>& out, EValue& prefix, std::vector<char>& used, std::size_t n) {
  for (std::size_t a = 0; a < n; ++a) {
    if (used[a]) continue;
    prefix.push_back(a);
    used[a] = 1;
    out.push_back(prefix);
    list_objects(out, prefix, used, n);
    used[a] = 0;
    prefix.pop_back();
  }
}

std::vector<Map> all_maps(std::size_t n) {
  std::vector<Map> out;
  const std::size_t count = saturating_pow(n, n);
  for (std::size_t i = 0; i < count; ++i) {
    Map f(n);
    std::size_t r = i;
    for (std::size_t j = n; j-- > 0;) {
      f[j] = r % n;
      r /= n;
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Map> all_permutations(std::size_t n) {
  std::vector<Map> out;
  Map p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

void fail(LawResult& r, std::string counterexample) {
  if (r.passed) {
    r.passed = false;
    r.counterexample = std::move(counterexample);
  }
}

}  // namespace

Functor Functor::monoid_action(FiniteMonoid monoid) {
  Functor f;
  f.kind_ = FunctorKind::monoid_action;
  f.monoid_ = std::move(monoid);
  return f;
}

Functor Functor::duplicate_free_list() {
  Functor f;
  f.kind_ = FunctorKind::duplicate_free_list;
  f.monoid_ = FiniteMonoid::trivial();
  return f;
}

const FiniteMonoid& Functor::monoid() const {
  if (kind_ != FunctorKind::monoid_action) throw Error(Errc::invalid_argument, "list functor has no monoid");
  return monoid_;
}

std::string Functor::name() const {
  return kind_ == FunctorKind::monoid_action ? "monoid_action" : "duplicate_free_list";
}

std::size_t Functor::object_count(std::size_t n) const noexcept {
  if (kind_ == FunctorKind::monoid_action) return saturating_pow(n, monoid_.size());
  // sum over lengths l = 1..n of n!/(n-l)!
  std::size_t total = 0, term = 1;
  for (std::size_t l = 1; l <= n; ++l) {
    term = saturating_mul(term, n - l + 1);
    total = total > static_cast<std::size_t>(-1) - term ? static_cast<std::size_t>(-1) : total + term;
  }
  return total;
}

std::vector<EValue> Functor::objects(std::size_t n, std::size_t cap) const {
  const std::size_t count = object_count(n);
  if (count > cap)
    throw Error(Errc::size_overflow,
                "|E(A)| for |A| = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  std::vector<EValue> out;
  out.reserve(count);
  if (kind_ == FunctorKind::monoid_action) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(function_of(i, n, monoid_));
  } else {
    EValue prefix;
    std::vector<char> used(n, 0);
    list_objects(out, prefix, used, n);
  }
  return out;
}

bool Functor::is_value(std::span<const std::size_t> x, std::size_t n) const {
  if (kind_ == FunctorKind::monoid_action) {
    return x.size() == monoid_.size() && std::all_of(x.begin(), x.end(), [n](std::size_t v) { return v < n; });
  }
  if (x.empty()) return false;
  std::vector<char> seen(n, 0);
  for (std::size_t v : x) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

ComonadOps standard_ops(const Functor& functor) {
  ComonadOps ops;
  ops.delta = [functor](const EValue& x) { return functor.delta(x); };
  ops.delta_e = [functor](const EEValue& x) { return functor.delta(x); };
  ops.epsilon = [functor](const EValue& x) { return functor.epsilon(x); };
  ops.epsilon_e = [functor](const EEValue& x) { return functor.epsilon(x); };
  return ops;
}

bool LawReport::all_passed() const noexcept {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& r) { return r.passed; });
}

const LawResult& LawReport::at(std::string_view law) const {
  for (const auto& r : laws)
    if (r.law == law) return r;
  throw Error(Errc::invalid_argument, "no law named " + std::string(law));
}

LawReport check_comonad_laws(const Functor& functor, std::size_t carrier_size, std::size_t cap) {
  return check_comonad_laws(functor, carrier_size, standard_ops(functor), cap);
}

LawReport check_comonad_laws(const Functor& functor, std::size_t carrier_size, const ComonadOps& ops,
                             std::size_t cap) {
  const std::vector<EValue> xs = functor.objects(carrier_size, cap);
  const std::vector<Map> maps = functor.kind() == FunctorKind::monoid_action ? all_maps(carrier_size)
                                                                             : all_permutations(carrier_size);
  auto apply = [](const Map& f) { return [&f](std::size_t a) { return f[a]; }; };

  LawReport report;
  report.functor = functor.name();
  report.carrier_size = carrier_size;
  auto law = [](const char* name) {
    LawResult r;
    r.law = name;
    return r;
  };
  LawResult identity = law("functor_identity"), composition = law("functor_composition"),
            delta_nat = law("delta_naturality"), epsilon_nat = law("epsilon_naturality"),
            coassoc = law("coassociativity"), counit_left = law("counit_left"), counit_right = law("counit_right");

  Map id(carrier_size);
  std::iota(id.begin(), id.end(), std::size_t{0});
  for (const EValue& x : xs) {
    ++identity.checked;
    if (functor.fmap(apply(id), x) != x) fail(identity, "x=" + show(x));

    for (const Map& f : maps) {
      const EValue fx = functor.fmap(apply(f), x);
      ++delta_nat.checked;
      const EEValue lhs = ops.delta(fx);
      const EEValue rhs = functor.fmap([&](const EValue& y) { return functor.fmap(apply(f), y); }, ops.delta(x));
      if (lhs != rhs) fail(delta_nat, show(f, "f") + " x=" + show(x));
      ++epsilon_nat.checked;
      if (ops.epsilon(fx) != f[ops.epsilon(x)]) fail(epsilon_nat, show(f, "f") + " x=" + show(x));
      for (const Map& g : maps) {
        ++composition.checked;
        Map gf(carrier_size);
        for (std::size_t a = 0; a < carrier_size; ++a) gf[a] = g[f[a]];
        if (functor.fmap(apply(gf), x) != functor.fmap(apply(g), fx))
          fail(composition, show(f, "f") + " " + show(g, "g") + " x=" + show(x));
      }
    }

    const EEValue dx = ops.delta(x);
    ++coassoc.checked;
    if (ops.delta_e(dx) != functor.fmap(ops.delta, dx)) fail(coassoc, "x=" + show(x));
    ++counit_left.checked;
    if (functor.fmap(ops.epsilon, dx) != x) fail(counit_left, "x=" + show(x));
    ++counit_right.checked;
    if (ops.epsilon_e(dx) != x) fail(counit_right, "x=" + show(x));
  }
  report.laws = {identity, composition, delta_nat, epsilon_nat, coassoc, counit_left, counit_right};
  return report;
}

Coalgebra make_coalgebra(Functor functor, std::vector<std::string> labels, std::vector<EValue> structure) {
  if (structure.size() != labels.size())
    throw Error(Errc::invalid_argument, "coalgebra structure must have one value per carrier element");
  for (std::size_t a = 0; a < structure.size(); ++a)
    if (!functor.is_value(structure[a], labels.size()))
      throw Error(Errc::invalid_argument, "structure value of '" + labels[a] + "' is not an element of E(A)", {a});
  return Coalgebra{std::move(functor), std::move(labels), std::move(structure)};
}

std::string_view class_name(CoalgebraClass c) noexcept {
  switch (c) {
    case CoalgebraClass::em: return "EM";
    case CoalgebraClass::weak_em_only: return "weak_EM_only";
    case CoalgebraClass::plain: return "plain";
  }
  return "plain";
}

Classification classify_coalgebra(const Coalgebra& c) {
  Classification out;
  const auto alpha = [&c](std::size_t a) { return c.structure[a]; };
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (!out.square_witness && c.functor.delta(c.structure[a]) != c.functor.fmap(alpha, c.structure[a]))
      out.square_witness = a;
    if (!out.counit_witness && c.functor.epsilon(c.structure[a]) != a) out.counit_witness = a;
  }
  if (out.square_witness)
    out.kind = CoalgebraClass::plain;
  else
    out.kind = out.counit_witness ? CoalgebraClass::weak_em_only : CoalgebraClass::em;
  return out;
}

bool is_coalgebra_hom(const Coalgebra& source, const Coalgebra& target, std::span<const std::size_t> f) {
  if (f.size() != source.size()) return false;
  for (std::size_t a = 0; a < source.size(); ++a) {
    if (f[a] >= target.size()) return false;
    const EValue mapped = source.functor.fmap([&f](std::size_t x) { return f[x]; }, source.structure[a]);
    if (target.structure[f[a]] != mapped) return false;
  }
  return true;
}

Coalgebra cofree_coalgebra(const Functor& functor, std::size_t x_size, std::size_t cap) {
  std::vector<EValue> carrier = functor.objects(x_size, cap);
  std::map<EValue, std::size_t> index;
  for (std::size_t i = 0; i < carrier.size(); ++i) index.emplace(carrier[i], i);
  std::vector<std::string> labels;
  std::vector<EValue> structure;
  labels.reserve(carrier.size());
  structure.reserve(carrier.size());
  for (const EValue& h : carrier) {
    labels.push_back(show(h));
    structure.push_back(functor.fmap([&index](const EValue& y) { return index.at(y); }, functor.delta(h)));
  }
  return Coalgebra{functor, std::move(labels), std::move(structure)};
}

CoalgebraHom sharp_lift(const Coalgebra& c, std::size_t x_size, std::span<const std::size_t> f, std::size_t cap) {
  if (f.size() != c.size()) throw Error(Errc::invalid_argument, "f must be total on the carrier");
  for (std::size_t a = 0; a < f.size(); ++a)
    if (f[a] >= x_size) throw Error(Errc::invalid_argument, "f takes a value outside X", {a});
  const Classification cls = classify_coalgebra(c);
  if (cls.kind != CoalgebraClass::em) {
    std::vector<std::size_t> witness;
    if (cls.square_witness) witness.push_back(*cls.square_witness);
    else if (cls.counit_witness) witness.push_back(*cls.counit_witness);
    throw Error(Errc::not_em_coalgebra, "sharp lift needs an Eilenberg-Moore coalgebra", witness);
  }

  const Coalgebra cofree = cofree_coalgebra(c.functor, x_size, cap);
  const std::vector<EValue> carrier = c.functor.objects(x_size, cap);
  std::map<EValue, std::size_t> index;
  for (std::size_t i = 0; i < carrier.size(); ++i) index.emplace(carrier[i], i);

  CoalgebraHom out;
  for (std::size_t a = 0; a < c.size(); ++a) {
    EValue v = c.functor.fmap([&f](std::size_t x) { return f[x]; }, c.structure[a]);
    if (c.functor.epsilon(v) != f[a])
      throw Error(Errc::internal, "epsilon . f# != f", {a});
    out.map.push_back(index.at(v));
    out.values.push_back(std::move(v));
  }
  if (!is_coalgebra_hom(c, cofree, out.map)) throw Error(Errc::internal, "f# fails the homomorphism square");
  return out;
}

Coalgebra coalgebra_of(const MSet& a) {
  std::vector<EValue> structure(a.size(), EValue(a.monoid().size()));
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t m = 0; m < a.monoid().size(); ++m) structure[x][m] = a.act(m, x);
  return Coalgebra{Functor::monoid_action(a.monoid()), a.labels(), std::move(structure)};
}

MSet mset_of(const Coalgebra& c) {
  const FiniteMonoid& monoid = c.functor.monoid();
  Table action(monoid.size(), std::vector<std::size_t>(c.size()));
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t m = 0; m < monoid.size(); ++m) action[m][x] = c.structure[x][m];
  return MSet::validate(monoid, c.labels, action);
}

}  // namespace rwb
