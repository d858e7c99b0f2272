#include "rwb/transport.hpp"

#include <algorithm>

namespace rwb {

LexLift hat_E(std::size_t base_size, const FiniteMonoid& monoid, std::size_t cap) {
  return LexLift{monoid, base_size, cofree_ordered_mset(base_size, monoid, cap)};
}

Map hat_E_map(const FiniteMonoid& monoid, const ChainEmbedding& f) {
  const std::size_t x = f.source_size(), y = f.target_size();
  const std::size_t count = saturating_pow(x, monoid.size());
  Map out(count);
  Map fh(monoid.size());
  for (std::size_t i = 0; i < count; ++i) {
    const Map h = function_of(i, x, monoid);
    for (std::size_t m = 0; m < monoid.size(); ++m) fh[m] = f(h[m]);
    out[i] = index_of_function(fh, y, monoid);
  }
  return out;
}

EValue standard_delta_hat(const LexLift& lift, std::size_t h) {
  EValue out(lift.monoid.size());
  for (std::size_t v = 0; v < out.size(); ++v) out[v] = lift.lifted.base().act(v, h);
  return out;
}

Map hat_delta(const LexLift& lift, std::size_t cap) {
  const std::size_t target = saturating_pow(lift.size(), lift.monoid.size());
  if (target > cap)
    throw Error(Errc::size_overflow, "|hat_E(hat_E(X))| exceeds cap " + std::to_string(cap));
  const WeakCoalgebra cofree = hat_cofree(lift);
  if (!structure_is_order_embedding(cofree)) throw Error(Errc::internal, "delta-hat is not an order-embedding");
  if (auto a = weak_square_failure(cofree)) throw Error(Errc::internal, "delta-hat fails the weak-EM square", {*a});
  Map out(lift.size());
  for (std::size_t h = 0; h < lift.size(); ++h)
    out[h] = index_of_function(cofree.structure[h], lift.size(), lift.monoid);
  return out;
}

WeakCoalgebra mset_as_weak_coalgebra(const OrderedMSet& a) {
  const MSet& base = a.base();
  const FiniteMonoid& monoid = base.monoid();
  WeakCoalgebra c{monoid, {}, std::vector<EValue>(a.size(), EValue(monoid.size()))};
  for (std::size_t r = 0; r < a.size(); ++r) {
    const std::size_t x = a.order()[r];
    c.labels.push_back(base.label(x));
    for (std::size_t m = 0; m < monoid.size(); ++m) c.structure[r][m] = a.rank(base.act(m, x));
  }
  if (!structure_is_order_embedding(c)) throw Error(Errc::internal, "alpha is not an order-embedding");
  if (auto x = weak_square_failure(c)) throw Error(Errc::internal, "alpha fails the weak-EM square", {*x});
  return c;
}

WeakCoalgebra hat_cofree(const LexLift& lift, const DeltaHat& delta) {
  WeakCoalgebra c{lift.monoid, lift.lifted.base().labels(), {}};
  c.structure.reserve(lift.size());
  for (std::size_t h = 0; h < lift.size(); ++h) c.structure.push_back(delta(lift, h));
  return c;
}

std::optional<std::size_t> weak_square_failure(const WeakCoalgebra& c) {
  const FiniteMonoid& m = c.monoid;
  for (std::size_t a = 0; a < c.size(); ++a)
    for (std::size_t v = 0; v < m.size(); ++v)
      for (std::size_t w = 0; w < m.size(); ++w)
        if (c.structure[a][m.multiply(v, w)] != c.structure[c.structure[a][v]][w]) return a;
  return std::nullopt;
}

bool structure_is_order_embedding(const WeakCoalgebra& c) {
  const auto order = c.monoid.well_order();
  for (std::size_t a = 0; a + 1 < c.size(); ++a)
    if (lex_compare(c.structure[a], c.structure[a + 1], order, c.size()) != std::strong_ordering::less) return false;
  return true;
}

bool is_weak_hom(const WeakCoalgebra& a, const WeakCoalgebra& b, std::span<const std::size_t> f) {
  if (f.size() != a.size() || !is_strictly_increasing(f, b.size())) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t m = 0; m < a.monoid.size(); ++m)
      if (b.structure[f[x]][m] != f[a.structure[x][m]]) return false;
  return true;
}

std::vector<WeakCoalgebra> enumerate_weak_coalgebras(const FiniteMonoid& monoid, std::size_t n) {
  std::vector<WeakCoalgebra> out;
  const std::size_t per = saturating_pow(n, monoid.size());
  const std::size_t total = saturating_pow(per, n);
  if (total > kDefaultHomCap) throw Error(Errc::size_overflow, "too many candidate structures");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("c" + std::to_string(i));
  for (std::size_t code = 0; code < total; ++code) {
    WeakCoalgebra c{monoid, labels, std::vector<EValue>(n)};
    std::size_t r = code;
    for (std::size_t a = n; a-- > 0;) {
      c.structure[a] = function_of(r % per, n, monoid);
      r /= per;
    }
    if (structure_is_order_embedding(c) && !weak_square_failure(c)) out.push_back(std::move(c));
  }
  return out;
}

namespace {

Map phi_raw(const WeakCoalgebra& b, const ChainEmbedding& u) {
  if (u.source_size() != b.size()) throw Error(Errc::invalid_argument, "u must start at the carrier chain of B");
  Map out(b.size());
  Map h(b.monoid.size());
  for (std::size_t x = 0; x < b.size(); ++x) {
    for (std::size_t m = 0; m < h.size(); ++m) h[m] = u(b.structure[x][m]);
    out[x] = index_of_function(h, u.target_size(), b.monoid);
  }
  return out;
}

}  // namespace

bool phi_square_holds(const WeakCoalgebra& b, const ChainEmbedding& u, const DeltaHat& delta) {
  const Map p = phi_raw(b, u);
  const LexLift target = hat_E(u.target_size(), b.monoid);
  if (!is_strictly_increasing(p, target.size())) return false;
  for (std::size_t x = 0; x < b.size(); ++x) {
    const EValue lhs = delta(target, p[x]);
    for (std::size_t m = 0; m < b.monoid.size(); ++m)
      if (lhs[m] != p[b.structure[x][m]]) return false;
  }
  return true;
}

Map phi(const WeakCoalgebra& b, const ChainEmbedding& u, bool check) {
  if (check && !phi_square_holds(b, u, standard_delta_hat))
    throw Error(Errc::internal, "Phi(u) is not a coalgebra hom into hat_E(C)");
  return phi_raw(b, u);
}

PACheck check_PA(const ChainEmbedding& u, std::span<const std::size_t> f, const WeakCoalgebra& a,
                 const WeakCoalgebra& b) {
  PACheck out;
  out.v.assign(f.begin(), f.end());
  if (!is_weak_hom(a, b, f)) return out;
  const Map lhs_b = phi(b, u);
  const Map rhs = phi(a, compose(u, ChainEmbedding::make(a.size(), b.size(), out.v)));
  out.holds = true;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (lhs_b[f[x]] != rhs[x]) out.holds = false;
  return out;
}

Map universal_embed(const WeakCoalgebra& b, const ChainEmbedding& f) {
  Map out = phi(b, f);
  if (!is_injective(out, saturating_pow(f.target_size(), b.monoid.size())))
    throw Error(Errc::internal, "universal embedding is not injective");
  return out;
}

std::string_view certification_name(Certification c) noexcept {
  switch (c) {
    case Certification::certified: return "certified";
    case Certification::refuted: return "refuted";
    case Certification::inconclusive: return "inconclusive";
    case Certification::square_failure: return "square_failure";
  }
  return "inconclusive";
}

TransportedWitness transport_witness(const OrderedMSet& u, const OrderedMSet& v, const TransportOptions& opt) {
  const FiniteMonoid& monoid = u.base().monoid();
  if (!monoid.same_monoid(v.base().monoid()))
    throw Error(Errc::monoid_mismatch, "U and V are M-sets over different monoids");

  ArrowOptions chain_opt = opt.arrow;
  chain_opt.k = opt.k;
  chain_opt.t = 1;
  WitnessSearch trace;
  const auto w = find_chain_witness(u.size(), v.size(), opt.max_chain, chain_opt, &trace);
  if (!w)
    throw Error(Errc::no_chain_witness_in_budget,
                "no chain W <= " + std::to_string(opt.max_chain) + " with W -> (" + std::to_string(v.size()) +
                    ")^" + std::to_string(u.size()) + "_" + std::to_string(opt.k));

  const LexLift lift = hat_E(*w, monoid, opt.arrow.hom_cap);
  TransportedWitness out{*w, lift.lifted, Certification::inconclusive, trace.verdicts.back(), std::nullopt, 0, {}};

  const WeakCoalgebra beta = mset_as_weak_coalgebra(v);
  for (const ChainEmbedding& e : enumerate_chain_embeddings(v.size(), *w)) {
    ++out.phi_checked;
    if (!phi_square_holds(beta, e, opt.delta)) {
      out.status = Certification::square_failure;
      std::string img;
      for (std::size_t i = 0; i < e.source_size(); ++i) img += (i ? "," : "") + std::to_string(e(i));
      out.detail = "Phi(u) is not a coalgebra hom into hat_E(W) for u = (" + img + ")";
      return out;
    }
  }

  ArrowOptions cert = opt.arrow;
  cert.k = opt.k;
  cert.t = 1;
  cert.exhaustive_cap = opt.certify_cap;
  out.verdict = holds_arrow(view_of(u), view_of(v), view_of(lift.lifted), cert);
  switch (out.verdict->status) {
    case ArrowStatus::holds: out.status = Certification::certified; break;
    case ArrowStatus::refuted: out.status = Certification::refuted; break;
    case ArrowStatus::inconclusive: out.status = Certification::inconclusive; break;
  }
  out.detail = "hom(U, hat_E(W)) has " + std::to_string(out.verdict->hom_ac) + " elements";
  return out;
}

}  // namespace rwb
