#include "rwb/rwb.h"

#include <openssl/evp.h>

#include <charconv>
#include <cstring>
#include <new>
#include <string>

#include "rwb/bigramsey.hpp"
#include "rwb/comonad.hpp"
#include "rwb/expansion.hpp"
#include "rwb/forests.hpp"
#include "rwb/io.hpp"
#include "rwb/ramsey.hpp"
#include "rwb/transport.hpp"

struct rwb_context {
  std::size_t threads = 1;
  std::size_t hom_cap = rwb::kDefaultHomCap;
  std::size_t e_cap = rwb::kDefaultECap;
  std::size_t r_cap = rwb::kDefaultRCap;
  std::size_t exhaustive_cap = 64;
  std::size_t certify_cap = 20;
  std::size_t samples = 2000;
  std::size_t node_budget = 200'000'000;
  std::uint64_t seed = 0;
  std::string last_error;
};

struct rwb_object {
  rwb::Object value;
};

struct rwb_report {
  std::string json;
};

namespace {

using rwb::Errc;
using rwb::Error;
using rwb::Json;

constexpr std::size_t kReportedWitnesses = 32;

Json error_json(std::string_view name, const std::string& message, const std::vector<std::size_t>& witness = {}) {
  return Json{{"error", name}, {"message", message}, {"witness", witness}};
}

template <class F>
rwb_status guarded(rwb_context* ctx, F&& body) {
  if (ctx == nullptr) return RWB_ERR_INPUT;
  ctx->last_error.clear();
  try {
    body();
    return RWB_OK;
  } catch (const Error& e) {
    ctx->last_error = error_json(rwb::errc_name(e.code()), e.what(), e.witness()).dump();
    if (e.is_overflow()) return RWB_ERR_OVERFLOW;
    return e.code() == Errc::internal ? RWB_ERR_INTERNAL : RWB_ERR_INPUT;
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = error_json("ParseError", e.what()).dump();
    return RWB_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = error_json("SizeOverflow", "out of memory").dump();
    return RWB_ERR_OVERFLOW;
  } catch (const std::exception& e) {
    ctx->last_error = error_json("Internal", e.what()).dump();
    return RWB_ERR_INTERNAL;
  }
}

void emit(rwb_report** out, const Json& j) {
  if (out == nullptr) throw Error(Errc::invalid_argument, "report pointer is null");
  *out = new rwb_report{j.dump(2)};
}

const rwb::Object& need(const rwb_object* obj, const char* name) {
  if (obj == nullptr) throw Error(Errc::invalid_argument, std::string(name) + ": object is null");
  return obj->value;
}

std::string text_or(const char* s, const char* fallback) { return s != nullptr && *s != '\0' ? s : fallback; }

rwb::ArrowOptions arrow_options(const rwb_context& ctx) {
  rwb::ArrowOptions opt;
  opt.exhaustive_cap = ctx.exhaustive_cap;
  opt.hom_cap = ctx.hom_cap;
  opt.threads = ctx.threads;
  opt.seed = ctx.seed;
  opt.samples = ctx.samples;
  opt.node_budget = ctx.node_budget;
  return opt;
}

std::vector<std::string> labels_of(const rwb::Object& o) {
  switch (o.kind) {
    case rwb::ObjectKind::chain: return o.chain->labels();
    case rwb::ObjectKind::mset:
    case rwb::ObjectKind::ordered_mset: return o.mset->labels();
    case rwb::ObjectKind::unary: return o.unary->labels();
    case rwb::ObjectKind::forest: return o.forest->labels;
    case rwb::ObjectKind::coalgebra: return o.coalgebra->labels;
    case rwb::ObjectKind::monoid: return o.monoid->labels();
  }
  return {};
}

Json label_list(std::span<const std::size_t> xs, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (std::size_t x : xs) out.push_back(labels.at(x));
  return out;
}

// The three objects of an arrow instance, checked for a common signature.
struct Triple {
  rwb::ActionView a, b, c;
};

bool is_ordered(const rwb::Object& o) {
  switch (o.kind) {
    case rwb::ObjectKind::chain:
    case rwb::ObjectKind::ordered_mset: return true;
    case rwb::ObjectKind::unary: return o.unary->order().has_value();
    case rwb::ObjectKind::forest: return o.forest->order.has_value();
    default: return false;
  }
}

void check_same_signature(const rwb::Object& x, const rwb::Object& y, const char* xn, const char* yn) {
  if (x.mset && y.mset) {
    if (!x.mset->monoid().same_monoid(y.mset->monoid()))
      throw Error(Errc::monoid_mismatch, std::string(xn) + " and " + yn + " act by different monoids");
  } else if (x.unary && y.unary) {
    if (x.unary->alphabet() != y.unary->alphabet())
      throw Error(Errc::monoid_mismatch, std::string(xn) + " and " + yn + " use different alphabets");
  } else if (x.kind != y.kind) {
    throw Error(Errc::invalid_argument, std::string(xn) + " is a " + std::string(rwb::kind_name(x.kind)) + " but " +
                                            yn + " is a " + std::string(rwb::kind_name(y.kind)));
  }
}

rwb::ActionView view_in(const rwb::Object& o, rwb::Ctx ctx, const char* name) {
  using K = rwb::ObjectKind;
  const std::string where = std::string(name) + ": ";
  switch (ctx) {
    case rwb::Ctx::chains:
      if (o.kind != K::chain) throw Error(Errc::invalid_argument, where + "category chains needs a chain");
      return o.view();
    case rwb::Ctx::msets: {
      if (o.kind != K::mset && o.kind != K::ordered_mset && o.kind != K::unary)
        throw Error(Errc::invalid_argument, where + "category msets needs an M-set or unary algebra");
      rwb::ActionView v = o.view();
      v.rank.clear();
      return v;
    }
    case rwb::Ctx::ordered_msets:
      if ((o.kind != K::ordered_mset && o.kind != K::unary) || !is_ordered(o))
        throw Error(Errc::invalid_argument, where + "category ordered_msets needs an M-set with an order");
      return o.view();
    case rwb::Ctx::forests:
      if (o.kind != K::forest) throw Error(Errc::invalid_argument, where + "category forests needs a forest");
      return o.view();
  }
  throw Error(Errc::invalid_argument, where + "unknown category");
}

Triple triple_in(const rwb::Object& a, const rwb::Object& b, const rwb::Object& c, rwb::Ctx ctx) {
  Triple t{view_in(a, ctx, "A"), view_in(b, ctx, "B"), view_in(c, ctx, "C")};
  check_same_signature(a, b, "A", "B");
  check_same_signature(a, c, "A", "C");
  if (ctx == rwb::Ctx::forests) {
    const int ordered = is_ordered(a) + is_ordered(b) + is_ordered(c);
    if (ordered != 0 && ordered != 3)
      throw Error(Errc::invalid_argument, "forests: either all or none of A, B, C must carry an order");
  }
  return t;
}

rwb::Ctx default_ctx(const rwb::Object& o) {
  switch (o.kind) {
    case rwb::ObjectKind::chain: return rwb::Ctx::chains;
    case rwb::ObjectKind::forest: return rwb::Ctx::forests;
    default: return is_ordered(o) ? rwb::Ctx::ordered_msets : rwb::Ctx::msets;
  }
}

Json verdict_json(const rwb::ArrowVerdict& v) {
  Json j{{"status", rwb::status_name(v.status)},
         {"reason", v.reason},
         {"hom_AC", v.hom_ac},
         {"hom_BC", v.hom_bc},
         {"hom_AB", v.hom_ab},
         {"samples_tried", v.samples_tried},
         {"witness_classes", v.witness_classes}};
  Json ws = Json::array();
  for (std::size_t i = 0; i < v.witnesses.size() && i < kReportedWitnesses; ++i) {
    Json prefix = Json::array();
    for (rwb::Color c : v.witnesses[i].prefix) prefix.push_back(static_cast<unsigned>(c));
    ws.push_back(Json{{"prefix", prefix}, {"w", v.witnesses[i].w}});
  }
  j["witnesses"] = ws;
  j["witnesses_truncated"] = v.witnesses.size() > kReportedWitnesses || v.witness_classes > v.witnesses.size();
  if (v.bad_coloring) {
    Json colors = Json::array();
    for (rwb::Color c : v.bad_coloring->colors) colors.push_back(static_cast<unsigned>(c));
    j["bad_coloring"] = Json{{"k", v.bad_coloring->k}, {"colors", colors}};
  } else {
    j["bad_coloring"] = nullptr;
  }
  return j;
}

std::size_t parse_size(const char* key, const char* value) {
  const std::string_view s = value == nullptr ? std::string_view{} : std::string_view{value};
  std::size_t out = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw Error(Errc::invalid_argument, std::string(key) + ": expected a nonnegative integer, got '" +
                                            std::string(s) + "'");
  return out;
}

rwb::OrderedMSet ordered_of(const rwb::Object& o, const char* name) {
  if (o.kind == rwb::ObjectKind::ordered_mset) return *o.ordered;
  if (o.kind == rwb::ObjectKind::chain) {
    rwb::Map id(o.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
    rwb::MSet base = rwb::MSet::validate(rwb::FiniteMonoid::trivial(), o.chain->labels(), rwb::Table{id});
    return rwb::OrderedMSet(std::move(base), id);
  }
  throw Error(Errc::invalid_argument, std::string(name) + ": expected an ordered M-set or a chain");
}

Json run_json(const rwb::BigRamseyRun& run) {
  Json steps = Json::array();
  for (const rwb::ReduceStep& s : run.steps)
    steps.push_back(Json{{"subchain", s.subchain}, {"input_size", s.input_size}, {"kept", s.kept}, {"color", s.color}});
  return Json{{"colors_used", run.colors_used},
              {"bound", run.bound},
              {"u", run.u.map()},
              {"truncation_tower", run.tower},
              {"steps", steps}};
}

// One ordered instance of the big Ramsey experiment.
Json bigramsey_ordered(const rwb_context& ctx, const rwb::OrderedMSet& a, std::size_t n, std::size_t k,
                       std::size_t trials, std::uint64_t seed, std::size_t n_inner, const Json* coloring,
                       std::optional<std::size_t>& certified_bound) {
  const rwb::BigRamseyInstance inst = rwb::make_big_instance(a, n, ctx.r_cap);
  const std::size_t bound = rwb::subchains_containing_min(a.size()).size();
  Json out{{"order", label_list(a.order(), a.base().labels())},
           {"R_size", inst.r.size()},
           {"hat_E_size", inst.lift.size()},
           {"bound", bound},
           {"pi_injective", rwb::pi_is_injective(inst)}};
  Json rows = Json::array();
  std::size_t succeeded = 0, within = 0, max_used = 0;
  auto record = [&](std::optional<std::uint64_t> trial_seed, const std::optional<rwb::BigRamseyRun>& run, bool ok,
                    const std::string& error, std::size_t error_step) {
    Json row = Json::object();
    if (trial_seed) row["seed"] = *trial_seed;
    row["ok"] = ok;
    if (run) {
      ++succeeded;
      if (ok) ++within;
      max_used = std::max(max_used, run->colors_used);
      row.update(run_json(*run));
    } else {
      row["error"] = error;
      row["failed_step"] = error_step;
    }
    rows.push_back(row);
  };
  if (coloring != nullptr) {
    if (!coloring->is_array()) throw Error(Errc::parse_error, "coloring: expected an array of colors");
    std::vector<std::uint32_t> chi;
    for (std::size_t i = 0; i < coloring->size(); ++i) {
      const Json& c = (*coloring)[i];
      if (!c.is_number_unsigned() && !(c.is_number_integer() && c.get<long long>() >= 0))
        throw Error(Errc::parse_error, "coloring[" + std::to_string(i) + "]: expected a nonnegative integer");
      chi.push_back(c.get<std::uint32_t>());
    }
    try {
      const rwb::BigRamseyRun run = rwb::big_ramsey_reduce(inst, chi, k, n_inner);
      record(std::nullopt, run, run.colors_used <= run.bound, {}, 0);
    } catch (const Error& e) {
      if (e.code() != Errc::truncation_too_small) throw;
      record(std::nullopt, std::nullopt, false, std::string("TruncationTooSmall: ") + e.what(),
             e.witness().empty() ? 0 : e.witness().front());
    }
  } else {
    for (const rwb::TrialResult& t : rwb::run_trials(inst, k, trials, seed, n_inner, ctx.threads))
      record(t.seed, t.run, t.ok, t.error, t.error_step);
  }
  out["trials"] = rows;
  out["succeeded"] = succeeded;
  out["within_bound"] = within;
  out["max_colors_used"] = max_used;
  const bool all_ok = !rows.empty() && within == rows.size();
  out["all_within_bound"] = all_ok;
  certified_bound = all_ok ? std::optional<std::size_t>(bound) : std::nullopt;
  return out;
}

}  // namespace

extern "C" {

const char* rwb_version(void) { return "0.1.0"; }

rwb_status rwb_context_new(rwb_context** out) {
  if (out == nullptr) return RWB_ERR_INPUT;
  *out = new (std::nothrow) rwb_context{};
  return *out == nullptr ? RWB_ERR_OVERFLOW : RWB_OK;
}

void rwb_context_free(rwb_context* ctx) { delete ctx; }

rwb_status rwb_context_set_option(rwb_context* ctx, const char* key, const char* value) {
  return guarded(ctx, [&] {
    const std::string k = text_or(key, "");
    const std::size_t v = parse_size(k.c_str(), value);
    if (k == "threads") {
      if (v == 0) throw Error(Errc::invalid_argument, "threads: must be at least 1");
      ctx->threads = v;
    } else if (k == "hom_cap") {
      ctx->hom_cap = v;
    } else if (k == "e_cap") {
      ctx->e_cap = v;
    } else if (k == "r_cap") {
      ctx->r_cap = v;
    } else if (k == "exhaustive_cap") {
      ctx->exhaustive_cap = v;
    } else if (k == "certify_cap") {
      ctx->certify_cap = v;
    } else if (k == "samples") {
      ctx->samples = v;
    } else if (k == "node_budget") {
      ctx->node_budget = v;
    } else if (k == "seed") {
      ctx->seed = v;
    } else {
      throw Error(Errc::invalid_argument, "unknown option '" + k + "'");
    }
  });
}

const char* rwb_last_error(const rwb_context* ctx) { return ctx == nullptr ? "" : ctx->last_error.c_str(); }

rwb_status rwb_object_load(rwb_context* ctx, const char* json, rwb_object** out) {
  return guarded(ctx, [&] {
    if (json == nullptr || out == nullptr) throw Error(Errc::invalid_argument, "null argument");
    *out = new rwb_object{rwb::parse_object_text(json)};
  });
}

void rwb_object_free(rwb_object* obj) { delete obj; }

const char* rwb_object_kind(const rwb_object* obj) {
  return obj == nullptr ? "" : rwb::kind_name(obj->value.kind).data();
}

size_t rwb_object_size(const rwb_object* obj) { return obj == nullptr ? 0 : obj->value.size(); }

rwb_status rwb_validate(rwb_context* ctx, const rwb_object* obj, rwb_report** out) {
  return guarded(ctx, [&] {
    const rwb::Object& o = need(obj, "object");
    Json j{{"kind", rwb::kind_name(o.kind)}, {"size", o.size()}, {"valid", true}};
    switch (o.kind) {
      case rwb::ObjectKind::monoid: {
        j["commutative"] = o.monoid->is_commutative();
        j["group"] = o.monoid->is_group();
        j["monoid"] = rwb::monoid_to_json(*o.monoid);
        break;
      }
      case rwb::ObjectKind::mset:
      case rwb::ObjectKind::ordered_mset: {
        j["monoid_size"] = o.mset->monoid().size();
        j["group_action"] = o.mset->monoid().is_group();
        const rwb::Classification cls = rwb::classify_coalgebra(rwb::coalgebra_of(*o.mset));
        j["coalgebra_class"] = rwb::class_name(cls.kind);
        if (o.ordered) j["order"] = label_list(o.ordered->order(), o.mset->labels());
        break;
      }
      case rwb::ObjectKind::coalgebra: {
        const rwb::Classification cls = rwb::classify_coalgebra(*o.coalgebra);
        j["functor"] = o.coalgebra->functor.name();
        j["coalgebra_class"] = rwb::class_name(cls.kind);
        j["square_witness"] = cls.square_witness ? Json(o.coalgebra->labels[*cls.square_witness]) : Json(nullptr);
        j["counit_witness"] = cls.counit_witness ? Json(o.coalgebra->labels[*cls.counit_witness]) : Json(nullptr);
        break;
      }
      case rwb::ObjectKind::forest: {
        Json roots = Json::array();
        for (std::size_t a = 0; a < o.forest->size(); ++a)
          if (o.forest->parent[a] == a) roots.push_back(o.forest->labels[a]);
        j["roots"] = roots;
        j["ordered"] = o.forest->order.has_value();
        break;
      }
      case rwb::ObjectKind::unary:
        j["alphabet"] = o.unary->alphabet();
        j["ordered"] = o.unary->order().has_value();
        break;
      case rwb::ObjectKind::chain: break;
    }
    emit(out, j);
  });
}

rwb_status rwb_laws(rwb_context* ctx, const char* functor, const rwb_object* monoid, size_t carrier_size,
                    rwb_report** out) {
  return guarded(ctx, [&] {
    const std::string name = text_or(functor, "");
    rwb::Functor f = rwb::Functor::duplicate_free_list();
    if (name == "monoid_action") {
      const rwb::Object& m = need(monoid, "monoid");
      if (!m.monoid) throw Error(Errc::invalid_argument, "monoid: expected a monoid object");
      f = rwb::Functor::monoid_action(*m.monoid);
    } else if (name != "duplicate_free_list") {
      throw Error(Errc::invalid_argument, "functor: expected monoid_action or duplicate_free_list, got '" + name + "'");
    }
    const rwb::LawReport report = rwb::check_comonad_laws(f, carrier_size, ctx->e_cap);
    Json laws = Json::array();
    for (const rwb::LawResult& r : report.laws)
      laws.push_back(Json{{"law", r.law},
                          {"passed", r.passed},
                          {"checked", r.checked},
                          {"counterexample", r.passed ? Json(nullptr) : Json(r.counterexample)}});
    Json j{{"functor", report.functor}, {"carrier_size", report.carrier_size}};
    if (f.kind() == rwb::FunctorKind::monoid_action) j["monoid"] = rwb::monoid_to_json(f.monoid());
    j["E_size"] = f.object_count(carrier_size);
    j["all_passed"] = report.all_passed();
    j["laws"] = laws;
    emit(out, j);
  });
}

rwb_status rwb_arrow_check(rwb_context* ctx, const rwb_object* a, const rwb_object* b, const rwb_object* c, size_t k,
                           size_t t, const char* category, rwb_report** out) {
  return guarded(ctx, [&] {
    const rwb::Object& oa = need(a, "A");
    const rwb::Object& ob = need(b, "B");
    const rwb::Object& oc = need(c, "C");
    if (k == 0) throw Error(Errc::invalid_argument, "k: must be at least 1");
    if (k > 255) throw Error(Errc::invalid_argument, "k: at most 255 colors are supported");
    if (t == 0) throw Error(Errc::invalid_argument, "t: must be at least 1");
    const rwb::Ctx cx = category == nullptr || *category == '\0' ? default_ctx(oa) : rwb::parse_ctx(category);
    const Triple views = triple_in(oa, ob, oc, cx);
    rwb::ArrowOptions opt = arrow_options(*ctx);
    opt.k = k;
    opt.t = t;
    const rwb::ArrowInstance inst = rwb::make_instance(views.a, views.b, views.c, ctx->hom_cap);
    const rwb::ArrowVerdict v = rwb::holds_arrow(inst, opt);
    Json j{{"category", rwb::ctx_name(cx)},
           {"k", k},
           {"t", t},
           {"sizes", Json{{"A", oa.size()}, {"B", ob.size()}, {"C", oc.size()}}},
           {"exhaustive", inst.hom_ac.size() <= opt.exhaustive_cap}};
    j.update(verdict_json(v));
    if (v.bad_coloring) {
      j["bad_coloring"]["verified"] = rwb::is_bad_coloring(inst, *v.bad_coloring, t);
      Json maps = Json::array();
      const auto c_labels = labels_of(oc);
      for (const rwb::Map& f : inst.hom_ac) maps.push_back(label_list(f, c_labels));
      j["bad_coloring"]["hom_AC"] = maps;
    }
    emit(out, j);
  });
}

rwb_status rwb_degree_probe(rwb_context* ctx, const rwb_object* a, const char* category, const char* budget,
                            rwb_report** out) {
  return guarded(ctx, [&] {
    const rwb::Object& oa = need(a, "A");
    const rwb::Ctx cx = category == nullptr || *category == '\0' ? default_ctx(oa) : rwb::parse_ctx(category);
    const rwb::ActionView view = view_in(oa, cx, "A");
    const std::string budget_name = text_or(budget, "small");
    const rwb::DegreeBudget db = rwb::parse_budget(budget_name);
    rwb::ArrowOptions opt = arrow_options(*ctx);
    opt.exhaustive_cap = db.exhaustive_cap;
    const rwb::DegreeProbe p = rwb::probe_small_degree(view, cx, db, opt);
    Json j{{"category", rwb::ctx_name(cx)},
           {"size", oa.size()},
           {"budget", Json{{"name", budget_name},
                           {"max_B", db.max_b},
                           {"max_C", db.max_c},
                           {"exhaustive_cap", db.exhaustive_cap}}},
           {"lower", p.lower},
           {"upper", p.upper ? Json(*p.upper) : Json(nullptr)},
           {"exact", p.upper && *p.upper == p.lower},
           {"evidence", p.evidence}};
    emit(out, j);
  });
}

rwb_status rwb_transport(rwb_context* ctx, const rwb_object* u, const rwb_object* v, size_t k, size_t max_chain,
                         size_t truncate_n, rwb_report** out) {
  return guarded(ctx, [&] {
    const rwb::OrderedMSet ou = ordered_of(need(u, "U"), "U");
    const rwb::OrderedMSet ov = ordered_of(need(v, "V"), "V");
    if (k == 0 || k > 255) throw Error(Errc::invalid_argument, "k: must be between 1 and 255");
    rwb::TransportOptions opt;
    opt.k = k;
    opt.max_chain = max_chain;
    opt.certify_cap = ctx->certify_cap;
    opt.arrow = arrow_options(*ctx);
    Json j{{"k", k}, {"max_chain", max_chain}, {"U_size", ou.size()}, {"V_size", ov.size()}};
    try {
      const rwb::TransportedWitness w = rwb::transport_witness(ou, ov, opt);
      j["W"] = w.w;
      j["target_size"] = w.target.size();
      j["status"] = rwb::certification_name(w.status);
      j["phi_checked"] = w.phi_checked;
      j["detail"] = w.detail;
      j["chain_verdict"] = verdict_json(w.chain_verdict);
      j["certification"] = w.verdict ? verdict_json(*w.verdict) : Json(nullptr);
    } catch (const Error& e) {
      if (e.code() != Errc::no_chain_witness_in_budget) throw;
      j["W"] = nullptr;
      j["status"] = "no_chain_witness_in_budget";
      j["detail"] = e.what();
    }
    if (truncate_n > 0) {
      if (truncate_n < ov.size())
        throw Error(Errc::invalid_argument, "truncate-N: omega_N must have at least |V| points");
      const rwb::WeakCoalgebra vb = rwb::mset_as_weak_coalgebra(ov);
      rwb::Map prefix(ov.size());
      for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = i;
      const rwb::ChainEmbedding f = rwb::ChainEmbedding::make(ov.size(), truncate_n, prefix);
      const rwb::Map image = rwb::universal_embed(vb, f);
      const rwb::LexLift lift = rwb::hat_E(truncate_n, ov.base().monoid(), ctx->hom_cap);
      Json functions = Json::array();
      for (std::size_t x : image) functions.push_back(lift.function(x));
      j["universal_embedding"] = Json{{"N", truncate_n},
                                      {"hat_E_size", lift.size()},
                                      {"image", image},
                                      {"functions", functions},
                                      {"valid", true}};
    }
    emit(out, j);
  });
}

rwb_status rwb_bigramsey(rwb_context* ctx, const rwb_object* a, size_t n, size_t k, size_t trials, uint64_t seed,
                         size_t n_inner, const char* coloring_json, rwb_report** out) {
  return guarded(ctx, [&] {
    const rwb::Object& oa = need(a, "A");
    if (k == 0) throw Error(Errc::invalid_argument, "k: must be at least 1");
    if (n == 0) throw Error(Errc::invalid_argument, "N: must be at least 1");
    if (coloring_json == nullptr && trials == 0) throw Error(Errc::invalid_argument, "trials: must be at least 1");
    const std::size_t inner = n_inner == 0 ? oa.size() : n_inner;
    std::optional<Json> coloring;
    if (coloring_json != nullptr) {
      try {
        coloring = Json::parse(coloring_json);
      } catch (const nlohmann::json::parse_error& e) {
        throw Error(Errc::parse_error, std::string("coloring: invalid JSON: ") + e.what());
      }
    }
    const Json* chi = coloring ? &*coloring : nullptr;
    Json j{{"N", n},
           {"k", k},
           {"seed", seed},
           {"trials", chi ? 1 : trials},
           {"N_inner", inner},
           {"s", oa.size()},
           {"bound", rwb::subchains_containing_min(oa.size()).size()},
           {"coloring", chi ? "file" : "seeded"}};
    std::optional<std::size_t> certified;
    if (oa.kind == rwb::ObjectKind::mset) {
      std::map<rwb::Ordering, std::optional<std::size_t>> bounds;
      Json per = Json::array();
      for (const rwb::OrderedMSet& star : rwb::fibers(*oa.mset)) {
        per.push_back(bigramsey_ordered(*ctx, star, n, k, trials, seed, inner, chi, certified));
        bounds.emplace(rwb::Ordering(star.order().begin(), star.order().end()), certified);
      }
      j["orderings"] = per;
      try {
        const rwb::UnorderedBound ub = rwb::unordered_degree_bound(*oa.mset, bounds);
        j["unordered_bound"] = Json{{"aggregate", ub.aggregate}, {"formula", ub.formula}, {"within", ub.within}};
      } catch (const Error& e) {
        if (e.code() != Errc::missing_ordering) throw;
        j["unordered_bound"] = Json{{"aggregate", nullptr}, {"reason", std::string("MissingOrdering: ") + e.what()}};
      }
    } else {
      j["ordering"] = bigramsey_ordered(*ctx, ordered_of(oa, "A"), n, k, trials, seed, inner, chi, certified);
    }
    emit(out, j);
  });
}

rwb_status rwb_degree_bound(rwb_context* ctx, const rwb_object* a, const char* ordered_degrees_json, rwb_report** out) {
  return guarded(ctx, [&] {
    const rwb::Object& oa = need(a, "A");
    if (!oa.mset) throw Error(Errc::invalid_argument, "A: expected an M-set");
    const rwb::MSet& base = *oa.mset;
    Json doc;
    try {
      doc = Json::parse(text_or(ordered_degrees_json, ""));
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(Errc::parse_error, std::string("ordered-degrees: invalid JSON: ") + e.what());
    }
    const Json& list = doc.is_object() && doc.contains("orderings") ? doc.at("orderings") : doc;
    if (!list.is_array()) throw Error(Errc::parse_error, "ordered-degrees: expected an array of {order, degree}");
    std::map<rwb::Ordering, std::optional<std::size_t>> degrees;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string field = "ordered-degrees[" + std::to_string(i) + "]";
      const Json& entry = list[i];
      if (!entry.is_object() || !entry.contains("order") || !entry.contains("degree"))
        throw Error(Errc::parse_error, field + ": expected {\"order\": [...], \"degree\": n}");
      const Json& order = entry.at("order");
      if (!order.is_array()) throw Error(Errc::parse_error, field + ".order: expected an array");
      rwb::Ordering ord;
      std::vector<char> seen(base.size(), 0);
      for (std::size_t p = 0; p < order.size(); ++p) {
        const std::string pf = field + ".order[" + std::to_string(p) + "]";
        if (!order[p].is_string()) throw Error(Errc::parse_error, pf + ": expected a carrier label");
        const auto x = base.index_of(order[p].get<std::string>());
        if (!x) throw Error(Errc::parse_error, pf + ": unknown element '" + order[p].get<std::string>() + "'");
        if (seen[*x]) throw Error(Errc::parse_error, pf + ": repeated element");
        seen[*x] = 1;
        ord.push_back(*x);
      }
      if (ord.size() != base.size()) throw Error(Errc::parse_error, field + ".order: must list every carrier element");
      const Json& d = entry.at("degree");
      std::optional<std::size_t> deg;
      if (!d.is_null()) {
        if (!d.is_number_unsigned() && !(d.is_number_integer() && d.get<long long>() >= 0))
          throw Error(Errc::parse_error, field + ".degree: expected a nonnegative integer or null");
        deg = d.get<std::size_t>();
      }
      if (!degrees.emplace(ord, deg).second) throw Error(Errc::parse_error, field + ": ordering listed twice");
    }
    const std::size_t aggregate = rwb::degree_sum_bound(base, degrees);
    const std::size_t n = base.size();
    const std::size_t formula =
        rwb::saturating_mul(rwb::factorial(n), n == 0 ? 1 : rwb::saturating_pow(2, n - 1));
    emit(out, Json{{"size", n},
                   {"fiber_size", rwb::factorial(n)},
                   {"aggregate", aggregate},
                   {"big_formula", formula},
                   {"within_big_formula", aggregate <= formula}});
  });
}

rwb_status rwb_forest(rwb_context* ctx, const rwb_object* forest, rwb_report** out) {
  return guarded(ctx, [&] {
    const rwb::Object& o = need(forest, "forest");
    if (!o.forest) throw Error(Errc::invalid_argument, "forest: expected a rooted forest");
    rwb::RootedForest f = *o.forest;
    const bool given = f.order.has_value();
    if (!given) {
      f.order.emplace(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) (*f.order)[i] = i;
    }
    const rwb::Coalgebra enc = rwb::encode_forest(f);
    const rwb::Classification cls = rwb::classify_coalgebra(enc);
    const rwb::RootedForest back = rwb::decode_coalgebra(enc, f.order);
    Json encoding = Json::object();
    for (std::size_t a = 0; a < f.size(); ++a) encoding[f.labels[a]] = label_list(enc.structure[a], f.labels);
    Json roots = Json::array();
    for (std::size_t a = 0; a < f.size(); ++a)
      if (f.parent[a] == a) roots.push_back(f.labels[a]);
    emit(out, Json{{"size", f.size()},
                   {"roots", roots},
                   {"order", label_list(*f.order, f.labels)},
                   {"order_source", given ? "input" : "carrier"},
                   {"encoding", encoding},
                   {"coalgebra_class", rwb::class_name(cls.kind)},
                   {"order_embedding", rwb::structure_is_order_embedding(f, enc)},
                   {"round_trip", back == f}});
  });
}

const char* rwb_report_json(const rwb_report* report) { return report == nullptr ? "" : report->json.c_str(); }

void rwb_report_free(rwb_report* report) { delete report; }

rwb_status rwb_content_hash(const void* data, size_t len, char out[65]) {
  if (out == nullptr || (data == nullptr && len != 0)) return RWB_ERR_INPUT;
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int digest_len = 0;
  if (EVP_Digest(data, len, digest, &digest_len, EVP_sha256(), nullptr) != 1 || digest_len != 32)
    return RWB_ERR_INTERNAL;
  static constexpr char hex[] = "0123456789abcdef";
  for (unsigned i = 0; i < digest_len; ++i) {
    out[2 * i] = hex[digest[i] >> 4];
    out[2 * i + 1] = hex[digest[i] & 15];
  }
  out[64] = '\0';
  return RWB_OK;
}

}  // extern "C"
