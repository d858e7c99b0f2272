#include "rwb/io.hpp"

#include <algorithm>
#include <charconv>

#include "rwb/error.hpp"

namespace rwb {

std::string_view kind_name(ObjectKind k) noexcept {
  switch (k) {
    case ObjectKind::chain: return "chain";
    case ObjectKind::monoid: return "monoid";
    case ObjectKind::mset: return "mset";
    case ObjectKind::ordered_mset: return "ordered_mset";
    case ObjectKind::unary: return "unary_algebra";
    case ObjectKind::coalgebra: return "coalgebra";
    case ObjectKind::forest: return "forest";
  }
  return "chain";
}

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& what) {
  throw Error(Errc::parse_error, field + ": " + what);
}

const Json& require(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) bad(where.empty() ? key : where + "." + key, "missing field");
  return j.at(key);
}

std::vector<std::string> string_list(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) bad(field + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

/// Resolves a label (or a non-negative integer index) against `labels`.
std::size_t resolve(const Json& j, const std::vector<std::string>& labels, const std::string& field) {
  if (j.is_number_unsigned() || (j.is_number_integer() && j.get<long long>() >= 0)) {
    const auto i = j.get<std::size_t>();
    if (i >= labels.size()) bad(field, "index " + std::to_string(i) + " out of range");
    return i;
  }
  if (!j.is_string()) bad(field, "expected a label");
  const std::string s = j.get<std::string>();
  auto it = std::find(labels.begin(), labels.end(), s);
  if (it == labels.end()) bad(field, "unknown element '" + s + "'");
  return static_cast<std::size_t>(it - labels.begin());
}

/// A self-map given as {"x": "y", ...} (total) or as a list in carrier order.
Map parse_map(const Json& j, const std::vector<std::string>& carrier, const std::string& field) {
  Map out(carrier.size());
  if (j.is_array()) {
    if (j.size() != carrier.size()) bad(field, "expected " + std::to_string(carrier.size()) + " entries");
    for (std::size_t i = 0; i < j.size(); ++i) out[i] = resolve(j[i], carrier, field + "[" + std::to_string(i) + "]");
    return out;
  }
  if (!j.is_object()) bad(field, "expected an object mapping carrier elements");
  std::vector<char> seen(carrier.size(), 0);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::size_t x = resolve(Json(it.key()), carrier, field + "." + it.key());
    out[x] = resolve(it.value(), carrier, field + "." + it.key());
    seen[x] = 1;
  }
  for (std::size_t i = 0; i < carrier.size(); ++i)
    if (!seen[i]) bad(field + "." + carrier[i], "missing image");
  return out;
}

std::optional<std::vector<std::size_t>> parse_order(const Json& j, const std::vector<std::string>& carrier) {
  if (!j.contains("order")) return std::nullopt;
  const Json& o = j.at("order");
  if (!o.is_array()) bad("order", "expected an array");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < o.size(); ++i) out.push_back(resolve(o[i], carrier, "order[" + std::to_string(i) + "]"));
  std::vector<std::size_t> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.size() != carrier.size() || std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    bad("order", "must list every carrier element exactly once");
  return out;
}

std::vector<std::string> index_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// "carrier": [labels] or a size n (labels "0".."n-1").
std::vector<std::string> carrier_of(const Json& j) {
  const Json& cj = require(j, "carrier", "");
  if (cj.is_number_unsigned() || (cj.is_number_integer() && cj.get<long long>() >= 0))
    return index_labels(cj.get<std::size_t>());
  std::vector<std::string> c = string_list(cj, "carrier");
  std::vector<std::string> sorted = c;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) bad("carrier", "duplicate element");
  return c;
}

}  // namespace

FiniteMonoid parse_monoid(const Json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "trivial") return FiniteMonoid::trivial();
    if (name.size() > 1 && name[0] == 'Z') {
      std::size_t n = 0;
      auto [p, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
      if (ec == std::errc() && p == name.data() + name.size() && n > 0) return FiniteMonoid::cyclic(n);
    }
    bad("monoid", "unknown monoid name '" + name + "' (expected trivial or Z<n>)");
  }
  if (!j.is_object()) bad("monoid", "expected a name or an object");
  std::vector<std::string> elements;
  if (j.contains("elements")) {
    elements = string_list(j.at("elements"), "monoid.elements");
  } else {
    const Json& n = require(j, "size", "monoid");
    if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<long long>() >= 0))
      bad("monoid.size", "expected a nonnegative integer");
    elements = index_labels(n.get<std::size_t>());
  }
  if (elements.empty()) bad("monoid.elements", "must be nonempty");
  const std::size_t identity = resolve(require(j, "identity", "monoid"), elements, "monoid.identity");
  const Json& t = require(j, "table", "monoid");
  if (!t.is_array() || t.size() != elements.size())
    bad("monoid.table", "expected " + std::to_string(elements.size()) + " rows");
  Table table;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::string row = "monoid.table[" + std::to_string(i) + "]";
    if (!t[i].is_array() || t[i].size() != elements.size())
      bad(row, "expected " + std::to_string(elements.size()) + " entries");
    std::vector<std::size_t> r;
    for (std::size_t k = 0; k < t[i].size(); ++k)
      r.push_back(resolve(t[i][k], elements, row + "[" + std::to_string(k) + "]"));
    table.push_back(std::move(r));
  }
  std::optional<std::vector<std::size_t>> well_order;
  if (j.contains("well_order")) {
    const Json& w = j.at("well_order");
    if (!w.is_array()) bad("monoid.well_order", "expected an array");
    well_order.emplace();
    for (std::size_t i = 0; i < w.size(); ++i)
      well_order->push_back(resolve(w[i], elements, "monoid.well_order[" + std::to_string(i) + "]"));
  }
  return FiniteMonoid::validate(elements.size(), table, identity, well_order, elements);
}

ActionView Object::view() const {
  switch (kind) {
    case ObjectKind::chain: {
      ActionView v;
      v.size = chain->size();
      for (std::size_t i = 0; i < v.size; ++i) v.rank.push_back(i);
      return v;
    }
    case ObjectKind::mset: return view_of(*mset);
    case ObjectKind::ordered_mset: return view_of(*ordered);
    case ObjectKind::unary: return unary->view();
    case ObjectKind::forest: return forest->view();
    case ObjectKind::monoid:
    case ObjectKind::coalgebra: break;
  }
  throw Error(Errc::invalid_argument, std::string(kind_name(kind)) + " is not a structure with embeddings");
}

std::size_t Object::size() const {
  switch (kind) {
    case ObjectKind::chain: return chain->size();
    case ObjectKind::monoid: return monoid->size();
    case ObjectKind::mset:
    case ObjectKind::ordered_mset: return mset->size();
    case ObjectKind::unary: return unary->size();
    case ObjectKind::coalgebra: return coalgebra->size();
    case ObjectKind::forest: return forest->size();
  }
  return 0;
}

Object parse_object(const Json& j) {
  Object o;
  if (j.is_string()) {
    o.kind = ObjectKind::monoid;
    o.monoid = parse_monoid(j);
    return o;
  }
  if (!j.is_object()) bad("(root)", "expected a JSON object");

  if (j.contains("parent")) {
    const auto carrier = carrier_of(j);
    o.kind = ObjectKind::forest;
    o.forest = make_forest(carrier, parse_map(j.at("parent"), carrier, "parent"), parse_order(j, carrier));
    return o;
  }
  if (j.contains("functor")) {
    const Json& fj = j.at("functor");
    if (!fj.is_string()) bad("functor", "expected monoid_action or duplicate_free_list");
    const std::string fname = fj.get<std::string>();
    Functor functor = Functor::duplicate_free_list();
    if (fname == "monoid_action")
      functor = Functor::monoid_action(parse_monoid(require(j, "monoid", "")));
    else if (fname != "duplicate_free_list")
      bad("functor", "unknown functor '" + fname + "'");
    const auto carrier = carrier_of(j);
    const Json& sj = require(j, "structure", "");
    if (!sj.is_object()) bad("structure", "expected an object keyed by carrier element");
    std::vector<EValue> structure(carrier.size());
    std::vector<char> seen(carrier.size(), 0);
    for (auto it = sj.begin(); it != sj.end(); ++it) {
      const std::string field = "structure." + it.key();
      const std::size_t a = resolve(Json(it.key()), carrier, field);
      if (!it.value().is_array()) bad(field, "expected an array");
      for (std::size_t i = 0; i < it.value().size(); ++i)
        structure[a].push_back(resolve(it.value()[i], carrier, field + "[" + std::to_string(i) + "]"));
      seen[a] = 1;
    }
    for (std::size_t a = 0; a < carrier.size(); ++a)
      if (!seen[a]) bad("structure." + carrier[a], "missing value");
    o.kind = ObjectKind::coalgebra;
    o.coalgebra = make_coalgebra(std::move(functor), carrier, std::move(structure));
    return o;
  }
  if (j.contains("alphabet")) {
    const auto alphabet = string_list(j.at("alphabet"), "alphabet");
    const char* ops_key = j.contains("generator_actions") ? "generator_actions" : "operations";
    const Json& ops = require(j, ops_key, "");
    std::vector<std::string> carrier;
    if (j.contains("carrier")) {
      carrier = carrier_of(j);
    } else {
      if (!ops.is_object() || ops.empty() || !ops.begin().value().is_array())
        bad("carrier", "missing field (needed unless operations are lists)");
      carrier = index_labels(ops.begin().value().size());
    }
    std::vector<Map> gens;
    for (const std::string& s : alphabet)
      gens.push_back(parse_map(require(ops, s.c_str(), ops_key), carrier, std::string(ops_key) + "." + s));
    o.kind = ObjectKind::unary;
    o.unary = UnaryAlgebra::validate(alphabet, carrier, std::move(gens), parse_order(j, carrier));
    return o;
  }
  if (j.contains("action")) {
    FiniteMonoid monoid = parse_monoid(require(j, "monoid", ""));
    const auto carrier = carrier_of(j);
    const Json& act = j.at("action");
    Table table(monoid.size());
    if (act.is_array()) {
      if (act.size() != monoid.size()) bad("action", "expected one row per monoid element");
      for (std::size_t m = 0; m < monoid.size(); ++m)
        table[m] = parse_map(act[m], carrier, "action[" + std::to_string(m) + "]");
    } else if (!act.is_object()) {
      bad("action", "expected an object keyed by monoid element or a table of rows");
    }
    for (std::size_t m = 0; m < monoid.size() && act.is_object(); ++m) {
      const std::string& name = monoid.label(m);
      if (act.contains(name)) {
        table[m] = parse_map(act.at(name), carrier, "action." + name);
      } else if (m == monoid.identity()) {
        for (std::size_t x = 0; x < carrier.size(); ++x) table[m].push_back(x);
      } else {
        bad("action." + name, "missing action of monoid element");
      }
    }
    if (act.is_object())
      for (auto it = act.begin(); it != act.end(); ++it)
        if (!monoid.index_of(it.key())) bad("action." + it.key(), "not an element of the monoid");
    MSet base = MSet::validate(monoid, carrier, table);
    auto order = parse_order(j, carrier);
    o.mset = base;
    if (order) {
      o.kind = ObjectKind::ordered_mset;
      o.ordered = OrderedMSet(std::move(base), std::move(*order));
    } else {
      o.kind = ObjectKind::mset;
    }
    return o;
  }
  if (j.contains("chain")) {
    const Json& c = j.at("chain");
    o.kind = ObjectKind::chain;
    if (c.is_number_unsigned() || (c.is_number_integer() && c.get<long long>() >= 0))
      o.chain = Chain::omega(c.get<std::size_t>());
    else
      o.chain = Chain(string_list(c, "chain"));
    return o;
  }
  if (j.contains("table") || j.contains("elements")) {
    o.kind = ObjectKind::monoid;
    o.monoid = parse_monoid(j);
    return o;
  }
  bad("(root)", "cannot tell the object kind (expected one of parent, functor, alphabet, action, chain, table)");
}

Object parse_object_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::parse_error, std::string("invalid JSON: ") + e.what());
  }
  return parse_object(j);
}

Json monoid_to_json(const FiniteMonoid& m) {
  Json table = Json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m.label(m.multiply(i, k)));
    table.push_back(row);
  }
  Json order = Json::array();
  for (std::size_t x : m.well_order()) order.push_back(m.label(x));
  return Json{{"elements", m.labels()}, {"identity", m.label(m.identity())}, {"table", table}, {"well_order", order}};
}

Json mset_to_json(const MSet& a, const std::vector<std::size_t>* order) {
  Json action = Json::object();
  for (std::size_t m = 0; m < a.monoid().size(); ++m) {
    Json row = Json::object();
    for (std::size_t x = 0; x < a.size(); ++x) row[a.label(x)] = a.label(a.act(m, x));
    action[a.monoid().label(m)] = row;
  }
  Json j{{"monoid", monoid_to_json(a.monoid())}, {"carrier", a.labels()}, {"action", action}};
  if (order) {
    Json o = Json::array();
    for (std::size_t x : *order) o.push_back(a.label(x));
    j["order"] = o;
  }
  return j;
}

Json coalgebra_to_json(const Coalgebra& c) {
  Json j{{"functor", c.functor.name()}};
  if (c.functor.kind() == FunctorKind::monoid_action) j["monoid"] = monoid_to_json(c.functor.monoid());
  j["carrier"] = c.labels;
  Json s = Json::object();
  for (std::size_t a = 0; a < c.size(); ++a) {
    Json v = Json::array();
    for (std::size_t x : c.structure[a]) v.push_back(c.labels[x]);
    s[c.labels[a]] = v;
  }
  j["structure"] = s;
  return j;
}

Json forest_to_json(const RootedForest& f) {
  Json parent = Json::object();
  for (std::size_t a = 0; a < f.size(); ++a) parent[f.labels[a]] = f.labels[f.parent[a]];
  Json j{{"carrier", f.labels}, {"parent", parent}};
  if (f.order) {
    Json o = Json::array();
    for (std::size_t x : *f.order) o.push_back(f.labels[x]);
    j["order"] = o;
  }
  return j;
}

}  // namespace rwb
