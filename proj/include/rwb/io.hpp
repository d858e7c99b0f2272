#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rwb/chains.hpp"
#include "rwb/comonad.hpp"
#include "rwb/forests.hpp"
#include "rwb/monoid.hpp"
#include "rwb/mset.hpp"

namespace rwb {

using Json = nlohmann::ordered_json;

enum class ObjectKind { chain, monoid, mset, ordered_mset, unary, coalgebra, forest };

std::string_view kind_name(ObjectKind k) noexcept;

/// A parsed input file. Exactly the member matching `kind` is set
/// (`mset` is also set for ordered M-sets).
struct Object {
  ObjectKind kind = ObjectKind::chain;
  std::optional<Chain> chain;
  std::optional<FiniteMonoid> monoid;
  std::optional<MSet> mset;
  std::optional<OrderedMSet> ordered;
  std::optional<UnaryAlgebra> unary;
  std::optional<Coalgebra> coalgebra;
  std::optional<RootedForest> forest;

  /// The object as seen by the hom enumerator. Throws for monoids and
  /// coalgebras.
  ActionView view() const;
  std::size_t size() const;
};

/// Monoid: "trivial", "Z<n>", or
///   { "elements": [...], "identity": e, "table": [[...]], "well_order": [...] }
/// with entries given by label or index. "size": n may replace "elements"
/// (labels "0".."n-1").
FiniteMonoid parse_monoid(const Json& j);

/// Kind is inferred from the keys: "parent" (forest), "functor" (coalgebra),
/// "alphabet" (unary algebra), "action" (M-set, ordered with "order"),
/// "chain" (chain), "table" (monoid). Carriers are label lists or a size;
/// an action is keyed by monoid element or given as one row per element. Throws Errc::parse_error naming the
/// offending field, or the validation error of the object itself.
Object parse_object(const Json& j);
Object parse_object_text(std::string_view text);

Json monoid_to_json(const FiniteMonoid& m);
Json mset_to_json(const MSet& a, const std::vector<std::size_t>* order = nullptr);
Json coalgebra_to_json(const Coalgebra& c);
Json forest_to_json(const RootedForest& f);

}  // namespace rwb
