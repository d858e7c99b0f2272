#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rwb/error.hpp"
#include "rwb/monoid.hpp"
#include "rwb/mset.hpp"

namespace rwb {

// Both built-in functors store an element of E(A) as a vector: a table
// indexed by monoid elements (E(A) = A^M), or a nonempty sequence of
// pairwise distinct elements (E(A) = A-dagger). In both cases E(f) acts
// entrywise.
using EValue = std::vector<std::size_t>;
using EEValue = std::vector<EValue>;
using EEEValue = std::vector<EEValue>;

enum class FunctorKind { monoid_action, duplicate_free_list };

inline constexpr std::size_t kDefaultECap = 1'000'000;

class Functor {
 public:
  static Functor monoid_action(FiniteMonoid monoid);
  static Functor duplicate_free_list();

  FunctorKind kind() const noexcept { return kind_; }
  /// Throws Errc::invalid_argument for the list functor.
  const FiniteMonoid& monoid() const;
  std::string name() const;

  /// |E(A)| for |A| = n, saturating.
  std::size_t object_count(std::size_t n) const noexcept;
  /// Every element of E(A), A = {0..n-1}, in canonical order: lex order on
  /// A^M along the monoid well-order, or prefix-first lex order on sequences.
  /// Throws Errc::size_overflow when |E(A)| exceeds `cap`.
  std::vector<EValue> objects(std::size_t n, std::size_t cap = kDefaultECap) const;
  bool is_value(std::span<const std::size_t> x, std::size_t n) const;

  /// E(f), entrywise.
  template <class T, class F>
  auto fmap(F&& f, const std::vector<T>& x) const {
    std::vector<std::decay_t<decltype(f(x.front()))>> out;
    out.reserve(x.size());
    for (const auto& v : x) out.push_back(f(v));
    return out;
  }

  /// Comultiplication. Monoid action: delta(h)(m1)(m2) = h(m1*m2).
  /// List: the list of suffixes.
  template <class T>
  std::vector<std::vector<T>> delta(const std::vector<T>& x) const {
    std::vector<std::vector<T>> out;
    if (kind_ == FunctorKind::monoid_action) {
      const std::size_t n = monoid_.size();
      if (x.size() != n) throw Error(Errc::invalid_argument, "E(A) value is not total on the monoid");
      out.assign(n, std::vector<T>(n));
      for (std::size_t m1 = 0; m1 < n; ++m1)
        for (std::size_t m2 = 0; m2 < n; ++m2) out[m1][m2] = x[monoid_.multiply(m1, m2)];
    } else {
      if (x.empty()) throw Error(Errc::empty_sequence, "delta of an empty sequence");
      for (std::size_t i = 0; i < x.size(); ++i) out.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(i), x.end());
    }
    return out;
  }

  /// Counit. Monoid action: h(1). List: the head.
  template <class T>
  T epsilon(const std::vector<T>& x) const {
    if (kind_ == FunctorKind::monoid_action) {
      if (x.size() != monoid_.size()) throw Error(Errc::invalid_argument, "E(A) value is not total on the monoid");
      return x[monoid_.identity()];
    }
    if (x.empty()) throw Error(Errc::empty_sequence, "epsilon of an empty sequence");
    return x.front();
  }

 private:
  FunctorKind kind_ = FunctorKind::monoid_action;
  FiniteMonoid monoid_;
};

/// delta_A(h)(m1)(m2) = h(m1 * m2) for h : M -> A.
template <class T>
std::vector<std::vector<T>> delta_action(const FiniteMonoid& monoid, const std::vector<T>& h) {
  return Functor::monoid_action(monoid).delta(h);
}

template <class T>
T epsilon_action(const FiniteMonoid& monoid, const std::vector<T>& h) {
  return Functor::monoid_action(monoid).epsilon(h);
}

/// (a1..an) -> ((a1..an), (a2..an), ..., (an)). Throws Errc::empty_sequence.
template <class T>
std::vector<std::vector<T>> delta_list(const std::vector<T>& seq) {
  return Functor::duplicate_free_list().delta(seq);
}

template <class T>
T epsilon_list(const std::vector<T>& seq) {
  return Functor::duplicate_free_list().epsilon(seq);
}

/// Components of a (possibly corrupted) comultiplication and counit at a
/// fixed carrier A and at E(A). Law checks run against these, so mutation
/// tests can swap in broken versions.
struct ComonadOps {
  std::function<EEValue(const EValue&)> delta;
  std::function<EEEValue(const EEValue&)> delta_e;
  std::function<std::size_t(const EValue&)> epsilon;
  std::function<EValue(const EEValue&)> epsilon_e;
};

ComonadOps standard_ops(const Functor& functor);

struct LawResult {
  std::string law;
  bool passed = true;
  std::size_t checked = 0;
  /// First counterexample in canonical order, empty when passed.
  std::string counterexample;
};

struct LawReport {
  std::string functor;
  std::size_t carrier_size = 0;
  std::vector<LawResult> laws;

  bool all_passed() const noexcept;
  const LawResult& at(std::string_view law) const;
};

/// Functor laws, naturality of delta and epsilon, coassociativity and both
/// counit laws, checked exhaustively on A = {0..n-1}. The list functor is
/// only functorial along injections, so its functor/naturality sweeps use
/// permutations of A.
LawReport check_comonad_laws(const Functor& functor, std::size_t carrier_size, std::size_t cap = kDefaultECap);
LawReport check_comonad_laws(const Functor& functor, std::size_t carrier_size, const ComonadOps& ops,
                             std::size_t cap = kDefaultECap);

/// E-coalgebra (A, alpha) with alpha : A -> E(A).
struct Coalgebra {
  Functor functor;
  std::vector<std::string> labels;
  std::vector<EValue> structure;

  std::size_t size() const noexcept { return labels.size(); }
};

/// Checks that every structure value lies in E(A).
Coalgebra make_coalgebra(Functor functor, std::vector<std::string> labels, std::vector<EValue> structure);

enum class CoalgebraClass { em, weak_em_only, plain };

std::string_view class_name(CoalgebraClass c) noexcept;

struct Classification {
  CoalgebraClass kind = CoalgebraClass::plain;
  /// First element where delta . alpha != E(alpha) . alpha.
  std::optional<std::size_t> square_witness;
  /// First element where epsilon . alpha != id.
  std::optional<std::size_t> counit_witness;
};

Classification classify_coalgebra(const Coalgebra& c);

/// beta . f == E(f) . alpha.
bool is_coalgebra_hom(const Coalgebra& source, const Coalgebra& target, std::span<const std::size_t> f);

/// (E(X), delta_X) with carrier listed as Functor::objects(x_size).
Coalgebra cofree_coalgebra(const Functor& functor, std::size_t x_size, std::size_t cap = kDefaultECap);

struct CoalgebraHom {
  Map map;                    // into the carrier of the cofree coalgebra
  std::vector<EValue> values; // f#(a) as elements of E(X)
};

/// f# = E(f) . alpha for an EM coalgebra. Asserts epsilon_X . f# == f and
/// the homomorphism square. Throws Errc::not_em_coalgebra.
CoalgebraHom sharp_lift(const Coalgebra& c, std::size_t x_size, std::span<const std::size_t> f,
                        std::size_t cap = kDefaultECap);

/// The structure map alpha(a)(m) = alpha'(m, a) of an M-set.
Coalgebra coalgebra_of(const MSet& a);
/// Inverse translation; throws if the coalgebra is not an M-set.
MSet mset_of(const Coalgebra& c);

}  // namespace rwb
