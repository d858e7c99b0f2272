#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rwb {

/// Failure categories raised by the workbench. Every error carries the
/// offending witness (element indices) where one exists.
enum class Errc {
  invalid_argument,
  parse_error,
  not_associative,
  bad_identity,
  depth_overflow,
  identity_axiom_fails,
  composition_fails,
  monoid_mismatch,
  unknown_symbol,
  empty_sequence,
  size_overflow,
  not_em_coalgebra,
  not_a_forest,
  not_path_shaped,
  no_chain_witness_in_budget,
  truncation_too_small,
  not_an_embedding,
  incomplete_fiber,
  missing_ordering,
  internal,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(message), code_(code), witness_(std::move(witness)) {}

  Errc code() const noexcept { return code_; }
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

  /// Cap overflows are reported separately from malformed input.
  bool is_overflow() const noexcept { return code_ == Errc::size_overflow; }

 private:
  Errc code_;
  std::vector<std::size_t> witness_;
};

/// Saturating product used by every size-cap check.
inline std::size_t saturating_mul(std::size_t a, std::size_t b) noexcept {
  if (a != 0 && b > static_cast<std::size_t>(-1) / a) return static_cast<std::size_t>(-1);
  return a * b;
}

inline std::size_t saturating_pow(std::size_t base, std::size_t exp) noexcept {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r = saturating_mul(r, base);
  return r;
}

}  // namespace rwb
