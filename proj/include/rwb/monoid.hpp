#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rwb {

using Table = std::vector<std::vector<std::size_t>>;

/// Finite monoid given by its multiplication table, together with a fixed
/// well-order of its elements whose least element is the identity.
class FiniteMonoid {
 public:
  /// Checks every associativity triple and the identity law. Throws
  /// Errc::not_associative (witness i,j,k) or Errc::bad_identity (witness i).
  /// Without `well_order` the identity comes first, then index order.
  static FiniteMonoid validate(std::size_t size, const Table& table, std::size_t identity,
                               std::optional<std::vector<std::size_t>> well_order = std::nullopt,
                               std::vector<std::string> labels = {});

  static FiniteMonoid trivial();
  /// Cyclic group Z_n with identity 0 and i*j = (i+j) mod n.
  static FiniteMonoid cyclic(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  std::size_t identity() const noexcept { return identity_; }
  std::size_t multiply(std::size_t i, std::size_t j) const { return table_[i * size_ + j]; }

  /// Elements listed in increasing well-order; front() is the identity.
  std::span<const std::size_t> well_order() const noexcept { return well_order_; }
  /// Position of an element in the well-order.
  std::size_t rank(std::size_t element) const { return rank_.at(element); }

  const std::string& label(std::size_t element) const { return labels_.at(element); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  bool is_commutative() const noexcept;
  bool is_group() const noexcept;

  Table table() const;

  /// Same multiplication and identity (labels and well-order ignored).
  bool same_monoid(const FiniteMonoid& other) const noexcept {
    return size_ == other.size_ && identity_ == other.identity_ && table_ == other.table_;
  }
  friend bool operator==(const FiniteMonoid&, const FiniteMonoid&) = default;

 private:
  std::size_t size_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> well_order_;
  std::vector<std::size_t> rank_;
  std::vector<std::string> labels_;
};

/// A word over a unary alphabet, as symbol indices.
using Word = std::vector<std::size_t>;

/// All words of length <= depth over a finite alphabet, in length-lex order
/// (empty word first). A finite index set standing in for the free monoid.
class WordTruncation {
 public:
  /// Throws Errc::invalid_argument on duplicate symbols and
  /// Errc::size_overflow when the word count exceeds `cap`.
  WordTruncation(std::vector<std::string> alphabet, std::size_t depth, std::size_t cap = 1'000'000);

  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  std::size_t depth() const noexcept { return depth_; }
  std::size_t size() const noexcept { return words_.size(); }
  const Word& word(std::size_t index) const { return words_.at(index); }
  const std::vector<Word>& words() const noexcept { return words_; }

  std::optional<std::size_t> index_of(std::span<const std::size_t> word) const;
  /// Index of the symbol, or Errc::unknown_symbol.
  std::size_t symbol(std::string_view name) const;
  /// Words spelled as symbol names joined together; "1" for the empty word.
  std::string spell(std::size_t index) const;

  /// Index of the concatenation uv; Errc::depth_overflow when |uv| > depth.
  std::size_t concat(std::size_t u, std::size_t v) const;

 private:
  std::vector<std::string> alphabet_;
  std::size_t depth_;
  std::vector<Word> words_;
  std::vector<std::size_t> level_offset_;
};

std::size_t multiply_word(const FiniteMonoid& monoid, std::size_t u, std::size_t v);
std::size_t multiply_word(const WordTruncation& words, std::size_t u, std::size_t v);

}  // namespace rwb
