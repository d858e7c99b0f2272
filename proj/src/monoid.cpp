#include "rwb/monoid.hpp"

#include <algorithm>
#include <unordered_set>

#include "rwb/error.hpp"

namespace rwb {

FiniteMonoid FiniteMonoid::validate(std::size_t size, const Table& table, std::size_t identity,
                                    std::optional<std::vector<std::size_t>> well_order,
                                    std::vector<std::string> labels) {
  if (size == 0) throw Error(Errc::invalid_argument, "monoid must have at least one element");
  if (table.size() != size)
    throw Error(Errc::invalid_argument, "monoid table has " + std::to_string(table.size()) +
                                            " rows, expected " + std::to_string(size));
  if (identity >= size) throw Error(Errc::invalid_argument, "monoid identity out of range");

  FiniteMonoid m;
  m.size_ = size;
  m.identity_ = identity;
  m.table_.resize(size * size);
  for (std::size_t i = 0; i < size; ++i) {
    if (table[i].size() != size)
      throw Error(Errc::invalid_argument, "monoid table row " + std::to_string(i) + " has wrong length", {i});
    for (std::size_t j = 0; j < size; ++j) {
      if (table[i][j] >= size)
        throw Error(Errc::invalid_argument, "monoid table entry out of range", {i, j});
      m.table_[i * size + j] = table[i][j];
    }
  }

  for (std::size_t i = 0; i < size; ++i) {
    if (m.multiply(identity, i) != i || m.multiply(i, identity) != i)
      throw Error(Errc::bad_identity, "identity law fails at element " + std::to_string(i), {i});
  }
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j)
      for (std::size_t k = 0; k < size; ++k) {
        if (m.multiply(m.multiply(i, j), k) != m.multiply(i, m.multiply(j, k)))
          throw Error(Errc::not_associative,
                      "(i*j)*k != i*(j*k) for (i,j,k) = (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + ")",
                      {i, j, k});
      }

  if (well_order) {
    std::vector<std::size_t> sorted = *well_order;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == size;
    for (std::size_t i = 0; permutation && i < size; ++i) permutation = sorted[i] == i;
    if (!permutation) throw Error(Errc::invalid_argument, "well_order is not a permutation of the monoid");
    if (well_order->front() != identity)
      throw Error(Errc::invalid_argument, "well_order must start with the identity");
    m.well_order_ = std::move(*well_order);
  } else {
    m.well_order_.push_back(identity);
    for (std::size_t i = 0; i < size; ++i)
      if (i != identity) m.well_order_.push_back(i);
  }
  m.rank_.resize(size);
  for (std::size_t r = 0; r < size; ++r) m.rank_[m.well_order_[r]] = r;

  if (labels.empty()) {
    for (std::size_t i = 0; i < size; ++i) labels.push_back(i == identity ? "1" : "m" + std::to_string(i));
  }
  if (labels.size() != size) throw Error(Errc::invalid_argument, "monoid labels have wrong length");
  std::unordered_set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != size) throw Error(Errc::invalid_argument, "monoid labels are not distinct");
  m.labels_ = std::move(labels);
  return m;
}

FiniteMonoid FiniteMonoid::trivial() { return validate(1, Table{{0}}, 0); }

FiniteMonoid FiniteMonoid::cyclic(std::size_t n) {
  if (n == 0) throw Error(Errc::invalid_argument, "cyclic group order must be positive");
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  std::vector<std::string> labels{"1"};
  if (n == 2) {
    labels.push_back("g");
  } else {
    for (std::size_t i = 1; i < n; ++i) labels.push_back("g" + std::to_string(i));
  }
  return validate(n, t, 0, std::nullopt, std::move(labels));
}

std::optional<std::size_t> FiniteMonoid::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

bool FiniteMonoid::is_commutative() const noexcept {
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = i + 1; j < size_; ++j)
      if (multiply(i, j) != multiply(j, i)) return false;
  return true;
}

bool FiniteMonoid::is_group() const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    bool has_inverse = false;
    for (std::size_t j = 0; j < size_ && !has_inverse; ++j)
      has_inverse = multiply(i, j) == identity_ && multiply(j, i) == identity_;
    if (!has_inverse) return false;
  }
  return true;
}

Table FiniteMonoid::table() const {
  Table t(size_, std::vector<std::size_t>(size_));
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) t[i][j] = multiply(i, j);
  return t;
}

WordTruncation::WordTruncation(std::vector<std::string> alphabet, std::size_t depth, std::size_t cap)
    : alphabet_(std::move(alphabet)), depth_(depth) {
  std::unordered_set<std::string> seen(alphabet_.begin(), alphabet_.end());
  if (seen.size() != alphabet_.size()) throw Error(Errc::invalid_argument, "alphabet has duplicate symbols");

  const std::size_t q = alphabet_.size();
  std::size_t total = 0;
  for (std::size_t len = 0; len <= depth; ++len) {
    std::size_t level = saturating_pow(q, len);
    total = (total > cap || level > cap) ? cap + 1 : total + level;
    if (total > cap) throw Error(Errc::size_overflow, "word truncation exceeds " + std::to_string(cap) + " words");
  }

  words_.push_back({});
  level_offset_.push_back(0);
  for (std::size_t len = 1; len <= depth && q > 0; ++len) {
    level_offset_.push_back(words_.size());
    Word w(len, 0);
    while (true) {
      words_.push_back(w);
      std::size_t pos = len;
      bool carry = true;
      while (carry && pos > 0) {
        --pos;
        if (++w[pos] < q)
          carry = false;
        else
          w[pos] = 0;
      }
      if (carry) break;
    }
  }
}

std::optional<std::size_t> WordTruncation::index_of(std::span<const std::size_t> word) const {
  const std::size_t q = alphabet_.size();
  if (word.size() > depth_ || word.size() >= level_offset_.size()) return std::nullopt;
  std::size_t offset = 0;
  for (std::size_t s : word) {
    if (s >= q) return std::nullopt;
    offset = offset * q + s;
  }
  return level_offset_[word.size()] + offset;
}

std::size_t WordTruncation::symbol(std::string_view name) const {
  auto it = std::find(alphabet_.begin(), alphabet_.end(), name);
  if (it == alphabet_.end()) throw Error(Errc::unknown_symbol, "unknown symbol '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - alphabet_.begin());
}

std::string WordTruncation::spell(std::size_t index) const {
  const Word& w = word(index);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t s : w) out += alphabet_[s];
  return out;
}

std::size_t WordTruncation::concat(std::size_t u, std::size_t v) const {
  const Word& a = word(u);
  const Word& b = word(v);
  if (a.size() + b.size() > depth_)
    throw Error(Errc::depth_overflow,
                "word of length " + std::to_string(a.size() + b.size()) + " exceeds truncation depth " +
                    std::to_string(depth_),
                {u, v});
  Word uv = a;
  uv.insert(uv.end(), b.begin(), b.end());
  return *index_of(uv);
}

std::size_t multiply_word(const FiniteMonoid& monoid, std::size_t u, std::size_t v) {
  if (u >= monoid.size() || v >= monoid.size())
    throw Error(Errc::invalid_argument, "monoid element out of range");
  return monoid.multiply(u, v);
}

std::size_t multiply_word(const WordTruncation& words, std::size_t u, std::size_t v) { return words.concat(u, v); }

}  // namespace rwb
