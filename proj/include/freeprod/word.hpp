#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "freeprod/group.hpp"

namespace freeprod {

// A reduced word: no two adjacent letters lie in the same factor. The empty
// word is the identity. Values are immutable; every operation returns a
// fresh Word.
class Word {
 public:
  Word() = default;

  // Wraps letters that are already known to be reduced. Use reduce() for
  // arbitrary input.
  static Word unchecked(std::vector<Letter> letters) { return Word(std::move(letters)); }

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  const Letter& front() const { return letters_.front(); }
  const Letter& back() const { return letters_.back(); }

  // Contiguous sub-word [pos, pos + count). Sub-words of reduced words are
  // reduced.
  Word slice(std::size_t pos, std::size_t count) const;

  friend bool operator==(const Word&, const Word&) = default;
  // Length first, then lexicographic on letters.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  friend class WordBuilder;
  std::vector<Letter> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept;
};

// Incremental reduction: letters and words are appended on the right and
// cancellations cascade into what was already accumulated.
class WordBuilder {
 public:
  explicit WordBuilder(const GroupSpec& spec) : spec_(&spec) {}

  void reserve(std::size_t n) { letters_.reserve(n); }
  void append(const Letter& a);
  void append(const Word& w);
  std::size_t size() const noexcept { return letters_.size(); }

  Word build() && { return Word(std::move(letters_)); }

 private:
  const GroupSpec* spec_;
  std::vector<Letter> letters_;
};

struct TypeTag {
  FactorIndex first = 0;
  FactorIndex last = 0;

  bool symmetric() const noexcept { return first == last; }
  friend bool operator==(const TypeTag&, const TypeTag&) = default;
};

// u = conjugator * core * conjugator^-1 as a reduced product, core
// cyclically reduced.
struct CyclicDecomposition {
  Word conjugator;
  Word core;
};

// Reduced form of an arbitrary letter sequence. Throws DomainError on an
// invalid letter.
Word reduce(const GroupSpec& spec, std::span<const Letter> raw);

Word concat(const GroupSpec& spec, const Word& u, const Word& v);
Word inverse(const GroupSpec& spec, const Word& u);

CyclicDecomposition cyclic_decompose(const GroupSpec& spec, const Word& u);
// Length of the conjugator in cyclic_decompose(u), without building it.
std::size_t conjugator_length(const GroupSpec& spec, const Word& u);

// u^n for any integer n, computed from the cyclic decomposition.
Word power(const GroupSpec& spec, const Word& u, std::int64_t n);
// ||u^n|| computed arithmetically; saturates at UINT64_MAX.
std::uint64_t power_length(const GroupSpec& spec, const Word& u, std::uint64_t n);

std::optional<TypeTag> word_type(const Word& u);
bool is_cyclically_reduced(const GroupSpec& spec, const Word& u);

// True when w[i] == w[n-1-i]^-1 for i < k (the outer k letters pair up as
// a conjugator and its inverse).
bool has_inverse_border(const GroupSpec& spec, std::span<const Letter> w, std::size_t k);

}  // namespace freeprod
