#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace freeprod {

using ElemId = std::int64_t;
using FactorIndex = std::uint32_t;

// Order of a group element; nullopt means infinite.
using Order = std::optional<std::uint64_t>;

// One non-identity element of one factor. The identity of the free product
// is the empty Word, never a Letter.
struct Letter {
  FactorIndex factor = 0;
  ElemId elem = 0;

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// Z_n (order > 0) or Z (order == 0). Identity is id 0; the non-identity
// elements are 1..n-1, or the nonzero integers in the infinite case.
struct CyclicFactor {
  std::uint64_t order = 0;
};

// A finite group given by its Cayley table on ids 0..size-1.
struct TableFactor {
  std::size_t size = 0;
  std::vector<ElemId> mul;  // row-major, mul[a * size + b] = a * b
  ElemId identity = 0;
  // Filled in by validation.
  std::vector<ElemId> inverse;
  std::vector<std::uint64_t> orders;
};

class GroupSpec;
struct RawGroupSpec;

class FactorSpec {
 public:
  static FactorSpec cyclic(std::uint64_t order);
  static FactorSpec table(std::size_t size, std::vector<ElemId> mul, ElemId identity);

  bool is_cyclic() const noexcept { return std::holds_alternative<CyclicFactor>(rep_); }
  bool is_infinite() const noexcept;
  // Number of elements, 0 when infinite.
  std::uint64_t group_order() const noexcept;
  ElemId identity() const noexcept;

  // True for a valid non-identity element id.
  bool is_letter(ElemId e) const noexcept;
  // Product of two elements; nullopt when the product is the identity.
  std::optional<ElemId> multiply(ElemId a, ElemId b) const;
  ElemId invert(ElemId e) const;
  Order element_order(ElemId e) const;
  // e^n, nullopt for the identity. Throws ResourceError on 64-bit overflow.
  std::optional<ElemId> power(ElemId e, std::int64_t n) const;

  // Non-identity elements in ascending id order. For Z the ids are
  // restricted to 1 <= |id| <= exp_bound.
  std::vector<ElemId> letters(ElemId exp_bound) const;

  const CyclicFactor* as_cyclic() const noexcept { return std::get_if<CyclicFactor>(&rep_); }
  const TableFactor* as_table() const noexcept { return std::get_if<TableFactor>(&rep_); }

 private:
  friend GroupSpec validate_spec(const RawGroupSpec& raw);
  // Checks the group axioms and fills derived tables. Returns violations.
  std::vector<std::string> complete(std::size_t index);

  std::variant<CyclicFactor, TableFactor> rep_;
};

// Unvalidated input to validate_spec.
struct RawGroupSpec {
  std::vector<FactorSpec> factors;
  std::vector<std::pair<std::string, std::pair<std::int64_t, std::int64_t>>> generators;
};

// A validated free product presentation. Immutable once built.
class GroupSpec {
 public:
  std::size_t num_factors() const noexcept { return factors_.size(); }
  const FactorSpec& factor(FactorIndex i) const { return factors_.at(i); }
  const std::vector<FactorSpec>& factors() const noexcept { return factors_; }
  const std::map<std::string, Letter>& generators() const noexcept { return generators_; }

  std::optional<Letter> generator(const std::string& name) const;

 private:
  friend GroupSpec validate_spec(const RawGroupSpec& raw);
  std::vector<FactorSpec> factors_;
  std::map<std::string, Letter> generators_;
};

// Checks the factor tables and generator map, throwing SpecError with the
// full list of violations.
GroupSpec validate_spec(const RawGroupSpec& raw);

// Throws DomainError unless a is a valid non-identity letter of spec.
void check_letter(const GroupSpec& spec, const Letter& a);

inline bool multipliable(const Letter& a, const Letter& b) noexcept { return a.factor == b.factor; }

// Product of two letters from the same factor; nullopt when it is the
// identity. Throws DomainError("not multipliable") for distinct factors.
std::optional<Letter> mul_letters(const GroupSpec& spec, const Letter& a, const Letter& b);
Letter inv_letter(const GroupSpec& spec, const Letter& a);
Order letter_order(const GroupSpec& spec, const Letter& a);
std::optional<Letter> letter_power(const GroupSpec& spec, const Letter& a, std::int64_t n);

// All letters of the alphabet in (factor, id) order, with infinite cyclic
// ids capped at exp_bound.
std::vector<Letter> alphabet(const GroupSpec& spec, ElemId exp_bound);

}  // namespace freeprod
