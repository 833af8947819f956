#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "freeprod/group.hpp"
#include "freeprod/word.hpp"

namespace freeprod {

// Membership of a word in the distinguished subsets of the free product.
//
//  - S^c: conjugates of single letters (and e); equivalently the words
//    whose cyclic core has length <= 1.
//  - torsion_order: finite exactly for conjugates of finite-order letters
//    and for e.
//  - F~: words whose powers never get shorter; the complement is the
//    non-trivial torsion.
struct Classification {
  bool in_s_complement = false;
  Order torsion_order;
  bool in_f_tilde = false;
};

Classification classify(const GroupSpec& spec, const Word& u);

// ||u^n|| < ||u||, for n >= 2. Throws std::invalid_argument otherwise.
bool power_reduces(const GroupSpec& spec, const Word& u, std::int64_t n);

enum class ScForm { trivial, simple, mixed, full };

std::string_view to_string(ScForm f);

// One of the four reduced shapes of a product of two letter conjugates:
//
//   trivial  eta z eta^-1
//   simple   eta mu z0 mu^-1 nu z1 nu^-1 eta^-1
//   mixed    eta d1 nu z nu^-1 d2 eta^-1            (d1 d2 != e)
//   full     eta d1 mu z0 mu^-1 d2 nu z1 nu^-1 d3 eta^-1   (d2 = d1^-1 d3^-1)
//
// Trivial and mixed forms keep their single conjugated letter in z0. The
// identity is represented as a trivial witness with z0 absent.
struct ScSquaredWitness {
  ScForm form = ScForm::trivial;
  Word eta, mu, nu;
  std::optional<Letter> z0, z1;
  std::optional<Letter> delta1, delta2, delta3;
};

// Searches forms in order trivial, simple, mixed, full; within a form the
// shortest eta wins, then the longest mu block.
std::optional<ScSquaredWitness> match_sc_squared(const GroupSpec& spec, const Word& u);

// The word a witness describes, as a reduced product. Throws
// IntegrityError if the displayed product is not reduced or a side
// condition fails.
Word assemble_witness(const GroupSpec& spec, const ScSquaredWitness& w);

// Splits u into s * t with s, t in S^c. Throws IntegrityError unless w
// is a valid witness for u.
std::pair<Word, Word> factorize_witness(const GroupSpec& spec, const Word& u, const ScSquaredWitness& w);

// Every letter of the designated factor has order > 2 and no two of them
// are equal or mutually inverse. Requires two factors and ||u|| >= 2.
bool is_unbalanced(const GroupSpec& spec, const Word& u, FactorIndex designated);

// Odd-length block of the form mu z mu^-1.
bool is_letter_conjugate(const GroupSpec& spec, std::span<const Letter> block);

}  // namespace freeprod
