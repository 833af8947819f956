#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "freeprod/group.hpp"
#include "freeprod/word.hpp"

namespace freeprod {

struct EnumBounds {
  std::size_t max_len = 6;
  // Cap on |id| for letters of infinite cyclic factors.
  ElemId exp_bound = 3;
  // Extra conjugator length allowed when searching for S^c factors.
  std::size_t sc_slack = 0;

  // Longest S^c factor the oracle tries for a word of length n.
  std::size_t sc_ball_length(std::size_t n) const { return 3 * n + 2 + sc_slack; }
};

// Calls fn on every reduced word of length <= max_len in length-lex order
// (letters ordered by factor index, then element id).
void for_each_word(const GroupSpec& spec, std::size_t max_len, ElemId exp_bound,
                   const std::function<void(const Word&)>& fn);
std::vector<Word> enumerate_words(const GroupSpec& spec, const EnumBounds& bounds);

// All conjugates alpha x alpha^-1 of length <= max_length, plus e, in
// enumeration order of alpha and then x.
std::vector<Word> sc_ball(const GroupSpec& spec, std::size_t max_length, ElemId exp_bound = 3);

// Decides membership in S^c * S^c by definition: u is a member iff some s
// in the S^c ball makes s * u a letter conjugate. Builds the ball once for
// the largest word it will be asked about. Read-only after construction.
class ScSquaredOracle {
 public:
  ScSquaredOracle(const GroupSpec& spec, const EnumBounds& bounds);

  // Requires ||u|| <= bounds.max_len.
  bool contains(const Word& u) const;
  std::size_t ball_size() const noexcept { return ball_.size(); }

 private:
  const GroupSpec* spec_;
  EnumBounds bounds_;
  std::vector<Word> ball_;  // sorted by length
};

bool oracle_sc_squared(const GroupSpec& spec, const Word& u, const EnumBounds& bounds);

// True when a * b == c * d, without materializing either product.
bool products_equal(const GroupSpec& spec, const Word& a, const Word& b, const Word& c, const Word& d);

struct Counterexample {
  Word word;
  std::string detail;
};

struct LemmaReport {
  std::string id;
  std::string title;
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;
  std::chrono::duration<double> wall_time{};

  bool passed() const noexcept { return counterexamples.empty(); }
};

struct VerifyOptions {
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned jobs = 0;
  // Seeds the randomized long-word samples of the axioms suite.
  std::uint64_t seed = 20260101;
};

struct LemmaInfo {
  std::string_view id;
  std::string_view alias;
  std::string_view title;
};

const std::vector<LemmaInfo>& known_lemmas();

// Accepts the id, the alias, or "<alias>-<id>".
bool lemma_matches(const LemmaInfo& info, std::string_view id);

// Runs one exhaustive verification suite over the bounded ball. Throws
// std::invalid_argument for an unknown id or a group the suite does not
// apply to.
LemmaReport verify_lemma(const GroupSpec& spec, std::string_view id, const EnumBounds& bounds,
                         const VerifyOptions& options = {});

}  // namespace freeprod
