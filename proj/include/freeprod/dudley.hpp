#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freeprod/group.hpp"
#include "freeprod/word.hpp"

namespace freeprod {

enum class ScheduleKind { dudley, dyadic, prime_power, linear };

std::string_view to_string(ScheduleKind k);
// Accepts "dudley", "dyadic", "prime_power" (or "prime-power"), "linear".
ScheduleKind parse_schedule_kind(std::string_view name);

// Exponent sequence r_m for the nested powers:
//
//   dudley       r_m = m + sum_{l <= m} ||g_l||
//   dyadic       r_m = 2^m
//   prime_power  r_m = p^(m + m ||g||)      (all g_m equal)
//   linear       r_m = m + m ||g||          (all g_m equal)
//
// The formulas are also evaluated at m = 0. Throws ResourceError when r_m
// does not fit in 63 bits.
class Schedule {
 public:
  // gamma_lengths[m - 1] = ||g_m||. prime is used only by prime_power.
  Schedule(ScheduleKind kind, std::vector<std::uint64_t> gamma_lengths, std::uint64_t prime = 2);

  ScheduleKind kind() const noexcept { return kind_; }
  std::uint64_t prime() const noexcept { return prime_; }
  std::int64_t r(std::size_t m) const;
  // sum_{l <= m} ||g_l||
  std::uint64_t prefix_length(std::size_t m) const;

 private:
  ScheduleKind kind_;
  std::vector<std::uint64_t> lengths_;
  std::uint64_t prime_;
};

inline constexpr std::uint64_t kDefaultLetterBudget = 10'000'000;

// H_{n,n} = g_n and H_{n,m} = g_m H_{n,m+1}^{r_m} for m = n-1 .. 1.
// Returns the levels indexed by m - 1. Throws ResourceError once the total
// number of letters across levels would exceed budget.
std::vector<Word> build_truncation(const GroupSpec& spec, std::span<const Word> gammas, const Schedule& schedule,
                                   std::size_t depth, std::uint64_t budget = kDefaultLetterBudget);

struct LevelRecord {
  std::size_t m = 0;
  std::uint64_t length = 0;
  bool in_s_complement = false;
  bool torsion = false;
  // g_m is outside S^c*S^c according to the matcher (m < n only).
  std::optional<bool> gamma_outside_sc2;
  // Not both H_{n,m} and H_{n,m+1} in S^c; checked when gamma_outside_sc2.
  std::optional<bool> pair_check;
  // m >= 2: r_{m-1} and ||H_{n,m}^{r_{m-1}}||.
  std::optional<std::int64_t> r_prev;
  std::optional<std::uint64_t> power_length;
  std::optional<bool> power_bound;     // ||H^{r_{m-1}}|| >= r_{m-1}
  std::optional<bool> monotone;        // ||H^{r_{m-1}}|| >= ||H||
  bool recursion_identity = true;
};

enum class BoundStatus { holds, fails, withheld };

std::string_view to_string(BoundStatus s);

struct SimReport {
  ScheduleKind schedule = ScheduleKind::dudley;
  std::size_t depth = 0;
  std::vector<LevelRecord> levels;  // m = 1..n
  std::uint64_t final_length = 0;   // ||H_{n,1}||
  std::int64_t target = 0;          // r_{n-1} - sum_{l < n} ||g_l||
  BoundStatus bound = BoundStatus::withheld;
  std::vector<std::string> notes;

  // Recursion identity at every level, pair checks and power bounds all
  // pass, and the final bound is not violated.
  bool all_checks_pass() const;
};

// Builds the truncation and audits every inequality of the length chain.
SimReport verify_chain(const GroupSpec& spec, std::span<const Word> gammas, const Schedule& schedule,
                       std::size_t depth, std::uint64_t budget = kDefaultLetterBudget);

// True when some letter of the alphabet has order p.
bool has_element_of_order(const GroupSpec& spec, std::uint64_t p);

}  // namespace freeprod
