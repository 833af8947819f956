#include "freeprod/dudley.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "freeprod/classify.hpp"
#include "freeprod/errors.hpp"

namespace freeprod {

namespace {

constexpr std::int64_t kMaxExponent = std::numeric_limits<std::int64_t>::max();

std::int64_t checked(unsigned __int128 v, std::size_t m) {
  if (v > static_cast<unsigned __int128>(kMaxExponent)) {
    throw ResourceError("exponent r_" + std::to_string(m) + " does not fit in 63 bits");
  }
  return static_cast<std::int64_t>(v);
}

// u^n by square-and-multiply over concat. Deliberately avoids power() so it
// can audit the closed-form path.
Word power_by_squaring(const GroupSpec& spec, const Word& u, std::uint64_t n) {
  Word result;
  Word base = u;
  while (n > 0) {
    if (n & 1U) result = concat(spec, result, base);
    n >>= 1U;
    if (n > 0) base = concat(spec, base, base);
  }
  return result;
}

}  // namespace

std::string_view to_string(ScheduleKind k) {
  switch (k) {
    case ScheduleKind::dudley:
      return "dudley";
    case ScheduleKind::dyadic:
      return "dyadic";
    case ScheduleKind::prime_power:
      return "prime_power";
    case ScheduleKind::linear:
      return "linear";
  }
  return "unknown";
}

ScheduleKind parse_schedule_kind(std::string_view name) {
  if (name == "dudley") return ScheduleKind::dudley;
  if (name == "dyadic") return ScheduleKind::dyadic;
  if (name == "prime_power" || name == "prime-power") return ScheduleKind::prime_power;
  if (name == "linear") return ScheduleKind::linear;
  throw std::invalid_argument("unknown schedule '" + std::string(name) + "'");
}

std::string_view to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::holds:
      return "holds";
    case BoundStatus::fails:
      return "fails";
    case BoundStatus::withheld:
      return "withheld";
  }
  return "unknown";
}

Schedule::Schedule(ScheduleKind kind, std::vector<std::uint64_t> gamma_lengths, std::uint64_t prime)
    : kind_(kind), lengths_(std::move(gamma_lengths)), prime_(prime) {
  if (lengths_.empty()) throw std::invalid_argument("schedule needs at least one gamma");
  if (kind_ == ScheduleKind::prime_power && prime_ < 2) throw std::invalid_argument("prime must be >= 2");
  if (kind_ == ScheduleKind::prime_power || kind_ == ScheduleKind::linear) {
    if (std::adjacent_find(lengths_.begin(), lengths_.end(), std::not_equal_to<>()) != lengths_.end()) {
      throw std::invalid_argument(std::string(to_string(kind_)) + " schedule needs all gammas equal");
    }
  }
}

std::uint64_t Schedule::prefix_length(std::size_t m) const {
  if (m > lengths_.size()) throw std::out_of_range("schedule has no gamma " + std::to_string(m));
  return std::accumulate(lengths_.begin(), lengths_.begin() + static_cast<std::ptrdiff_t>(m), std::uint64_t{0});
}

std::int64_t Schedule::r(std::size_t m) const {
  using U = unsigned __int128;
  switch (kind_) {
    case ScheduleKind::dudley:
      return checked(U{m} + prefix_length(m), m);
    case ScheduleKind::dyadic:
      if (m >= 63) throw ResourceError("exponent r_" + std::to_string(m) + " does not fit in 63 bits");
      return std::int64_t{1} << m;
    case ScheduleKind::prime_power: {
      const U exponent = U{m} + U{m} * lengths_.front();
      U value = 1;
      for (U i = 0; i < exponent; ++i) {
        value *= prime_;
        checked(value, m);
      }
      return checked(value, m);
    }
    case ScheduleKind::linear:
      return checked(U{m} + U{m} * lengths_.front(), m);
  }
  throw std::logic_error("unknown schedule kind");
}

std::vector<Word> build_truncation(const GroupSpec& spec, std::span<const Word> gammas, const Schedule& schedule,
                                   std::size_t depth, std::uint64_t budget) {
  if (depth == 0) throw std::invalid_argument("depth must be >= 1");
  if (depth > gammas.size()) throw std::invalid_argument("depth exceeds the number of gammas");
  std::vector<Word> levels(depth);
  levels[depth - 1] = gammas[depth - 1];
  std::uint64_t total = levels[depth - 1].size();
  if (total > budget) throw ResourceError("letter budget exceeded at level " + std::to_string(depth));
  for (std::size_t m = depth - 1; m >= 1; --m) {
    const auto r = schedule.r(m);
    const Word& below = levels[m];
    const std::uint64_t predicted = power_length(spec, below, static_cast<std::uint64_t>(r));
    if (predicted > budget || gammas[m - 1].size() + predicted > budget - total) {
      throw ResourceError("letter budget of " + std::to_string(budget) + " exceeded at level " + std::to_string(m) +
                          " (levels " + std::to_string(m + 1) + ".." + std::to_string(depth) + " built)");
    }
    levels[m - 1] = concat(spec, gammas[m - 1], power(spec, below, r));
    total += levels[m - 1].size();
  }
  return levels;
}

bool has_element_of_order(const GroupSpec& spec, std::uint64_t p) {
  for (const auto& f : spec.factors()) {
    if (const auto* c = f.as_cyclic()) {
      if (c->order != 0 && p > 1 && c->order % p == 0) return true;
      continue;
    }
    for (ElemId e : f.letters(0)) {
      if (f.element_order(e) == Order{p}) return true;
    }
  }
  return false;
}

bool SimReport::all_checks_pass() const {
  for (const auto& l : levels) {
    if (!l.recursion_identity) return false;
    if (l.pair_check == false || l.power_bound == false || l.monotone == false) return false;
  }
  return bound != BoundStatus::fails;
}

SimReport verify_chain(const GroupSpec& spec, std::span<const Word> gammas, const Schedule& schedule,
                       std::size_t depth, std::uint64_t budget) {
  const auto levels = build_truncation(spec, gammas, schedule, depth, budget);
  SimReport rep;
  rep.schedule = schedule.kind();
  rep.depth = depth;
  if (schedule.kind() == ScheduleKind::prime_power && has_element_of_order(spec, schedule.prime())) {
    rep.notes.push_back("group has elements of order " + std::to_string(schedule.prime()) +
                        "; powers of torsion levels may shrink");
  }

  std::vector<Classification> cls;
  cls.reserve(depth);
  for (const auto& h : levels) cls.push_back(classify(spec, h));

  bool hypotheses = true;
  for (std::size_t m = 1; m <= depth; ++m) {
    const Word& h = levels[m - 1];
    LevelRecord rec;
    rec.m = m;
    rec.length = h.size();
    rec.in_s_complement = cls[m - 1].in_s_complement;
    rec.torsion = cls[m - 1].torsion_order.has_value();
    if (m == depth) {
      rec.recursion_identity = h == gammas[m - 1];
    } else {
      const auto r = static_cast<std::uint64_t>(schedule.r(m));
      rec.recursion_identity = concat(spec, gammas[m - 1], power_by_squaring(spec, levels[m], r)) == h;
      rec.gamma_outside_sc2 = !match_sc_squared(spec, gammas[m - 1]).has_value();
      if (*rec.gamma_outside_sc2) rec.pair_check = !(cls[m - 1].in_s_complement && cls[m].in_s_complement);
    }
    if (m >= 2) {
      const auto r_prev = schedule.r(m - 1);
      rec.r_prev = r_prev;
      rec.power_length = power_length(spec, h, static_cast<std::uint64_t>(r_prev));
      rec.power_bound = *rec.power_length >= static_cast<std::uint64_t>(r_prev);
      rec.monotone = *rec.power_length >= h.size();
      hypotheses = hypotheses && *rec.power_bound && *rec.monotone;
    }
    hypotheses = hypotheses && !rec.torsion && rec.pair_check != false;
    rep.levels.push_back(rec);
  }

  rep.final_length = levels.front().size();
  rep.target = schedule.r(depth - 1) - static_cast<std::int64_t>(schedule.prefix_length(depth - 1));
  if (!hypotheses) {
    rep.bound = BoundStatus::withheld;
    rep.notes.push_back("final bound withheld: a level is torsion or a per-level check failed");
  } else {
    rep.bound = static_cast<std::int64_t>(rep.final_length) >= rep.target ? BoundStatus::holds : BoundStatus::fails;
  }
  return rep;
}

}  // namespace freeprod
