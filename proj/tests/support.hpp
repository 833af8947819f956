#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "freeprod/group.hpp"
#include "freeprod/text.hpp"
#include "freeprod/word.hpp"

namespace freeprod::testing {

// Free product of cyclic groups with generator names x, y, z, w bound to
// element 1 of factors 0, 1, 2, 3.
inline GroupSpec cyclic_product(const std::vector<std::uint64_t>& orders) {
  static const char* names[] = {"x", "y", "z", "w"};
  RawGroupSpec raw;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    raw.factors.push_back(FactorSpec::cyclic(orders[i]));
    if (i < 4) raw.generators.push_back({names[i], {static_cast<std::int64_t>(i), 1}});
  }
  return validate_spec(raw);
}

inline GroupSpec z3z2() { return cyclic_product({3, 2}); }
inline GroupSpec z2z2() { return cyclic_product({2, 2}); }
inline GroupSpec z2z2z2() { return cyclic_product({2, 2, 2}); }
inline GroupSpec z7z2() { return cyclic_product({7, 2}); }
inline GroupSpec zz3() { return cyclic_product({0, 3}); }

inline Word W(const GroupSpec& spec, const std::string& text) { return parse_word(spec, text); }

// Reference reduction for products of cyclic groups: plain stack with
// modular (or integer) exponent addition. Shares no code with WordBuilder.
inline std::vector<std::pair<std::uint32_t, std::int64_t>> naive_reduce(
    const std::vector<std::uint64_t>& orders, const std::vector<std::pair<std::uint32_t, std::int64_t>>& raw) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> st;
  for (auto [f, e] : raw) {
    const std::int64_t n = static_cast<std::int64_t>(orders[f]);
    if (n != 0) e = ((e % n) + n) % n;
    if (e == 0) continue;
    if (!st.empty() && st.back().first == f) {
      std::int64_t s = st.back().second + e;
      if (n != 0) s %= n;
      if (s == 0) {
        st.pop_back();
      } else {
        st.back().second = s;
      }
    } else {
      st.push_back({f, e});
    }
  }
  return st;
}

inline std::vector<std::pair<std::uint32_t, std::int64_t>> raw_of(const Word& w) {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (const auto& a : w.letters()) out.push_back({a.factor, a.elem});
  return out;
}

// u^n as n-fold concatenation.
inline Word fold_power(const GroupSpec& spec, const Word& u, std::int64_t n) {
  const Word base = n < 0 ? inverse(spec, u) : u;
  Word acc;
  for (std::int64_t i = 0; i < (n < 0 ? -n : n); ++i) acc = concat(spec, acc, base);
  return acc;
}

}  // namespace freeprod::testing
