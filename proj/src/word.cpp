#include "freeprod/word.hpp"

#include <algorithm>
#include <limits>

#include "freeprod/errors.hpp"

namespace freeprod {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

}  // namespace

Word Word::slice(std::size_t pos, std::size_t count) const {
  const auto first = letters_.begin() + static_cast<std::ptrdiff_t>(pos);
  return Word(std::vector<Letter>(first, first + static_cast<std::ptrdiff_t>(count)));
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                b.letters_.end());
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ w.size();
  for (const auto& l : w.letters()) {
    h ^= std::hash<std::uint64_t>{}((static_cast<std::uint64_t>(l.factor) << 48) ^
                                    static_cast<std::uint64_t>(l.elem)) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

void WordBuilder::append(const Letter& a) {
  if (!letters_.empty() && multipliable(letters_.back(), a)) {
    const auto p = mul_letters(*spec_, letters_.back(), a);
    if (p) {
      letters_.back() = *p;
    } else {
      letters_.pop_back();
    }
    return;
  }
  letters_.push_back(a);
}

void WordBuilder::append(const Word& w) {
  const auto ls = w.letters();
  std::size_t i = 0;
  // Only the boundary can interact; once a letter survives the rest of w
  // is appended verbatim.
  while (i < ls.size() && !letters_.empty() && multipliable(letters_.back(), ls[i])) {
    const auto p = mul_letters(*spec_, letters_.back(), ls[i]);
    ++i;
    if (p) {
      letters_.back() = *p;
      break;
    }
    letters_.pop_back();
  }
  letters_.insert(letters_.end(), ls.begin() + static_cast<std::ptrdiff_t>(i), ls.end());
}

Word reduce(const GroupSpec& spec, std::span<const Letter> raw) {
  WordBuilder b(spec);
  b.reserve(raw.size());
  for (const auto& a : raw) {
    check_letter(spec, a);
    b.append(a);
  }
  return std::move(b).build();
}

Word concat(const GroupSpec& spec, const Word& u, const Word& v) {
  WordBuilder b(spec);
  b.reserve(u.size() + v.size());
  b.append(u);
  b.append(v);
  return std::move(b).build();
}

Word inverse(const GroupSpec& spec, const Word& u) {
  std::vector<Letter> out;
  out.reserve(u.size());
  for (auto it = u.letters().rbegin(); it != u.letters().rend(); ++it) out.push_back(inv_letter(spec, *it));
  return Word::unchecked(std::move(out));
}

bool has_inverse_border(const GroupSpec& spec, std::span<const Letter> w, std::size_t k) {
  const std::size_t n = w.size();
  if (2 * k > n) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (w[i] != inv_letter(spec, w[n - 1 - i])) return false;
  }
  return true;
}

std::size_t conjugator_length(const GroupSpec& spec, const Word& u) {
  const std::size_t n = u.size();
  std::size_t k = 0;
  // Stop before the core would become empty; for odd n this leaves the
  // middle letter as a length-1 core.
  while (2 * (k + 1) < n && u[k] == inv_letter(spec, u[n - 1 - k])) ++k;
  return k;
}

CyclicDecomposition cyclic_decompose(const GroupSpec& spec, const Word& u) {
  const std::size_t k = conjugator_length(spec, u);
  return CyclicDecomposition{u.slice(0, k), u.slice(k, u.size() - 2 * k)};
}

std::optional<TypeTag> word_type(const Word& u) {
  if (u.empty()) return std::nullopt;
  return TypeTag{u.front().factor, u.back().factor};
}

bool is_cyclically_reduced(const GroupSpec& spec, const Word& u) {
  return u.size() <= 1 || u.front() != inv_letter(spec, u.back());
}

std::uint64_t power_length(const GroupSpec& spec, const Word& u, std::uint64_t n) {
  if (n == 0 || u.empty()) return 0;
  const std::size_t k = conjugator_length(spec, u);
  const std::uint64_t core_len = u.size() - 2 * k;
  if (core_len == 1) {
    const auto x = u[k];
    const auto ord = letter_order(spec, x);
    if (ord && n % *ord == 0) return 0;
    return u.size();
  }
  std::uint64_t len = sat_mul(n, core_len);
  if (u[k].factor == u[u.size() - 1 - k].factor) len -= (n - 1);
  return sat_add(len, 2 * k);
}

Word power(const GroupSpec& spec, const Word& u, std::int64_t n) {
  if (n == 0 || u.empty()) return Word();
  if (n < 0) {
    if (n == std::numeric_limits<std::int64_t>::min()) throw ResourceError("exponent out of range");
    return power(spec, inverse(spec, u), -n);
  }
  const std::size_t k = conjugator_length(spec, u);
  const auto all = u.letters();
  const auto alpha = all.first(k);
  const auto core = all.subspan(k, all.size() - 2 * k);
  const auto alpha_inv = all.last(k);
  const auto count = static_cast<std::uint64_t>(n);

  std::vector<Letter> out;
  if (core.size() == 1) {
    const auto xn = letter_power(spec, core[0], n);
    if (!xn) return Word();
    out.reserve(u.size());
    out.insert(out.end(), alpha.begin(), alpha.end());
    out.push_back(*xn);
    out.insert(out.end(), alpha_inv.begin(), alpha_inv.end());
    return Word::unchecked(std::move(out));
  }

  const auto total = power_length(spec, u, count);
  if (total > out.max_size()) throw ResourceError("power too long to materialize");
  out.reserve(total);
  out.insert(out.end(), alpha.begin(), alpha.end());
  if (core.front().factor != core.back().factor) {
    for (std::uint64_t i = 0; i < count; ++i) out.insert(out.end(), core.begin(), core.end());
  } else {
    // core = a m b with a, b in one factor and a*b != e, so
    // core^n = a m (ba) m (ba) ... m b.
    const auto boundary = mul_letters(spec, core.back(), core.front());
    if (!boundary) throw IntegrityError("core is not cyclically reduced");
    const auto middle = core.subspan(1, core.size() - 2);
    out.push_back(core.front());
    for (std::uint64_t i = 0; i < count; ++i) {
      if (i > 0) out.push_back(*boundary);
      out.insert(out.end(), middle.begin(), middle.end());
    }
    out.push_back(core.back());
  }
  out.insert(out.end(), alpha_inv.begin(), alpha_inv.end());
  return Word::unchecked(std::move(out));
}

}  // namespace freeprod
