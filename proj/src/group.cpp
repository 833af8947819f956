#include "freeprod/group.hpp"

#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

#include "freeprod/errors.hpp"

namespace freeprod {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ResourceError("infinite cyclic exponent overflows 64 bits");
  }
  return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ResourceError("infinite cyclic exponent overflows 64 bits");
  }
  return out;
}

// Nonnegative residue of n modulo m (m > 0).
std::uint64_t residue(std::int64_t n, std::uint64_t m) {
  const auto r = static_cast<__int128>(n) % static_cast<__int128>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return true;
}

}  // namespace

FactorSpec FactorSpec::cyclic(std::uint64_t order) {
  FactorSpec f;
  f.rep_ = CyclicFactor{order};
  return f;
}

FactorSpec FactorSpec::table(std::size_t size, std::vector<ElemId> mul, ElemId identity) {
  FactorSpec f;
  TableFactor t;
  t.size = size;
  t.mul = std::move(mul);
  t.identity = identity;
  f.rep_ = std::move(t);
  return f;
}

bool FactorSpec::is_infinite() const noexcept {
  const auto* c = as_cyclic();
  return c != nullptr && c->order == 0;
}

std::uint64_t FactorSpec::group_order() const noexcept {
  if (const auto* c = as_cyclic()) return c->order;
  return as_table()->size;
}

ElemId FactorSpec::identity() const noexcept {
  if (as_cyclic() != nullptr) return 0;
  return as_table()->identity;
}

bool FactorSpec::is_letter(ElemId e) const noexcept {
  if (const auto* c = as_cyclic()) {
    if (c->order == 0) return e != 0;
    return e > 0 && static_cast<std::uint64_t>(e) < c->order;
  }
  const auto* t = as_table();
  return e >= 0 && static_cast<std::size_t>(e) < t->size && e != t->identity;
}

std::optional<ElemId> FactorSpec::multiply(ElemId a, ElemId b) const {
  ElemId p = 0;
  if (const auto* c = as_cyclic()) {
    if (c->order == 0) {
      p = checked_add(a, b);
    } else {
      p = static_cast<ElemId>((static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b)) % c->order);
    }
  } else {
    const auto* t = as_table();
    p = t->mul[static_cast<std::size_t>(a) * t->size + static_cast<std::size_t>(b)];
  }
  if (p == identity()) return std::nullopt;
  return p;
}

ElemId FactorSpec::invert(ElemId e) const {
  if (const auto* c = as_cyclic()) {
    if (c->order == 0) return -e;
    return e == 0 ? 0 : static_cast<ElemId>(c->order - static_cast<std::uint64_t>(e));
  }
  return as_table()->inverse[static_cast<std::size_t>(e)];
}

Order FactorSpec::element_order(ElemId e) const {
  if (const auto* c = as_cyclic()) {
    if (c->order == 0) return e == 0 ? Order{1} : std::nullopt;
    const auto g = std::gcd(static_cast<std::uint64_t>(e), c->order);
    return c->order / g;
  }
  return as_table()->orders[static_cast<std::size_t>(e)];
}

std::optional<ElemId> FactorSpec::power(ElemId e, std::int64_t n) const {
  if (const auto* c = as_cyclic()) {
    if (c->order == 0) {
      const auto p = checked_mul(e, n);
      if (p == 0) return std::nullopt;
      return p;
    }
    const auto r = residue(n, c->order);
    const auto p = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(static_cast<std::uint64_t>(e)) * r) % c->order);
    if (p == 0) return std::nullopt;
    return static_cast<ElemId>(p);
  }
  const auto* t = as_table();
  const auto k = residue(n, t->orders[static_cast<std::size_t>(e)]);
  ElemId acc = t->identity;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = t->mul[static_cast<std::size_t>(acc) * t->size + static_cast<std::size_t>(e)];
  }
  if (acc == t->identity) return std::nullopt;
  return acc;
}

std::vector<ElemId> FactorSpec::letters(ElemId exp_bound) const {
  std::vector<ElemId> out;
  if (const auto* c = as_cyclic()) {
    if (c->order == 0) {
      for (ElemId i = -exp_bound; i <= exp_bound; ++i) {
        if (i != 0) out.push_back(i);
      }
    } else {
      for (std::uint64_t i = 1; i < c->order; ++i) out.push_back(static_cast<ElemId>(i));
    }
    return out;
  }
  const auto* t = as_table();
  for (std::size_t i = 0; i < t->size; ++i) {
    if (static_cast<ElemId>(i) != t->identity) out.push_back(static_cast<ElemId>(i));
  }
  return out;
}

std::vector<std::string> FactorSpec::complete(std::size_t index) {
  std::vector<std::string> v;
  const std::string where = "factor " + std::to_string(index) + ": ";
  if (auto* c = std::get_if<CyclicFactor>(&rep_)) {
    if (c->order == 1) v.push_back(where + "trivial group (cyclic of order 1)");
    return v;
  }
  auto& t = std::get<TableFactor>(rep_);
  const std::size_t n = t.size;
  if (n == 0) {
    v.push_back(where + "table size must be positive");
    return v;
  }
  if (t.mul.size() != n * n) {
    v.push_back(where + "table has " + std::to_string(t.mul.size()) + " entries, expected " +
                std::to_string(n * n));
    return v;
  }
  for (std::size_t i = 0; i < n * n; ++i) {
    if (t.mul[i] < 0 || static_cast<std::size_t>(t.mul[i]) >= n) {
      v.push_back(where + "entry " + std::to_string(i) + " is out of range");
      return v;
    }
  }
  if (t.identity < 0 || static_cast<std::size_t>(t.identity) >= n) {
    v.push_back(where + "identity id out of range");
    return v;
  }
  if (n == 1) {
    v.push_back(where + "trivial group (table of size 1)");
    return v;
  }
  const auto at = [&](std::size_t a, std::size_t b) { return static_cast<std::size_t>(t.mul[a * n + b]); };
  const auto e = static_cast<std::size_t>(t.identity);
  for (std::size_t a = 0; a < n; ++a) {
    if (at(e, a) != a || at(a, e) != a) {
      v.push_back(where + "identity " + std::to_string(e) + " fails on element " + std::to_string(a));
      return v;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (at(at(a, b), c) != at(a, at(b, c))) {
          std::ostringstream os;
          os << where << "not associative at (" << a << ", " << b << ", " << c << ")";
          v.push_back(os.str());
          return v;
        }
      }
    }
  }
  t.inverse.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (at(a, b) == e && at(b, a) == e) {
        t.inverse[a] = static_cast<ElemId>(b);
        break;
      }
    }
    if (t.inverse[a] < 0) {
      v.push_back(where + "element " + std::to_string(a) + " has no inverse");
      return v;
    }
  }
  t.orders.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t acc = a;
    std::uint64_t k = 1;
    while (acc != e) {
      acc = at(acc, a);
      ++k;
    }
    t.orders[a] = k;
  }
  return v;
}

std::optional<Letter> GroupSpec::generator(const std::string& name) const {
  const auto it = generators_.find(name);
  if (it == generators_.end()) return std::nullopt;
  return it->second;
}

GroupSpec validate_spec(const RawGroupSpec& raw) {
  std::vector<std::string> violations;
  if (raw.factors.size() < 2) {
    violations.push_back("need >= 2 factors, got " + std::to_string(raw.factors.size()));
  }
  GroupSpec spec;
  spec.factors_ = raw.factors;
  std::vector<bool> factor_ok(spec.factors_.size());
  for (std::size_t i = 0; i < spec.factors_.size(); ++i) {
    auto v = spec.factors_[i].complete(i);
    factor_ok[i] = v.empty();
    violations.insert(violations.end(), v.begin(), v.end());
  }

  std::set<std::string> seen;
  for (const auto& [name, ids] : raw.generators) {
    const auto [f, e] = ids;
    if (!is_identifier(name)) {
      violations.push_back("generator '" + name + "': name is not an identifier");
    } else if (!seen.insert(name).second) {
      violations.push_back("generator '" + name + "': duplicate name");
    } else if (f < 0 || static_cast<std::size_t>(f) >= spec.factors_.size()) {
      violations.push_back("generator '" + name + "': factor " + std::to_string(f) + " does not exist");
    } else if (!factor_ok[static_cast<std::size_t>(f)]) {
      continue;
    } else if (!spec.factors_[static_cast<std::size_t>(f)].is_letter(e)) {
      violations.push_back("factor " + std::to_string(f) + ": generator '" + name + "' has invalid element " +
                           std::to_string(e));
    } else {
      spec.generators_.emplace(name, Letter{static_cast<FactorIndex>(f), e});
    }
  }
  if (!violations.empty()) throw SpecError(std::move(violations));
  return spec;
}

void check_letter(const GroupSpec& spec, const Letter& a) {
  if (a.factor >= spec.num_factors() || !spec.factor(a.factor).is_letter(a.elem)) {
    throw DomainError("invalid letter f" + std::to_string(a.factor) + ":" + std::to_string(a.elem));
  }
}

std::optional<Letter> mul_letters(const GroupSpec& spec, const Letter& a, const Letter& b) {
  if (!multipliable(a, b)) throw DomainError("not multipliable");
  const auto p = spec.factor(a.factor).multiply(a.elem, b.elem);
  if (!p) return std::nullopt;
  return Letter{a.factor, *p};
}

Letter inv_letter(const GroupSpec& spec, const Letter& a) {
  return Letter{a.factor, spec.factor(a.factor).invert(a.elem)};
}

Order letter_order(const GroupSpec& spec, const Letter& a) {
  return spec.factor(a.factor).element_order(a.elem);
}

std::optional<Letter> letter_power(const GroupSpec& spec, const Letter& a, std::int64_t n) {
  const auto p = spec.factor(a.factor).power(a.elem, n);
  if (!p) return std::nullopt;
  return Letter{a.factor, *p};
}

std::vector<Letter> alphabet(const GroupSpec& spec, ElemId exp_bound) {
  std::vector<Letter> out;
  for (FactorIndex f = 0; f < spec.num_factors(); ++f) {
    for (ElemId e : spec.factor(f).letters(exp_bound)) out.push_back(Letter{f, e});
  }
  return out;
}

}  // namespace freeprod
