#include "freeprod/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "freeprod/classify.hpp"
#include "freeprod/errors.hpp"
#include "freeprod/text.hpp"

namespace freeprod {

namespace {

void extend(const GroupSpec& spec, const std::vector<Letter>& alpha, std::vector<Letter>& prefix,
            std::size_t remaining, const std::function<void(const Word&)>& fn) {
  if (remaining == 0) {
    fn(Word::unchecked(prefix));
    return;
  }
  for (const auto& a : alpha) {
    if (!prefix.empty() && prefix.back().factor == a.factor) continue;
    prefix.push_back(a);
    extend(spec, alpha, prefix, remaining - 1, fn);
    prefix.pop_back();
  }
}

std::size_t span_conjugator_length(const GroupSpec& spec, std::span<const Letter> w) {
  const std::size_t n = w.size();
  std::size_t k = 0;
  while (2 * (k + 1) < n && w[k] == inv_letter(spec, w[n - 1 - k])) ++k;
  return k;
}

// Reduced a * b written into buf.
void product_into(const GroupSpec& spec, const Word& a, const Word& b, std::vector<Letter>& buf) {
  buf.assign(a.letters().begin(), a.letters().end());
  const auto bs = b.letters();
  std::size_t i = 0;
  while (i < bs.size() && !buf.empty() && multipliable(buf.back(), bs[i])) {
    const auto p = mul_letters(spec, buf.back(), bs[i]);
    ++i;
    if (p) {
      buf.back() = *p;
      break;
    }
    buf.pop_back();
  }
  buf.insert(buf.end(), bs.begin() + static_cast<std::ptrdiff_t>(i), bs.end());
}

bool product_in_sc(const GroupSpec& spec, const Word& a, const Word& b, std::vector<Letter>& buf) {
  product_into(spec, a, b, buf);
  return buf.size() - 2 * span_conjugator_length(spec, buf) <= 1;
}

// Lazy view of the reduced product a * b: a[0, keep_a) + merged? + b[skip_b, end).
struct ProductView {
  const Word* a;
  const Word* b;
  std::size_t keep_a = 0;
  std::size_t skip_b = 0;
  std::optional<Letter> merged;

  std::size_t size() const { return keep_a + (merged ? 1 : 0) + (b->size() - skip_b); }
  const Letter& at(std::size_t i) const {
    if (i < keep_a) return (*a)[i];
    if (merged) {
      if (i == keep_a) return *merged;
      --i;
    }
    return (*b)[skip_b + i - keep_a];
  }
};

ProductView view_product(const GroupSpec& spec, const Word& a, const Word& b) {
  ProductView v{&a, &b, 0, 0, std::nullopt};
  std::size_t i = 0;
  const std::size_t na = a.size();
  while (i < na && i < b.size() && multipliable(a[na - 1 - i], b[i])) {
    const auto p = mul_letters(spec, a[na - 1 - i], b[i]);
    if (p) {
      v.merged = p;
      v.keep_a = na - 1 - i;
      v.skip_b = i + 1;
      return v;
    }
    ++i;
  }
  v.keep_a = na - i;
  v.skip_b = i;
  return v;
}

struct Partial {
  std::uint64_t instances = 0;
  std::vector<Counterexample> counterexamples;
};

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, n) into contiguous chunks, one per worker, and merges the
// partial results in index order so reports do not depend on jobs.
void parallel_sweep(std::size_t n, unsigned jobs, LemmaReport& report,
                    const std::function<void(std::size_t, Partial&)>& body) {
  jobs = static_cast<unsigned>(std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(n, 1)));
  std::vector<Partial> parts(jobs);
  std::vector<std::exception_ptr> errors(jobs);
  const auto run = [&](unsigned j) {
    const std::size_t begin = n * j / jobs;
    const std::size_t end = n * (j + 1) / jobs;
    try {
      for (std::size_t i = begin; i < end; ++i) body(i, parts[j]);
    } catch (...) {
      errors[j] = std::current_exception();
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(run, j);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& p : parts) {
    report.instances += p.instances;
    for (auto& c : p.counterexamples) report.counterexamples.push_back(std::move(c));
  }
}

void require_two_factors(const GroupSpec& spec, std::string_view what) {
  if (spec.num_factors() != 2) {
    throw std::invalid_argument(std::string(what) + " applies only to free products of two factors");
  }
}

bool is_dihedral(const GroupSpec& spec) {
  return spec.num_factors() == 2 && spec.factor(0).group_order() == 2 && spec.factor(1).group_order() == 2;
}

bool is_asymmetric(const Word& u) { return u.size() >= 2 && u.front().factor != u.back().factor; }

std::string describe(const GroupSpec& spec, std::initializer_list<std::pair<const char*, const Word*>> parts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, w] : parts) {
    if (!first) os << ", ";
    first = false;
    os << name << " = \"" << format_word(spec, *w) << "\"";
  }
  return os.str();
}

std::vector<Word> filter(const std::vector<Word>& words, const std::function<bool(const Word&)>& keep) {
  std::vector<Word> out;
  std::copy_if(words.begin(), words.end(), std::back_inserter(out), keep);
  return out;
}

// ---------------------------------------------------------------------------
// Suites

void check_core_decomposition(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt,
                              LemmaReport& r) {
  const auto words = enumerate_words(spec, bounds);
  parallel_sweep(words.size(), opt.jobs, r, [&](std::size_t i, Partial& p) {
    const Word& u = words[i];
    ++p.instances;
    const auto d = cyclic_decompose(spec, u);
    const Word rebuilt = concat(spec, d.conjugator, concat(spec, d.core, inverse(spec, d.conjugator)));
    if (rebuilt != u || u.size() != 2 * d.conjugator.size() + d.core.size()) {
      p.counterexamples.push_back({u, "reconstruction is not a reduced product"});
      return;
    }
    if (!is_cyclically_reduced(spec, d.core) || (!u.empty() && d.core.empty())) {
      p.counterexamples.push_back({u, "core is not cyclically reduced"});
      return;
    }
    // No other split alpha' core' alpha'^-1 has a cyclically reduced core.
    for (std::size_t k = 0; 2 * k <= u.size(); ++k) {
      if (k == d.conjugator.size() || !has_inverse_border(spec, u.letters(), k)) continue;
      const Word core = u.slice(k, u.size() - 2 * k);
      if (!core.empty() && is_cyclically_reduced(spec, core)) {
        p.counterexamples.push_back({u, "second decomposition with conjugator length " + std::to_string(k)});
        return;
      }
    }
  });
}

void check_power_lengths(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt,
                         LemmaReport& r) {
  const auto words = enumerate_words(spec, bounds);
  parallel_sweep(words.size(), opt.jobs, r, [&](std::size_t i, Partial& p) {
    const Word& u = words[i];
    const auto c = classify(spec, u);
    for (std::int64_t n = 2; n <= 6; ++n) {
      ++p.instances;
      const Word un = power(spec, u, n);
      const bool shorter = un.size() < u.size();
      const bool torsion_hit = !u.empty() && un.empty();
      if (shorter != torsion_hit || power_reduces(spec, u, n) != shorter) {
        p.counterexamples.push_back({u, "||u^" + std::to_string(n) + "|| < ||u|| disagrees with u^n = e"});
      }
    }
    for (std::int64_t n = 1; n <= 6; ++n) {
      const Word un = power(spec, u, n);
      if (un.empty()) continue;
      ++p.instances;
      if (classify(spec, un).in_s_complement != c.in_s_complement) {
        p.counterexamples.push_back({u, "S^c membership changes at power " + std::to_string(n)});
      }
    }
    // The classification against the defining quantifiers.
    ++p.instances;
    if (!c.in_s_complement) {
      for (std::uint64_t n = 1; n <= 2 * u.size() + 2; ++n) {
        if (power(spec, u, static_cast<std::int64_t>(n)).size() < n) {
          p.counterexamples.push_back({u, "classified in S but ||u^" + std::to_string(n) + "|| < n"});
          break;
        }
      }
    } else {
      const std::size_t witness = 2 * conjugator_length(spec, u) + 2;
      if (power(spec, u, static_cast<std::int64_t>(witness)).size() >= witness) {
        p.counterexamples.push_back({u, "classified in S^c but ||u^n|| >= n at n = " + std::to_string(witness)});
      }
    }
    ++p.instances;
    if (c.in_f_tilde != (u.empty() || !c.torsion_order)) {
      p.counterexamples.push_back({u, "F~ flag disagrees with torsion order"});
    } else if (c.torsion_order && *c.torsion_order <= 64) {
      const auto k = static_cast<std::int64_t>(*c.torsion_order);
      bool ok = power(spec, u, k).empty();
      for (std::int64_t j = 1; ok && j < k; ++j) ok = !power(spec, u, j).empty();
      if (!ok) p.counterexamples.push_back({u, "torsion order is not the least n with u^n = e"});
    }
  });
}

void check_sc_squared(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt, LemmaReport& r) {
  const auto words = enumerate_words(spec, bounds);
  const ScSquaredOracle oracle(spec, bounds);
  r.notes.push_back("oracle S^c ball holds " + std::to_string(oracle.ball_size()) + " elements");
  parallel_sweep(words.size(), opt.jobs, r, [&](std::size_t i, Partial& p) {
    const Word& u = words[i];
    ++p.instances;
    const auto w = match_sc_squared(spec, u);
    const bool member = oracle.contains(u);
    if (w.has_value() != member) {
      p.counterexamples.push_back({u, member ? "oracle member without matcher witness"
                                             : "matcher witness for oracle non-member"});
      return;
    }
    if (!w) return;
    try {
      const auto [s, t] = factorize_witness(spec, u, *w);
      if (!classify(spec, s).in_s_complement || !classify(spec, t).in_s_complement || concat(spec, s, t) != u) {
        p.counterexamples.push_back({u, "factorization does not give two S^c factors"});
      }
    } catch (const IntegrityError& e) {
      p.counterexamples.push_back({u, e.what()});
    }
  });
}

void check_asymmetric_simple(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt,
                             LemmaReport& r) {
  const auto words = filter(enumerate_words(spec, bounds), is_asymmetric);
  parallel_sweep(words.size(), opt.jobs, r, [&](std::size_t i, Partial& p) {
    const Word& u = words[i];
    const auto w = match_sc_squared(spec, u);
    if (!w) return;
    ++p.instances;
    if (w->form != ScForm::simple || !w->eta.empty()) {
      p.counterexamples.push_back({u, "asymmetric member matched as " + std::string(to_string(w->form)) +
                                          (w->eta.empty() ? "" : " with non-empty eta")});
    }
  });
}

// Explicit elements outside S^c * S^c, one per applicable construction.
std::vector<std::pair<std::string, Word>> properness_families(const GroupSpec& spec, ElemId exp_bound) {
  std::vector<std::pair<std::string, Word>> out;
  const auto letters = alphabet(spec, exp_bound);
  const auto other_factor_letter = [&](FactorIndex f) -> std::optional<Letter> {
    for (const auto& l : letters) {
      if (l.factor != f) return l;
    }
    return std::nullopt;
  };
  for (const auto& x : letters) {
    if (inv_letter(spec, x) == x) continue;
    const auto y = other_factor_letter(x.factor);
    const Word xy = Word::unchecked({x, *y});
    out.emplace_back("non-involutive letter cubed: (x y)^3", power(spec, xy, 3));
    break;
  }
  for (FactorIndex f = 0; f < spec.num_factors(); ++f) {
    std::vector<Letter> picked;
    for (ElemId e : spec.factor(f).letters(exp_bound)) {
      const Letter x{f, e};
      const auto clash = [&](const Letter& q) { return q == x || q == inv_letter(spec, x); };
      if (std::none_of(picked.begin(), picked.end(), clash)) picked.push_back(x);
      if (picked.size() == 3) break;
    }
    if (picked.size() < 3) continue;
    const auto y = *other_factor_letter(f);
    out.emplace_back("three independent letters: x1 y x2 y x3 y",
                     Word::unchecked({picked[0], y, picked[1], y, picked[2], y}));
    break;
  }
  std::vector<Letter> involutions;
  for (FactorIndex f = 0; f < spec.num_factors() && involutions.size() < 3; ++f) {
    for (ElemId e : spec.factor(f).letters(exp_bound)) {
      if (spec.factor(f).element_order(e) == Order{2}) {
        involutions.push_back(Letter{f, e});
        break;
      }
    }
  }
  if (involutions.size() == 3) {
    out.emplace_back("involutions from three factors: x y z", Word::unchecked(involutions));
  }
  return out;
}

void check_properness(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt, LemmaReport& r) {
  const auto words = enumerate_words(spec, bounds);
  const ScSquaredOracle oracle(spec, bounds);
  std::vector<Word> outside;
  for (const auto& u : words) {
    ++r.instances;
    if (!oracle.contains(u)) outside.push_back(u);
  }
  (void)opt;
  if (is_dihedral(spec)) {
    r.notes.push_back("dihedral exception: Z2*Z2 has S^c*S^c equal to the whole group");
    if (outside.empty()) {
      r.notes.push_back("no element outside S^c*S^c found");
    } else {
      for (const auto& u : outside) r.counterexamples.push_back({u, "element outside S^c*S^c in Z2*Z2"});
    }
    return;
  }
  if (outside.empty()) {
    r.counterexamples.push_back({Word(), "no element outside S^c*S^c within length " +
                                             std::to_string(bounds.max_len)});
  } else {
    r.notes.push_back("shortest element outside S^c*S^c: \"" + format_word(spec, outside.front()) + "\" (" +
                      std::to_string(outside.size()) + " found)");
  }
  const auto families = properness_families(spec, bounds.exp_bound);
  if (families.empty()) return;
  EnumBounds wide = bounds;
  for (const auto& [name, w] : families) wide.max_len = std::max(wide.max_len, w.size());
  const ScSquaredOracle family_oracle(spec, wide);
  for (const auto& [name, w] : families) {
    ++r.instances;
    const bool by_matcher = match_sc_squared(spec, w).has_value();
    const bool by_oracle = family_oracle.contains(w);
    if (by_matcher || by_oracle) {
      r.counterexamples.push_back({w, name + " lies in S^c*S^c"});
    } else {
      r.notes.push_back(name + ": \"" + format_word(spec, w) + "\" outside S^c*S^c");
    }
  }
}

void check_dihedral(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt, LemmaReport& r) {
  if (!is_dihedral(spec)) throw std::invalid_argument("dihedral suite applies only to Z2*Z2");
  const auto words = enumerate_words(spec, bounds);
  const ScSquaredOracle oracle(spec, bounds);
  parallel_sweep(words.size(), opt.jobs, r, [&](std::size_t i, Partial& p) {
    const Word& u = words[i];
    p.instances += 2;
    if (!oracle.contains(u) || !match_sc_squared(spec, u)) {
      p.counterexamples.push_back({u, "not in S^c*S^c"});
    }
    const bool expect_sc = u.empty() || u.size() % 2 == 1;
    if (classify(spec, u).in_s_complement != expect_sc) {
      p.counterexamples.push_back({u, "S^c membership differs from odd length or e"});
    }
  });
}

std::vector<std::pair<Word, FactorIndex>> unbalanced_asymmetric(const GroupSpec& spec,
                                                                 const std::vector<Word>& words) {
  std::vector<std::pair<Word, FactorIndex>> out;
  for (const auto& u : words) {
    if (u.size() < 6 || !is_asymmetric(u)) continue;
    for (FactorIndex d = 0; d < 2; ++d) {
      if (is_unbalanced(spec, u, d)) out.emplace_back(u, d);
    }
  }
  return out;
}

void check_unbalanced_excluded(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt,
                               LemmaReport& r) {
  require_two_factors(spec, "unbalanced suite");
  const auto xis = unbalanced_asymmetric(spec, enumerate_words(spec, bounds));
  if (xis.empty()) r.notes.push_back("no unbalanced asymmetric word of length >= 6 in the ball");
  const ScSquaredOracle oracle(spec, bounds);
  parallel_sweep(xis.size(), opt.jobs, r, [&](std::size_t i, Partial& p) {
    const Word& u = xis[i].first;
    ++p.instances;
    if (match_sc_squared(spec, u) || oracle.contains(u)) {
      p.counterexamples.push_back({u, "unbalanced asymmetric word lies in S^c*S^c (designated factor " +
                                          std::to_string(xis[i].second) + ")"});
    }
  });
}

// Unbalanced xi times r-th powers of every cofactor, r in {4, 5}.
void check_unbalanced_products(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt,
                               LemmaReport& r, const std::function<bool(const Word&)>& cofactor_filter,
                               const char* cofactor_name) {
  require_two_factors(spec, "unbalanced suite");
  constexpr std::size_t kCofactorMaxLen = 4;
  const auto xis = unbalanced_asymmetric(spec, enumerate_words(spec, bounds));
  EnumBounds cb = bounds;
  cb.max_len = kCofactorMaxLen;
  const auto cofactors = filter(enumerate_words(spec, cb), cofactor_filter);
  if (xis.empty()) r.notes.push_back("no unbalanced asymmetric word of length >= 6 in the ball");
  r.notes.push_back(std::to_string(xis.size()) + " xi x " + std::to_string(cofactors.size()) + " " +
                    cofactor_name + " x r in {4, 5}");
  parallel_sweep(xis.size(), opt.jobs, r, [&](std::size_t i, Partial& p) {
    const Word& xi = xis[i].first;
    for (const auto& lam : cofactors) {
      for (std::int64_t rr : {4, 5}) {
        ++p.instances;
        const Word prod = concat(spec, xi, power(spec, lam, rr));
        if (classify(spec, prod).in_s_complement) {
          p.counterexamples.push_back(
              {prod, describe(spec, {{"xi", &xi}, {cofactor_name, &lam}}) + ", r = " + std::to_string(rr)});
        }
      }
    }
  });
}

void check_axioms(const GroupSpec& spec, const EnumBounds& bounds, const VerifyOptions& opt, LemmaReport& r) {
  const auto words = enumerate_words(spec, bounds);
  const Word e;
  ++r.instances;
  if (!e.empty() || !inverse(spec, e).empty()) r.counterexamples.push_back({e, "||e|| != 0"});

  // Pairs: inverse, triangle inequalities, power against an iterated product.
  parallel_sweep(words.size(), opt.jobs, r, [&](std::size_t i, Partial& p) {
    const Word& u = words[i];
    const Word ui = inverse(spec, u);
    ++p.instances;
    if (ui.size() != u.size() || inverse(spec, ui) != u || !concat(spec, u, ui).empty()) {
      p.counterexamples.push_back({u, "inverse axiom fails"});
    }
    for (const auto& v : words) {
      ++p.instances;
      const auto uv = concat(spec, u, v).size();
      const auto lo = u.size() > v.size() ? u.size() - v.size() : v.size() - u.size();
      if (uv > u.size() + v.size() || uv < lo) {
        p.counterexamples.push_back({u, "triangle inequality fails with v = \"" + format_word(spec, v) + "\""});
      }
    }
    WordBuilder fold(spec);
    WordBuilder fold_inv(spec);
    for (std::int64_t n = 1; n <= 6; ++n) {
      fold.append(u);
      fold_inv.append(ui);
      p.instances += 2;
      if (power(spec, u, n) != WordBuilder(fold).build() ||
          power(spec, u, -n) != WordBuilder(fold_inv).build()) {
        p.counterexamples.push_back({u, "power differs from iterated product at n = " + std::to_string(n)});
      }
    }
    ++p.instances;
    if (!power(spec, u, 0).empty()) p.counterexamples.push_back({u, "u^0 != e"});
  });

  // Triples: associativity, checked without materializing (uv)w and u(vw).
  parallel_sweep(words.size(), opt.jobs, r, [&](std::size_t j, Partial& p) {
    const Word& v = words[j];
    std::vector<Word> vw;
    vw.reserve(words.size());
    for (const auto& w : words) vw.push_back(concat(spec, v, w));
    for (const auto& u : words) {
      const Word uv = concat(spec, u, v);
      for (std::size_t k = 0; k < words.size(); ++k) {
        ++p.instances;
        if (!products_equal(spec, uv, words[k], u, vw[k])) {
          p.counterexamples.push_back({u, describe(spec, {{"v", &v}, {"w", &words[k]}}) + ": not associative"});
        }
      }
    }
  });

  // Random long words beyond the exhaustive ball.
  std::mt19937_64 rng(opt.seed);
  const auto letters = alphabet(spec, bounds.exp_bound);
  const auto random_word = [&](std::size_t len) {
    std::vector<Letter> raw(len);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    for (auto& l : raw) l = letters[pick(rng)];
    return reduce(spec, raw);
  };
  for (int t = 0; t < 2000; ++t) {
    const Word u = random_word(3 * bounds.max_len);
    const Word v = random_word(3 * bounds.max_len);
    const Word w = random_word(3 * bounds.max_len);
    ++r.instances;
    if (concat(spec, concat(spec, u, v), w) != concat(spec, u, concat(spec, v, w))) {
      r.counterexamples.push_back({u, describe(spec, {{"v", &v}, {"w", &w}}) + ": not associative (sampled)"});
    }
  }
  r.notes.push_back("sampled 2000 random triples of raw length " + std::to_string(3 * bounds.max_len) +
                    " with seed " + std::to_string(opt.seed));
}

using Suite = void (*)(const GroupSpec&, const EnumBounds&, const VerifyOptions&, LemmaReport&);

struct SuiteEntry {
  LemmaInfo info;
  Suite run;
};

void check_cyclic_cofactors(const GroupSpec& spec, const EnumBounds& b, const VerifyOptions& o, LemmaReport& r) {
  check_unbalanced_products(
      spec, b, o, r,
      [&spec](const Word& w) { return w.size() >= 2 && is_cyclically_reduced(spec, w); }, "lambda");
}

void check_non_conjugate_cofactors(const GroupSpec& spec, const EnumBounds& b, const VerifyOptions& o,
                                   LemmaReport& r) {
  check_unbalanced_products(
      spec, b, o, r, [&spec](const Word& w) { return !classify(spec, w).in_s_complement; }, "gamma");
}

const std::vector<SuiteEntry>& suites() {
  static const std::vector<SuiteEntry> table = {
      {{"core-decomposition", "2.1", "unique decomposition alpha core alpha^-1 with cyclically reduced core"},
       check_core_decomposition},
      {{"power-length", "2.2", "powers shorten only at torsion; S^c closed under powers"}, check_power_lengths},
      {{"sc-squared-forms", "2.3", "four-form matcher agrees with the brute-force S^c*S^c oracle"},
       check_sc_squared},
      {{"asymmetric-simple", "2.5", "asymmetric members of S^c*S^c have the simple form with empty eta"},
       check_asymmetric_simple},
      {{"properness", "2.6", "S^c*S^c is a proper subset unless the group is Z2*Z2"}, check_properness},
      {{"dihedral", "2.7", "in Z2*Z2, S^c is odd length plus e and S^c*S^c is everything"}, check_dihedral},
      {{"unbalanced-excluded", "4.2", "unbalanced asymmetric words of length >= 6 are outside S^c*S^c"},
       check_unbalanced_excluded},
      {{"unbalanced-cyclic-power", "4.3", "xi lambda^r is outside S^c for cyclically reduced lambda"},
       check_cyclic_cofactors},
      {{"unbalanced-s-power", "4.4", "xi gamma^r is outside S^c for gamma in S"}, check_non_conjugate_cofactors},
      {{"axioms", "axioms", "length axioms, associativity, power equals iterated product"}, check_axioms},
  };
  return table;
}

}  // namespace

void for_each_word(const GroupSpec& spec, std::size_t max_len, ElemId exp_bound,
                   const std::function<void(const Word&)>& fn) {
  const auto letters = alphabet(spec, exp_bound);
  std::vector<Letter> prefix;
  prefix.reserve(max_len);
  for (std::size_t len = 0; len <= max_len; ++len) extend(spec, letters, prefix, len, fn);
}

std::vector<Word> enumerate_words(const GroupSpec& spec, const EnumBounds& bounds) {
  std::vector<Word> out;
  for_each_word(spec, bounds.max_len, bounds.exp_bound, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Word> sc_ball(const GroupSpec& spec, std::size_t max_length, ElemId exp_bound) {
  std::vector<Word> out{Word()};
  if (max_length == 0) return out;
  const auto letters = alphabet(spec, exp_bound);
  for_each_word(spec, (max_length - 1) / 2, exp_bound, [&](const Word& alpha) {
    const Word alpha_inv = inverse(spec, alpha);
    for (const auto& x : letters) {
      if (!alpha.empty() && alpha.back().factor == x.factor) continue;
      std::vector<Letter> ls(alpha.letters().begin(), alpha.letters().end());
      ls.push_back(x);
      ls.insert(ls.end(), alpha_inv.letters().begin(), alpha_inv.letters().end());
      out.push_back(Word::unchecked(std::move(ls)));
    }
  });
  return out;
}

ScSquaredOracle::ScSquaredOracle(const GroupSpec& spec, const EnumBounds& bounds)
    : spec_(&spec), bounds_(bounds), ball_(sc_ball(spec, bounds.sc_ball_length(bounds.max_len), bounds.exp_bound)) {}

bool ScSquaredOracle::contains(const Word& u) const {
  if (u.size() > bounds_.max_len) throw std::invalid_argument("word longer than the oracle bound");
  const std::size_t limit = bounds_.sc_ball_length(u.size());
  std::vector<Letter> buf;
  // u = s^-1 t with s, t in S^c; the ball is closed under inverses.
  for (const auto& s : ball_) {
    if (s.size() > limit) break;
    if (product_in_sc(*spec_, s, u, buf)) return true;
  }
  return false;
}

bool oracle_sc_squared(const GroupSpec& spec, const Word& u, const EnumBounds& bounds) {
  EnumBounds b = bounds;
  b.max_len = u.size();
  if (u.size() > bounds.max_len) throw std::invalid_argument("word longer than the oracle bound");
  return ScSquaredOracle(spec, b).contains(u);
}

bool products_equal(const GroupSpec& spec, const Word& a, const Word& b, const Word& c, const Word& d) {
  const auto x = view_product(spec, a, b);
  const auto y = view_product(spec, c, d);
  const std::size_t n = x.size();
  if (n != y.size()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (x.at(i) != y.at(i)) return false;
  }
  return true;
}

bool lemma_matches(const LemmaInfo& info, std::string_view id) {
  if (id == info.id || id == info.alias) return true;
  // "<alias>-<id>", e.g. "2.6-properness".
  return id.size() == info.alias.size() + 1 + info.id.size() && id.starts_with(info.alias) &&
         id[info.alias.size()] == '-' && id.ends_with(info.id);
}

const std::vector<LemmaInfo>& known_lemmas() {
  static const std::vector<LemmaInfo> infos = [] {
    std::vector<LemmaInfo> v;
    for (const auto& s : suites()) v.push_back(s.info);
    return v;
  }();
  return infos;
}

LemmaReport verify_lemma(const GroupSpec& spec, std::string_view id, const EnumBounds& bounds,
                         const VerifyOptions& options) {
  for (const auto& s : suites()) {
    if (!lemma_matches(s.info, id)) continue;
    LemmaReport r;
    r.id = std::string(s.info.id);
    r.title = std::string(s.info.title);
    const auto start = std::chrono::steady_clock::now();
    s.run(spec, bounds, options, r);
    r.wall_time = std::chrono::steady_clock::now() - start;
    return r;
  }
  throw std::invalid_argument("unknown lemma id '" + std::string(id) + "'");
}

}  // namespace freeprod
