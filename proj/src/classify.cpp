#include "freeprod/classify.hpp"

#include <stdexcept>
#include <vector>

#include "freeprod/errors.hpp"

namespace freeprod {

namespace {

using Letters = std::span<const Letter>;

Word to_word(Letters ls) { return Word::unchecked(std::vector<Letter>(ls.begin(), ls.end())); }

// Splits an odd letter-conjugate block into (mu, z).
std::pair<Word, Letter> split_conjugate(Letters block) {
  const std::size_t half = (block.size() - 1) / 2;
  return {to_word(block.first(half)), block[half]};
}

void assign_conjugate(Word& conjugator, std::optional<Letter>& z, Letters block) {
  auto [c, letter] = split_conjugate(block);
  conjugator = std::move(c);
  z = letter;
}

std::optional<ScSquaredWitness> try_trivial(Letters inner) {
  if (inner.size() != 1) return std::nullopt;
  ScSquaredWitness w;
  w.form = ScForm::trivial;
  w.z0 = inner[0];
  return w;
}

std::optional<ScSquaredWitness> try_simple(const GroupSpec& spec, Letters inner) {
  const std::size_t n = inner.size();
  if (n < 2 || n % 2 != 0) return std::nullopt;
  for (std::size_t s = n - 1; s >= 1; s -= 2) {
    const auto left = inner.first(s);
    const auto right = inner.subspan(s);
    if (is_letter_conjugate(spec, left) && is_letter_conjugate(spec, right)) {
      ScSquaredWitness w;
      w.form = ScForm::simple;
      assign_conjugate(w.mu, w.z0, left);
      assign_conjugate(w.nu, w.z1, right);
      return w;
    }
    if (s == 1) break;
  }
  return std::nullopt;
}

std::optional<ScSquaredWitness> try_mixed(const GroupSpec& spec, Letters inner) {
  const std::size_t n = inner.size();
  if (n < 3 || n % 2 == 0) return std::nullopt;
  const auto d1 = inner.front();
  const auto d2 = inner.back();
  if (!multipliable(d1, d2) || !mul_letters(spec, d1, d2)) return std::nullopt;
  const auto middle = inner.subspan(1, n - 2);
  if (!is_letter_conjugate(spec, middle)) return std::nullopt;
  ScSquaredWitness w;
  w.form = ScForm::mixed;
  w.delta1 = d1;
  w.delta2 = d2;
  assign_conjugate(w.nu, w.z0, middle);
  return w;
}

std::optional<ScSquaredWitness> try_full(const GroupSpec& spec, Letters inner) {
  const std::size_t n = inner.size();
  if (n < 5 || n % 2 == 0) return std::nullopt;
  const auto d1 = inner.front();
  const auto d3 = inner.back();
  if (!multipliable(d1, d3)) return std::nullopt;
  const auto want = mul_letters(spec, inv_letter(spec, d1), inv_letter(spec, d3));
  if (!want) return std::nullopt;
  // Middle delta at position p; blocks inner[1, p) and inner[p + 1, n - 1).
  for (std::size_t p = n - 3; p >= 2; p -= 2) {
    if (inner[p] != *want) continue;
    const auto left = inner.subspan(1, p - 1);
    const auto right = inner.subspan(p + 1, n - p - 2);
    if (is_letter_conjugate(spec, left) && is_letter_conjugate(spec, right)) {
      ScSquaredWitness w;
      w.form = ScForm::full;
      w.delta1 = d1;
      w.delta2 = inner[p];
      w.delta3 = d3;
      assign_conjugate(w.mu, w.z0, left);
      assign_conjugate(w.nu, w.z1, right);
      return w;
    }
  }
  return std::nullopt;
}

void append_all(std::vector<Letter>& out, const Word& w) {
  out.insert(out.end(), w.letters().begin(), w.letters().end());
}

void append_inverse(const GroupSpec& spec, std::vector<Letter>& out, const Word& w) {
  const Word inv = inverse(spec, w);
  append_all(out, inv);
}

Letter require(const std::optional<Letter>& l, const char* name) {
  if (!l) throw IntegrityError(std::string("witness is missing ") + name);
  return *l;
}

}  // namespace

std::string_view to_string(ScForm f) {
  switch (f) {
    case ScForm::trivial:
      return "trivial";
    case ScForm::simple:
      return "simple";
    case ScForm::mixed:
      return "mixed";
    case ScForm::full:
      return "full";
  }
  return "unknown";
}

bool is_letter_conjugate(const GroupSpec& spec, std::span<const Letter> block) {
  return block.size() % 2 == 1 && has_inverse_border(spec, block, (block.size() - 1) / 2);
}

Classification classify(const GroupSpec& spec, const Word& u) {
  Classification c;
  if (u.empty()) {
    c.in_s_complement = true;
    c.torsion_order = 1;
    c.in_f_tilde = true;
    return c;
  }
  const std::size_t k = conjugator_length(spec, u);
  const std::size_t core_len = u.size() - 2 * k;
  c.in_s_complement = core_len <= 1;
  c.torsion_order = core_len == 1 ? letter_order(spec, u[k]) : std::nullopt;
  c.in_f_tilde = !c.torsion_order.has_value();
  return c;
}

bool power_reduces(const GroupSpec& spec, const Word& u, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("power_reduces needs n >= 2");
  return power_length(spec, u, static_cast<std::uint64_t>(n)) < u.size();
}

std::optional<ScSquaredWitness> match_sc_squared(const GroupSpec& spec, const Word& u) {
  if (u.empty()) return ScSquaredWitness{};
  const auto all = u.letters();
  const std::size_t n = all.size();
  std::size_t max_eta = 0;
  while (2 * (max_eta + 1) < n && all[max_eta] == inv_letter(spec, all[n - 1 - max_eta])) ++max_eta;

  for (const auto form : {ScForm::trivial, ScForm::simple, ScForm::mixed, ScForm::full}) {
    for (std::size_t h = 0; h <= max_eta; ++h) {
      const auto inner = all.subspan(h, n - 2 * h);
      std::optional<ScSquaredWitness> w;
      switch (form) {
        case ScForm::trivial:
          w = try_trivial(inner);
          break;
        case ScForm::simple:
          w = try_simple(spec, inner);
          break;
        case ScForm::mixed:
          w = try_mixed(spec, inner);
          break;
        case ScForm::full:
          w = try_full(spec, inner);
          break;
      }
      if (w) {
        w->eta = to_word(all.first(h));
        return w;
      }
    }
  }
  return std::nullopt;
}

Word assemble_witness(const GroupSpec& spec, const ScSquaredWitness& w) {
  try {
    for (const Word* part : {&w.eta, &w.mu, &w.nu}) {
      for (const auto& a : part->letters()) check_letter(spec, a);
    }
    for (const auto* l : {&w.z0, &w.z1, &w.delta1, &w.delta2, &w.delta3}) {
      if (*l) check_letter(spec, **l);
    }
  } catch (const DomainError& e) {
    throw IntegrityError(std::string("witness contains ") + e.what());
  }
  std::vector<Letter> out;
  append_all(out, w.eta);
  switch (w.form) {
    case ScForm::trivial:
      if (!w.z0) {
        if (!w.eta.empty()) throw IntegrityError("identity witness must have empty eta");
        return Word();
      }
      out.push_back(*w.z0);
      break;
    case ScForm::simple:
      append_all(out, w.mu);
      out.push_back(require(w.z0, "z0"));
      append_inverse(spec, out, w.mu);
      append_all(out, w.nu);
      out.push_back(require(w.z1, "z1"));
      append_inverse(spec, out, w.nu);
      break;
    case ScForm::mixed: {
      const auto d1 = require(w.delta1, "delta1");
      const auto d2 = require(w.delta2, "delta2");
      if (!multipliable(d1, d2) || !mul_letters(spec, d1, d2)) {
        throw IntegrityError("mixed witness needs multipliable deltas with non-trivial product");
      }
      out.push_back(d1);
      append_all(out, w.nu);
      out.push_back(require(w.z0, "z0"));
      append_inverse(spec, out, w.nu);
      out.push_back(d2);
      break;
    }
    case ScForm::full: {
      const auto d1 = require(w.delta1, "delta1");
      const auto d2 = require(w.delta2, "delta2");
      const auto d3 = require(w.delta3, "delta3");
      if (!multipliable(d1, d2) || !multipliable(d2, d3) ||
          mul_letters(spec, inv_letter(spec, d1), inv_letter(spec, d3)) != d2) {
        throw IntegrityError("full witness needs delta2 = delta1^-1 delta3^-1");
      }
      out.push_back(d1);
      append_all(out, w.mu);
      out.push_back(require(w.z0, "z0"));
      append_inverse(spec, out, w.mu);
      out.push_back(d2);
      append_all(out, w.nu);
      out.push_back(require(w.z1, "z1"));
      append_inverse(spec, out, w.nu);
      out.push_back(d3);
      break;
    }
  }
  append_inverse(spec, out, w.eta);
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (multipliable(out[i - 1], out[i])) throw IntegrityError("witness product is not reduced");
  }
  return Word::unchecked(std::move(out));
}

std::pair<Word, Word> factorize_witness(const GroupSpec& spec, const Word& u, const ScSquaredWitness& w) {
  if (assemble_witness(spec, w) != u) throw IntegrityError("witness does not describe the word");
  if (w.form == ScForm::trivial) return {u, Word()};

  const auto conj = [&](std::initializer_list<const Word*> prefix, std::initializer_list<Letter> pre_letters,
                        const Word& inner, Letter z) {
    // (prefix pre_letters inner) z (prefix pre_letters inner)^-1
    WordBuilder b(spec);
    for (const Word* p : prefix) b.append(*p);
    for (const auto& l : pre_letters) b.append(l);
    b.append(inner);
    Word alpha = std::move(b).build();
    WordBuilder out(spec);
    out.append(alpha);
    out.append(z);
    out.append(inverse(spec, alpha));
    return std::move(out).build();
  };

  switch (w.form) {
    case ScForm::simple:
      return {conj({&w.eta}, {}, w.mu, *w.z0), conj({&w.eta}, {}, w.nu, *w.z1)};
    case ScForm::mixed: {
      const auto product = *mul_letters(spec, *w.delta1, *w.delta2);
      return {conj({&w.eta}, {}, Word(), product), conj({&w.eta}, {inv_letter(spec, *w.delta2)}, w.nu, *w.z0)};
    }
    case ScForm::full:
      return {conj({&w.eta}, {*w.delta1}, w.mu, *w.z0),
              conj({&w.eta}, {inv_letter(spec, *w.delta3)}, w.nu, *w.z1)};
    case ScForm::trivial:
      break;
  }
  throw IntegrityError("unknown witness form");
}

bool is_unbalanced(const GroupSpec& spec, const Word& u, FactorIndex designated) {
  if (spec.num_factors() != 2) throw std::invalid_argument("unbalanced words need exactly two factors");
  if (designated >= 2) throw std::invalid_argument("designated factor must be 0 or 1");
  if (u.size() < 2) throw std::invalid_argument("unbalanced words need length >= 2");
  std::vector<Letter> seen;
  for (const auto& a : u.letters()) {
    if (a.factor != designated) continue;
    const auto ord = letter_order(spec, a);
    if (ord && *ord <= 2) return false;
    const auto a_inv = inv_letter(spec, a);
    for (const auto& b : seen) {
      if (b == a || b == a_inv) return false;
    }
    seen.push_back(a);
  }
  return true;
}

}  // namespace freeprod
