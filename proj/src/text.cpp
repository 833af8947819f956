#include "freeprod/text.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "freeprod/errors.hpp"

namespace freeprod {

namespace {

constexpr std::uint64_t kMaxExpressionLength = 50'000'000;

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(const GroupSpec& spec, std::string_view text) : spec_(spec), text_(text) {}

  Word parse() {
    Word w = expr(std::nullopt);
    skip_space();
    if (pos_ < text_.size()) fail(pos_, "unexpected ')'");
    return w;
  }

 private:
  [[noreturn]] static void fail(std::size_t at, const std::string& msg) { throw ParseError(at, msg); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  // open_paren is the offset of the '(' enclosing this expression, if any.
  Word expr(std::optional<std::size_t> open_paren) {
    WordBuilder acc(spec_);
    bool any = false;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size()) {
        if (open_paren) fail(*open_paren, "unclosed '('");
        break;
      }
      if (text_[pos_] == ')') {
        if (!open_paren) fail(pos_, "unexpected ')'");
        if (!any) fail(pos_, "expected generator or '('");
        break;
      }
      acc.append(term(open_paren));
      any = true;
    }
    return std::move(acc).build();
  }

  Word term(std::optional<std::size_t> open_paren) {
    Word base = atom();
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_space();
      const std::size_t at = pos_;
      if (pos_ >= text_.size() && open_paren) fail(*open_paren, "unclosed '('");
      const auto n = signed_int("expected integer exponent");
      const auto magnitude = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
      if (power_length(spec_, base, magnitude) > kMaxExpressionLength) {
        throw ResourceError("expression at offset " + std::to_string(at) + " expands beyond " +
                            std::to_string(kMaxExpressionLength) + " letters");
      }
      try {
        return power(spec_, base, n);
      } catch (const ResourceError& e) {
        fail(at, e.what());
      }
    }
    return base;
  }

  std::int64_t signed_int(const char* what) {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < text_.size() && (text_[p] == '-' || text_[p] == '+')) ++p;
    const std::size_t digits = p;
    while (p < text_.size() && is_digit(text_[p])) ++p;
    if (p == digits) fail(start, what);
    std::int64_t value = 0;
    const char* first = text_.data() + (text_[start] == '+' ? start + 1 : start);
    const auto [ptr, ec] = std::from_chars(first, text_.data() + p, value);
    if (ec != std::errc() || ptr != text_.data() + p) fail(start, "integer out of range");
    pos_ = p;
    return value;
  }

  Word atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = expr(start);
      ++pos_;  // ')'
      return inner;
    }
    if (!is_ident_start(c)) fail(start, "expected generator or '('");
    std::size_t p = pos_;
    while (p < text_.size() && is_ident_char(text_[p])) ++p;
    const std::string name(text_.substr(start, p - start));
    pos_ = p;
    if (auto g = spec_.generator(name)) return Word::unchecked({*g});
    if (pos_ < text_.size() && text_[pos_] == ':' && name.size() > 1 && name[0] == 'f') {
      return raw_letter(start, name);
    }
    fail(start, "unknown generator '" + name + "'");
  }

  // f<index>:<elem>
  Word raw_letter(std::size_t start, const std::string& name) {
    std::uint32_t factor = 0;
    const auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), factor);
    if (ec != std::errc() || ptr != name.data() + name.size()) fail(start, "malformed letter token");
    ++pos_;  // ':'
    const auto elem = signed_int("expected element id");
    const Letter a{factor, elem};
    try {
      check_letter(spec_, a);
    } catch (const DomainError& e) {
      fail(start, e.what());
    }
    return Word::unchecked({a});
  }

  const GroupSpec& spec_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse_word(const GroupSpec& spec, std::string_view text) { return Parser(spec, text).parse(); }

std::string format_letter(const GroupSpec& spec, const Letter& a) {
  for (const auto& [name, g] : spec.generators()) {
    if (g == a) return name;
  }
  const auto& f = spec.factor(a.factor);
  for (const auto& [name, g] : spec.generators()) {
    if (g.factor != a.factor) continue;
    if (f.is_infinite()) {
      if (a.elem % g.elem == 0) return name + "^" + std::to_string(a.elem / g.elem);
      continue;
    }
    const auto ord = f.element_order(g.elem);
    for (std::uint64_t k = 2; ord && k < *ord; ++k) {
      if (f.power(g.elem, static_cast<std::int64_t>(k)) == a.elem) return name + "^" + std::to_string(k);
    }
  }
  return "f" + std::to_string(a.factor) + ":" + std::to_string(a.elem);
}

std::string format_word(const GroupSpec& spec, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_letter(spec, w[i]);
  }
  return out;
}

}  // namespace freeprod
