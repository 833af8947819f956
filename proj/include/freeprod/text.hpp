#pragma once

#include <string>
#include <string_view>

#include "freeprod/group.hpp"
#include "freeprod/word.hpp"

namespace freeprod {

// Word expressions:
//
//   expr := term*
//   term := atom ('^' signed-int)?
//   atom := generator-name | 'f' index ':' signed-int | '(' expr ')'
//
// Terms are separated by whitespace (or juxtaposed where unambiguous) and
// multiplied left to right. The empty expression is the identity. Throws
// ParseError with the byte offset of the problem, or ResourceError when a
// power would expand beyond 5e7 letters.
Word parse_word(const GroupSpec& spec, std::string_view text);

// Inverse of parse_word: parse_word(spec, format_word(spec, w)) == w.
std::string format_word(const GroupSpec& spec, const Word& w);
std::string format_letter(const GroupSpec& spec, const Letter& a);

}  // namespace freeprod
