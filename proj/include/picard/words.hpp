#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "picard/cyclotomic.hpp"

namespace picard {

struct UnknownGenerator : std::runtime_error {
  explicit UnknownGenerator(const std::string& name)
      : std::runtime_error("unknown generator '" + name + "'") {}
};

enum class Gen { P, Q, R, R1, R2, R3, J, Id };

const char* gen_name(Gen g);
/// Resolves a generator name; throws UnknownGenerator.
Gen gen_from_name(const std::string& name);

/// A word over the generator alphabet: (generator, nonzero exponent) pairs,
/// except the single-element identity word.
struct Word {
  struct Letter {
    Gen gen;
    long exp;
  };
  std::vector<Letter> letters;

  bool is_identity() const {
    for (const Letter& l : letters)
      if (l.gen != Gen::Id) return false;
    return true;
  }
  Word inverse() const;
  std::string to_string() const;
};

/// Grammar: word := elem (('*' | whitespace) elem)*;
///          elem := atom ('^' signed-int)?;
///          atom := generator | '(' word ')'.
/// The result is flattened left to right; exponents distribute over
/// parenthesized groups. Throws ParseError (with position) or
/// UnknownGenerator.
Word parse_word(const std::string& text);

/// Same grammar over a caller-supplied alphabet; symbols resolved by name.
std::vector<std::pair<int, long>> parse_symbol_word(
    const std::string& text,
    const std::function<int(const std::string&)>& resolve);

}  // namespace picard
