#include "picard/words.hpp"

#include <cctype>
#include <sstream>

namespace picard {

const char* gen_name(Gen g) {
  switch (g) {
    case Gen::P: return "P";
    case Gen::Q: return "Q";
    case Gen::R: return "R";
    case Gen::R1: return "R1";
    case Gen::R2: return "R2";
    case Gen::R3: return "R3";
    case Gen::J: return "J";
    case Gen::Id: return "Id";
  }
  return "?";
}

Gen gen_from_name(const std::string& name) {
  if (name == "P") return Gen::P;
  if (name == "Q") return Gen::Q;
  if (name == "R") return Gen::R;
  if (name == "R1") return Gen::R1;
  if (name == "R2") return Gen::R2;
  if (name == "R3") return Gen::R3;
  if (name == "J") return Gen::J;
  if (name == "Id") return Gen::Id;
  throw UnknownGenerator(name);
}

Word Word::inverse() const {
  Word r;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    if (it->gen != Gen::Id) r.letters.push_back({it->gen, -it->exp});
  if (r.letters.empty()) r.letters.push_back({Gen::Id, 1});
  return r;
}

std::string Word::to_string() const {
  if (letters.empty()) return "Id";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : letters) {
    if (!first) os << "*";
    first = false;
    os << gen_name(l.gen);
    if (l.exp != 1) os << "^" << l.exp;
  }
  return os.str();
}

namespace {

using SymbolSeq = std::vector<std::pair<int, long>>;

struct SymbolParser {
  const std::string& s;
  const std::function<int(const std::string&)>& resolve;
  std::size_t pos = 0;

  SymbolParser(const std::string& text,
               const std::function<int(const std::string&)>& r)
      : s(text), resolve(r) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }

  long parse_signed_int() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits) throw ParseError("expected integer exponent", pos);
    return std::stol(s.substr(start, pos - start));
  }

  SymbolSeq parse_atom() {
    skip_ws();
    if (pos >= s.size()) throw ParseError("expected generator or '('", pos);
    if (s[pos] == '(') {
      ++pos;
      SymbolSeq inner = parse_word(true);
      skip_ws();
      if (pos >= s.size() || s[pos] != ')')
        throw ParseError("expected ')'", pos);
      ++pos;
      return inner;
    }
    std::size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) ||
            s[pos] == '_'))
      ++pos;
    if (pos == start) throw ParseError("expected generator name", pos);
    return {{resolve(s.substr(start, pos - start)), 1}};
  }

  static SymbolSeq invert(const SymbolSeq& w) {
    SymbolSeq r;
    for (auto it = w.rbegin(); it != w.rend(); ++it)
      r.emplace_back(it->first, -it->second);
    return r;
  }

  SymbolSeq parse_elem() {
    SymbolSeq atom = parse_atom();
    skip_ws();
    long e = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      e = parse_signed_int();
    }
    if (e == 0) return {};
    SymbolSeq unit = e < 0 ? invert(atom) : atom;
    if (e < 0) e = -e;
    if (e == 1) return unit;
    // a single symbol takes the exponent directly; groups are repeated
    if (unit.size() == 1) {
      unit[0].second *= e;
      return unit;
    }
    SymbolSeq out;
    for (long rep = 0; rep < e; ++rep)
      out.insert(out.end(), unit.begin(), unit.end());
    return out;
  }

  SymbolSeq parse_word(bool in_parens) {
    SymbolSeq out;
    while (true) {
      SymbolSeq elem = parse_elem();
      out.insert(out.end(), elem.begin(), elem.end());
      skip_ws();
      if (pos >= s.size()) break;
      if (s[pos] == ')') {
        if (!in_parens) throw ParseError("unmatched ')'", pos);
        break;
      }
      if (s[pos] == '*') ++pos;
      // otherwise whitespace juxtaposition; next atom follows
    }
    return out;
  }
};

}  // namespace

std::vector<std::pair<int, long>> parse_symbol_word(
    const std::string& text,
    const std::function<int(const std::string&)>& resolve) {
  SymbolParser p(text, resolve);
  SymbolSeq w = p.parse_word(false);
  p.skip_ws();
  if (p.pos != text.size()) throw ParseError("trailing input", p.pos);
  return w;
}

Word parse_word(const std::string& text) {
  SymbolSeq seq = parse_symbol_word(text, [](const std::string& name) {
    return static_cast<int>(gen_from_name(name));
  });
  Word w;
  for (const auto& [sym, exp] : seq) {
    Gen g = static_cast<Gen>(sym);
    if (g == Gen::Id || exp == 0) continue;
    w.letters.push_back({g, exp});
  }
  if (w.letters.empty()) w.letters.push_back({Gen::Id, 1});
  return w;
}

}  // namespace picard
