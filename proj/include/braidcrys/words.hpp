// Textual generator words.
//
// Grammar (tokens separated by whitespace):
//   token  := ("s" | "r") index
//           | "l[" i "," j "]"
//           | "a[" i "," j "]"
//           | "t" index
//   each token may be followed by "^" and a signed integer exponent
// The empty string is the identity word.  Unicode sigma/rho are accepted as
// aliases for s/r on input; output is always ASCII.

#ifndef BRAIDCRYS_WORDS_HPP_
#define BRAIDCRYS_WORDS_HPP_

#include <cctype>
#include <string>
#include <string_view>

#include "braidcrys/families.hpp"

namespace braidcrys {

struct SyntaxError : std::runtime_error {
  size_t offset;
  SyntaxError(size_t at, const std::string& what)
      : std::runtime_error("syntax error at byte " + std::to_string(at) + ": " + what),
        offset(at) {}
};

inline GenWord parse(std::string_view text) {
  GenWord word;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto read_int = [&](bool allow_sign) -> Bigint {
    size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
    size_t digits_at = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits_at) throw SyntaxError(pos, "expected an integer");
    return Bigint::from_string(text.substr(start, pos - start));
  };
  auto read_index = [&]() -> int {
    Bigint v = read_int(false);
    if (!v.fits_slonglong() || v.as_slonglong() > 1000000)
      throw SyntaxError(pos, "index too large");
    return static_cast<int>(v.as_slonglong());
  };
  while (true) {
    skip_ws();
    if (pos == text.size()) break;
    GeneratorSymbol sym;
    unsigned char c0 = static_cast<unsigned char>(text[pos]);
    if (c0 == 0xCF && pos + 1 < text.size()) {
      unsigned char c1 = static_cast<unsigned char>(text[pos + 1]);
      if (c1 == 0x83) {  // sigma
        sym.kind = GenKind::Sigma;
        pos += 2;
      } else if (c1 == 0x81) {  // rho
        sym.kind = GenKind::Rho;
        pos += 2;
      } else {
        throw SyntaxError(pos, "unknown generator letter");
      }
      sym.i = read_index();
    } else if (c0 == 's' || c0 == 'r' || c0 == 't') {
      sym.kind = c0 == 's' ? GenKind::Sigma : c0 == 'r' ? GenKind::Rho : GenKind::Tau;
      ++pos;
      sym.i = read_index();
    } else if (c0 == 'l' || c0 == 'a') {
      sym.kind = c0 == 'l' ? GenKind::Lambda : GenKind::Alpha;
      ++pos;
      if (pos >= text.size() || text[pos] != '[')
        throw SyntaxError(pos, "expected '['");
      ++pos;
      sym.i = read_index();
      if (pos >= text.size() || text[pos] != ',')
        throw SyntaxError(pos, "expected ','");
      ++pos;
      sym.j = read_index();
      if (pos >= text.size() || text[pos] != ']')
        throw SyntaxError(pos, "expected ']'");
      ++pos;
    } else {
      throw SyntaxError(pos, "unknown generator letter");
    }
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      sym.exponent = read_int(true);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw SyntaxError(pos, "unexpected character after token");
    word.tokens.push_back(std::move(sym));
  }
  return word;
}

inline std::string format_symbol(const GeneratorSymbol& s) {
  std::string out;
  switch (s.kind) {
    case GenKind::Sigma: out = "s" + std::to_string(s.i); break;
    case GenKind::Rho: out = "r" + std::to_string(s.i); break;
    case GenKind::Tau: out = "t" + std::to_string(s.i); break;
    case GenKind::Lambda:
      out = "l[" + std::to_string(s.i) + "," + std::to_string(s.j) + "]";
      break;
    case GenKind::Alpha:
      out = "a[" + std::to_string(s.i) + "," + std::to_string(s.j) + "]";
      break;
  }
  if (s.exponent != Bigint(1)) out += "^" + s.exponent.str();
  return out;
}

inline std::string format_word(const GenWord& w) {
  std::string out;
  for (size_t k = 0; k < w.tokens.size(); ++k) {
    if (k) out += ' ';
    out += format_symbol(w.tokens[k]);
  }
  return out;
}

inline Element evaluate(const GenWord& word, const CrystalGroupPtr& g) {
  return evaluate_word(g, word);
}
inline Element evaluate(std::string_view text, const CrystalGroupPtr& g) {
  return evaluate_word(g, parse(text));
}

// canonical text: basis factors in basis order with zero exponents omitted,
// then the point part; "1" stands for the empty product
inline std::string format_element(const Element& e) {
  const CrystalGroup& g = *e.group;
  std::string out;
  const char* letter = g.family() == FamilyTag::PLBEXT ? "a" : "l";
  for (int k = 0; k < g.rank(); ++k) {
    if (e.v[k].is_zero()) continue;
    if (!out.empty()) out += ' ';
    out += letter;
    out += '[' + std::to_string(g.label(k).i) + ',' + std::to_string(g.label(k).j) + ']';
    if (e.v[k] != Bigint(1)) out += "^" + e.v[k].str();
  }
  if (out.empty()) out = "1";
  if (g.point_kind() == PointKind::Perms) {
    out += " | perm=" + Perm(e.w.data).cycle_string();
  } else {
    std::string taus;
    for (int k = 0; k < g.n(); ++k)
      if (e.w.data[k] < 0) {
        if (!taus.empty()) taus += ' ';
        taus += "t" + std::to_string(k + 1);
      }
    out += " | tau=" + (taus.empty() ? std::string("()") : taus);
  }
  return out;
}

}  // namespace braidcrys

#endif
