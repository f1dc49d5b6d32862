#pragma once
// Generator words.  Grammar:
//   word   := letter (";" letter)*
//   letter := "x" i "(" lit ")"  |  "s1"  |  "s6"  |  "h:id|sigma|sigma2"
// with i in {1..7, 12}; lit is a field literal over J for odd i and over
// F for even i.  s1 and s6 denote s1(1) and s6(1).  A word realizes the
// product g = l1 l2 ... lm acting on elements by left multiplication.

#include <string>
#include <vector>

#include "hexsystem.hpp"

namespace hexforge {

struct GenLetter {
  enum class Tag { X, S1, S6, Aut } tag = Tag::S1;
  int index = 0;             // for X: 1..7 or 12
  FieldElement coeff;        // J-embedded
  AutLabel aut = AutLabel::Id;

  static GenLetter x(int i, FieldElement c) {
    GenLetter l;
    l.tag = Tag::X;
    l.index = i;
    l.coeff = std::move(c);
    return l;
  }
  static GenLetter s1() {
    GenLetter l;
    l.tag = Tag::S1;
    return l;
  }
  static GenLetter s6() {
    GenLetter l;
    l.tag = Tag::S6;
    return l;
  }
  static GenLetter h(AutLabel a) {
    GenLetter l;
    l.tag = Tag::Aut;
    l.aut = a;
    return l;
  }
};

using Word = std::vector<GenLetter>;

inline std::string format_word(const HexSystem& sys, const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ";";
    const GenLetter& l = w[i];
    switch (l.tag) {
      case GenLetter::Tag::X: {
        bool odd = l.index % 2 == 1;
        std::string lit = odd ? l.coeff.format() : sys.to_F(l.coeff).format();
        out += "x" + std::to_string(l.index) + "(" + lit + ")";
        break;
      }
      case GenLetter::Tag::S1: out += "s1"; break;
      case GenLetter::Tag::S6: out += "s6"; break;
      case GenLetter::Tag::Aut: out += std::string("h:") + aut_label_name(l.aut); break;
    }
  }
  return out;
}

inline Word parse_word(const HexSystem& sys, const std::string& text) {
  Word w;
  std::string s;
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) return w;  // the identity
  std::size_t pos = 0;
  auto token_end = [&](std::size_t from) {
    int depth = 0;
    for (std::size_t i = from; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') --depth;
      if (s[i] == ';' && depth == 0) return i;
    }
    return s.size();
  };
  while (pos < s.size()) {
    std::size_t end = token_end(pos);
    std::string tok = s.substr(pos, end - pos);
    if (tok.empty())
      fail(ErrorKind::SyntaxError, "empty letter at position " + std::to_string(pos));
    if (tok == "s1") {
      w.push_back(GenLetter::s1());
    } else if (tok == "s6") {
      w.push_back(GenLetter::s6());
    } else if (tok.rfind("h:", 0) == 0) {
      std::string a = tok.substr(2);
      AutLabel lab;
      if (a == "id")
        lab = AutLabel::Id;
      else if (a == "sigma")
        lab = AutLabel::Sigma;
      else if (a == "sigma2")
        lab = AutLabel::Sigma2;
      else
        fail(ErrorKind::SyntaxError, "unknown automorphism '" + a + "' at position " + std::to_string(pos));
      if (lab != AutLabel::Id && sys.kind() != SystemKind::ThreeF)
        fail(ErrorKind::CoefficientDomainMismatch,
             "automorphism '" + a + "' needs a cubic extension system");
      w.push_back(GenLetter::h(lab));
    } else if (tok[0] == 'x') {
      std::size_t par = tok.find('(');
      if (par == std::string::npos || tok.back() != ')')
        fail(ErrorKind::SyntaxError, "letter '" + tok + "' at position " + std::to_string(pos) +
                                         ": expected xi(lit)");
      int idx;
      try {
        idx = std::stoi(tok.substr(1, par - 1));
      } catch (const std::exception&) {
        fail(ErrorKind::SyntaxError, "bad index in '" + tok + "' at position " + std::to_string(pos));
      }
      if (!((idx >= 1 && idx <= 7) || idx == 12))
        fail(ErrorKind::IndexOutOfRange,
             "index " + std::to_string(idx) + " at position " + std::to_string(pos) +
                 ": only x1..x7 and x12 are reachable");
      std::string lit = tok.substr(par + 1, tok.size() - par - 2);
      FieldElement c;
      if (idx % 2 == 1) {
        c = parse_field_literal(sys.J(), lit);
      } else {
        // even-index coefficients live in F
        try {
          c = sys.embed_scalar(parse_field_literal(sys.F(), lit));
        } catch (const HexError& e) {
          if (e.kind() == ErrorKind::SyntaxError)
            fail(ErrorKind::CoefficientDomainMismatch,
                 "coefficient of x" + std::to_string(idx) + " must lie in F: '" + lit + "'");
          throw;
        }
      }
      w.push_back(GenLetter::x(idx, c));
    } else {
      fail(ErrorKind::SyntaxError, "unknown letter '" + tok + "' at position " + std::to_string(pos));
    }
    pos = (end < s.size()) ? end + 1 : end;
    if (pos == s.size() && end < s.size())
      fail(ErrorKind::SyntaxError, "trailing ';'");
  }
  return w;
}

}  // namespace hexforge
