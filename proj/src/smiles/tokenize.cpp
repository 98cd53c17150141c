#include "molgen/smiles/token.hpp"

#include <cctype>

namespace molgen::smiles {

std::string_view to_string(ErrorClass c) {
  switch (c) {
    case ErrorClass::UnclosedParenthesis: return "unclosed_parenthesis";
    case ErrorClass::UnmatchedRingClosure: return "unmatched_ring_closure";
    case ErrorClass::BadValence: return "bad_valence";
    case ErrorClass::Lexical: return "lexical";
    case ErrorClass::Other: return "other";
  }
  return "other";
}

namespace {

bool is_bare_atom_start(char c) {
  switch (c) {
    case 'B': case 'C': case 'N': case 'O': case 'P': case 'S':
    case 'F': case 'I':
    case 'b': case 'c': case 'n': case 'o': case 'p': case 's':
      return true;
    default:
      return false;
  }
}

bool is_bond_char(char c) {
  return c == '-' || c == '=' || c == '#' || c == ':' || c == '/' || c == '\\';
}

}  // namespace

TokenizeResult tokenize(std::string_view s) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int pos = static_cast<int>(i);
    if (c == '(') {
      tokens.push_back({TokenKind::BranchOpen, "(", pos});
      ++i;
    } else if (c == ')') {
      tokens.push_back({TokenKind::BranchClose, ")", pos});
      ++i;
    } else if (c == '.') {
      tokens.push_back({TokenKind::Dot, ".", pos});
      ++i;
    } else if (is_bond_char(c)) {
      tokens.push_back({TokenKind::Bond, std::string(1, c), pos});
      ++i;
    } else if (c >= '0' && c <= '9') {
      tokens.push_back({TokenKind::RingBondDigit, std::string(1, c), pos});
      ++i;
    } else if (c == '%') {
      if (i + 2 >= s.size() || !isdigit(static_cast<unsigned char>(s[i + 1])) ||
          !isdigit(static_cast<unsigned char>(s[i + 2]))) {
        return ParseError{pos, ErrorClass::Lexical,
                          "'%' must be followed by two digits"};
      }
      tokens.push_back({TokenKind::RingBondTwoDigit, std::string(s.substr(i, 3)), pos});
      i += 3;
    } else if (c == '[') {
      size_t close = s.find(']', i + 1);
      if (close == std::string_view::npos) {
        return ParseError{pos, ErrorClass::Lexical, "unterminated bracket atom"};
      }
      if (close == i + 1) {
        return ParseError{pos, ErrorClass::Lexical, "empty bracket atom"};
      }
      tokens.push_back(
          {TokenKind::BracketAtom, std::string(s.substr(i, close - i + 1)), pos});
      i = close + 1;
    } else if (c == 'C' && i + 1 < s.size() && s[i + 1] == 'l') {
      tokens.push_back({TokenKind::Atom, "Cl", pos});
      i += 2;
    } else if (c == 'B' && i + 1 < s.size() && s[i + 1] == 'r') {
      tokens.push_back({TokenKind::Atom, "Br", pos});
      i += 2;
    } else if (is_bare_atom_start(c)) {
      tokens.push_back({TokenKind::Atom, std::string(1, c), pos});
      ++i;
    } else {
      return ParseError{pos, ErrorClass::Lexical,
                        std::string("character '") + c + "' is not SMILES"};
    }
  }
  return tokens;
}

}  // namespace molgen::smiles
