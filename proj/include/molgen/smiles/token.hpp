#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace molgen::smiles {

enum class TokenKind {
  Atom,
  BracketAtom,
  Bond,
  BranchOpen,
  BranchClose,
  RingBondDigit,
  RingBondTwoDigit,
  Dot,
};

struct Token {
  TokenKind kind;
  std::string text;
  int position = 0;  // character offset in the source string
};

enum class ErrorClass {
  UnclosedParenthesis,
  UnmatchedRingClosure,
  BadValence,
  Lexical,
  Other,
};

struct ParseError {
  int position = 0;
  ErrorClass error_class = ErrorClass::Other;
  std::string message;
};

std::string_view to_string(ErrorClass c);

using TokenizeResult = std::variant<std::vector<Token>, ParseError>;

// Splits a SMILES string into tokens. Token texts concatenate back to the
// input. Two-letter elements (Cl, Br) are matched greedily, both bare and
// inside brackets; a bracket atom is one token.
TokenizeResult tokenize(std::string_view s);

}  // namespace molgen::smiles
