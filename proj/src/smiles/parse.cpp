#include "molgen/smiles/parse.hpp"

#include <cctype>
#include <map>

#include "molgen/chem/rings.hpp"
#include "molgen/chem/valence.hpp"

namespace molgen::smiles {

namespace {

using chem::BondOrder;
using chem::MolGraph;

struct BracketFields {
  chem::Atom atom;
  std::optional<ParseError> error;
};

BracketFields parse_bracket(const std::string& text, int pos) {
  BracketFields out;
  std::string_view body(text);
  body.remove_prefix(1);
  body.remove_suffix(1);
  size_t i = 0;

  auto fail = [&](const std::string& msg) {
    out.error = ParseError{pos, ErrorClass::Lexical, msg};
    return out;
  };

  int isotope = 0;
  bool has_isotope = false;
  while (i < body.size() && isdigit(static_cast<unsigned char>(body[i]))) {
    isotope = isotope * 10 + (body[i] - '0');
    has_isotope = true;
    ++i;
  }
  if (i >= body.size()) return fail("bracket atom has no element");

  std::string sym;
  bool aromatic = false;
  if (islower(static_cast<unsigned char>(body[i]))) {
    sym = std::string(1, static_cast<char>(toupper(body[i])));
    aromatic = true;
    ++i;
  } else {
    sym += body[i++];
    if (i < body.size() && islower(static_cast<unsigned char>(body[i]))) {
      // Two-letter symbol only if it names a supported element; otherwise
      // the lowercase letter belongs to the next field (none start lowercase,
      // so it is simply an error later).
      std::string two = sym + body[i];
      if (chem::element_from_symbol(two)) {
        sym = two;
        ++i;
      }
    }
  }
  auto elem = chem::element_from_symbol(sym);
  if (!elem) return fail("unsupported element '" + sym + "'");
  if (aromatic && !chem::aromatic_capable(*elem)) {
    return fail("element '" + sym + "' cannot be aromatic");
  }

  while (i < body.size() && body[i] == '@') ++i;  // stereo ignored

  int hcount = 0;
  if (i < body.size() && body[i] == 'H') {
    ++i;
    hcount = 1;
    if (i < body.size() && isdigit(static_cast<unsigned char>(body[i]))) {
      hcount = body[i] - '0';
      ++i;
    }
  }

  int charge = 0;
  if (i < body.size() && (body[i] == '+' || body[i] == '-')) {
    const char sign_char = body[i];
    const int sign = sign_char == '+' ? 1 : -1;
    ++i;
    if (i < body.size() && isdigit(static_cast<unsigned char>(body[i]))) {
      charge = sign * (body[i] - '0');
      ++i;
    } else {
      charge = sign;
      while (i < body.size() && body[i] == sign_char) {
        charge += sign;
        ++i;
      }
    }
  }
  if (i != body.size()) return fail("unexpected character in bracket atom");
  if (charge < -2 || charge > 2) return fail("charge out of supported range");

  out.atom.element = *elem;
  out.atom.is_aromatic = aromatic;
  out.atom.formal_charge = charge;
  out.atom.explicit_h = hcount;
  out.atom.bracket = true;
  if (has_isotope) out.atom.isotope = isotope;
  return out;
}

BondOrder bond_from_char(char c) {
  switch (c) {
    case '=': return BondOrder::Double;
    case '#': return BondOrder::Triple;
    case ':': return BondOrder::Aromatic;
    default: return BondOrder::Single;  // '-', '/', '\'
  }
}

struct RingOpening {
  int atom;
  std::optional<BondOrder> order;
  int position;
};

}  // namespace

ParseResult parse(std::string_view s) {
  ParseResult result;
  if (s.empty()) {
    result.error = ParseError{0, ErrorClass::Other, "empty input"};
    return result;
  }
  auto tokenized = tokenize(s);
  if (auto* err = std::get_if<ParseError>(&tokenized)) {
    result.error = *err;
    return result;
  }
  const auto& tokens = std::get<std::vector<Token>>(tokenized);

  MolGraph g;
  std::vector<int> atom_pos;
  int prev = -1;
  std::optional<BondOrder> pending;
  int pending_pos = 0;

  struct BranchFrame {
    int atom;
    int position;
    bool grew = false;
  };
  std::vector<BranchFrame> branch_stack;
  std::map<int, RingOpening> open_rings;

  auto fail = [&](int pos, ErrorClass cls, const std::string& msg) {
    result.error = ParseError{pos, cls, msg};
    return result;
  };

  auto add_parsed_atom = [&](chem::Atom atom, int pos) -> std::optional<ParseError> {
    int idx = g.add_atom(atom);
    atom_pos.push_back(pos);
    if (prev >= 0) {
      BondOrder order;
      if (pending) {
        order = *pending;
      } else {
        order = (g.atoms[prev].is_aromatic && atom.is_aromatic)
                    ? BondOrder::Aromatic
                    : BondOrder::Single;
      }
      if (g.add_bond(prev, idx, order) < 0) {
        return ParseError{pos, ErrorClass::Other, "duplicate bond between atoms"};
      }
    }
    pending.reset();
    prev = idx;
    if (!branch_stack.empty()) branch_stack.back().grew = true;
    return std::nullopt;
  };

  for (const Token& tok : tokens) {
    switch (tok.kind) {
      case TokenKind::Atom: {
        chem::Atom atom;
        const bool aromatic = islower(static_cast<unsigned char>(tok.text[0])) != 0;
        std::string sym = tok.text;
        if (aromatic) sym[0] = static_cast<char>(toupper(sym[0]));
        auto elem = chem::element_from_symbol(sym);
        if (!elem) return fail(tok.position, ErrorClass::Lexical, "unknown element");
        atom.element = *elem;
        atom.is_aromatic = aromatic;
        if (auto err = add_parsed_atom(atom, tok.position)) {
          result.error = *err;
          return result;
        }
        break;
      }
      case TokenKind::BracketAtom: {
        auto fields = parse_bracket(tok.text, tok.position);
        if (fields.error) {
          result.error = *fields.error;
          return result;
        }
        if (auto err = add_parsed_atom(fields.atom, tok.position)) {
          result.error = *err;
          return result;
        }
        break;
      }
      case TokenKind::Bond:
        if (pending) {
          return fail(tok.position, ErrorClass::Other, "two bond symbols in a row");
        }
        if (prev < 0) {
          return fail(tok.position, ErrorClass::Other, "bond with no preceding atom");
        }
        pending = bond_from_char(tok.text[0]);
        pending_pos = tok.position;
        break;
      case TokenKind::BranchOpen:
        if (prev < 0) {
          return fail(tok.position, ErrorClass::Other, "branch with no preceding atom");
        }
        if (pending) {
          return fail(tok.position, ErrorClass::Other, "bond before branch open");
        }
        branch_stack.push_back({prev, tok.position});
        break;
      case TokenKind::BranchClose:
        if (branch_stack.empty()) {
          return fail(tok.position, ErrorClass::UnclosedParenthesis,
                      "')' without matching '('");
        }
        if (pending) {
          return fail(pending_pos, ErrorClass::Other, "dangling bond before ')'");
        }
        if (!branch_stack.back().grew) {
          return fail(tok.position, ErrorClass::Other, "empty branch");
        }
        prev = branch_stack.back().atom;
        branch_stack.pop_back();
        break;
      case TokenKind::RingBondDigit:
      case TokenKind::RingBondTwoDigit: {
        if (prev < 0) {
          return fail(tok.position, ErrorClass::Other,
                      "ring closure with no preceding atom");
        }
        const int digit = tok.kind == TokenKind::RingBondDigit
                              ? tok.text[0] - '0'
                              : std::stoi(tok.text.substr(1));
        auto it = open_rings.find(digit);
        if (it == open_rings.end()) {
          open_rings.emplace(digit, RingOpening{prev, pending, tok.position});
          pending.reset();
        } else {
          const RingOpening opening = it->second;
          open_rings.erase(it);
          if (opening.atom == prev) {
            return fail(tok.position, ErrorClass::Other,
                        "ring closure to the same atom");
          }
          if (opening.order && pending && *opening.order != *pending) {
            return fail(tok.position, ErrorClass::Other,
                        "conflicting ring closure bond orders");
          }
          BondOrder order;
          if (opening.order) {
            order = *opening.order;
          } else if (pending) {
            order = *pending;
          } else {
            order = (g.atoms[opening.atom].is_aromatic && g.atoms[prev].is_aromatic)
                        ? BondOrder::Aromatic
                        : BondOrder::Single;
          }
          if (g.add_bond(opening.atom, prev, order) < 0) {
            return fail(tok.position, ErrorClass::Other,
                        "ring closure duplicates an existing bond");
          }
          pending.reset();
        }
        break;
      }
      case TokenKind::Dot:
        if (pending) {
          return fail(pending_pos, ErrorClass::Other, "bond before dot");
        }
        prev = -1;
        break;
    }
  }

  if (pending) {
    return fail(pending_pos, ErrorClass::Other, "dangling bond at end of input");
  }
  if (!branch_stack.empty()) {
    return fail(branch_stack.back().position, ErrorClass::UnclosedParenthesis,
                "'(' never closed");
  }
  if (!open_rings.empty()) {
    return fail(open_rings.begin()->second.position, ErrorClass::UnmatchedRingClosure,
                "ring closure digit never paired");
  }
  if (g.atom_count() == 0) {
    return fail(0, ErrorClass::Other, "no atoms");
  }

  // Aromatic bonds must join aromatic atoms.
  for (const auto& b : g.bonds) {
    if (b.order == BondOrder::Aromatic &&
        (!g.atoms[b.a].is_aromatic || !g.atoms[b.b].is_aromatic)) {
      return fail(atom_pos[b.a], ErrorClass::Other,
                  "aromatic bond between non-aromatic atoms");
    }
  }

  MolGraph perceived = chem::perceive_rings(std::move(g));

  auto bad_aromatic = chem::aromatic_inconsistencies(perceived);
  if (!bad_aromatic.empty()) {
    return fail(atom_pos[bad_aromatic.front()], ErrorClass::Other,
                "aromatic atom outside an aromatic ring");
  }
  auto violations = chem::check_valence(perceived);
  if (!violations.empty()) {
    return fail(atom_pos[violations.front().atom], ErrorClass::BadValence,
                violations.front().reason);
  }

  result.mol = std::move(perceived);
  return result;
}

}  // namespace molgen::smiles
