#pragma once

// Minimal generic S-expression reader/writer.  Atoms are bare tokens or
// double-quoted strings (with \" and \\ escapes); lists use parentheses.
// Formula-level parsing sits on top of this (syntax.cpp), and the container
// serializers (serial.cpp) reuse it.

#include <cstddef>
#include <string>
#include <vector>

namespace ctw {

struct SExpr {
  bool isAtom = false;
  bool quoted = false;      // atom came from a quoted string
  std::string atom;         // valid when isAtom
  std::vector<SExpr> items; // valid when !isAtom
  std::size_t pos = 0;      // byte offset of the node in the source

  static SExpr makeAtom(std::string s, bool q = false) {
    SExpr e;
    e.isAtom = true;
    e.quoted = q;
    e.atom = std::move(s);
    return e;
  }
  static SExpr makeList(std::vector<SExpr> xs) {
    SExpr e;
    e.items = std::move(xs);
    return e;
  }
};

// Parses exactly one S-expression; trailing input is an error.
SExpr sexprParseOne(const std::string& text);
// Parses a whitespace-separated sequence of S-expressions (possibly empty).
std::vector<SExpr> sexprParseMany(const std::string& text);

std::string sexprRender(const SExpr& e);

}  // namespace ctw
