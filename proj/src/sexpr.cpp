#include "sexpr.hpp"

#include "ast.hpp"

namespace ctw {

namespace {

struct Lexer {
  const std::string& src;
  std::size_t pos = 0;

  explicit Lexer(const std::string& s) : src(s) {}

  void skipSpace() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ';') {  // comment to end of line
        while (pos < src.size() && src[pos] != '\n') ++pos;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos;
      } else {
        break;
      }
    }
  }

  bool atEnd() {
    skipSpace();
    return pos >= src.size();
  }

  SExpr next() {
    skipSpace();
    if (pos >= src.size()) throw ParseError("unexpected end of input", pos);
    std::size_t start = pos;
    char c = src[pos];
    if (c == '(') {
      ++pos;
      std::vector<SExpr> items;
      for (;;) {
        skipSpace();
        if (pos >= src.size()) throw ParseError("unterminated list", start);
        if (src[pos] == ')') {
          ++pos;
          break;
        }
        items.push_back(next());
      }
      SExpr e = SExpr::makeList(std::move(items));
      e.pos = start;
      return e;
    }
    if (c == ')') throw ParseError("unexpected ')'", pos);
    if (c == '"') {
      ++pos;
      std::string s;
      for (;;) {
        if (pos >= src.size()) throw ParseError("unterminated string", start);
        char d = src[pos++];
        if (d == '"') break;
        if (d == '\\') {
          if (pos >= src.size()) throw ParseError("dangling escape", pos);
          char e = src[pos++];
          if (e == '"' || e == '\\') s.push_back(e);
          else if (e == 'n') s.push_back('\n');
          else throw ParseError("unknown escape", pos - 1);
        } else {
          s.push_back(d);
        }
      }
      SExpr e = SExpr::makeAtom(std::move(s), true);
      e.pos = start;
      return e;
    }
    std::string tok;
    while (pos < src.size()) {
      char d = src[pos];
      if (d == '(' || d == ')' || d == '"' || d == ';' || d == ' ' || d == '\t' || d == '\n' ||
          d == '\r')
        break;
      tok.push_back(d);
      ++pos;
    }
    SExpr e = SExpr::makeAtom(std::move(tok));
    e.pos = start;
    return e;
  }
};

}  // namespace

SExpr sexprParseOne(const std::string& text) {
  Lexer lx(text);
  SExpr e = lx.next();
  if (!lx.atEnd()) throw ParseError("trailing input after expression", lx.pos);
  return e;
}

std::vector<SExpr> sexprParseMany(const std::string& text) {
  Lexer lx(text);
  std::vector<SExpr> out;
  while (!lx.atEnd()) out.push_back(lx.next());
  return out;
}

static void renderInto(const SExpr& e, std::string& out) {
  if (e.isAtom) {
    if (e.quoted) {
      out.push_back('"');
      for (char c : e.atom) {
        if (c == '"' || c == '\\') out.push_back('\\');
        if (c == '\n') {
          out += "\\n";
          continue;
        }
        out.push_back(c);
      }
      out.push_back('"');
    } else {
      out += e.atom;
    }
    return;
  }
  out.push_back('(');
  for (std::size_t i = 0; i < e.items.size(); ++i) {
    if (i) out.push_back(' ');
    renderInto(e.items[i], out);
  }
  out.push_back(')');
}

std::string sexprRender(const SExpr& e) {
  std::string out;
  renderInto(e, out);
  return out;
}

}  // namespace ctw
