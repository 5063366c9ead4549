#include "smm/parse.hpp"

#include <cctype>

namespace smm {

namespace {

struct Parser {
  std::string_view src;
  std::size_t pos = 0;
  AtomKind identKind;  // Gen or Var

  void skipWs() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool atEnd() {
    skipWs();
    return pos >= src.size();
  }

  char peek() {
    skipWs();
    return pos < src.size() ? src[pos] : '\0';
  }

  void expect(char c) {
    skipWs();
    if (pos >= src.size() || src[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  static bool identStart(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool identChar(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string ident() {
    skipWs();
    if (pos >= src.size() || !identStart(src[pos]))
      throw ParseError("expected term", pos);
    std::size_t start = pos;
    while (pos < src.size() && identChar(src[pos])) ++pos;
    return std::string(src.substr(start, pos - start));
  }

  // product := factor ('*' factor)*
  void product(std::string& prefix, Word& out) {
    factor(prefix, out);
    while (peek() == '*') {
      ++pos;
      factor(prefix, out);
    }
  }

  void factor(std::string& prefix, Word& out) {
    skipWs();
    if (pos >= src.size()) throw ParseError("expected term", pos);
    if (src[pos] == '1') {
      ++pos;
      return;  // unit: nothing emitted
    }
    if (src[pos] == '(') {
      ++pos;
      product(prefix, out);
      expect(')');
      return;
    }
    const std::size_t at = pos;
    std::string name = ident();
    if (name == "mu") { out.push(Letter{prefix, Atom{AtomKind::Mu, ""}}); return; }
    if (name == "eta") { out.push(Letter{prefix, Atom{AtomKind::Eta, ""}}); return; }
    if (name == "delta") { out.push(Letter{prefix, Atom{AtomKind::Delta, ""}}); return; }
    if (name == "eps") { out.push(Letter{prefix, Atom{AtomKind::Eps, ""}}); return; }
    if (name == "T" || name == "Q") {
      expect('(');
      prefix.push_back(name[0]);
      product(prefix, out);
      prefix.pop_back();
      expect(')');
      return;
    }
    if (name == "S") {
      // S(w) = mu * T(Q(w) * eta)
      expect('(');
      out.push(Letter{prefix, Atom{AtomKind::Mu, ""}});
      prefix += "TQ";
      product(prefix, out);
      prefix.resize(prefix.size() - 2);
      prefix.push_back('T');
      out.push(Letter{prefix, Atom{AtomKind::Eta, ""}});
      prefix.pop_back();
      expect(')');
      return;
    }
    if (name == "pi") {
      // pi(w) = eps * w * eta
      expect('(');
      out.push(Letter{prefix, Atom{AtomKind::Eps, ""}});
      product(prefix, out);
      out.push(Letter{prefix, Atom{AtomKind::Eta, ""}});
      expect(')');
      return;
    }
    if (pos < src.size() && peek() == '(')
      throw ParseError("unknown function '" + name + "'", at);
    out.push(Letter{prefix, Atom{identKind, std::move(name)}});
  }

  Word run() {
    Word out;
    std::string prefix;
    product(prefix, out);
    skipWs();
    if (pos < src.size())
      throw ParseError("unexpected trailing input", pos);
    return out;
  }
};

}  // namespace

Word parseTerm(std::string_view src) {
  Parser p{src, 0, AtomKind::Gen};
  return p.run();
}

Word parsePattern(std::string_view src) {
  Parser p{src, 0, AtomKind::Var};
  return p.run();
}

}  // namespace smm
