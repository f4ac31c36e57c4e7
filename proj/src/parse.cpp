#include "borsuk/parse.hpp"

#include <array>
#include <cctype>
#include <limits>
#include <string>
#include <vector>

#include "borsuk/errors.hpp"

namespace borsuk {

using abelian::FgAbelianGroup;
using spaces::SpaceExpr;

namespace {

enum class Tok { end, integer, word, symbol };

struct Token {
  Tok kind = Tok::end;
  std::string text;
  std::size_t column = 0;  // 1-based
};

constexpr std::array<std::string_view, 7> kWords{"CP", "S", "M", "K", "Z", "v", "x"};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char ch = s[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    const std::size_t column = i + 1;
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::integer, std::string(s.substr(i, j - i)), column});
      i = j;
      continue;
    }
    if (std::string_view("*()^,+/").find(ch) != std::string_view::npos) {
      out.push_back({Tok::symbol, std::string(1, ch), column});
      ++i;
      continue;
    }
    // Longest keyword match, so "CP" wins over a stray "C".
    std::string_view best;
    for (std::string_view w : kWords) {
      if (s.substr(i, w.size()) == w && w.size() > best.size()) best = w;
    }
    if (best.empty()) {
      throw ParseError(column, "a space or group literal",
                       "column " + std::to_string(column) + ": unexpected character '" +
                           std::string(1, ch) + "'");
    }
    out.push_back({Tok::word, std::string(best), column});
    i += best.size();
  }
  out.push_back({Tok::end, "", s.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  FgAbelianGroup whole_group() {
    FgAbelianGroup g = group();
    expect_end();
    return g;
  }

  SpaceExpr whole_space() {
    SpaceExpr x = wedge();
    expect_end();
    return x;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at(std::string_view text) const {
    return peek().kind != Tok::end && peek().kind != Tok::integer && peek().text == text;
  }

  [[noreturn]] void fail(std::string_view expected) const {
    const Token& t = peek();
    const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ParseError(t.column, std::string(expected),
                     "column " + std::to_string(t.column) + ": expected " +
                         std::string(expected) + ", found " + found);
  }

  void expect(std::string_view text) {
    if (!at(text)) fail("'" + std::string(text) + "'");
    ++pos_;
  }

  void expect_end() {
    if (peek().kind != Tok::end) fail("end of input");
  }

  Integer integer() {
    if (peek().kind != Tok::integer) fail("an integer");
    Integer n(peek().text);
    ++pos_;
    return n;
  }

  int small_integer() {
    const std::size_t column = peek().column;
    const Integer n = integer();
    if (n > std::numeric_limits<int>::max()) {
      throw ParseError(column, "a degree", "column " + std::to_string(column) + ": degree too large");
    }
    return static_cast<int>(n.get_si());
  }

  // group := term ('+' term)*
  FgAbelianGroup group() {
    FgAbelianGroup g = group_term();
    while (at("+")) {
      ++pos_;
      g = abelian::direct_sum(g, group_term());
    }
    return g;
  }

  // term := '0' | 'Z' | 'Z^' int | 'Z/' int
  FgAbelianGroup group_term() {
    if (peek().kind == Tok::integer && peek().text == "0") {
      ++pos_;
      return FgAbelianGroup::trivial();
    }
    if (!at("Z")) fail("a group term ('0', 'Z', 'Z^r' or 'Z/n')");
    ++pos_;
    if (at("^")) {
      ++pos_;
      const Integer r = integer();
      if (!r.fits_ulong_p()) throw DomainError("free rank too large: " + r.get_str());
      return FgAbelianGroup::free(r.get_ui());
    }
    if (at("/")) {
      ++pos_;
      const Integer n = integer();
      if (n < 2) throw DomainError("cyclic group Z/n needs n >= 2, got Z/" + n.get_str());
      return FgAbelianGroup::cyclic(n);
    }
    return FgAbelianGroup::free(1);
  }

  // wedge := product ('v' product)*
  SpaceExpr wedge() {
    std::vector<SpaceExpr> parts{product()};
    while (at("v")) {
      ++pos_;
      parts.push_back(product());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return SpaceExpr::wedge(std::move(parts));
  }

  // product := atom ('x' atom)*
  SpaceExpr product() {
    std::vector<SpaceExpr> parts{atom()};
    while (at("x")) {
      ++pos_;
      parts.push_back(atom());
    }
    if (parts.size() == 1) return std::move(parts.front());
    return SpaceExpr::product(std::move(parts));
  }

  SpaceExpr atom() {
    if (at("*")) {
      ++pos_;
      return SpaceExpr::point();
    }
    if (at("(")) {
      ++pos_;
      SpaceExpr x = wedge();
      expect(")");
      return x;
    }
    if (at("S")) {
      ++pos_;
      expect("^");
      return SpaceExpr::sphere(small_integer());
    }
    if (at("CP")) {
      ++pos_;
      expect("^");
      const int n = small_integer();
      if (n == 1) throw DomainError("CP^1 is not a separate space here; write S^2");
      return SpaceExpr::complex_projective(n);
    }
    if (at("M") || at("K")) {
      const bool moore = at("M");
      ++pos_;
      expect("(");
      FgAbelianGroup g = group();
      expect(",");
      const int n = small_integer();
      expect(")");
      return moore ? SpaceExpr::moore(std::move(g), n)
                   : SpaceExpr::eilenberg_maclane(std::move(g), n);
    }
    fail("a space ('*', 'S^n', 'CP^n', 'M(A, n)', 'K(A, n)' or '(')");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FgAbelianGroup parse_group(std::string_view text) { return Parser(text).whole_group(); }

SpaceExpr parse_space(std::string_view text) { return Parser(text).whole_space(); }

}  // namespace borsuk
