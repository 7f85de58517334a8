#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dhat/free_vector.hpp"

namespace dhat {

struct SourcePos {
  int line = 1;
  int column = 1;
};

/// Parse failure carrying the position and the offending token.
class ParseFailure : public Error {
 public:
  ParseFailure(ErrorCode code, SourcePos pos, std::string token, const std::string& message)
      : Error(code, "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + message),
        pos_(pos),
        token_(std::move(token)) {}

  SourcePos pos() const { return pos_; }
  const std::string& token() const { return token_; }

 private:
  SourcePos pos_;
  std::string token_;
};

enum class TokenKind { Ident, Number, Symbol, End };

struct Token {
  TokenKind kind = TokenKind::End;
  std::string text;
  SourcePos pos;
  std::size_t offset = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) { scan(); }

  const std::vector<Token>& tokens() const { return tokens_; }

 private:
  void scan() {
    std::size_t i = 0;
    int line = 1, col = 1;
    auto advance = [&](std::size_t k) {
      for (std::size_t s = 0; s < k; ++s) {
        if (src_[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
        ++i;
      }
    };
    while (i < src_.size()) {
      unsigned char ch = static_cast<unsigned char>(src_[i]);
      if (ch == '#') {
        while (i < src_.size() && src_[i] != '\n') advance(1);
        continue;
      }
      if (std::isspace(ch)) {
        advance(1);
        continue;
      }
      Token t;
      t.pos = {line, col};
      t.offset = i;
      std::size_t j = i;
      if (std::isalpha(ch) || ch == '_') {
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
        t.kind = TokenKind::Ident;
      } else if (std::isdigit(ch)) {
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        t.kind = TokenKind::Number;
      } else if (std::string_view("[](),;=+-*/^").find(static_cast<char>(ch)) != std::string_view::npos) {
        j = i + 1;
        t.kind = TokenKind::Symbol;
      } else {
        std::string bad(1, static_cast<char>(ch));
        if (ch >= 0x80 || !std::isprint(ch)) bad = "\\x" + hex(ch);
        throw ParseFailure(ErrorCode::ParseError, t.pos, bad, "unexpected character '" + bad + "'");
      }
      t.text = std::string(src_.substr(i, j - i));
      advance(j - i);
      tokens_.push_back(std::move(t));
    }
    Token end;
    end.kind = TokenKind::End;
    end.pos = {line, col};
    end.offset = src_.size();
    tokens_.push_back(end);
  }

  static std::string hex(unsigned char c) {
    const char* digits = "0123456789abcdef";
    return {digits[c >> 4], digits[c & 15]};
  }

  std::string_view src_;
  std::vector<Token> tokens_;
};

using LocalElement = WeylElement<LocalScalar>;
using LocalMatrix = WeylMatrix<LocalScalar>;

struct ModuleDecl {
  std::string name;
  LocalMatrix relations;
  SourcePos pos;
};

struct LatticeDecl {
  std::string name;
  std::string module;
  std::optional<LocalMatrix> generators;
  SourcePos pos;
};

struct ComplexDecl {
  std::string name;
  std::vector<std::size_t> ranks;
  std::vector<std::vector<std::vector<LocalScalar>>> matrices;
  SourcePos pos;
};

struct CommandArg {
  std::variant<long, std::string, LocalMatrix> value;
  SourcePos pos;
};

struct Command {
  std::string target;
  std::string subcommand;
  std::vector<CommandArg> args;
  SourcePos pos;
};

/// Parsed input: ring declaration, named objects and the single command.
struct SessionInput {
  int n = 1;
  bool integral = false;
  std::vector<std::string> order;
  std::map<std::string, ModuleDecl> modules;
  std::map<std::string, LatticeDecl> lattices;
  std::map<std::string, ComplexDecl> complexes;
  std::optional<Command> command;

  Algebra local_algebra() const { return {n, RingTag::LocalField}; }
  bool declared(const std::string& name) const {
    return modules.count(name) || lattices.count(name) || complexes.count(name);
  }
};

/// Recursive-descent parser for elements and sessions.
class Parser {
 public:
  Parser(std::string_view src, int n, bool allow_z) : lex_(src), n_(n), allow_z_(allow_z) {}

  static LocalElement element(std::string_view src, int n, bool allow_z = true) {
    Parser p(src, n, allow_z);
    LocalElement e = p.expr();
    p.expect_end();
    return e;
  }

  static LocalMatrix matrix(std::string_view src, int n, bool allow_z = true) {
    Parser p(src, n, allow_z);
    LocalMatrix m = p.matrix_literal();
    p.expect_end();
    return m;
  }

  static SessionInput session(std::string_view src) {
    Parser p(src, 1, true);
    return p.parse_session();
  }

 private:
  const Token& peek(std::size_t k = 0) const {
    std::size_t i = std::min(pos_ + k, lex_.tokens().size() - 1);
    return lex_.tokens()[i];
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < lex_.tokens().size() - 1) ++pos_;
    return t;
  }
  bool at_symbol(char c) const { return peek().kind == TokenKind::Symbol && peek().text[0] == c; }
  bool at_word(std::string_view w) const { return peek().kind == TokenKind::Ident && peek().text == w; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    std::string tok = t.kind == TokenKind::End ? "<end of input>" : t.text;
    throw ParseFailure(ErrorCode::ParseError, t.pos, tok, what + ", found '" + tok + "'");
  }

  void expect_symbol(char c) {
    if (!at_symbol(c)) fail(peek(), std::string("expected '") + c + "'");
    next();
  }
  void expect_word(std::string_view w) {
    if (!at_word(w)) fail(peek(), "expected '" + std::string(w) + "'");
    next();
  }
  void expect_end() {
    if (peek().kind != TokenKind::End) fail(peek(), "expected end of input");
  }
  std::string ident(const char* what) {
    if (peek().kind != TokenKind::Ident) fail(peek(), std::string("expected ") + what);
    return next().text;
  }
  long number(const char* what) {
    if (peek().kind != TokenKind::Number) fail(peek(), std::string("expected ") + what);
    const Token& t = next();
    if (t.text.size() > 9) fail(t, "number too large");
    return std::stol(t.text);
  }

  Algebra alg() const { return {n_, RingTag::LocalField}; }

  // expr := ['-'] term (('+' | '-') term)*
  LocalElement expr() {
    LocalElement acc(alg());
    bool negate = false;
    if (at_symbol('-')) {
      next();
      negate = true;
    } else if (at_symbol('+')) {
      next();
    }
    LocalElement t = term();
    acc = negate ? -t : t;
    while (at_symbol('+') || at_symbol('-')) {
      bool minus = next().text[0] == '-';
      LocalElement u = term();
      if (minus) acc -= u;
      else acc += u;
    }
    return acc;
  }

  // term := power (('*' | '/') power)*
  LocalElement term() {
    LocalElement acc = power();
    while (at_symbol('*') || at_symbol('/')) {
      const Token& op = next();
      const Token& at = peek();
      LocalElement rhs = power();
      if (op.text[0] == '*') {
        acc = acc * rhs;
      } else {
        if (rhs.is_zero()) throw ParseFailure(ErrorCode::ParseError, at.pos, at.text, "division by zero");
        if (!(rhs.terms().size() == 1 && rhs.terms()[0].first.is_one()))
          throw ParseFailure(ErrorCode::ParseError, at.pos, at.text, "division by a non-scalar");
        acc = acc.scaled(rhs.terms()[0].second.inverse());
      }
    }
    return acc;
  }

  // power := unary ['^' number]
  LocalElement power() {
    LocalElement base = unary();
    if (at_symbol('^')) {
      next();
      const Token& t = peek();
      long k = number("exponent");
      if (k > 64) fail(t, "exponent too large");
      LocalElement r = LocalElement::constant(alg(), LocalScalar(1));
      for (long i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  LocalElement unary() {
    if (at_symbol('-')) {
      next();
      return -unary();
    }
    return primary();
  }

  LocalElement primary() {
    const Token& t = peek();
    if (t.kind == TokenKind::Number) {
      long v = number("number");
      return LocalElement::constant(alg(), LocalScalar(Rational(v)));
    }
    if (at_symbol('(')) {
      next();
      LocalElement e = expr();
      expect_symbol(')');
      return e;
    }
    if (t.kind == TokenKind::Ident) {
      next();
      const std::string& s = t.text;
      if (s == "z") {
        if (!allow_z_) throw ParseFailure(ErrorCode::RingMismatch, t.pos, s, "'z' used in a ring over QQ");
        return LocalElement::constant(alg(), LocalScalar::z());
      }
      if ((s[0] == 'x' || s[0] == 'd') && s.size() >= 2 && s.size() <= 3 &&
          s.find_first_not_of("0123456789", 1) == std::string::npos) {
        int k = std::stoi(s.substr(1));
        if (k < 1 || k > n_) fail(t, "variable index outside 1.." + std::to_string(n_));
        return s[0] == 'x' ? LocalElement::x(alg(), k - 1) : LocalElement::d(alg(), k - 1);
      }
      fail(t, "unknown variable");
    }
    fail(t, "expected an expression");
  }

  // row := '[' [expr (',' expr)*] ']'
  std::vector<LocalElement> row_literal() {
    expect_symbol('[');
    std::vector<LocalElement> row;
    if (!at_symbol(']')) {
      row.push_back(expr());
      while (at_symbol(',')) {
        next();
        row.push_back(expr());
      }
    }
    expect_symbol(']');
    return row;
  }

  // matrix := '[' [row (',' row)*] ']'
  LocalMatrix matrix_literal() {
    const Token& open = peek();
    expect_symbol('[');
    std::vector<std::vector<LocalElement>> rows;
    if (!at_symbol(']')) {
      rows.push_back(row_literal());
      while (at_symbol(',')) {
        next();
        rows.push_back(row_literal());
      }
    }
    expect_symbol(']');
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    for (const auto& r : rows)
      if (r.size() != cols) throw ParseFailure(ErrorCode::ParseError, open.pos, "[", "rows of different lengths");
    LocalMatrix m(alg(), cols);
    for (auto& r : rows)
      if (!r.empty()) m.rows.emplace_back(alg(), std::move(r));
    return m;
  }

  std::string check_fresh(const SessionInput& s, const Token& t) {
    if (s.declared(t.text)) fail(t, "name already declared");
    return t.text;
  }

  SessionInput parse_session() {
    SessionInput s;
    if (!at_word("ring")) fail(peek(), "expected 'ring' declaration");
    next();
    const Token& w = peek();
    if (w.kind != TokenKind::Ident || w.text != "W") fail(w, "expected 'W'");
    next();
    expect_symbol('(');
    const Token& nt = peek();
    long n = number("ambient dimension");
    if (n < 1 || n > kMaxAmbient) fail(nt, "ambient dimension must be between 1 and " + std::to_string(kMaxAmbient));
    expect_symbol(')');
    expect_word("over");
    const Token& rt = peek();
    std::string ring = ident("QQ or QZ");
    if (ring != "QQ" && ring != "QZ") fail(rt, "expected QQ or QZ");
    expect_symbol(';');
    s.n = static_cast<int>(n);
    s.integral = ring == "QZ";
    n_ = s.n;
    allow_z_ = s.integral;

    while (peek().kind != TokenKind::End) {
      const Token& kw = peek();
      if (at_word("module")) {
        next();
        ModuleDecl d;
        d.pos = kw.pos;
        d.name = check_fresh(s, peek());
        ident("module name");
        expect_symbol('=');
        expect_word("coker");
        d.relations = matrix_literal();
        if (d.relations.cols == 0) d.relations.cols = 1;
        expect_symbol(';');
        s.order.push_back(d.name);
        s.modules.emplace(d.name, std::move(d));
      } else if (at_word("lattice")) {
        if (!s.integral)
          throw ParseFailure(ErrorCode::RingMismatch, kw.pos, kw.text, "lattices need the ring over QZ");
        next();
        LatticeDecl d;
        d.pos = kw.pos;
        d.name = check_fresh(s, peek());
        ident("lattice name");
        expect_symbol('=');
        const Token& mt = peek();
        d.module = ident("module name");
        if (!s.modules.count(d.module))
          throw ParseFailure(ErrorCode::UndeclaredName, mt.pos, mt.text, "undeclared module '" + mt.text + "'");
        if (at_word("gens")) {
          next();
          const Token& gt = peek();
          LocalMatrix g = matrix_literal();
          if (g.cols != s.modules.at(d.module).relations.cols)
            throw ParseFailure(ErrorCode::ParseError, gt.pos, gt.text, "generator length differs from module rank");
          d.generators = std::move(g);
        }
        expect_symbol(';');
        s.order.push_back(d.name);
        s.lattices.emplace(d.name, std::move(d));
      } else if (at_word("complex")) {
        next();
        ComplexDecl d;
        d.pos = kw.pos;
        d.name = check_fresh(s, peek());
        ident("complex name");
        expect_symbol('=');
        expect_symbol('[');
        if (!at_symbol(']')) {
          for (;;) {
            const Token& rt2 = peek();
            long r = number("rank");
            if (r > 64) fail(rt2, "rank too large");
            d.ranks.push_back(static_cast<std::size_t>(r));
            if (!at_symbol(',')) break;
            next();
          }
        }
        expect_symbol(']');
        if (at_word("with")) {
          next();
          while (at_symbol('[')) {
            const Token& mt = peek();
            LocalMatrix m = matrix_literal();
            std::size_t k = d.matrices.size();
            if (k + 1 >= d.ranks.size()) fail(mt, "more matrices than maps between the given ranks");
            std::size_t rows = d.ranks[k], cols = d.ranks[k + 1];
            if (!m.rows.empty() && (m.rows.size() != rows || m.cols != cols))
              throw ParseFailure(ErrorCode::ParseError, mt.pos, mt.text,
                                 "matrix shape must be " + std::to_string(rows) + "x" + std::to_string(cols));
            std::vector<std::vector<LocalScalar>> entries(rows, std::vector<LocalScalar>(cols));
            for (std::size_t i = 0; i < m.rows.size(); ++i)
              for (std::size_t j = 0; j < cols; ++j) {
                const auto& e = m.rows[i][j];
                if (e.is_zero()) continue;
                if (!(e.terms().size() == 1 && e.terms()[0].first.is_one()))
                  throw ParseFailure(ErrorCode::ParseError, mt.pos, mt.text, "complex entries must be scalars");
                entries[i][j] = e.terms()[0].second;
              }
            d.matrices.push_back(std::move(entries));
          }
        }
        while (d.ranks.size() > 1 && d.matrices.size() + 1 < d.ranks.size()) {
          std::size_t k = d.matrices.size();
          d.matrices.emplace_back(d.ranks[k], std::vector<LocalScalar>(d.ranks[k + 1]));
        }
        expect_symbol(';');
        s.order.push_back(d.name);
        s.complexes.emplace(d.name, std::move(d));
      } else if (at_word("check")) {
        if (s.command) fail(kw, "only one check command is allowed");
        next();
        Command c;
        c.pos = kw.pos;
        const Token& nt2 = peek();
        c.target = ident("object name");
        if (!s.declared(c.target))
          throw ParseFailure(ErrorCode::UndeclaredName, nt2.pos, nt2.text, "undeclared name '" + nt2.text + "'");
        c.subcommand = word();
        while (peek().kind != TokenKind::End && !at_symbol(';')) {
          CommandArg a;
          a.pos = peek().pos;
          if (peek().kind == TokenKind::Number) {
            a.value = number("argument");
          } else if (peek().kind == TokenKind::Ident) {
            const Token& at = peek();
            std::string name = ident("argument");
            if (!s.declared(name))
              throw ParseFailure(ErrorCode::UndeclaredName, at.pos, at.text, "undeclared name '" + at.text + "'");
            a.value = name;
          } else if (at_symbol('[')) {
            a.value = matrix_literal();
          } else {
            fail(peek(), "expected an argument");
          }
          c.args.push_back(std::move(a));
        }
        if (at_symbol(';')) next();
        s.command = std::move(c);
      } else {
        fail(kw, "expected 'module', 'lattice', 'complex' or 'check'");
      }
    }
    if (!s.command) fail(peek(), "missing 'check' command");
    return s;
  }

  /// Hyphenated word such as holonomic-hat; pieces must be adjacent.
  std::string word() {
    std::string w = ident("subcommand");
    while (at_symbol('-') && adjacent(peek()) && peek(1).kind == TokenKind::Ident &&
           peek(1).offset == peek().offset + 1) {
      next();
      w += "-" + next().text;
    }
    return w;
  }

  bool adjacent(const Token& t) const {
    const Token& prev = lex_.tokens()[pos_ - 1];
    return prev.offset + prev.text.size() == t.offset;
  }

  Lexer lex_;
  std::size_t pos_ = 0;
  int n_;
  bool allow_z_;
};

inline LocalElement parse_element(std::string_view src, int n, bool allow_z = true) {
  return Parser::element(src, n, allow_z);
}

inline LocalMatrix parse_matrix(std::string_view src, int n, bool allow_z = true) {
  return Parser::matrix(src, n, allow_z);
}

inline SessionInput parse_session(std::string_view src) { return Parser::session(src); }

}  // namespace dhat
