#include "gsquare/formula.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace gsquare {

namespace {

enum class Tok {
  Ident, Const0, Const1,
  Neg, Tilde, Box, Dia,
  Amp, Pipe, Arrow, CoArrow, IffArrow,
  LParen, RParen, End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_ws();
      std::size_t start = i_;
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      char c = src_[i_];
      if (std::islower(static_cast<unsigned char>(c))) {
        std::size_t j = i_;
        while (j < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[j])) || src_[j] == '_')) ++j;
        std::string word(src_.substr(i_, j - i_));
        i_ = j;
        if (word == "neg") out.push_back({Tok::Neg, word, start});
        else if (word == "box") out.push_back({Tok::Box, word, start});
        else if (word == "dia") out.push_back({Tok::Dia, word, start});
        else out.push_back({Tok::Ident, word, start});
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i_;
        while (j < src_.size() && std::isdigit(static_cast<unsigned char>(src_[j]))) ++j;
        std::string digits(src_.substr(i_, j - i_));
        if (digits == "0") { out.push_back({Tok::Const0, digits, start}); i_ = j; continue; }
        if (digits == "1") { out.push_back({Tok::Const1, digits, start}); i_ = j; continue; }
        throw ParseError("only the constants 0 and 1 are allowed", start);
      }
      switch (c) {
        case '~': ++i_; out.push_back({Tok::Tilde, "~", start}); continue;
        case '&': ++i_; out.push_back({Tok::Amp, "&", start}); continue;
        case '|': ++i_; out.push_back({Tok::Pipe, "|", start}); continue;
        case '(': ++i_; out.push_back({Tok::LParen, "(", start}); continue;
        case ')': ++i_; out.push_back({Tok::RParen, ")", start}); continue;
        case '-':
          if (i_ + 1 < src_.size() && src_[i_ + 1] == '>') { i_ += 2; out.push_back({Tok::Arrow, "->", start}); continue; }
          if (i_ + 1 < src_.size() && src_[i_ + 1] == '<') { i_ += 2; out.push_back({Tok::CoArrow, "-<", start}); continue; }
          throw ParseError("expected \"->\" or \"-<\"", start);
        case '<':
          if (i_ + 2 < src_.size() + 1 && src_.substr(i_, 3) == "<->") { i_ += 3; out.push_back({Tok::IffArrow, "<->", start}); continue; }
          throw ParseError("expected \"<->\"", start);
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
    }
  }

private:
  void skip_ws() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }
  std::string_view src_;
  std::size_t i_ = 0;
};

struct BinOp {
  Conn conn;
  int prec;
  bool right_assoc;
};

std::optional<BinOp> binop_of(Tok t) {
  switch (t) {
    case Tok::Amp: return BinOp{Conn::And, 50, false};
    case Tok::Pipe: return BinOp{Conn::Or, 40, false};
    case Tok::CoArrow: return BinOp{Conn::Coimpl, 30, true};
    case Tok::Arrow: return BinOp{Conn::Impl, 20, true};
    case Tok::IffArrow: return BinOp{Conn::Iff, 10, true};
    default: return std::nullopt;
  }
}

class Parser {
public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr run() {
    FormulaPtr f = expr(0);
    if (peek().kind != Tok::End) {
      throw ParseError("unexpected trailing input", peek().pos);
    }
    return f;
  }

private:
  const Token& peek() const { return toks_[i_]; }
  Token take() { return toks_[i_++]; }

  FormulaPtr expr(int min_prec) {
    FormulaPtr lhs = unary();
    while (true) {
      auto op = binop_of(peek().kind);
      if (!op || op->prec < min_prec) return lhs;
      take();
      FormulaPtr rhs = expr(op->right_assoc ? op->prec : op->prec + 1);
      lhs = Formula::make_binary(op->conn, std::move(lhs), std::move(rhs));
    }
  }

  FormulaPtr unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Neg: take(); return neg(unary());
      case Tok::Tilde: take(); return gneg(unary());
      case Tok::Box: take(); return box(unary());
      case Tok::Dia: take(); return dia(unary());
      case Tok::Const0: take(); return bot();
      case Tok::Const1: take(); return top();
      case Tok::Ident: return atom(take().text);
      case Tok::LParen: {
        std::size_t open = take().pos;
        FormulaPtr f = expr(0);
        if (peek().kind != Tok::RParen) {
          throw ParseError("missing ')' for '(' ", open);
        }
        take();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("expected a formula, got \"" + t.text + "\"", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace

FormulaPtr parse(std::string_view text) {
  Lexer lex(text);
  Parser parser(lex.run());
  return parser.run();
}

}  // namespace gsquare
