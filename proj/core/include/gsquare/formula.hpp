#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gsquare {

// Connectives. The first six are the core language the evaluator and the
// tableau understand; the rest are definable sugar that the parser keeps
// around so formulas print back the way they were written.
enum class Conn : std::uint8_t {
  Atom,
  Neg,     // De Morgan negation, swaps support coordinates
  And,
  Impl,
  Box,
  Dia,
  // sugar
  Top,     // 1
  Bot,     // 0
  Or,
  Coimpl,  // -<
  GNeg,    // ~, Goedel negation
  Iff,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

class Formula {
public:
  Conn conn;
  std::string atom;    // Conn::Atom only
  FormulaPtr lhs;      // unary operand, or left operand
  FormulaPtr rhs;      // right operand of binary connectives
  std::size_t hash;    // structural hash, cached at construction

  static FormulaPtr make_atom(std::string name);
  static FormulaPtr make_nullary(Conn c);                       // Top, Bot
  static FormulaPtr make_unary(Conn c, FormulaPtr f);           // Neg, GNeg, Box, Dia
  static FormulaPtr make_binary(Conn c, FormulaPtr l, FormulaPtr r);

private:
  Formula() = default;
};

bool struct_equal(const Formula& a, const Formula& b);
inline bool struct_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return struct_equal(*a, *b);
}

// Convenience builders.
FormulaPtr atom(std::string name);
FormulaPtr top();
FormulaPtr bot();
FormulaPtr neg(FormulaPtr f);
FormulaPtr gneg(FormulaPtr f);
FormulaPtr box(FormulaPtr f);
FormulaPtr dia(FormulaPtr f);
FormulaPtr conj(FormulaPtr a, FormulaPtr b);
FormulaPtr disj(FormulaPtr a, FormulaPtr b);
FormulaPtr impl(FormulaPtr a, FormulaPtr b);
FormulaPtr coimpl(FormulaPtr a, FormulaPtr b);
FormulaPtr iff(FormulaPtr a, FormulaPtr b);

// Concrete syntax, canonical form. Children that bind strictly tighter than
// their parent print bare; everything else is parenthesised, so chains like
// "1 -< (1 -< p)" keep their explicit grouping.
std::string print(const FormulaPtr& f);

// Rewrites sugar into the core language:
//   1       => p -> p        (reserved atom "p"; value is (1,0) regardless)
//   0       => neg 1
//   ~ f     => f -> 0
//   a | b   => neg (neg a & neg b)
//   a -< b  => neg (neg b -> neg a)
//   a <-> b => (a -> b) & (b -> a)
// Idempotent; core nodes pass through with desugared children.
FormulaPtr desugar(const FormulaPtr& f);

struct FormulaMetrics {
  int modal_count = 0;   // Box/Dia occurrences (desugaring adds none)
  int modal_depth = 0;   // max Box/Dia nesting
  int size = 0;          // node count of the desugared formula
  std::set<std::string> atoms;  // includes the reserved atom from 1/0 expansions
};
FormulaMetrics metrics(const FormulaPtr& f);

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Grammar (tightest first): {neg, ~, box, dia} > & > | > -< > -> > <->.
// "->", "-<" and "<->" associate to the right, "&" and "|" to the left.
// Atoms are [a-z][a-zA-Z0-9_]*; "0" and "1" are the constants.
FormulaPtr parse(std::string_view text);

}  // namespace gsquare
