#pragma once

#include "gsquare/formula.hpp"
#include "gsquare/model.hpp"

#include <memory>
#include <set>
#include <string>

namespace gsquare {

// The single-relation source language: {atoms, 0, &, |, ->, -<, box, dia}
// where box/dia are the classical-style modalities the translations rewrite.
enum class SrcConn : std::uint8_t { Atom, Bot, And, Or, Impl, Coimpl, Box, Dia };

struct SourceFormula;
using SourcePtr = std::shared_ptr<const SourceFormula>;

struct SourceFormula {
  SrcConn conn;
  std::string atom;
  SourcePtr lhs, rhs;
};

SourcePtr src_atom(std::string name);
SourcePtr src_bot();
SourcePtr src_and(SourcePtr a, SourcePtr b);
SourcePtr src_or(SourcePtr a, SourcePtr b);
SourcePtr src_impl(SourcePtr a, SourcePtr b);
SourcePtr src_coimpl(SourcePtr a, SourcePtr b);
SourcePtr src_box(SourcePtr f);
SourcePtr src_dia(SourcePtr f);

// Reads a formula in the shared concrete syntax as a source formula.
// Rejects connectives outside the source language (neg, ~, <->, 1).
SourcePtr to_source(const FormulaPtr& f);
SourcePtr parse_source(std::string_view text);

// box/dia become the positive-support modalities unchanged.
FormulaPtr plus_bullet(const SourcePtr& f);
// box f => neg box neg f', dia f => neg dia neg f'.
FormulaPtr minus_bullet(const SourcePtr& f);
// Every subformula gets a double Goedel negation; input must avoid -<.
FormulaPtr nabla(const SourcePtr& f);
// p => 1 -< (1 -< p); And/Or swap; Impl(a,b) => b' -< a'; box/dia pass
// through. Input must avoid 0 and -<.
FormulaPtr partial(const SourcePtr& f);

// Two-valued Kripke model: a crisp relation plus a set of true atoms per
// world.
struct ClassicalModel {
  std::vector<std::string> worlds;
  std::vector<std::vector<bool>> rel;          // rel[w][u]
  std::vector<std::set<std::string>> true_atoms;
};

// Classical truth at a world; box/dia are the usual relational quantifiers.
bool eval_classical(const ClassicalModel& m, int world, const SourcePtr& f);

// w R! u iff R-(w,u) = 1; p true at w iff v2(p,w) = 1.
ClassicalModel shadow_model(const KripkeModel& m);

}  // namespace gsquare
