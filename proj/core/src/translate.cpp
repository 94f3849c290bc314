#include "gsquare/translate.hpp"

#include <stdexcept>

namespace gsquare {

namespace {

SourcePtr make_src(SrcConn c, std::string atom, SourcePtr l, SourcePtr r) {
  auto node = std::make_shared<SourceFormula>();
  node->conn = c;
  node->atom = std::move(atom);
  node->lhs = std::move(l);
  node->rhs = std::move(r);
  return node;
}

}  // namespace

SourcePtr src_atom(std::string name) { return make_src(SrcConn::Atom, std::move(name), nullptr, nullptr); }
SourcePtr src_bot() { return make_src(SrcConn::Bot, {}, nullptr, nullptr); }
SourcePtr src_and(SourcePtr a, SourcePtr b) { return make_src(SrcConn::And, {}, std::move(a), std::move(b)); }
SourcePtr src_or(SourcePtr a, SourcePtr b) { return make_src(SrcConn::Or, {}, std::move(a), std::move(b)); }
SourcePtr src_impl(SourcePtr a, SourcePtr b) { return make_src(SrcConn::Impl, {}, std::move(a), std::move(b)); }
SourcePtr src_coimpl(SourcePtr a, SourcePtr b) { return make_src(SrcConn::Coimpl, {}, std::move(a), std::move(b)); }
SourcePtr src_box(SourcePtr f) { return make_src(SrcConn::Box, {}, std::move(f), nullptr); }
SourcePtr src_dia(SourcePtr f) { return make_src(SrcConn::Dia, {}, std::move(f), nullptr); }

SourcePtr to_source(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom: return src_atom(f->atom);
    case Conn::Bot: return src_bot();
    case Conn::And: return src_and(to_source(f->lhs), to_source(f->rhs));
    case Conn::Or: return src_or(to_source(f->lhs), to_source(f->rhs));
    case Conn::Impl: return src_impl(to_source(f->lhs), to_source(f->rhs));
    case Conn::Coimpl: return src_coimpl(to_source(f->lhs), to_source(f->rhs));
    case Conn::Box: return src_box(to_source(f->lhs));
    case Conn::Dia: return src_dia(to_source(f->lhs));
    case Conn::Neg: throw std::invalid_argument("source formulas have no \"neg\"");
    case Conn::GNeg: throw std::invalid_argument("source formulas have no \"~\"");
    case Conn::Top: throw std::invalid_argument("source formulas have no \"1\"");
    case Conn::Iff: throw std::invalid_argument("source formulas have no \"<->\"");
  }
  throw std::logic_error("to_source: unknown connective");
}

SourcePtr parse_source(std::string_view text) { return to_source(parse(text)); }

namespace {

// Shared propositional skeleton of the two bullet translations.
template <typename BoxFn, typename DiaFn>
FormulaPtr bullet_walk(const SourcePtr& f, BoxFn on_box, DiaFn on_dia) {
  switch (f->conn) {
    case SrcConn::Atom: return atom(f->atom);
    case SrcConn::Bot: return bot();
    case SrcConn::And: return conj(bullet_walk(f->lhs, on_box, on_dia), bullet_walk(f->rhs, on_box, on_dia));
    case SrcConn::Or: return disj(bullet_walk(f->lhs, on_box, on_dia), bullet_walk(f->rhs, on_box, on_dia));
    case SrcConn::Impl: return impl(bullet_walk(f->lhs, on_box, on_dia), bullet_walk(f->rhs, on_box, on_dia));
    case SrcConn::Coimpl: return coimpl(bullet_walk(f->lhs, on_box, on_dia), bullet_walk(f->rhs, on_box, on_dia));
    case SrcConn::Box: return on_box(bullet_walk(f->lhs, on_box, on_dia));
    case SrcConn::Dia: return on_dia(bullet_walk(f->lhs, on_box, on_dia));
  }
  throw std::logic_error("bullet_walk: unknown connective");
}

}  // namespace

FormulaPtr plus_bullet(const SourcePtr& f) {
  return bullet_walk(
      f, [](FormulaPtr x) { return box(std::move(x)); },
      [](FormulaPtr x) { return dia(std::move(x)); });
}

FormulaPtr minus_bullet(const SourcePtr& f) {
  return bullet_walk(
      f, [](FormulaPtr x) { return neg(box(neg(std::move(x)))); },
      [](FormulaPtr x) { return neg(dia(neg(std::move(x)))); });
}

FormulaPtr nabla(const SourcePtr& f) {
  auto wrap = [](FormulaPtr x) { return gneg(gneg(std::move(x))); };
  switch (f->conn) {
    case SrcConn::Atom: return wrap(atom(f->atom));
    case SrcConn::Bot: return wrap(bot());
    case SrcConn::And: return wrap(conj(nabla(f->lhs), nabla(f->rhs)));
    case SrcConn::Or: return wrap(disj(nabla(f->lhs), nabla(f->rhs)));
    case SrcConn::Impl: return wrap(impl(nabla(f->lhs), nabla(f->rhs)));
    case SrcConn::Box: return wrap(box(nabla(f->lhs)));
    case SrcConn::Dia: return wrap(dia(nabla(f->lhs)));
    case SrcConn::Coimpl:
      throw std::invalid_argument("nabla: input must not contain \"-<\"");
  }
  throw std::logic_error("nabla: unknown connective");
}

FormulaPtr partial(const SourcePtr& f) {
  switch (f->conn) {
    case SrcConn::Atom: return coimpl(top(), coimpl(top(), atom(f->atom)));
    case SrcConn::And: return disj(partial(f->lhs), partial(f->rhs));
    case SrcConn::Or: return conj(partial(f->lhs), partial(f->rhs));
    case SrcConn::Impl: return coimpl(partial(f->rhs), partial(f->lhs));
    case SrcConn::Box: return box(partial(f->lhs));
    case SrcConn::Dia: return dia(partial(f->lhs));
    case SrcConn::Bot:
      throw std::invalid_argument("partial: input must not contain \"0\"");
    case SrcConn::Coimpl:
      throw std::invalid_argument("partial: input must not contain \"-<\"");
  }
  throw std::logic_error("partial: unknown connective");
}

bool eval_classical(const ClassicalModel& m, int world, const SourcePtr& f) {
  switch (f->conn) {
    case SrcConn::Atom: return m.true_atoms.at(world).count(f->atom) > 0;
    case SrcConn::Bot: return false;
    case SrcConn::And: return eval_classical(m, world, f->lhs) && eval_classical(m, world, f->rhs);
    case SrcConn::Or: return eval_classical(m, world, f->lhs) || eval_classical(m, world, f->rhs);
    case SrcConn::Impl: return !eval_classical(m, world, f->lhs) || eval_classical(m, world, f->rhs);
    case SrcConn::Box:
      for (std::size_t u = 0; u < m.worlds.size(); ++u) {
        if (m.rel.at(world).at(u) && !eval_classical(m, static_cast<int>(u), f->lhs)) return false;
      }
      return true;
    case SrcConn::Dia:
      for (std::size_t u = 0; u < m.worlds.size(); ++u) {
        if (m.rel.at(world).at(u) && eval_classical(m, static_cast<int>(u), f->lhs)) return true;
      }
      return false;
    case SrcConn::Coimpl:
      throw std::invalid_argument("eval_classical: \"-<\" has no classical reading here");
  }
  throw std::logic_error("eval_classical: unknown connective");
}

ClassicalModel shadow_model(const KripkeModel& m) {
  ClassicalModel out;
  out.worlds = m.worlds();
  int n = m.world_count();
  out.rel.assign(n, std::vector<bool>(n, false));
  out.true_atoms.assign(n, {});
  for (int w = 0; w < n; ++w) {
    for (int u = 0; u < n; ++u) {
      out.rel[w][u] = m.rel(RelSign::minus, w, u) == Rational01::one();
    }
    for (const auto& a : m.atoms()) {
      if (m.value(w, a).neg == Rational01::one()) out.true_atoms[w].insert(a);
    }
  }
  return out;
}

}  // namespace gsquare
