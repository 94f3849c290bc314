#include "gsquare/formula.hpp"

#include <functional>

namespace gsquare {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  // boost::hash_combine-style mixing.
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::size_t node_hash(Conn c, const std::string& atom, const FormulaPtr& l, const FormulaPtr& r) {
  std::size_t h = static_cast<std::size_t>(c) * 0x100000001b3ULL + 0xcbf29ce484222325ULL;
  if (c == Conn::Atom) h = mix(h, std::hash<std::string>{}(atom));
  if (l) h = mix(h, l->hash);
  if (r) h = mix(h, r->hash);
  return h;
}

struct FormulaBuilder : Formula {};  // grants access to the private ctor

FormulaPtr make_node(Conn c, std::string atom, FormulaPtr l, FormulaPtr r) {
  auto node = std::make_shared<FormulaBuilder>();
  node->conn = c;
  node->atom = std::move(atom);
  node->lhs = std::move(l);
  node->rhs = std::move(r);
  node->hash = node_hash(node->conn, node->atom, node->lhs, node->rhs);
  return node;
}

}  // namespace

FormulaPtr Formula::make_atom(std::string name) {
  return make_node(Conn::Atom, std::move(name), nullptr, nullptr);
}

FormulaPtr Formula::make_nullary(Conn c) { return make_node(c, {}, nullptr, nullptr); }

FormulaPtr Formula::make_unary(Conn c, FormulaPtr f) {
  return make_node(c, {}, std::move(f), nullptr);
}

FormulaPtr Formula::make_binary(Conn c, FormulaPtr l, FormulaPtr r) {
  return make_node(c, {}, std::move(l), std::move(r));
}

bool struct_equal(const Formula& a, const Formula& b) {
  if (&a == &b) return true;
  if (a.hash != b.hash || a.conn != b.conn) return false;
  if (a.conn == Conn::Atom) return a.atom == b.atom;
  if (!struct_equal(a.lhs, b.lhs)) return false;
  return struct_equal(a.rhs, b.rhs);
}

FormulaPtr atom(std::string name) { return Formula::make_atom(std::move(name)); }
FormulaPtr top() { return Formula::make_nullary(Conn::Top); }
FormulaPtr bot() { return Formula::make_nullary(Conn::Bot); }
FormulaPtr neg(FormulaPtr f) { return Formula::make_unary(Conn::Neg, std::move(f)); }
FormulaPtr gneg(FormulaPtr f) { return Formula::make_unary(Conn::GNeg, std::move(f)); }
FormulaPtr box(FormulaPtr f) { return Formula::make_unary(Conn::Box, std::move(f)); }
FormulaPtr dia(FormulaPtr f) { return Formula::make_unary(Conn::Dia, std::move(f)); }
FormulaPtr conj(FormulaPtr a, FormulaPtr b) {
  return Formula::make_binary(Conn::And, std::move(a), std::move(b));
}
FormulaPtr disj(FormulaPtr a, FormulaPtr b) {
  return Formula::make_binary(Conn::Or, std::move(a), std::move(b));
}
FormulaPtr impl(FormulaPtr a, FormulaPtr b) {
  return Formula::make_binary(Conn::Impl, std::move(a), std::move(b));
}
FormulaPtr coimpl(FormulaPtr a, FormulaPtr b) {
  return Formula::make_binary(Conn::Coimpl, std::move(a), std::move(b));
}
FormulaPtr iff(FormulaPtr a, FormulaPtr b) {
  return Formula::make_binary(Conn::Iff, std::move(a), std::move(b));
}

namespace {

// Binding strength; larger binds tighter. Unary connectives and leaves sit
// on top.
int prec(Conn c) {
  switch (c) {
    case Conn::Atom:
    case Conn::Top:
    case Conn::Bot:
    case Conn::Neg:
    case Conn::GNeg:
    case Conn::Box:
    case Conn::Dia:
      return 6;
    case Conn::And: return 5;
    case Conn::Or: return 4;
    case Conn::Coimpl: return 3;
    case Conn::Impl: return 2;
    case Conn::Iff: return 1;
  }
  return 0;
}

const char* binary_token(Conn c) {
  switch (c) {
    case Conn::And: return " & ";
    case Conn::Or: return " | ";
    case Conn::Coimpl: return " -< ";
    case Conn::Impl: return " -> ";
    case Conn::Iff: return " <-> ";
    default: return "";
  }
}

void print_into(const FormulaPtr& f, std::string& out);

// A child prints bare only when it binds strictly tighter than its parent.
// The one exception keeps "&"/"|" chains flat: a left child with the same
// connective stays bare, matching their left associativity.
void print_child(const FormulaPtr& child, const FormulaPtr& parent, bool left_position,
                 std::string& out) {
  bool bare = prec(child->conn) > prec(parent->conn);
  if (!bare && left_position && child->conn == parent->conn &&
      (parent->conn == Conn::And || parent->conn == Conn::Or)) {
    bare = true;
  }
  if (bare) {
    print_into(child, out);
  } else {
    out += '(';
    print_into(child, out);
    out += ')';
  }
}

void print_into(const FormulaPtr& f, std::string& out) {
  switch (f->conn) {
    case Conn::Atom: out += f->atom; return;
    case Conn::Top: out += '1'; return;
    case Conn::Bot: out += '0'; return;
    case Conn::Neg: out += "neg "; break;
    case Conn::GNeg: out += '~'; break;
    case Conn::Box: out += "box "; break;
    case Conn::Dia: out += "dia "; break;
    default: {
      print_child(f->lhs, f, true, out);
      out += binary_token(f->conn);
      print_child(f->rhs, f, false, out);
      return;
    }
  }
  // unary: operand needs parentheses only when it is a binary formula
  if (prec(f->lhs->conn) == 6) {
    print_into(f->lhs, out);
  } else {
    out += '(';
    print_into(f->lhs, out);
    out += ')';
  }
}

}  // namespace

std::string print(const FormulaPtr& f) {
  std::string out;
  print_into(f, out);
  return out;
}

namespace {

// The constant 1 expands through a fixed atom so the expansion stays inside
// the core grammar; its value is (1,0) whatever the atom's value is.
const char* kReservedAtom = "p";

}  // namespace

FormulaPtr desugar(const FormulaPtr& f) {
  switch (f->conn) {
    case Conn::Atom: return f;
    case Conn::Top: {
      auto p = atom(kReservedAtom);
      return impl(p, p);
    }
    case Conn::Bot: return neg(desugar(top()));
    case Conn::Neg: return neg(desugar(f->lhs));
    case Conn::Box: return box(desugar(f->lhs));
    case Conn::Dia: return dia(desugar(f->lhs));
    case Conn::GNeg: return impl(desugar(f->lhs), desugar(bot()));
    case Conn::And: return conj(desugar(f->lhs), desugar(f->rhs));
    case Conn::Impl: return impl(desugar(f->lhs), desugar(f->rhs));
    case Conn::Or: return neg(conj(neg(desugar(f->lhs)), neg(desugar(f->rhs))));
    case Conn::Coimpl: return neg(impl(neg(desugar(f->rhs)), neg(desugar(f->lhs))));
    case Conn::Iff: {
      auto a = desugar(f->lhs);
      auto b = desugar(f->rhs);
      return conj(impl(a, b), impl(b, a));
    }
  }
  throw std::logic_error("desugar: unknown connective");
}

namespace {

void walk_metrics(const FormulaPtr& f, int depth, FormulaMetrics& m) {
  m.size += 1;
  switch (f->conn) {
    case Conn::Atom:
      m.atoms.insert(f->atom);
      return;
    case Conn::Box:
    case Conn::Dia:
      m.modal_count += 1;
      if (depth + 1 > m.modal_depth) m.modal_depth = depth + 1;
      walk_metrics(f->lhs, depth + 1, m);
      return;
    case Conn::Neg:
      walk_metrics(f->lhs, depth, m);
      return;
    case Conn::And:
    case Conn::Impl:
      walk_metrics(f->lhs, depth, m);
      walk_metrics(f->rhs, depth, m);
      return;
    default:
      throw std::logic_error("metrics: expected a desugared formula");
  }
}

}  // namespace

FormulaMetrics metrics(const FormulaPtr& f) {
  FormulaMetrics m;
  walk_metrics(desugar(f), 0, m);
  return m;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at " + std::to_string(position) + ": " + message),
      position_(position) {}

}  // namespace gsquare
