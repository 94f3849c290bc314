#pragma once

#include "gsquare/formula.hpp"
#include "gsquare/model.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gsquare::tableau {

struct Limits {
  int max_states = 48;                        // fresh labels per branch
  long long max_rule_applications = 400000;   // across the whole search
  int max_constraints = 20000;                // per branch
};

// Per-constraint re-check of an extracted model against the open branch it
// came from. A failing line is an engine bug, never a legal outcome.
struct RealisationLine {
  std::string rendered;  // e.g. "w0:1:p <= w0R+w1"
  Rational01 lhs, rhs;
  bool strict = false;
  bool ok = false;
};
struct RealisationReport {
  std::vector<RealisationLine> lines;
  bool all_ok = true;
};

struct Countermodel {
  KripkeModel model;
  std::string world;   // witness world
  int coordinate;      // 1 (v1 < 1) or 2 (v2 > 0)
  ValuePair value;     // eval of the query at the witness world
  RealisationReport report;
};

enum class VerdictKind { proved, refuted, resource_limit };

struct Verdict {
  VerdictKind kind = VerdictKind::resource_limit;
  std::optional<Countermodel> countermodel;  // present iff refuted
};

struct Transcript {
  std::vector<std::string> lines;  // "rule | premise | conclusions | branch-id"
};

enum class CmpOp { le, lt, ge, gt };

// An initial branch entry: "w0 : coordinate : formula  (op)  bound".
struct SeedConstraint {
  int coordinate = 1;   // 1 or 2
  FormulaPtr formula;   // desugared internally
  CmpOp op = CmpOp::lt;
  int bound = 1;        // 0 or 1
};

// Runs the tableau on the given initial constraints. Proved means every
// branch closed; refuted carries the model extracted from the first open
// complete branch (left-to-right, depth-first). The witness fields of the
// returned countermodel are filled by the caller-facing wrappers; expand
// leaves them at the first seed's coordinate.
Verdict expand(const std::vector<SeedConstraint>& seeds, const Limits& limits = {},
               Transcript* transcript = nullptr);

// pos:    closed tableau from  w0:1:f < 1
// neg:    closed tableau from  w0:2:f > 0
// strong: both; the first countermodel found is returned otherwise.
Verdict prove(const FormulaPtr& f, Mode mode, const Limits& limits = {},
              Transcript* transcript = nullptr);

enum class SatMode { pos1, strong };
enum class SatKind { sat, unsat, resource_limit };

struct SatResult {
  SatKind kind = SatKind::resource_limit;
  std::optional<KripkeModel> model;  // present iff sat
  std::string world;                 // world where the query is satisfied
};

// pos1:   open branch of  w0:1:f >= 1
// strong: open branch of  {w0:1:f >= 1, w0:2:f <= 0}
SatResult decide_sat(const FormulaPtr& f, SatMode mode, const Limits& limits = {},
                     Transcript* transcript = nullptr);

// Same answers through the validity reduction: f is pos1-satisfiable exactly
// when ~~(1 -< f) is not pos-valid, and the countermodel of the reduct
// satisfies f at its witness world. decide_sat and this path must agree.
SatResult decide_sat_via_reduction(const FormulaPtr& f, SatMode mode, const Limits& limits = {});

// ---- introspection (used by property tests and the transcript renderer) ----

// A tableau structure with reader-friendly world labels.
struct TStructure {
  enum class Kind { constant, formula_at, relation };
  Kind kind = Kind::constant;
  int constant = 0;          // constant: 0 or 1
  std::string world;         // formula_at / relation source
  int coordinate = 1;        // formula_at: 1 or 2
  FormulaPtr formula;        // formula_at
  std::string world_to;      // relation target
  RelSign sign = RelSign::plus;
};

struct TConstraint {
  TStructure lhs, rhs;
  bool strict = false;  // lhs < rhs vs lhs <= rhs
};

std::string render(const TStructure& s);
std::string render(const TConstraint& c);

struct RuleInstance {
  std::string rule;                                   // e.g. "impl1_le"
  TConstraint premise;
  std::vector<std::vector<TConstraint>> conclusions;  // one vector per branch
  bool creates_world = false;
};

// All rule instances applicable to the branch consisting exactly of the given
// constraints, in the engine's firing order. Does not apply anything.
std::vector<RuleInstance> applicable_rule_instances(const std::vector<TConstraint>& branch);

}  // namespace gsquare::tableau
