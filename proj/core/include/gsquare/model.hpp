#pragma once

#include "gsquare/formula.hpp"
#include "gsquare/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gsquare {

// (v1, v2): independent degrees of support and denial.
struct ValuePair {
  Rational01 pos;  // v1
  Rational01 neg;  // v2
  friend bool operator==(const ValuePair&, const ValuePair&) = default;
  std::string str() const { return "(" + pos.str() + ", " + neg.str() + ")"; }
};

enum class RelSign : std::uint8_t { plus, minus };

enum class Mode { pos, neg, strong };

// Finite fuzzy bi-relational Kripke model. Absent relation entries read as 0;
// absent atom values read as (0,0).
class KripkeModel {
public:
  int add_world(const std::string& name);            // returns index, rejects duplicates
  int world_index(const std::string& name) const;    // throws on unknown world
  bool has_world(const std::string& name) const;
  int world_count() const { return static_cast<int>(worlds_.size()); }
  const std::string& world_name(int i) const { return worlds_.at(i); }
  const std::vector<std::string>& worlds() const { return worlds_; }

  void set_rel(RelSign s, int from, int to, Rational01 value);
  const Rational01& rel(RelSign s, int from, int to) const;

  void set_val(int world, const std::string& atom, ValuePair value);
  const ValuePair& value(int world, const std::string& atom) const;

  // Atoms with an explicit entry somewhere in the model, sorted.
  std::vector<std::string> atoms() const;

  // {"worlds": [...], "rplus": [[from,to,value]], "rminus": [...],
  //  "val": [[world,atom,v1,v2]]}; values are exact strings ("1/2", "0.7").
  static KripkeModel from_json_text(const std::string& text);
  std::string to_json_text() const;  // canonical: sorted entries, one line

private:
  std::vector<std::string> worlds_;
  std::unordered_map<std::string, int> index_;
  std::map<std::pair<int, int>, Rational01> rplus_, rminus_;
  std::map<std::pair<int, std::string>, ValuePair> val_;

  const std::map<std::pair<int, int>, Rational01>& rel_map(RelSign s) const {
    return s == RelSign::plus ? rplus_ : rminus_;
  }
  friend struct FramePredicatesAccess;
};

// Paired valuation of f at the given world. Sugar is desugared on entry.
// Box/Dia take inf/sup over all worlds; on an empty model slice they fall
// back to 1 (empty inf) and 0 (empty sup) via the relation defaulting to 0.
ValuePair eval(const KripkeModel& m, int world, const FormulaPtr& f);
ValuePair eval(const KripkeModel& m, const std::string& world, const FormulaPtr& f);

struct ValidityResult {
  bool holds = false;
  // First failing world with its value pair, in model world order.
  std::optional<std::pair<std::string, ValuePair>> witness;
};

// pos: v1 = 1 everywhere; neg: v2 = 0 everywhere; strong: both.
ValidityResult check_validity_on_model(const KripkeModel& m, const FormulaPtr& f, Mode mode);

struct FramePredicates {
  bool crisp_plus = false;
  bool crisp_minus = false;
  bool mono_relational = false;  // R+ and R- agree pointwise
};
FramePredicates frame_predicates(const KripkeModel& m);

// A single-relation frame, used when moving between the one-relation logic
// and the bi-relational one.
struct SingleRelationFrame {
  std::vector<std::string> worlds;
  std::map<std::pair<int, int>, Rational01> rel;
};

// Installs `frame.rel` on the given side of a fresh bi-relational model and
// `other` on the opposite side. Valuation is left empty.
KripkeModel attach_counterpart(const SingleRelationFrame& frame,
                               const std::map<std::pair<int, int>, Rational01>& other,
                               RelSign side);

}  // namespace gsquare
