#include "gsquare/model.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gsquare {

int KripkeModel::add_world(const std::string& name) {
  if (index_.count(name)) throw std::invalid_argument("duplicate world \"" + name + "\"");
  int id = static_cast<int>(worlds_.size());
  worlds_.push_back(name);
  index_[name] = id;
  return id;
}

int KripkeModel::world_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw std::out_of_range("unknown world \"" + name + "\"");
  return it->second;
}

bool KripkeModel::has_world(const std::string& name) const { return index_.count(name) > 0; }

void KripkeModel::set_rel(RelSign s, int from, int to, Rational01 value) {
  auto& m = s == RelSign::plus ? rplus_ : rminus_;
  if (value == Rational01::zero()) {
    m.erase({from, to});  // keep "absent" canonical for 0-weight edges
  } else {
    m[{from, to}] = std::move(value);
  }
}

const Rational01& KripkeModel::rel(RelSign s, int from, int to) const {
  const auto& m = rel_map(s);
  auto it = m.find({from, to});
  return it == m.end() ? Rational01::zero() : it->second;
}

void KripkeModel::set_val(int world, const std::string& atom, ValuePair value) {
  val_[{world, atom}] = std::move(value);
}

const ValuePair& KripkeModel::value(int world, const std::string& atom) const {
  static const ValuePair kZero{};
  auto it = val_.find({world, atom});
  return it == val_.end() ? kZero : it->second;
}

std::vector<std::string> KripkeModel::atoms() const {
  std::set<std::string> s;
  for (const auto& [key, _] : val_) s.insert(key.second);
  return {s.begin(), s.end()};
}

namespace {

ValuePair eval_core(const KripkeModel& m, int w, const Formula& f) {
  switch (f.conn) {
    case Conn::Atom:
      return m.value(w, f.atom);
    case Conn::Neg: {
      ValuePair v = eval_core(m, w, *f.lhs);
      return {v.neg, v.pos};
    }
    case Conn::And: {
      ValuePair a = eval_core(m, w, *f.lhs);
      ValuePair b = eval_core(m, w, *f.rhs);
      return {meet(a.pos, b.pos), join(a.neg, b.neg)};
    }
    case Conn::Impl: {
      ValuePair a = eval_core(m, w, *f.lhs);
      ValuePair b = eval_core(m, w, *f.rhs);
      return {gimpl(a.pos, b.pos), gcoimpl(b.neg, a.neg)};
    }
    case Conn::Box: {
      ValuePair acc{Rational01::one(), Rational01::one()};
      for (int u = 0; u < m.world_count(); ++u) {
        ValuePair v = eval_core(m, u, *f.lhs);
        acc.pos = meet(acc.pos, gimpl(m.rel(RelSign::plus, w, u), v.pos));
        acc.neg = meet(acc.neg, gimpl(m.rel(RelSign::minus, w, u), v.neg));
      }
      return acc;
    }
    case Conn::Dia: {
      ValuePair acc{Rational01::zero(), Rational01::zero()};
      for (int u = 0; u < m.world_count(); ++u) {
        ValuePair v = eval_core(m, u, *f.lhs);
        acc.pos = join(acc.pos, meet(m.rel(RelSign::plus, w, u), v.pos));
        acc.neg = join(acc.neg, meet(m.rel(RelSign::minus, w, u), v.neg));
      }
      return acc;
    }
    default:
      throw std::logic_error("eval: formula not desugared");
  }
}

bool is_core(const Formula& f) {
  switch (f.conn) {
    case Conn::Atom: return true;
    case Conn::Neg:
    case Conn::Box:
    case Conn::Dia: return is_core(*f.lhs);
    case Conn::And:
    case Conn::Impl: return is_core(*f.lhs) && is_core(*f.rhs);
    default: return false;
  }
}

}  // namespace

ValuePair eval(const KripkeModel& m, int world, const FormulaPtr& f) {
  if (world < 0 || world >= m.world_count()) throw std::out_of_range("eval: world index out of range");
  if (is_core(*f)) return eval_core(m, world, *f);
  return eval_core(m, world, *desugar(f));
}

ValuePair eval(const KripkeModel& m, const std::string& world, const FormulaPtr& f) {
  return eval(m, m.world_index(world), f);
}

ValidityResult check_validity_on_model(const KripkeModel& m, const FormulaPtr& f, Mode mode) {
  FormulaPtr core = desugar(f);
  for (int w = 0; w < m.world_count(); ++w) {
    ValuePair v = eval(m, w, core);
    bool ok = true;
    if (mode == Mode::pos || mode == Mode::strong) ok = ok && v.pos == Rational01::one();
    if (mode == Mode::neg || mode == Mode::strong) ok = ok && v.neg == Rational01::zero();
    if (!ok) return {false, std::make_pair(m.world_name(w), v)};
  }
  return {true, std::nullopt};
}

struct FramePredicatesAccess {
  static FramePredicates run(const KripkeModel& m) {
    FramePredicates p{true, true, true};
    auto crisp = [](const std::map<std::pair<int, int>, Rational01>& rel) {
      for (const auto& [_, v] : rel) {
        if (v != Rational01::zero() && v != Rational01::one()) return false;
      }
      return true;
    };
    p.crisp_plus = crisp(m.rplus_);
    p.crisp_minus = crisp(m.rminus_);
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, _] : m.rplus_) keys.insert(k);
    for (const auto& [k, _] : m.rminus_) keys.insert(k);
    for (const auto& k : keys) {
      if (m.rel(RelSign::plus, k.first, k.second) != m.rel(RelSign::minus, k.first, k.second)) {
        p.mono_relational = false;
        break;
      }
    }
    return p;
  }
};

FramePredicates frame_predicates(const KripkeModel& m) { return FramePredicatesAccess::run(m); }

KripkeModel attach_counterpart(const SingleRelationFrame& frame,
                               const std::map<std::pair<int, int>, Rational01>& other,
                               RelSign side) {
  KripkeModel m;
  for (const auto& w : frame.worlds) m.add_world(w);
  auto check = [&](const std::map<std::pair<int, int>, Rational01>& rel) {
    for (const auto& [k, _] : rel) {
      if (k.first < 0 || k.first >= m.world_count() || k.second < 0 || k.second >= m.world_count()) {
        throw std::out_of_range("attach_counterpart: relation entry outside the frame's worlds");
      }
    }
  };
  check(frame.rel);
  check(other);
  RelSign opposite = side == RelSign::plus ? RelSign::minus : RelSign::plus;
  for (const auto& [k, v] : frame.rel) m.set_rel(side, k.first, k.second, v);
  for (const auto& [k, v] : other) m.set_rel(opposite, k.first, k.second, v);
  return m;
}

namespace {

using nlohmann::ordered_json;

void load_rel(KripkeModel& m, const ordered_json& arr, RelSign sign, const char* key) {
  if (!arr.is_array()) throw std::invalid_argument(std::string("model json: \"") + key + "\" must be an array");
  for (const auto& entry : arr) {
    if (!entry.is_array() || entry.size() != 3) {
      throw std::invalid_argument(std::string("model json: each \"") + key + "\" entry must be [from, to, value]");
    }
    int from = m.world_index(entry[0].get<std::string>());
    int to = m.world_index(entry[1].get<std::string>());
    m.set_rel(sign, from, to, Rational01::parse(entry[2].get<std::string>()));
  }
}

}  // namespace

KripkeModel KripkeModel::from_json_text(const std::string& text) {
  ordered_json j = ordered_json::parse(text);  // throws nlohmann::json::parse_error
  KripkeModel m;
  if (!j.is_object() || !j.contains("worlds")) {
    throw std::invalid_argument("model json: expected an object with a \"worlds\" array");
  }
  for (const auto& w : j.at("worlds")) m.add_world(w.get<std::string>());
  if (j.contains("rplus")) load_rel(m, j.at("rplus"), RelSign::plus, "rplus");
  if (j.contains("rminus")) load_rel(m, j.at("rminus"), RelSign::minus, "rminus");
  if (j.contains("val")) {
    for (const auto& entry : j.at("val")) {
      if (!entry.is_array() || entry.size() != 4) {
        throw std::invalid_argument("model json: each \"val\" entry must be [world, atom, v1, v2]");
      }
      int w = m.world_index(entry[0].get<std::string>());
      m.set_val(w, entry[1].get<std::string>(),
                {Rational01::parse(entry[2].get<std::string>()),
                 Rational01::parse(entry[3].get<std::string>())});
    }
  }
  return m;
}

std::string KripkeModel::to_json_text() const {
  ordered_json j;
  j["worlds"] = worlds_;
  auto dump_rel = [&](const std::map<std::pair<int, int>, Rational01>& rel) {
    ordered_json arr = ordered_json::array();
    for (const auto& [k, v] : rel) {
      arr.push_back({worlds_[k.first], worlds_[k.second], v.str()});
    }
    return arr;
  };
  j["rplus"] = dump_rel(rplus_);
  j["rminus"] = dump_rel(rminus_);
  ordered_json vals = ordered_json::array();
  for (const auto& [k, v] : val_) {
    vals.push_back({worlds_[k.first], k.second, v.pos.str(), v.neg.str()});
  }
  j["val"] = vals;
  return j.dump();
}

}  // namespace gsquare
