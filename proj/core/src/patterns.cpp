#include "csa/patterns.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace csa {

bool Pattern::hasCatchAll() const {
  return std::any_of(rules.begin(), rules.end(),
                     [](const RuleSchema& r) { return r.preData.empty(); });
}

void validatePatternTotality(const Pattern& pattern) {
  if (!pattern.hasCatchAll())
    throw SpecError("pattern '" + pattern.name +
                    "' has no catch-all rule (precondition without data atoms)");
}

std::string Instance::render() const {
  std::ostringstream os;
  os << pattern_->name << "(";
  for (size_t i = 0; i < dataArgs_.size(); ++i) {
    if (i) os << ", ";
    os << dataArgs_[i].str();
  }
  os << ";";
  for (size_t i = 0; i < ctrlArgs_.size(); ++i) {
    os << (i ? ", " : " ");
    os << ctrlArgs_[i];
  }
  os << ")";
  return os.str();
}

namespace {

Atom groundAtom(const AtomSchema& schema, const std::map<std::string, Value>& dataBind,
                const std::map<std::string, int>& ctrlBind, const std::string& patternName) {
  Atom out;
  out.pred = schema.pred;
  for (const std::string& var : schema.args) {
    auto it = dataBind.find(var);
    if (it != dataBind.end()) {
      out.args.push_back(it->second);
      continue;
    }
    if (ctrlBind.count(var) || var == "self")
      throw SpecError("pattern '" + patternName + "': control parameter '" + var +
                      "' used inside data atom " + schema.pred + "(...)");
    throw SpecError("pattern '" + patternName + "': unbound variable '" + var +
                    "' in rule atom " + schema.pred + "(...)");
  }
  return out;
}

}  // namespace

Instance instantiate(PatternPtr pattern, int index, std::vector<Value> dataArgs,
                     std::vector<int> ctrlArgs, TheoryPtr theory) {
  if (!pattern) throw SpecError("instantiate: null pattern");
  if (index < 1) throw SpecError("solver index must be positive");
  if (dataArgs.size() != pattern->dataParams.size())
    throw SpecError("pattern '" + pattern->name + "' expects " +
                    std::to_string(pattern->dataParams.size()) + " data arguments, got " +
                    std::to_string(dataArgs.size()));
  if (ctrlArgs.size() != pattern->ctrlParams.size())
    throw SpecError("pattern '" + pattern->name + "' expects " +
                    std::to_string(pattern->ctrlParams.size()) + " control arguments, got " +
                    std::to_string(ctrlArgs.size()));
  for (int c : ctrlArgs)
    if (c < 1) throw SpecError("control argument must be a positive solver index");

  std::map<std::string, Value> dataBind;
  std::map<std::string, int> ctrlBind;
  Instance inst;
  for (size_t i = 0; i < dataArgs.size(); ++i) {
    dataBind.emplace(pattern->dataParams[i].name, dataArgs[i]);
    if (!pattern->dataParams[i].readOnly) inst.rwValues_.insert(dataArgs[i]);
  }
  for (size_t i = 0; i < ctrlArgs.size(); ++i)
    ctrlBind.emplace(pattern->ctrlParams[i], ctrlArgs[i]);
  ctrlBind.emplace("self", index);

  inst.pattern_ = std::move(pattern);
  inst.index_ = index;
  inst.dataArgs_ = std::move(dataArgs);
  inst.ctrlArgs_ = std::move(ctrlArgs);

  for (const RuleSchema& rule : inst.pattern_->rules) {
    std::vector<Atom> pre{doAtom(index)};
    for (const AtomSchema& s : rule.preData)
      pre.push_back(groundAtom(s, dataBind, ctrlBind, inst.pattern_->name));
    auto targetIt = ctrlBind.find(rule.postTarget);
    if (targetIt == ctrlBind.end())
      throw SpecError("pattern '" + inst.pattern_->name + "': unbound control target '" +
                      rule.postTarget + "'");
    std::vector<Atom> post{doAtom(targetIt->second)};
    for (const AtomSchema& s : rule.postData)
      post.push_back(groundAtom(s, dataBind, ctrlBind, inst.pattern_->name));
    GroundRule ground{closeAtoms(pre, theory), closeAtoms(post, theory)};
    if (ground.pre.isFalse())
      throw SpecError("pattern '" + inst.pattern_->name +
                      "': rule precondition grounds to false");
    inst.rules_.push_back(std::move(ground));
  }
  return inst;
}

std::vector<Atom> collectDataAtoms(const std::vector<Instance>& instances) {
  std::set<Atom> atoms;
  for (const Instance& inst : instances) {
    for (const GroundRule& rule : inst.rules()) {
      for (const Atom& a : rule.pre.atoms())
        if (a.pred != "do") atoms.insert(a);
      for (const Atom& a : rule.post.atoms())
        if (a.pred != "do") atoms.insert(a);
    }
  }
  return {atoms.begin(), atoms.end()};
}

std::pair<Conjunction, Conjunction> classifyAtoms(const Instance& instance,
                                                  const Conjunction& c) {
  if (c.isFalse()) throw SpecError("classifyAtoms: false conjunction");
  std::vector<Atom> ro, rw;
  for (const Atom& a : c.atoms()) {
    if (a.pred == "do") continue;
    bool mentionsRw =
        std::any_of(a.args.begin(), a.args.end(),
                    [&](const Value& v) { return instance.rwValues().count(v) != 0; });
    (mentionsRw ? rw : ro).push_back(a);
  }
  return {closeAtoms(ro, c.theory()), closeAtoms(rw, c.theory())};
}

}  // namespace csa
