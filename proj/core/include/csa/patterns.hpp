#pragma once

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "csa/logic.hpp"

namespace csa {

/// An atom over pattern parameters (argument names are parameter names).
struct AtomSchema {
  std::string pred;
  std::vector<std::string> args;

  bool operator==(const AtomSchema&) const = default;
};

/// One rule of a pattern. The precondition is do(self) & preData, the
/// postcondition do(postTarget) & postData, with postTarget a control
/// parameter name or "self".
struct RuleSchema {
  std::vector<AtomSchema> preData;
  std::string postTarget;
  std::vector<AtomSchema> postData;

  bool operator==(const RuleSchema&) const = default;
};

/// A solver description: rules over formal data parameters (optionally
/// read-only) and control parameters naming successor solvers.
struct Pattern {
  struct DataParam {
    std::string name;
    bool readOnly = false;
    bool operator==(const DataParam&) const = default;
  };

  std::string name;
  std::vector<DataParam> dataParams;
  std::vector<std::string> ctrlParams;
  std::vector<RuleSchema> rules;

  /// True when some rule's precondition carries no data atoms. Required for
  /// image totality.
  bool hasCatchAll() const;

  bool operator==(const Pattern&) const = default;
};

using PatternPtr = std::shared_ptr<const Pattern>;

struct GroundRule {
  Conjunction pre;   // do(index) & data, canonical
  Conjunction post;  // do(target) & data, canonical
};

/// A pattern placed at a pipeline position: parameters bound to values and
/// successor indices, rules grounded and canonicalized. Immutable.
class Instance {
 public:
  int index() const { return index_; }
  const Pattern& pattern() const { return *pattern_; }
  const std::vector<Value>& dataArgs() const { return dataArgs_; }
  const std::vector<int>& ctrlArgs() const { return ctrlArgs_; }
  const std::vector<GroundRule>& rules() const { return rules_; }

  /// Values bound to non-read-only data parameters; atoms mentioning any of
  /// these are the ones the solver may invalidate.
  const std::set<Value>& rwValues() const { return rwValues_; }

  /// e.g. "cnvx?(f; 2, 3)"
  std::string render() const;

 private:
  friend Instance instantiate(PatternPtr, int, std::vector<Value>,
                              std::vector<int>, TheoryPtr);
  PatternPtr pattern_;
  int index_ = 0;
  std::vector<Value> dataArgs_;
  std::vector<int> ctrlArgs_;
  std::vector<GroundRule> rules_;
  std::set<Value> rwValues_;
};

/// Grounds a pattern at a solver index. Throws SpecError on arity mismatch,
/// unbound rule variables, control parameters inside data atoms, or a false
/// ground precondition.
Instance instantiate(PatternPtr pattern, int index, std::vector<Value> dataArgs,
                     std::vector<int> ctrlArgs, TheoryPtr theory);

/// All non-`do` atoms occurring in any ground rule, deduplicated and sorted.
std::vector<Atom> collectDataAtoms(const std::vector<Instance>& instances);

/// Splits the data atoms of a canonical, non-false conjunction into
/// (readOnly, readWrite) with respect to one instance. An atom is read-write
/// iff it mentions a value bound to a non-read-only data parameter.
std::pair<Conjunction, Conjunction> classifyAtoms(const Instance& instance,
                                                  const Conjunction& c);

/// Throws SpecError when the pattern has no catch-all rule.
void validatePatternTotality(const Pattern& pattern);

}  // namespace csa
