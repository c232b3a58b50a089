#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "csa/patterns.hpp"

namespace csa {

/// One cluster do(k) & C of contexts. `data` is the non-`do` part, canonical
/// and non-false; `full` conjoins the `do` atom back in.
struct ContextProperty {
  int id = 0;
  int doIndex = 0;
  Conjunction data;
  Conjunction full;
};

/// The finite space of context properties for one pipeline: every solver
/// index crossed with every closure-distinct data conjunction. Properties
/// are numbered doIndex-major, data-conjunction-minor, so
/// id == (doIndex - 1) * dataCount() + dataCode.
class PropertySpace {
 public:
  PropertySpace() = default;

  static constexpr int kDefaultCap = 100000;

  /// Enumerates the space from grounded instances sharing one theory.
  /// Throws SpecError when the property count would exceed `cap`.
  static PropertySpace generate(const std::vector<Instance>& instances,
                                TheoryPtr theory, int cap = kDefaultCap);

  int solverCount() const { return solverCount_; }
  int dataCount() const { return static_cast<int>(dataConjunctions_.size()); }
  int propertyCount() const { return static_cast<int>(properties_.size()); }

  const std::vector<ContextProperty>& properties() const { return properties_; }
  const ContextProperty& property(int id) const { return properties_.at(id); }

  /// Data conjunctions in canonical order (code = position).
  const std::vector<Conjunction>& dataConjunctions() const {
    return dataConjunctions_;
  }

  /// Saturated atom universe the data conjunctions are built from.
  const std::vector<Atom>& universe() const { return universe_; }

  std::optional<int> lookup(int doIndex, const Conjunction& data) const;
  std::optional<int> lookupConjunction(const Conjunction& full) const;
  std::optional<int> dataCode(const Conjunction& data) const;

  std::string render(int id) const { return property(id).full.strMaximal(); }

 private:
  int solverCount_ = 0;
  std::vector<Atom> universe_;
  std::vector<Conjunction> dataConjunctions_;
  std::vector<ContextProperty> properties_;
  std::map<std::vector<Atom>, int> dataCodeByAtoms_;
};

/// A total relation on property ids approximating one solver: every property
/// has a nonempty image, and properties carrying another solver's `do` map to
/// themselves.
struct AbstractSolver {
  int solverIndex = 0;
  std::vector<std::vector<int>> image;  // by property id; sorted, nonempty

  std::vector<std::pair<int, int>> pairs() const;
};

/// Image branches before and after subsumption pruning; the raw set backs the
/// monotone-coverage checks.
struct ImageBranches {
  std::vector<Conjunction> raw;
  std::vector<Conjunction> kept;
};

ImageBranches imageBranches(const Instance& instance, const ContextProperty& c,
                            const PropertySpace& space);

/// The image of a property under the abstract solver of `instance`:
/// refine by each rule precondition, fire the most specific matching rules,
/// carry the read-only part of the refinement through the postcondition, and
/// keep the weakest surviving branches. Off-index properties map to
/// themselves. Never empty for patterns with a catch-all rule.
std::vector<int> imageOfProperty(const Instance& instance,
                                 const ContextProperty& c,
                                 const PropertySpace& space);

AbstractSolver synthesizeAbstractSolver(const Instance& instance,
                                        const PropertySpace& space);

}  // namespace csa
