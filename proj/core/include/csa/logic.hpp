#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace csa {

/// Raised on semantic errors: arity conflicts, bad instantiations, totality
/// violations, oversized property spaces.
class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ground term: a named value (`f`, `x`, `l`) or a solver index (1..n).
class Value {
 public:
  static Value name(std::string n) { return Value(std::move(n)); }
  static Value index(int i) { return Value(i); }

  bool isIndex() const { return std::holds_alternative<int>(v_); }
  int index() const { return std::get<int>(v_); }
  const std::string& name() const { return std::get<std::string>(v_); }

  std::string str() const;

  auto operator<=>(const Value&) const = default;

 private:
  explicit Value(int i) : v_(i) {}
  explicit Value(std::string n) : v_(std::move(n)) {}
  std::variant<int, std::string> v_;
};

/// A ground predicate application. Equality and ordering are structural:
/// predicate name first, then arguments.
struct Atom {
  std::string pred;
  std::vector<Value> args;

  std::string str() const;
  auto operator<=>(const Atom&) const = default;
};

Atom doAtom(int solverIndex);
Atom atom1(std::string pred, std::string a0);
Atom atom2(std::string pred, std::string a0, std::string a1);

/// premise => conclusion over shared variables; every conclusion variable
/// must occur in the premise. Argument names are variables, not values.
struct ImplicationAxiom {
  Atom premise;
  Atom conclusion;

  bool operator==(const ImplicationAxiom&) const = default;
};

/// Predicate arities plus the implication axioms that define logical
/// equivalence of conjunctions. Built once per analyzed system, then shared
/// immutably by every Conjunction derived from it.
class Theory {
 public:
  Theory();

  void declare(const std::string& pred, int arity);
  bool isDeclared(const std::string& pred) const;
  int arity(const std::string& pred) const;

  void addAxiom(const ImplicationAxiom& ax);
  const std::vector<ImplicationAxiom>& axioms() const { return axioms_; }

  /// Arity check plus the `do` discipline (arity 1, index argument).
  void checkAtom(const Atom& a) const;

 private:
  std::map<std::string, int> arity_;
  std::vector<ImplicationAxiom> axioms_;
};

using TheoryPtr = std::shared_ptr<const Theory>;

/// A canonical conjunction of ground atoms: stored implication-closed and
/// sorted. The empty atom set is `true`; two distinct `do` atoms collapse to
/// the false conjunction. Immutable after construction.
class Conjunction {
 public:
  Conjunction() = default;  // true, no theory attached

  static Conjunction top(TheoryPtr theory = nullptr);
  static Conjunction falsum(TheoryPtr theory = nullptr);

  bool isFalse() const { return false_; }
  bool isTrue() const { return !false_ && atoms_.empty(); }

  /// Closed atom set, sorted by the canonical atom order.
  const std::vector<Atom>& atoms() const { return atoms_; }

  /// Index of the unique `do` atom, if present.
  std::optional<int> doIndex() const;

  /// The non-`do` atoms as a Conjunction.
  Conjunction dataPart() const;

  bool hasAtom(const Atom& a) const;

  const TheoryPtr& theory() const { return theory_; }

  bool operator==(const Conjunction& o) const {
    return false_ == o.false_ && atoms_ == o.atoms_;
  }
  bool operator<(const Conjunction& o) const {
    if (false_ != o.false_) return o.false_;
    return atoms_ < o.atoms_;
  }

  /// Full closed form, e.g. "do(1) & cnvx(f) & stCnvx(f)".
  std::string str() const;
  /// Implication-maximal atoms only, e.g. "do(1) & stCnvx(f)".
  std::string strMaximal() const;

 private:
  friend Conjunction closeAtoms(const std::vector<Atom>&, TheoryPtr);
  std::vector<Atom> atoms_;
  bool false_ = false;
  TheoryPtr theory_;
};

/// Implication closure of a ground atom set. The result is false iff the
/// input holds two distinct `do` atoms. Idempotent.
Conjunction closeAtoms(const std::vector<Atom>& atoms, TheoryPtr theory);

/// Canonical closure of the union; false absorbs.
Conjunction conjoin(const Conjunction& a, const Conjunction& b);

/// strong implies weak iff conjoining weak onto strong changes nothing.
bool implies(const Conjunction& strong, const Conjunction& weak);

bool equivalent(const Conjunction& a, const Conjunction& b);

/// Saturate an atom set under the theory's axioms (no `do` handling); used
/// to complete atom universes so closures never escape them.
std::vector<Atom> saturateAtoms(std::vector<Atom> atoms, const Theory& theory);

}  // namespace csa
