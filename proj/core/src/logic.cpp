#include "csa/logic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace csa {

std::string Value::str() const {
  if (isIndex()) return std::to_string(index());
  return name();
}

std::string Atom::str() const {
  std::ostringstream os;
  os << pred << "(";
  for (size_t i = 0; i < args.size(); ++i) {
    if (i) os << ", ";
    os << args[i].str();
  }
  os << ")";
  return os.str();
}

Atom doAtom(int solverIndex) { return Atom{"do", {Value::index(solverIndex)}}; }

Atom atom1(std::string pred, std::string a0) {
  return Atom{std::move(pred), {Value::name(std::move(a0))}};
}

Atom atom2(std::string pred, std::string a0, std::string a1) {
  return Atom{std::move(pred),
              {Value::name(std::move(a0)), Value::name(std::move(a1))}};
}

Theory::Theory() { arity_["do"] = 1; }

void Theory::declare(const std::string& pred, int arity) {
  if (pred == "do") {
    if (arity != 1) throw SpecError("predicate 'do' is reserved with arity 1");
    return;
  }
  auto it = arity_.find(pred);
  if (it == arity_.end()) {
    arity_[pred] = arity;
  } else if (it->second != arity) {
    throw SpecError("arity conflict for predicate '" + pred + "': " +
                    std::to_string(it->second) + " vs " + std::to_string(arity));
  }
}

bool Theory::isDeclared(const std::string& pred) const {
  return arity_.count(pred) != 0;
}

int Theory::arity(const std::string& pred) const {
  auto it = arity_.find(pred);
  if (it == arity_.end()) throw SpecError("unknown predicate '" + pred + "'");
  return it->second;
}

void Theory::addAxiom(const ImplicationAxiom& ax) {
  if (ax.premise.pred == "do" || ax.conclusion.pred == "do")
    throw SpecError("axioms may not mention the reserved predicate 'do'");
  declare(ax.premise.pred, static_cast<int>(ax.premise.args.size()));
  declare(ax.conclusion.pred, static_cast<int>(ax.conclusion.args.size()));
  std::set<Value> premiseVars(ax.premise.args.begin(), ax.premise.args.end());
  for (const Value& v : ax.conclusion.args) {
    if (!premiseVars.count(v))
      throw SpecError("axiom conclusion variable '" + v.str() +
                      "' does not occur in the premise");
  }
  axioms_.push_back(ax);
}

void Theory::checkAtom(const Atom& a) const {
  auto it = arity_.find(a.pred);
  if (it == arity_.end()) throw SpecError("unknown predicate '" + a.pred + "'");
  if (static_cast<int>(a.args.size()) != it->second)
    throw SpecError("arity mismatch: " + a.str() + " (declared arity " +
                    std::to_string(it->second) + ")");
  if (a.pred == "do" && !a.args[0].isIndex())
    throw SpecError("'do' takes a solver index");
}

Conjunction Conjunction::top(TheoryPtr theory) {
  Conjunction c;
  c.theory_ = std::move(theory);
  return c;
}

Conjunction Conjunction::falsum(TheoryPtr theory) {
  Conjunction c;
  c.false_ = true;
  c.theory_ = std::move(theory);
  return c;
}

std::optional<int> Conjunction::doIndex() const {
  for (const Atom& a : atoms_)
    if (a.pred == "do") return a.args[0].index();
  return std::nullopt;
}

Conjunction Conjunction::dataPart() const {
  Conjunction c;
  c.false_ = false_;
  c.theory_ = theory_;
  for (const Atom& a : atoms_)
    if (a.pred != "do") c.atoms_.push_back(a);
  return c;
}

bool Conjunction::hasAtom(const Atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

std::string Conjunction::str() const {
  if (false_) return "false";
  if (atoms_.empty()) return "true";
  std::ostringstream os;
  bool first = true;
  // `do` first to match the usual notation, then data atoms in order.
  for (const Atom& a : atoms_) {
    if (a.pred != "do") continue;
    os << a.str();
    first = false;
  }
  for (const Atom& a : atoms_) {
    if (a.pred == "do") continue;
    if (!first) os << " & ";
    os << a.str();
    first = false;
  }
  return os.str();
}

namespace {

// Substitution from schema variables to ground values; returns false when the
// ground atom does not match the schema.
bool matchSchema(const Atom& schema, const Atom& ground,
                 std::map<Value, Value>& subst) {
  if (schema.pred != ground.pred || schema.args.size() != ground.args.size())
    return false;
  std::map<Value, Value> local = subst;
  for (size_t i = 0; i < schema.args.size(); ++i) {
    auto [it, inserted] = local.emplace(schema.args[i], ground.args[i]);
    if (!inserted && it->second != ground.args[i]) return false;
  }
  subst = std::move(local);
  return true;
}

Atom instantiateSchema(const Atom& schema, const std::map<Value, Value>& subst) {
  Atom out;
  out.pred = schema.pred;
  out.args.reserve(schema.args.size());
  for (const Value& v : schema.args) out.args.push_back(subst.at(v));
  return out;
}

}  // namespace

std::string Conjunction::strMaximal() const {
  if (false_) return "false";
  if (atoms_.empty()) return "true";
  // An atom is dropped when some other kept atom implies it on its own.
  std::vector<Atom> kept;
  for (const Atom& a : atoms_) {
    bool impliedByOther = false;
    for (const Atom& b : atoms_) {
      if (a == b) continue;
      if (!theory_) break;
      Conjunction cb = closeAtoms({b}, theory_);
      if (cb.hasAtom(a) && !(closeAtoms({a}, theory_).hasAtom(b) && a < b)) {
        impliedByOther = true;
        break;
      }
    }
    if (!impliedByOther) kept.push_back(a);
  }
  std::ostringstream os;
  bool first = true;
  for (const Atom& a : kept) {
    if (a.pred != "do") continue;
    os << a.str();
    first = false;
  }
  for (const Atom& a : kept) {
    if (a.pred == "do") continue;
    if (!first) os << " & ";
    os << a.str();
    first = false;
  }
  return os.str();
}

Conjunction closeAtoms(const std::vector<Atom>& atoms, TheoryPtr theory) {
  if (!theory) throw SpecError("closeAtoms requires a theory");
  std::set<Atom> closed;
  std::set<int> doIndices;
  std::vector<Atom> work;
  for (const Atom& a : atoms) {
    theory->checkAtom(a);
    if (a.pred == "do") doIndices.insert(a.args[0].index());
    if (closed.insert(a).second) work.push_back(a);
  }
  if (doIndices.size() > 1) return Conjunction::falsum(theory);

  while (!work.empty()) {
    Atom a = work.back();
    work.pop_back();
    for (const ImplicationAxiom& ax : theory->axioms()) {
      std::map<Value, Value> subst;
      if (!matchSchema(ax.premise, a, subst)) continue;
      Atom derived = instantiateSchema(ax.conclusion, subst);
      if (closed.insert(derived).second) work.push_back(derived);
    }
  }

  Conjunction c;
  c.theory_ = std::move(theory);
  c.atoms_.assign(closed.begin(), closed.end());
  return c;
}

Conjunction conjoin(const Conjunction& a, const Conjunction& b) {
  TheoryPtr theory = a.theory() ? a.theory() : b.theory();
  if (a.theory() && b.theory() && a.theory() != b.theory())
    throw SpecError("conjoin over distinct theories");
  if (a.isFalse() || b.isFalse()) return Conjunction::falsum(theory);
  if (a.isTrue()) return b.theory() ? b : closeAtoms(b.atoms(), theory);
  if (b.isTrue()) return a.theory() ? a : closeAtoms(a.atoms(), theory);
  std::vector<Atom> atoms = a.atoms();
  atoms.insert(atoms.end(), b.atoms().begin(), b.atoms().end());
  return closeAtoms(atoms, theory);
}

bool implies(const Conjunction& strong, const Conjunction& weak) {
  if (strong.isFalse()) return true;
  if (weak.isFalse()) return false;
  return std::includes(strong.atoms().begin(), strong.atoms().end(),
                       weak.atoms().begin(), weak.atoms().end());
}

bool equivalent(const Conjunction& a, const Conjunction& b) { return a == b; }

std::vector<Atom> saturateAtoms(std::vector<Atom> atoms, const Theory& theory) {
  std::set<Atom> closed(atoms.begin(), atoms.end());
  std::vector<Atom> work(atoms.begin(), atoms.end());
  while (!work.empty()) {
    Atom a = work.back();
    work.pop_back();
    for (const ImplicationAxiom& ax : theory.axioms()) {
      std::map<Value, Value> subst;
      if (!matchSchema(ax.premise, a, subst)) continue;
      Atom derived = instantiateSchema(ax.conclusion, subst);
      if (closed.insert(derived).second) work.push_back(derived);
    }
  }
  return {closed.begin(), closed.end()};
}

}  // namespace csa
