#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cond/diagnostics.hpp"

namespace cond {

using Name = std::string;

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class Tag {
  Var,        // name
  Pi,         // name = binder, kid(0) = domain, kid(1) = codomain
  Lam,        // name = binder, kid(0) = body
  App,        // kid(0) = fn, kid(1) = arg
  Data,       // name = data/record head, kids = type parameters
  Con,        // name = constructor, kids = data params ++ args, paramCount splits
  Case,       // name = bound scrutinee, clauses; a case term has Pi type
  RecordLit,  // name = record, kids = type parameters, fields
  Proj,       // name = field, owner = record, kids = type params ++ [target]
  Interval,
  EndLeft,
  EndRight,
  Coe,      // kid(0) = family, kid(1) = point, kid(2) = arg
  Squeeze,  // kid(0) = lhs, kid(1) = rhs
  Universe,
  FuncRef,  // name
};

// One arm of a case split: `con binders => body`. For interval splits the
// constructor name is "left" or "right" and binders is empty.
struct Clause {
  Name con;
  std::vector<Name> binders;
  TermPtr body;
};

struct Term {
  Tag tag;
  Span span{};
  Name name;
  Name owner;                // Proj only: the record the field belongs to
  uint32_t paramCount = 0;   // Con only: how many leading kids are data params
  std::vector<TermPtr> kids;
  std::vector<Clause> clauses;                       // Case only
  std::vector<std::pair<Name, TermPtr>> fields;      // RecordLit only
};

// A dependent binding x : A. Telescopes are ordered; each type may mention
// only earlier binders, and names within one telescope are distinct.
struct Binding {
  Name name;
  TermPtr type;
};
using Telescope = std::vector<Binding>;

// Sequentially applied list of single substitutions [t/x].
using Substitution = std::vector<std::pair<Name, TermPtr>>;

namespace mk {

TermPtr var(Name n, Span span = {});
TermPtr pi(Name binder, TermPtr domain, TermPtr codomain, Span span = {});
TermPtr lam(Name binder, TermPtr body, Span span = {});
TermPtr app(TermPtr fn, TermPtr arg, Span span = {});
TermPtr app(TermPtr fn, const std::vector<TermPtr>& args);
TermPtr data(Name n, std::vector<TermPtr> params, Span span = {});
TermPtr con(Name n, std::vector<TermPtr> dataParams, std::vector<TermPtr> args,
            Span span = {});
TermPtr caseSplit(Name scrutinee, std::vector<Clause> clauses, Span span = {});
TermPtr recordLit(Name record, std::vector<TermPtr> params,
                  std::vector<std::pair<Name, TermPtr>> fields, Span span = {});
TermPtr proj(TermPtr target, Name record, std::vector<TermPtr> params,
             Name field, Span span = {});
TermPtr interval();
TermPtr left();
TermPtr right();
TermPtr coe(TermPtr family, TermPtr point, TermPtr arg, Span span = {});
TermPtr squeeze(TermPtr lhs, TermPtr rhs, Span span = {});
TermPtr universe();
TermPtr funcRef(Name n, Span span = {});

}  // namespace mk

// Con accessors (params/args split by paramCount).
std::vector<TermPtr> conParams(const TermPtr& t);
std::vector<TermPtr> conArgs(const TermPtr& t);
// Proj accessors.
std::vector<TermPtr> projParams(const TermPtr& t);
TermPtr projTarget(const TermPtr& t);

// Application spine helpers: peels nested App nodes.
std::pair<TermPtr, std::vector<TermPtr>> spine(TermPtr t);

// Binder names of a telescope, in declaration order.
std::vector<Name> vars(const Telescope& delta);

// Renames the binders of `delta` to `names`, rewriting later types under the
// substitution as it goes. Throws std::invalid_argument on a length mismatch
// or duplicate names.
Telescope replaceNames(const Telescope& delta, const std::vector<Name>& names);

std::set<Name> freeVars(const TermPtr& t);

// Capture-avoiding substitution of a single variable.
TermPtr substOne(const TermPtr& t, const Name& x, const TermPtr& v);

// Simultaneous capture-avoiding substitution; used for clause dispatch where
// replacement terms must not see each other's variables.
TermPtr substSim(const TermPtr& t, const Substitution& sub);

// Sequential application of the substitution list, left to right.
TermPtr substitute(const TermPtr& t, const Substitution& sub);

// Substitutes into every type of a telescope (binders are left alone).
Telescope substTelescope(const Telescope& delta, const Name& x, const TermPtr& v);

// Structural equality up to consistent renaming of bound variables.
bool alphaEq(const TermPtr& a, const TermPtr& b);

// A name based on `hint` that is not in `avoid`.
Name freshName(const Name& hint, const std::set<Name>& avoid);

}  // namespace cond
