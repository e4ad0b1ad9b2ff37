#pragma once

#include <string>

#include "cond/decl.hpp"
#include "cond/term.hpp"

namespace cond {

// Renders a term in the concrete syntax; output re-parses to an alphaEq term
// for parser-shaped terms. Elaborated constructor/projection parameter
// annotations are not printed (re-checking restores them).
std::string prettyTerm(const TermPtr& t);

std::string prettyTelescope(const Telescope& delta);
std::string prettyDecl(const Declaration& d);

}  // namespace cond
