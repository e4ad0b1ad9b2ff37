#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "cond/decl.hpp"
#include "cond/diagnostics.hpp"
#include "cond/term.hpp"

namespace cond {

// Name tables the parser uses to classify identifiers. Inside a module they
// grow as declarations are parsed; for standalone terms they come from an
// already checked signature.
struct NameEnv {
  std::unordered_map<Name, size_t> typeHeads;  // data/record name -> #params
  std::unordered_map<Name, size_t> ctors;      // constructor name -> #params
  std::unordered_set<Name> funcs;

  static NameEnv fromSignature(const Signature& sig);
};

struct ModuleResult {
  std::optional<SourceModule> module;
  std::vector<Diagnostic> diagnostics;
};

struct TermResult {
  TermPtr term;  // null on failure
  std::vector<Diagnostic> diagnostics;
};

ModuleResult parseModule(std::string_view text, std::string path = "");

// Parses a single term in the scope described by `env`. Unknown identifiers
// become free variables (the checker reports them as UnknownName).
TermResult parseTerm(std::string_view text, const NameEnv& env = {});

}  // namespace cond
