#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cond {

// Byte range [begin, end) into the source text a node was parsed from.
struct Span {
  uint32_t begin = 0;
  uint32_t end = 0;
};

enum class Severity { Error, Warning, Note };

enum class Code {
  ParseError,
  UnknownName,
  TypeMismatch,
  NotCovering,
  ConfluenceViolation,
  IllegalIntervalSplit,
  ArityMismatch,
  DuplicateClause,
  TerminationFailure,
  UniverseHasNoType,
  FuelExhausted,
};

std::string_view codeName(Code c);

struct Diagnostic {
  Severity severity = Severity::Error;
  Code code = Code::ParseError;
  std::string message;
  Span span{};
  // Pretty-printed normal forms, set for TypeMismatch/ConfluenceViolation.
  std::string expected;
  std::string actual;
};

Diagnostic makeError(Code code, std::string message, Span span = {});

bool hasErrors(const std::vector<Diagnostic>& diags);

}  // namespace cond
