#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "cond/term.hpp"

namespace cond {

// A condition is an ordered list of case-tree rows, each a lambda/case-split
// alternation over the constructor's parameters ending in a constructor
// application. A row fires when every split along it matches.
struct ConstructorDef {
  Name name;
  Telescope params;
  std::vector<TermPtr> conditions;
  Span span{};
};

struct DataDef {
  Name name;
  Telescope params;
  std::vector<ConstructorDef> constructors;
  Span span{};

  const ConstructorDef* findConstructor(const Name& c) const;
};

// Coconditions are the record-field dual: rows over the field's parameter
// telescope whose leaves are arbitrary terms (they may mention the record's
// type parameters and earlier fields).
struct FieldDef {
  Name name;
  TermPtr type;
  std::vector<TermPtr> coconditions;
  Span span{};
};

struct RecordDef {
  Name name;
  Telescope params;
  std::vector<FieldDef> fields;
  Span span{};

  const FieldDef* findField(const Name& f) const;
  std::vector<const FieldDef*> fieldsBefore(const Name& f) const;
};

struct FuncDef {
  Name name;
  TermPtr type;
  TermPtr body;  // null while the declaration itself is being checked
  Span span{};
};

using Declaration = std::variant<DataDef, RecordDef, FuncDef>;

const Name& declName(const Declaration& d);

// Ordered list of checked declarations. Every name referenced by an entry
// resolves to an earlier entry; lookups are by globally unique names.
class Signature {
 public:
  void push(Declaration d);
  void replaceLast(Declaration d);
  void popLast();

  size_t size() const { return decls_.size(); }
  const Declaration& at(size_t i) const { return decls_[i]; }
  const std::vector<Declaration>& decls() const { return decls_; }

  bool contains(const Name& n) const;
  const DataDef* findData(const Name& n) const;
  const RecordDef* findRecord(const Name& n) const;
  const FuncDef* findFunc(const Name& n) const;
  // Resolves a constructor name to its data type and definition.
  std::pair<const DataDef*, const ConstructorDef*> findConstructor(const Name& c) const;

  size_t constructorCount() const;

  Signature prefix(size_t n) const;

 private:
  void index(size_t i);
  void unindex(size_t i);

  std::vector<Declaration> decls_;
  std::unordered_map<Name, size_t> byName_;
  std::unordered_map<Name, size_t> ctorOwner_;  // constructor -> decl index
};

// Surface module: declarations in source order, terms not yet elaborated.
struct SourceModule {
  std::string path;
  std::vector<Declaration> decls;
};

}  // namespace cond
