#include "cond/decl.hpp"

#include <stdexcept>

namespace cond {

const ConstructorDef* DataDef::findConstructor(const Name& c) const {
  for (const auto& ctor : constructors)
    if (ctor.name == c) return &ctor;
  return nullptr;
}

const FieldDef* RecordDef::findField(const Name& f) const {
  for (const auto& field : fields)
    if (field.name == f) return &field;
  return nullptr;
}

std::vector<const FieldDef*> RecordDef::fieldsBefore(const Name& f) const {
  std::vector<const FieldDef*> out;
  for (const auto& field : fields) {
    if (field.name == f) return out;
    out.push_back(&field);
  }
  return out;
}

const Name& declName(const Declaration& d) {
  return std::visit([](const auto& x) -> const Name& { return x.name; }, d);
}

void Signature::push(Declaration d) {
  decls_.push_back(std::move(d));
  index(decls_.size() - 1);
}

void Signature::replaceLast(Declaration d) {
  if (decls_.empty()) throw std::logic_error("replaceLast on empty signature");
  unindex(decls_.size() - 1);
  decls_.back() = std::move(d);
  index(decls_.size() - 1);
}

void Signature::popLast() {
  if (decls_.empty()) throw std::logic_error("popLast on empty signature");
  unindex(decls_.size() - 1);
  decls_.pop_back();
}

bool Signature::contains(const Name& n) const { return byName_.count(n) != 0; }

const DataDef* Signature::findData(const Name& n) const {
  auto it = byName_.find(n);
  if (it == byName_.end()) return nullptr;
  return std::get_if<DataDef>(&decls_[it->second]);
}

const RecordDef* Signature::findRecord(const Name& n) const {
  auto it = byName_.find(n);
  if (it == byName_.end()) return nullptr;
  return std::get_if<RecordDef>(&decls_[it->second]);
}

const FuncDef* Signature::findFunc(const Name& n) const {
  auto it = byName_.find(n);
  if (it == byName_.end()) return nullptr;
  return std::get_if<FuncDef>(&decls_[it->second]);
}

std::pair<const DataDef*, const ConstructorDef*> Signature::findConstructor(
    const Name& c) const {
  auto it = ctorOwner_.find(c);
  if (it == ctorOwner_.end()) return {nullptr, nullptr};
  const auto* d = std::get_if<DataDef>(&decls_[it->second]);
  if (!d) return {nullptr, nullptr};
  return {d, d->findConstructor(c)};
}

size_t Signature::constructorCount() const {
  size_t n = 0;
  for (const auto& d : decls_)
    if (const auto* dd = std::get_if<DataDef>(&d)) n += dd->constructors.size();
  return n;
}

Signature Signature::prefix(size_t n) const {
  Signature out;
  for (size_t i = 0; i < n && i < decls_.size(); ++i) out.push(decls_[i]);
  return out;
}

void Signature::index(size_t i) {
  byName_[declName(decls_[i])] = i;
  if (const auto* d = std::get_if<DataDef>(&decls_[i]))
    for (const auto& c : d->constructors) ctorOwner_[c.name] = i;
}

void Signature::unindex(size_t i) {
  byName_.erase(declName(decls_[i]));
  if (const auto* d = std::get_if<DataDef>(&decls_[i]))
    for (const auto& c : d->constructors) ctorOwner_.erase(c.name);
}

}  // namespace cond
