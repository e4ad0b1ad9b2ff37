#include "cond/pretty.hpp"

#include <sstream>

namespace cond {

namespace {

// Precedence levels: 0 term (lambda), 1 arrow, 2 squeeze, 3 application,
// 4 atom/projection. A node whose natural level is below the context level
// gets parenthesized.
constexpr int kTerm = 0;
constexpr int kArrow = 1;
constexpr int kSqueeze = 2;
constexpr int kApp = 3;
constexpr int kAtom = 4;

void print(std::ostream& os, const TermPtr& t, int level);

int naturalLevel(const TermPtr& t) {
  switch (t->tag) {
    case Tag::Lam: return kTerm;
    case Tag::Pi: return kArrow;
    case Tag::Squeeze: return kSqueeze;
    case Tag::App:
    case Tag::Coe: return kApp;
    case Tag::Data: return t->kids.empty() ? kAtom : kApp;
    case Tag::Con: return t->kids.size() == t->paramCount ? kAtom : kApp;
    default: return kAtom;
  }
}

void printClause(std::ostream& os, const Clause& cl) {
  os << cl.con;
  for (const auto& b : cl.binders) os << ' ' << b;
  os << " => ";
  print(os, cl.body, kTerm);
}

void printBare(std::ostream& os, const TermPtr& t) {
  switch (t->tag) {
    case Tag::Var:
    case Tag::FuncRef:
      os << t->name;
      return;
    case Tag::Universe:
      os << 'U';
      return;
    case Tag::Interval:
      os << 'I';
      return;
    case Tag::EndLeft:
      os << "left";
      return;
    case Tag::EndRight:
      os << "right";
      return;
    case Tag::Lam:
      os << '\\' << t->name << ". ";
      print(os, t->kids[0], kTerm);
      return;
    case Tag::Pi: {
      if (freeVars(t->kids[1]).count(t->name)) {
        os << '(' << t->name << " : ";
        print(os, t->kids[0], kTerm);
        os << ") -> ";
      } else {
        print(os, t->kids[0], kSqueeze);
        os << " -> ";
      }
      print(os, t->kids[1], kTerm);
      return;
    }
    case Tag::Squeeze:
      print(os, t->kids[0], kSqueeze);
      os << " /\\ ";
      print(os, t->kids[1], kApp);
      return;
    case Tag::App: {
      print(os, t->kids[0], kApp);
      os << ' ';
      print(os, t->kids[1], kAtom);
      return;
    }
    case Tag::Coe:
      os << "coe ";
      print(os, t->kids[0], kAtom);
      os << ' ';
      print(os, t->kids[1], kAtom);
      os << ' ';
      print(os, t->kids[2], kAtom);
      return;
    case Tag::Data: {
      os << t->name;
      for (const auto& k : t->kids) {
        os << ' ';
        print(os, k, kAtom);
      }
      return;
    }
    case Tag::Con: {
      os << t->name;
      for (size_t i = t->paramCount; i < t->kids.size(); ++i) {
        os << ' ';
        print(os, t->kids[i], kAtom);
      }
      return;
    }
    case Tag::Case: {
      os << "case " << t->name << " {";
      for (size_t i = 0; i < t->clauses.size(); ++i) {
        os << (i == 0 ? " " : " | ");
        printClause(os, t->clauses[i]);
      }
      os << (t->clauses.empty() ? "}" : " }");
      return;
    }
    case Tag::RecordLit: {
      os << "new " << t->name;
      for (const auto& k : t->kids) {
        os << ' ';
        print(os, k, kAtom);
      }
      os << " {";
      for (size_t i = 0; i < t->fields.size(); ++i) {
        os << (i == 0 ? " " : " | ") << t->fields[i].first << " => ";
        print(os, t->fields[i].second, kTerm);
      }
      os << (t->fields.empty() ? "}" : " }");
      return;
    }
    case Tag::Proj: {
      print(os, projTarget(t), kAtom);
      os << '.' << t->name;
      return;
    }
  }
}

void print(std::ostream& os, const TermPtr& t, int level) {
  if (naturalLevel(t) < level) {
    os << '(';
    printBare(os, t);
    os << ')';
  } else {
    printBare(os, t);
  }
}

void printConditionRows(std::ostream& os, const std::vector<TermPtr>& rows) {
  // Rows are stored desugared; display them as-is in braces.
  os << " with {";
  for (size_t i = 0; i < rows.size(); ++i) {
    os << (i == 0 ? " " : " | ");
    print(os, rows[i], kTerm);
  }
  os << " }";
}

}  // namespace

std::string prettyTerm(const TermPtr& t) {
  std::ostringstream os;
  print(os, t, kTerm);
  return os.str();
}

std::string prettyTelescope(const Telescope& delta) {
  std::ostringstream os;
  for (size_t i = 0; i < delta.size(); ++i) {
    if (i) os << ' ';
    os << '(' << delta[i].name << " : ";
    print(os, delta[i].type, kTerm);
    os << ')';
  }
  return os.str();
}

std::string prettyDecl(const Declaration& d) {
  std::ostringstream os;
  if (const auto* dd = std::get_if<DataDef>(&d)) {
    os << "data " << dd->name;
    if (!dd->params.empty()) os << ' ' << prettyTelescope(dd->params);
    os << " : U";
    for (const auto& c : dd->constructors) {
      os << "\n| " << c.name;
      for (const auto& b : c.params) {
        os << ' ';
        print(os, b.type, kAtom);
      }
      if (!c.conditions.empty()) printConditionRows(os, c.conditions);
    }
  } else if (const auto* rd = std::get_if<RecordDef>(&d)) {
    os << "record " << rd->name;
    if (!rd->params.empty()) os << ' ' << prettyTelescope(rd->params);
    os << " : U";
    for (const auto& f : rd->fields) {
      os << "\n| " << f.name << " : ";
      print(os, f.type, kTerm);
      if (!f.coconditions.empty()) printConditionRows(os, f.coconditions);
    }
  } else if (const auto* fd = std::get_if<FuncDef>(&d)) {
    os << "func " << fd->name << " : ";
    print(os, fd->type, kTerm);
    os << " => ";
    if (fd->body) print(os, fd->body, kTerm);
  }
  return os.str();
}

}  // namespace cond
