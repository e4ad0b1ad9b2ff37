#include "cond/parser.hpp"

#include <cctype>
#include <utility>

namespace cond {

NameEnv NameEnv::fromSignature(const Signature& sig) {
  NameEnv env;
  for (const auto& d : sig.decls()) {
    if (const auto* dd = std::get_if<DataDef>(&d)) {
      env.typeHeads[dd->name] = dd->params.size();
      for (const auto& c : dd->constructors) env.ctors[c.name] = c.params.size();
    } else if (const auto* rd = std::get_if<RecordDef>(&d)) {
      env.typeHeads[rd->name] = rd->params.size();
    } else if (const auto* fd = std::get_if<FuncDef>(&d)) {
      env.funcs.insert(fd->name);
    }
  }
  return env;
}

namespace {

enum class Tok {
  Ident,
  KwData, KwRecord, KwFunc, KwWith, KwCase, KwNew,
  KwU, KwI, KwLeft, KwRight, KwCoe,
  LParen, RParen, LBrace, RBrace,
  Colon, Dot, Pipe, Comma,
  Arrow, FatArrow, Backslash, SqueezeOp,
  Eof,
};

struct Token {
  Tok kind;
  std::string text;
  Span span;
};

struct ParseFail {
  Diagnostic diag;
};

[[noreturn]] void fail(std::string msg, Span span) {
  throw ParseFail{makeError(Code::ParseError, std::move(msg), span)};
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = src.size();
  auto push = [&](Tok k, size_t begin, size_t end) {
    out.push_back({k, std::string(src.substr(begin, end - begin)),
                   {static_cast<uint32_t>(begin), static_cast<uint32_t>(end)}});
  };
  while (i < n) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      ++i;
      continue;
    }
    if (c == '-' && i + 1 < n && src[i + 1] == '-') {
      while (i < n && src[i] != '\n') ++i;
      continue;
    }
    size_t begin = i;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      ++i;
      while (i < n && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                       src[i] == '_' || src[i] == '\''))
        ++i;
      std::string_view word = src.substr(begin, i - begin);
      Tok k = Tok::Ident;
      if (word == "data") k = Tok::KwData;
      else if (word == "record") k = Tok::KwRecord;
      else if (word == "func") k = Tok::KwFunc;
      else if (word == "with") k = Tok::KwWith;
      else if (word == "case") k = Tok::KwCase;
      else if (word == "new") k = Tok::KwNew;
      else if (word == "U") k = Tok::KwU;
      else if (word == "I") k = Tok::KwI;
      else if (word == "left") k = Tok::KwLeft;
      else if (word == "right") k = Tok::KwRight;
      else if (word == "coe") k = Tok::KwCoe;
      push(k, begin, i);
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, begin, ++i); break;
      case ')': push(Tok::RParen, begin, ++i); break;
      case '{': push(Tok::LBrace, begin, ++i); break;
      case '}': push(Tok::RBrace, begin, ++i); break;
      case ':': push(Tok::Colon, begin, ++i); break;
      case '.': push(Tok::Dot, begin, ++i); break;
      case '|': push(Tok::Pipe, begin, ++i); break;
      case ',': push(Tok::Comma, begin, ++i); break;
      case '\\': push(Tok::Backslash, begin, ++i); break;
      case '-':
        if (i + 1 < n && src[i + 1] == '>') {
          i += 2;
          push(Tok::Arrow, begin, i);
        } else {
          fail("stray '-'", {static_cast<uint32_t>(begin), static_cast<uint32_t>(begin + 1)});
        }
        break;
      case '=':
        if (i + 1 < n && src[i + 1] == '>') {
          i += 2;
          push(Tok::FatArrow, begin, i);
        } else {
          fail("stray '='", {static_cast<uint32_t>(begin), static_cast<uint32_t>(begin + 1)});
        }
        break;
      case '/':
        if (i + 1 < n && src[i + 1] == '\\') {
          i += 2;
          push(Tok::SqueezeOp, begin, i);
        } else {
          fail("stray '/'", {static_cast<uint32_t>(begin), static_cast<uint32_t>(begin + 1)});
        }
        break;
      default:
        fail("unexpected character", {static_cast<uint32_t>(begin), static_cast<uint32_t>(begin + 1)});
    }
  }
  push(Tok::Eof, n, n);
  return out;
}

// One column of a condition clause pattern: a constructor applied to fresh
// binders, or a plain variable.
struct SurfCol {
  bool isCtor = false;
  Name head;
  std::vector<Name> binders;
  Span span{};
};

struct SurfRow {
  std::vector<SurfCol> cols;
  TermPtr body;
  Span span{};
};

class Parser {
 public:
  Parser(std::string_view src, NameEnv env) : toks_(lex(src)), env_(std::move(env)) {}

  SourceModule module(std::string path) {
    SourceModule m;
    m.path = std::move(path);
    while (!at(Tok::Eof)) m.decls.push_back(decl());
    return m;
  }

  TermPtr standaloneTerm() {
    TermPtr t = term();
    expect(Tok::Eof, "expected end of input after term");
    return t;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  NameEnv env_;
  std::vector<Name> locals_;
  uint64_t freshCounter_ = 0;

  const Token& peek(size_t k = 0) const {
    size_t i = pos_ + k;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(Tok k) const { return peek().kind == k; }
  Token take() { return toks_[pos_++]; }
  Token expect(Tok k, const char* msg) {
    if (!at(k)) fail(msg, peek().span);
    return take();
  }
  bool accept(Tok k) {
    if (!at(k)) return false;
    ++pos_;
    return true;
  }

  bool isLocal(const Name& n) const {
    for (auto it = locals_.rbegin(); it != locals_.rend(); ++it)
      if (*it == n) return true;
    return false;
  }

  struct ScopedLocals {
    Parser& p;
    size_t mark;
    explicit ScopedLocals(Parser& p) : p(p), mark(p.locals_.size()) {}
    ~ScopedLocals() { p.locals_.resize(mark); }
  };

  Name freshVar(const std::set<Name>& avoid) {
    for (;;) {
      Name cand = "_x" + std::to_string(++freshCounter_);
      if (!avoid.count(cand) && !isLocal(cand)) return cand;
    }
  }

  // ---- declarations ----

  Declaration decl() {
    if (at(Tok::KwData)) return dataDecl();
    if (at(Tok::KwRecord)) return recordDecl();
    if (at(Tok::KwFunc)) return funcDecl();
    fail("expected 'data', 'record' or 'func'", peek().span);
  }

  Telescope telescopeGroups() {
    Telescope out;
    while (at(Tok::LParen) && peek(1).kind == Tok::Ident) {
      // Find whether the group is (x y : A); otherwise stop.
      size_t k = 1;
      while (peek(k).kind == Tok::Ident) ++k;
      if (peek(k).kind != Tok::Colon) break;
      take();  // (
      std::vector<Token> names;
      while (at(Tok::Ident)) names.push_back(take());
      expect(Tok::Colon, "expected ':' in telescope binding");
      TermPtr ty = term();
      expect(Tok::RParen, "expected ')' after telescope binding");
      for (const auto& nt : names) {
        out.push_back({nt.text, ty});
        locals_.push_back(nt.text);
      }
    }
    return out;
  }

  Declaration dataDecl() {
    Token kw = take();
    Token nameTok = expect(Tok::Ident, "expected data type name");
    DataDef d;
    d.name = nameTok.text;
    d.span = {kw.span.begin, nameTok.span.end};
    ScopedLocals scope(*this);
    d.params = telescopeGroups();
    expect(Tok::Colon, "expected ':' after data header");
    expect(Tok::KwU, "a data type is declared at type U");
    env_.typeHeads[d.name] = d.params.size();
    while (accept(Tok::Pipe)) {
      Token ctorTok = expect(Tok::Ident, "expected constructor name");
      ConstructorDef ctor;
      ctor.name = ctorTok.text;
      ctor.span = ctorTok.span;
      std::set<Name> taken;
      while (atomStart()) {
        TermPtr ty = atomPostfix();
        Name p = freshVar(taken);
        taken.insert(p);
        ctor.params.push_back({p, ty});
      }
      if (accept(Tok::KwWith)) {
        if (ctor.params.empty())
          fail("a condition needs constructor parameters to match on", peek().span);
        ctor.conditions = conditionRows();
      }
      // The constructor becomes visible only after its own condition, so a
      // self-referencing condition is an unknown name downstream.
      env_.ctors[ctor.name] = ctor.params.size();
      d.constructors.push_back(std::move(ctor));
    }
    return d;
  }

  Declaration recordDecl() {
    Token kw = take();
    Token nameTok = expect(Tok::Ident, "expected record name");
    RecordDef r;
    r.name = nameTok.text;
    r.span = {kw.span.begin, nameTok.span.end};
    ScopedLocals scope(*this);
    r.params = telescopeGroups();
    expect(Tok::Colon, "expected ':' after record header");
    expect(Tok::KwU, "a record is declared at type U");
    env_.typeHeads[r.name] = r.params.size();
    while (accept(Tok::Pipe)) {
      Token fieldTok = expect(Tok::Ident, "expected field name");
      FieldDef f;
      f.name = fieldTok.text;
      f.span = fieldTok.span;
      expect(Tok::Colon, "expected ':' after field name");
      f.type = term();
      if (accept(Tok::KwWith)) f.coconditions = conditionRows();
      locals_.push_back(f.name);
      r.fields.push_back(std::move(f));
    }
    return r;
  }

  Declaration funcDecl() {
    Token kw = take();
    Token nameTok = expect(Tok::Ident, "expected function name");
    FuncDef f;
    f.name = nameTok.text;
    f.span = {kw.span.begin, nameTok.span.end};
    expect(Tok::Colon, "expected ':' after function name");
    f.type = term();
    expect(Tok::FatArrow, "expected '=>' before function body");
    env_.funcs.insert(f.name);  // in scope for recursion
    f.body = term();
    return f;
  }

  // ---- conditions ----

  std::vector<TermPtr> conditionRows() {
    std::vector<SurfRow> rows;
    if (accept(Tok::LBrace)) {
      if (!at(Tok::RBrace)) {
        rows.push_back(conditionClause());
        while (accept(Tok::Pipe)) rows.push_back(conditionClause());
      }
      expect(Tok::RBrace, "expected '}' closing condition clauses");
    } else {
      rows.push_back(conditionClause());
    }
    return desugarRows(rows);
  }

  SurfRow conditionClause() {
    SurfRow row;
    row.span = peek().span;
    row.cols.push_back(conditionColumn());
    while (accept(Tok::Comma)) row.cols.push_back(conditionColumn());
    expect(Tok::FatArrow, "expected '=>' in condition clause");
    ScopedLocals scope(*this);
    for (const auto& col : row.cols) {
      if (col.isCtor) {
        for (const auto& b : col.binders) locals_.push_back(b);
      } else {
        locals_.push_back(col.head);
      }
    }
    row.body = term();
    return row;
  }

  SurfCol conditionColumn() {
    SurfCol col;
    col.span = peek().span;
    if (accept(Tok::KwLeft)) {
      col.isCtor = true;
      col.head = "left";
      return col;
    }
    if (accept(Tok::KwRight)) {
      col.isCtor = true;
      col.head = "right";
      return col;
    }
    Token head = expect(Tok::Ident, "expected a pattern");
    col.head = head.text;
    col.isCtor = env_.ctors.count(head.text) != 0;
    while (at(Tok::Ident)) {
      col.isCtor = true;  // a head with binders is a constructor pattern
      col.binders.push_back(take().text);
    }
    return col;
  }

  // Compiles clause rows into case-tree rows. Consecutive clauses whose first
  // column agrees in kind are merged: constructor columns become one partial
  // case split, variable columns one lambda. Rows that cannot merge stay
  // separate and are tried in order when the condition fires.
  std::vector<TermPtr> desugarRows(const std::vector<SurfRow>& rows) {
    std::vector<TermPtr> out;
    size_t i = 0;
    while (i < rows.size()) {
      if (rows[i].cols.empty()) {
        fail("condition clause needs at least one pattern", rows[i].span);
      }
      bool ctorKind = rows[i].cols[0].isCtor;
      size_t j = i;
      while (j < rows.size() && !rows[j].cols.empty() && rows[j].cols[0].isCtor == ctorKind)
        ++j;
      std::vector<SurfRow> run(rows.begin() + i, rows.begin() + j);
      auto terms = ctorKind ? desugarCtorRun(run) : desugarVarRun(run);
      out.insert(out.end(), terms.begin(), terms.end());
      i = j;
    }
    return out;
  }

  static SurfRow dropFirstCol(const SurfRow& row) {
    SurfRow rest = row;
    rest.cols.erase(rest.cols.begin());
    return rest;
  }

  // A single row's remainder always compiles to exactly one term.
  TermPtr desugarSingle(const SurfRow& row) {
    if (row.cols.empty()) return row.body;
    const SurfCol& col = row.cols[0];
    TermPtr rest = desugarSingle(dropFirstCol(row));
    if (col.isCtor) {
      std::set<Name> avoid = freeVars(rest);
      Name scrut = freshVar(avoid);
      return mk::caseSplit(scrut, {{col.head, col.binders, rest}}, row.span);
    }
    return mk::lam(col.head, rest, row.span);
  }

  // Free variables of a row seen from outside its own first-column binders.
  static std::set<Name> ambientVars(const SurfRow& row, const std::vector<Name>& own) {
    std::set<Name> fv = freeVars(row.body);
    for (const auto& b : own) fv.erase(b);
    return fv;
  }

  std::vector<SurfRow> restsOf(const std::vector<SurfRow>& rows, size_t i, size_t j) {
    std::vector<SurfRow> out;
    for (size_t k = i; k < j; ++k) out.push_back(dropFirstCol(rows[k]));
    return out;
  }

  std::vector<TermPtr> desugarRests(std::vector<SurfRow> rests) {
    if (rests.size() == 1 && rests[0].cols.empty()) return {rests[0].body};
    return desugarRows(rests);
  }

  std::vector<TermPtr> desugarCtorRun(const std::vector<SurfRow>& run) {
    std::vector<TermPtr> out;
    std::vector<Clause> clauses;
    std::set<Name> avoid;
    auto flush = [&]() {
      if (clauses.empty()) return;
      Name scrut = freshVar(avoid);
      out.push_back(mk::caseSplit(scrut, clauses, run.front().span));
      clauses.clear();
      avoid.clear();
    };
    size_t i = 0;
    while (i < run.size()) {
      const SurfCol& col = run[i].cols[0];
      // Merge consecutive rows with the same constructor head when their
      // pattern binders can be aligned without capturing an ambient name.
      size_t j = i + 1;
      while (j < run.size() && run[j].cols[0].head == col.head &&
             run[j].cols[0].binders.size() == col.binders.size()) {
        auto ambient = ambientVars(run[j], run[j].cols[0].binders);
        bool captures = false;
        for (const auto& b : col.binders)
          if (ambient.count(b)) captures = true;
        if (captures) break;
        ++j;
      }
      std::vector<SurfRow> rests;
      for (size_t k = i; k < j; ++k) {
        SurfRow rest = dropFirstCol(run[k]);
        Substitution align;
        const auto& theseBinders = run[k].cols[0].binders;
        for (size_t b = 0; b < col.binders.size(); ++b)
          if (theseBinders[b] != col.binders[b])
            align.push_back({theseBinders[b], mk::var(col.binders[b])});
        if (!align.empty()) rest.body = substSim(rest.body, align);
        rests.push_back(std::move(rest));
      }
      std::vector<TermPtr> bodies = desugarRests(std::move(rests));
      if (bodies.size() == 1) {
        clauses.push_back({col.head, col.binders, bodies[0]});
        auto fv = freeVars(bodies[0]);
        avoid.insert(fv.begin(), fv.end());
      } else {
        // The group branches into several trees; emit them as separate
        // single-clause rows to preserve try-in-order semantics.
        flush();
        for (const auto& b : bodies) {
          Name scrut = freshVar(freeVars(b));
          out.push_back(mk::caseSplit(scrut, {{col.head, col.binders, b}}, run[i].span));
        }
      }
      i = j;
    }
    flush();
    return out;
  }

  std::vector<TermPtr> desugarVarRun(const std::vector<SurfRow>& run) {
    std::vector<TermPtr> out;
    size_t i = 0;
    while (i < run.size()) {
      const Name binder = run[i].cols[0].head;
      // Extend the merge while renaming each row's variable to `binder`
      // cannot capture an ambient occurrence of `binder`.
      size_t j = i + 1;
      while (j < run.size()) {
        const Name& v = run[j].cols[0].head;
        if (v != binder && ambientVars(run[j], {v}).count(binder)) break;
        ++j;
      }
      std::vector<SurfRow> rests;
      for (size_t k = i; k < j; ++k) {
        SurfRow rest = dropFirstCol(run[k]);
        const Name& v = run[k].cols[0].head;
        if (v != binder) rest.body = substOne(rest.body, v, mk::var(binder));
        rests.push_back(std::move(rest));
      }
      for (const auto& b : desugarRests(std::move(rests)))
        out.push_back(mk::lam(binder, b, run[i].span));
      i = j;
    }
    return out;
  }

  // ---- terms ----

  TermPtr term() {
    if (at(Tok::Backslash)) return lambda();
    return arrow();
  }

  TermPtr lambda() {
    Token slash = take();
    std::vector<Token> binders;
    while (at(Tok::Ident)) binders.push_back(take());
    if (binders.empty()) fail("expected binder after '\\'", peek().span);
    expect(Tok::Dot, "expected '.' after lambda binders");
    ScopedLocals scope(*this);
    for (const auto& b : binders) locals_.push_back(b.text);
    TermPtr body = term();
    for (auto it = binders.rbegin(); it != binders.rend(); ++it)
      body = mk::lam(it->text, body, {slash.span.begin, it->span.end});
    return body;
  }

  bool piGroupAhead() const {
    if (!at(Tok::LParen) || peek(1).kind != Tok::Ident) return false;
    size_t k = 1;
    while (peek(k).kind == Tok::Ident) ++k;
    return peek(k).kind == Tok::Colon;
  }

  TermPtr arrow() {
    if (piGroupAhead()) {
      Token open = take();
      std::vector<Token> names;
      while (at(Tok::Ident)) names.push_back(take());
      expect(Tok::Colon, "expected ':' in pi binder");
      TermPtr dom = term();
      expect(Tok::RParen, "expected ')' after pi binder");
      expect(Tok::Arrow, "expected '->' after pi binder");
      ScopedLocals scope(*this);
      for (const auto& nt : names) locals_.push_back(nt.text);
      TermPtr cod = term();
      for (auto it = names.rbegin(); it != names.rend(); ++it)
        cod = mk::pi(it->text, dom, cod, {open.span.begin, it->span.end});
      return cod;
    }
    TermPtr lhs = squeezeTerm();
    if (accept(Tok::Arrow)) {
      TermPtr rhs = term();
      std::set<Name> avoid = freeVars(rhs);
      auto lfv = freeVars(lhs);
      avoid.insert(lfv.begin(), lfv.end());
      return mk::pi(freshVar(avoid), lhs, rhs, lhs->span);
    }
    return lhs;
  }

  TermPtr squeezeTerm() {
    TermPtr lhs = application();
    while (at(Tok::SqueezeOp)) {
      Token op = take();
      TermPtr rhs = application();
      lhs = mk::squeeze(lhs, rhs, {lhs->span.begin, op.span.end});
    }
    return lhs;
  }

  bool atomStart() const {
    switch (peek().kind) {
      case Tok::Ident:
      case Tok::KwU:
      case Tok::KwI:
      case Tok::KwLeft:
      case Tok::KwRight:
      case Tok::KwCoe:
      case Tok::KwCase:
      case Tok::KwNew:
      case Tok::LParen:
        return true;
      default:
        return false;
    }
  }

  // A spine head that is a bare global identifier is kept pending so the
  // spine can feed a constructor or type its declared number of arguments.
  struct Atom {
    TermPtr term;        // resolved
    Name pendingGlobal;  // or an identifier awaiting arity resolution
    Span span;
  };

  TermPtr application() {
    Atom head = atomPostfix_();
    std::vector<TermPtr> args;
    Span end = head.span;
    while (atomStart()) {
      TermPtr a = atomPostfix();
      end = a->span;
      args.push_back(std::move(a));
    }
    Span span{head.span.begin, end.end};
    if (!head.term) return resolveSpine(head.pendingGlobal, std::move(args), span);
    return mk::app(head.term, args);
  }

  TermPtr atomPostfix() {
    Atom a = atomPostfix_();
    if (a.term) return a.term;
    return resolveSpine(a.pendingGlobal, {}, a.span);
  }

  Atom atomPostfix_() {
    Atom a = atom_();
    while (at(Tok::Dot)) {
      take();
      Token field = expect(Tok::Ident, "expected field name after '.'");
      TermPtr target = a.term ? a.term : resolveSpine(a.pendingGlobal, {}, a.span);
      a.term = mk::proj(target, "", {}, field.text, {a.span.begin, field.span.end});
      a.pendingGlobal.clear();
      a.span = {a.span.begin, field.span.end};
    }
    return a;
  }

  Atom atom_() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::KwU: take(); return {mk::universe(), {}, t.span};
      case Tok::KwI: take(); return {mk::interval(), {}, t.span};
      case Tok::KwLeft: take(); return {mk::left(), {}, t.span};
      case Tok::KwRight: take(); return {mk::right(), {}, t.span};
      case Tok::KwCoe: {
        Token kw = take();
        TermPtr family = atomPostfix();
        TermPtr point = atomPostfix();
        TermPtr arg = atomPostfix();
        return {mk::coe(family, point, arg, {kw.span.begin, arg->span.end}), {}, kw.span};
      }
      case Tok::KwCase: return {caseExpr(), {}, t.span};
      case Tok::KwNew: return {recordLitExpr(), {}, t.span};
      case Tok::LParen: {
        take();
        TermPtr inner = term();
        Token close = expect(Tok::RParen, "expected ')'");
        return {inner, {}, {t.span.begin, close.span.end}};
      }
      case Tok::Ident: {
        Token id = take();
        if (isLocal(id.text)) return {mk::var(id.text, id.span), {}, id.span};
        return {nullptr, id.text, id.span};
      }
      default:
        fail("expected a term", t.span);
    }
  }

  TermPtr resolveSpine(const Name& head, std::vector<TermPtr> args, Span span) {
    if (auto it = env_.ctors.find(head); it != env_.ctors.end())
      return saturate(true, head, it->second, std::move(args), span);
    if (auto it = env_.typeHeads.find(head); it != env_.typeHeads.end())
      return saturate(false, head, it->second, std::move(args), span);
    if (env_.funcs.count(head)) return mk::app(mk::funcRef(head, span), args);
    return mk::app(mk::var(head, span), args);
  }

  // Constructors and type heads are fully applied nodes; missing arguments
  // are eta-expanded, surplus ones become ordinary applications.
  TermPtr saturate(bool isCtor, const Name& head, size_t arity,
                   std::vector<TermPtr> args, Span span) {
    std::vector<TermPtr> direct(args.begin(),
                                args.begin() + std::min(arity, args.size()));
    std::vector<TermPtr> surplus(args.begin() + std::min(arity, args.size()),
                                 args.end());
    std::vector<Name> etaBinders;
    if (direct.size() < arity) {
      std::set<Name> avoid;
      for (const auto& a : direct) {
        auto fv = freeVars(a);
        avoid.insert(fv.begin(), fv.end());
      }
      while (direct.size() < arity) {
        Name b = freshName("_e" + std::to_string(direct.size() + 1), avoid);
        avoid.insert(b);
        etaBinders.push_back(b);
        direct.push_back(mk::var(b));
      }
    }
    TermPtr node = isCtor ? mk::con(head, {}, direct, span)
                          : mk::data(head, direct, span);
    for (auto it = etaBinders.rbegin(); it != etaBinders.rend(); ++it)
      node = mk::lam(*it, node, span);
    return mk::app(node, surplus);
  }

  TermPtr caseExpr() {
    Token kw = take();
    Token scrut = expect(Tok::Ident, "case splits on a variable");
    expect(Tok::LBrace, "expected '{' after case scrutinee");
    std::vector<Clause> clauses;
    if (!at(Tok::RBrace)) {
      clauses.push_back(caseClause(scrut.text));
      while (accept(Tok::Pipe)) clauses.push_back(caseClause(scrut.text));
    }
    Token close = expect(Tok::RBrace, "expected '}' closing case");
    return mk::caseSplit(scrut.text, std::move(clauses), {kw.span.begin, close.span.end});
  }

  Clause caseClause(const Name& scrut) {
    Clause cl;
    if (accept(Tok::KwLeft)) cl.con = "left";
    else if (accept(Tok::KwRight)) cl.con = "right";
    else cl.con = expect(Tok::Ident, "expected constructor pattern").text;
    while (at(Tok::Ident)) cl.binders.push_back(take().text);
    expect(Tok::FatArrow, "expected '=>' in clause");
    ScopedLocals scope(*this);
    locals_.push_back(scrut);
    for (const auto& b : cl.binders) locals_.push_back(b);
    cl.body = term();
    return cl;
  }

  TermPtr recordLitExpr() {
    Token kw = take();
    Token rec = expect(Tok::Ident, "expected record name after 'new'");
    std::vector<TermPtr> params;
    while (atomStart() && !at(Tok::LBrace)) params.push_back(atomPostfix());
    expect(Tok::LBrace, "expected '{' in record literal");
    std::vector<std::pair<Name, TermPtr>> fields;
    if (!at(Tok::RBrace)) {
      do {
        Token f = expect(Tok::Ident, "expected field name");
        expect(Tok::FatArrow, "expected '=>' after field name");
        fields.push_back({f.text, term()});
      } while (accept(Tok::Pipe));
    }
    Token close = expect(Tok::RBrace, "expected '}' closing record literal");
    return mk::recordLit(rec.text, std::move(params), std::move(fields),
                         {kw.span.begin, close.span.end});
  }
};

}  // namespace

ModuleResult parseModule(std::string_view text, std::string path) {
  try {
    Parser p(text, {});
    return {p.module(std::move(path)), {}};
  } catch (const ParseFail& f) {
    return {std::nullopt, {f.diag}};
  }
}

TermResult parseTerm(std::string_view text, const NameEnv& env) {
  try {
    Parser p(text, env);
    return {p.standaloneTerm(), {}};
  } catch (const ParseFail& f) {
    return {nullptr, {f.diag}};
  }
}

}  // namespace cond
