#include "cond/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>

namespace cond {

std::string_view codeName(Code c) {
  switch (c) {
    case Code::ParseError: return "ParseError";
    case Code::UnknownName: return "UnknownName";
    case Code::TypeMismatch: return "TypeMismatch";
    case Code::NotCovering: return "NotCovering";
    case Code::ConfluenceViolation: return "ConfluenceViolation";
    case Code::IllegalIntervalSplit: return "IllegalIntervalSplit";
    case Code::ArityMismatch: return "ArityMismatch";
    case Code::DuplicateClause: return "DuplicateClause";
    case Code::TerminationFailure: return "TerminationFailure";
    case Code::UniverseHasNoType: return "UniverseHasNoType";
    case Code::FuelExhausted: return "FuelExhausted";
  }
  return "UnknownCode";
}

Diagnostic makeError(Code code, std::string message, Span span) {
  Diagnostic d;
  d.severity = Severity::Error;
  d.code = code;
  d.message = std::move(message);
  d.span = span;
  return d;
}

bool hasErrors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::Error;
  });
}

namespace mk {

static TermPtr node(Term t) { return std::make_shared<const Term>(std::move(t)); }

TermPtr var(Name n, Span span) {
  return node({.tag = Tag::Var, .span = span, .name = std::move(n)});
}

TermPtr pi(Name binder, TermPtr domain, TermPtr codomain, Span span) {
  return node({.tag = Tag::Pi,
               .span = span,
               .name = std::move(binder),
               .kids = {std::move(domain), std::move(codomain)}});
}

TermPtr lam(Name binder, TermPtr body, Span span) {
  return node({.tag = Tag::Lam,
               .span = span,
               .name = std::move(binder),
               .kids = {std::move(body)}});
}

TermPtr app(TermPtr fn, TermPtr arg, Span span) {
  return node({.tag = Tag::App, .span = span, .kids = {std::move(fn), std::move(arg)}});
}

TermPtr app(TermPtr fn, const std::vector<TermPtr>& args) {
  TermPtr t = std::move(fn);
  for (const auto& a : args) t = app(t, a);
  return t;
}

TermPtr data(Name n, std::vector<TermPtr> params, Span span) {
  return node({.tag = Tag::Data,
               .span = span,
               .name = std::move(n),
               .kids = std::move(params)});
}

TermPtr con(Name n, std::vector<TermPtr> dataParams, std::vector<TermPtr> args,
            Span span) {
  Term t{.tag = Tag::Con, .span = span, .name = std::move(n)};
  t.paramCount = static_cast<uint32_t>(dataParams.size());
  t.kids = std::move(dataParams);
  t.kids.insert(t.kids.end(), args.begin(), args.end());
  return node(std::move(t));
}

TermPtr caseSplit(Name scrutinee, std::vector<Clause> clauses, Span span) {
  return node({.tag = Tag::Case,
               .span = span,
               .name = std::move(scrutinee),
               .clauses = std::move(clauses)});
}

TermPtr recordLit(Name record, std::vector<TermPtr> params,
                  std::vector<std::pair<Name, TermPtr>> fields, Span span) {
  return node({.tag = Tag::RecordLit,
               .span = span,
               .name = std::move(record),
               .kids = std::move(params),
               .fields = std::move(fields)});
}

TermPtr proj(TermPtr target, Name record, std::vector<TermPtr> params, Name field,
             Span span) {
  Term t{.tag = Tag::Proj, .span = span, .name = std::move(field), .owner = std::move(record)};
  t.kids = std::move(params);
  t.kids.push_back(std::move(target));
  return node(std::move(t));
}

TermPtr interval() {
  static const TermPtr t = node({.tag = Tag::Interval});
  return t;
}

TermPtr left() {
  static const TermPtr t = node({.tag = Tag::EndLeft});
  return t;
}

TermPtr right() {
  static const TermPtr t = node({.tag = Tag::EndRight});
  return t;
}

TermPtr coe(TermPtr family, TermPtr point, TermPtr arg, Span span) {
  return node({.tag = Tag::Coe,
               .span = span,
               .kids = {std::move(family), std::move(point), std::move(arg)}});
}

TermPtr squeeze(TermPtr lhs, TermPtr rhs, Span span) {
  return node({.tag = Tag::Squeeze, .span = span, .kids = {std::move(lhs), std::move(rhs)}});
}

TermPtr universe() {
  static const TermPtr t = node({.tag = Tag::Universe});
  return t;
}

TermPtr funcRef(Name n, Span span) {
  return node({.tag = Tag::FuncRef, .span = span, .name = std::move(n)});
}

}  // namespace mk

std::vector<TermPtr> conParams(const TermPtr& t) {
  assert(t->tag == Tag::Con);
  return {t->kids.begin(), t->kids.begin() + t->paramCount};
}

std::vector<TermPtr> conArgs(const TermPtr& t) {
  assert(t->tag == Tag::Con);
  return {t->kids.begin() + t->paramCount, t->kids.end()};
}

std::vector<TermPtr> projParams(const TermPtr& t) {
  assert(t->tag == Tag::Proj && !t->kids.empty());
  return {t->kids.begin(), t->kids.end() - 1};
}

TermPtr projTarget(const TermPtr& t) {
  assert(t->tag == Tag::Proj && !t->kids.empty());
  return t->kids.back();
}

std::pair<TermPtr, std::vector<TermPtr>> spine(TermPtr t) {
  std::vector<TermPtr> args;
  while (t->tag == Tag::App) {
    args.push_back(t->kids[1]);
    t = t->kids[0];
  }
  std::reverse(args.begin(), args.end());
  return {t, std::move(args)};
}

std::vector<Name> vars(const Telescope& delta) {
  std::vector<Name> out;
  out.reserve(delta.size());
  for (const auto& b : delta) out.push_back(b.name);
  return out;
}

Telescope replaceNames(const Telescope& delta, const std::vector<Name>& names) {
  if (delta.size() != names.size())
    throw std::invalid_argument("replaceNames: telescope and name list differ in length");
  std::set<Name> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw std::invalid_argument("replaceNames: duplicate name " + n);
  Telescope out;
  Substitution renaming;
  for (size_t i = 0; i < delta.size(); ++i) {
    TermPtr ty = substitute(delta[i].type, renaming);
    out.push_back({names[i], ty});
    renaming.push_back({delta[i].name, mk::var(names[i])});
  }
  return out;
}

namespace {

void collectFree(const TermPtr& t, std::set<Name>& bound, std::set<Name>& out) {
  switch (t->tag) {
    case Tag::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case Tag::Pi: {
      collectFree(t->kids[0], bound, out);
      bool fresh = bound.insert(t->name).second;
      collectFree(t->kids[1], bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case Tag::Lam: {
      bool fresh = bound.insert(t->name).second;
      collectFree(t->kids[0], bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case Tag::Case: {
      bool scrutFresh = bound.insert(t->name).second;
      for (const auto& cl : t->clauses) {
        std::vector<Name> added;
        for (const auto& b : cl.binders)
          if (bound.insert(b).second) added.push_back(b);
        collectFree(cl.body, bound, out);
        for (const auto& b : added) bound.erase(b);
      }
      if (scrutFresh) bound.erase(t->name);
      return;
    }
    case Tag::RecordLit:
      for (const auto& k : t->kids) collectFree(k, bound, out);
      for (const auto& [_, body] : t->fields) collectFree(body, bound, out);
      return;
    default:
      for (const auto& k : t->kids) collectFree(k, bound, out);
      return;
  }
}

// Simultaneous capture-avoiding substitution engine.
struct Subst {
  std::map<Name, TermPtr> map;

  explicit Subst(const Substitution& sub) {
    for (const auto& [x, v] : sub) map.emplace(x, v);
  }

  TermPtr apply(const TermPtr& t) const { return map.empty() ? t : go(t); }

 private:
  std::set<Name> rangeFree() const {
    std::set<Name> out;
    for (const auto& [_, v] : map) {
      auto fv = freeVars(v);
      out.insert(fv.begin(), fv.end());
    }
    return out;
  }

  Subst narrowed(const std::vector<Name>& shadowed) const {
    Subst s(*this);
    for (const auto& b : shadowed) s.map.erase(b);
    return s;
  }

  // Substitutes under a simultaneous binder group, renaming binders apart
  // from the substitution range where needed.
  std::pair<std::vector<Name>, TermPtr> underMany(const std::vector<Name>& binders,
                                                  const TermPtr& body) const {
    Subst inner = narrowed(binders);
    if (inner.map.empty()) return {binders, body};
    std::set<Name> range = inner.rangeFree();
    std::vector<Name> out;
    TermPtr cur = body;
    for (size_t i = 0; i < binders.size(); ++i) {
      const Name& b = binders[i];
      if (range.count(b)) {
        std::set<Name> avoid = range;
        auto fv = freeVars(cur);
        avoid.insert(fv.begin(), fv.end());
        avoid.insert(binders.begin(), binders.end());
        avoid.insert(out.begin(), out.end());
        Name fresh = freshName(b, avoid);
        cur = substOne(cur, b, mk::var(fresh));
        out.push_back(fresh);
      } else {
        out.push_back(b);
      }
    }
    return {out, inner.go(cur)};
  }

  std::pair<Name, TermPtr> under(const Name& binder, const TermPtr& body) const {
    auto [bs, t] = underMany({binder}, body);
    return {bs.front(), t};
  }

  TermPtr go(const TermPtr& t) const {
    switch (t->tag) {
      case Tag::Var: {
        auto it = map.find(t->name);
        return it == map.end() ? t : it->second;
      }
      case Tag::Pi: {
        TermPtr dom = go(t->kids[0]);
        auto [b, cod] = under(t->name, t->kids[1]);
        return mk::pi(b, dom, cod, t->span);
      }
      case Tag::Lam: {
        auto [b, body] = under(t->name, t->kids[0]);
        return mk::lam(b, body, t->span);
      }
      case Tag::Case: {
        // The scrutinee name binds in every clause body; a single renaming
        // must therefore be chosen for the whole node.
        Name scrut = t->name;
        std::vector<Clause> clauses = t->clauses;
        Subst noScrut = narrowed({scrut});
        if (!noScrut.map.empty() && noScrut.rangeFree().count(scrut)) {
          std::set<Name> avoid = noScrut.rangeFree();
          avoid.insert(scrut);
          for (const auto& cl : clauses) {
            auto fv = freeVars(cl.body);
            avoid.insert(fv.begin(), fv.end());
            avoid.insert(cl.binders.begin(), cl.binders.end());
          }
          Name fresh = freshName(scrut, avoid);
          for (auto& cl : clauses) cl.body = substOne(cl.body, scrut, mk::var(fresh));
          scrut = fresh;
        }
        std::vector<Clause> out;
        out.reserve(clauses.size());
        for (const auto& cl : clauses) {
          auto [bs, body] = noScrut.underMany(cl.binders, cl.body);
          out.push_back({cl.con, bs, body});
        }
        return mk::caseSplit(scrut, std::move(out), t->span);
      }
      case Tag::RecordLit: {
        std::vector<TermPtr> params;
        params.reserve(t->kids.size());
        for (const auto& k : t->kids) params.push_back(go(k));
        std::vector<std::pair<Name, TermPtr>> fields;
        fields.reserve(t->fields.size());
        for (const auto& [n, body] : t->fields) fields.push_back({n, go(body)});
        return mk::recordLit(t->name, std::move(params), std::move(fields), t->span);
      }
      default: {
        if (t->kids.empty()) return t;
        Term copy = *t;
        for (auto& k : copy.kids) k = go(k);
        return std::make_shared<const Term>(std::move(copy));
      }
    }
  }
};

}  // namespace

std::set<Name> freeVars(const TermPtr& t) {
  std::set<Name> bound, out;
  collectFree(t, bound, out);
  return out;
}

TermPtr substOne(const TermPtr& t, const Name& x, const TermPtr& v) {
  return substSim(t, {{x, v}});
}

TermPtr substSim(const TermPtr& t, const Substitution& sub) {
  Subst s(sub);
  return s.apply(t);
}

TermPtr substitute(const TermPtr& t, const Substitution& sub) {
  TermPtr cur = t;
  for (const auto& [x, v] : sub) cur = substOne(cur, x, v);
  return cur;
}

Telescope substTelescope(const Telescope& delta, const Name& x, const TermPtr& v) {
  Telescope out;
  out.reserve(delta.size());
  for (const auto& b : delta) out.push_back({b.name, substOne(b.type, x, v)});
  return out;
}

namespace {

struct AlphaEnv {
  std::vector<std::pair<Name, Name>> pairs;

  void push(const Name& a, const Name& b) { pairs.push_back({a, b}); }
  void pop(size_t n) { pairs.resize(pairs.size() - n); }

  // Innermost-binder-first lookup; nullopt when both names are free.
  std::optional<bool> lookup(const Name& a, const Name& b) const {
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
      bool la = it->first == a, lb = it->second == b;
      if (la || lb) return la && lb;
    }
    return std::nullopt;
  }
};

bool alphaGo(const TermPtr& a, const TermPtr& b, AlphaEnv& env) {
  if (a.get() == b.get() && env.pairs.empty()) return true;
  if (a->tag != b->tag) return false;
  switch (a->tag) {
    case Tag::Var: {
      auto v = env.lookup(a->name, b->name);
      return v ? *v : a->name == b->name;
    }
    case Tag::Pi: {
      if (!alphaGo(a->kids[0], b->kids[0], env)) return false;
      env.push(a->name, b->name);
      bool ok = alphaGo(a->kids[1], b->kids[1], env);
      env.pop(1);
      return ok;
    }
    case Tag::Lam: {
      env.push(a->name, b->name);
      bool ok = alphaGo(a->kids[0], b->kids[0], env);
      env.pop(1);
      return ok;
    }
    case Tag::Case: {
      if (a->clauses.size() != b->clauses.size()) return false;
      for (size_t i = 0; i < a->clauses.size(); ++i) {
        const Clause& ca = a->clauses[i];
        const Clause& cb = b->clauses[i];
        if (ca.con != cb.con || ca.binders.size() != cb.binders.size()) return false;
        env.push(a->name, b->name);
        for (size_t j = 0; j < ca.binders.size(); ++j)
          env.push(ca.binders[j], cb.binders[j]);
        bool ok = alphaGo(ca.body, cb.body, env);
        env.pop(1 + ca.binders.size());
        if (!ok) return false;
      }
      return true;
    }
    case Tag::Con:
      if (a->name != b->name || a->paramCount != b->paramCount) return false;
      break;
    case Tag::Data:
    case Tag::FuncRef:
      if (a->name != b->name) return false;
      break;
    case Tag::RecordLit: {
      if (a->name != b->name || a->fields.size() != b->fields.size()) return false;
      for (size_t i = 0; i < a->fields.size(); ++i) {
        if (a->fields[i].first != b->fields[i].first) return false;
        if (!alphaGo(a->fields[i].second, b->fields[i].second, env)) return false;
      }
      break;
    }
    case Tag::Proj:
      if (a->name != b->name || a->owner != b->owner) return false;
      break;
    default:
      break;
  }
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!alphaGo(a->kids[i], b->kids[i], env)) return false;
  return true;
}

}  // namespace

bool alphaEq(const TermPtr& a, const TermPtr& b) {
  AlphaEnv env;
  return alphaGo(a, b, env);
}

Name freshName(const Name& hint, const std::set<Name>& avoid) {
  if (!avoid.count(hint)) return hint;
  Name base = hint;
  while (!base.empty() && isdigit(static_cast<unsigned char>(base.back()))) base.pop_back();
  if (base.empty()) base = "x";
  for (uint64_t i = 1;; ++i) {
    Name candidate = base + std::to_string(i);
    if (!avoid.count(candidate)) return candidate;
  }
}

}  // namespace cond
