#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cond/decl.hpp"
#include "cond/term.hpp"

namespace cond {

// Reduction strategies. ConditionFirst is the kernel strategy: a case
// dispatch sees its scrutinee fully weak-head reduced, conditions included.
// ClauseFirst dispatches on the syntactic constructor head before the head's
// own condition fires; it exists for the reduction-order oracle.
enum class Dispatch { ConditionFirst, ClauseFirst };

// Lazy reduces head-first; ArgsFirst fully normalizes application and
// constructor arguments before head steps (test instrument).
enum class Order { Lazy, ArgsFirst };

struct EvalOptions {
  uint64_t fuel = 1'000'000;
  Dispatch dispatch = Dispatch::ConditionFirst;
  Order order = Order::Lazy;
};

// Whole-term reduction snapshots: entry k's `after` is alpha-equal to entry
// k+1's `before` within one reduction run.
struct TraceEntry {
  std::string rule;
  TermPtr before;
  TermPtr after;
};
using ReductionTrace = std::vector<TraceEntry>;

class FuelExhausted : public std::runtime_error {
 public:
  FuelExhausted() : std::runtime_error("reduction fuel exhausted") {}
};

struct EvalStats {
  uint64_t steps = 0;
  uint64_t maxConditionChain = 0;
};

class Evaluator {
 public:
  explicit Evaluator(const Signature& sig, EvalOptions opts = {});

  // Weak head normal form: no top-level redex remains. Stuck coe, stuck
  // squeeze and constructors whose conditions do not fire are values.
  TermPtr whnf(TermPtr t);

  // Full normal form; throws FuelExhausted past the step budget.
  TermPtr normalize(TermPtr t);

  // Definitional equality: normal forms compared up to renaming plus eta for
  // functions and record literals against neutral terms.
  bool convertible(const TermPtr& a, const TermPtr& b);

  // Attempts the condition rules on `con` applied to `args` under the given
  // data parameter instantiation. Returns the fired row's leaf instance.
  std::optional<TermPtr> conditionReduce(const Name& con,
                                         const std::vector<TermPtr>& dataParams,
                                         const std::vector<TermPtr>& args);

  // Projection reduction for `proj` applied to one argument: record-literal
  // field lookup or a matching cocondition clause.
  std::optional<TermPtr> projectionReduce(const TermPtr& proj, const TermPtr& arg);

  const EvalStats& stats() const { return stats_; }

  // When set, reduction appends whole-term before/after snapshots.
  ReductionTrace* trace = nullptr;

 private:
  using Ctx = std::function<TermPtr(const TermPtr&)>;

  struct StuckDispatch {};

  struct CtxScope {
    Evaluator& e;
    bool active;
    CtxScope(Evaluator& e, Ctx ctx) : e(e), active(e.trace != nullptr) {
      if (active) e.traceCtx_.push_back(std::move(ctx));
    }
    ~CtxScope() {
      if (active) e.traceCtx_.pop_back();
    }
  };

  void tick();
  void record(std::string rule, const TermPtr& before, const TermPtr& after);

  TermPtr whnfLoop(TermPtr t, bool fireTopCondition);
  TermPtr whnfScrutinee(const TermPtr& t);

  // One constructor-condition step; updates `con` with weak-head-reduced
  // arguments as matching forces them.
  std::optional<TermPtr> conditionStep(TermPtr& con);

  // Walks a condition/cocondition row against leading arguments. Fires when
  // the row's lambda/case alternation is fully consumed; reduced arguments
  // are written back into `args`.
  std::optional<TermPtr> tryRow(TermPtr row, std::vector<TermPtr>& args,
                                const std::function<Ctx(size_t)>& argCtx);

  std::optional<TermPtr> projStep(const TermPtr& head, std::vector<TermPtr>& args);
  std::optional<TermPtr> coeStep(const TermPtr& head, const Ctx& ctx);
  std::optional<TermPtr> squeezeStep(const TermPtr& head, const Ctx& ctx);

  TermPtr normChild(const TermPtr& child, const Ctx& ctx);
  TermPtr preNormalizeArgs(const TermPtr& t);

  bool etaEq(const TermPtr& a, const TermPtr& b,
             std::vector<std::pair<Name, Name>>& env);

  const Signature& sig_;
  EvalOptions opts_;
  EvalStats stats_;
  uint64_t fuel_;
  int speculation_ = 0;
  uint64_t conditionChainFloor_ = 0;
  std::vector<Ctx> traceCtx_;
};

// Convenience wrappers over a throwaway evaluator.
TermPtr whnf(const Signature& sig, const TermPtr& t, EvalOptions opts = {});
TermPtr normalize(const Signature& sig, const TermPtr& t, EvalOptions opts = {});
bool convertible(const Signature& sig, const TermPtr& a, const TermPtr& b,
                 EvalOptions opts = {});

}  // namespace cond
