#include "budgetlab/core.hpp"

#include <algorithm>

namespace budgetlab {

const char* to_string(Speaker s) {
    switch (s) {
        case Speaker::System: return "system";
        case Speaker::User: return "user";
        case Speaker::Assistant: return "assistant";
    }
    return "user";
}

Speaker speaker_from_string(const std::string& s) {
    if (s == "system") return Speaker::System;
    if (s == "user") return Speaker::User;
    if (s == "assistant") return Speaker::Assistant;
    throw ValidationError("unknown speaker: " + s);
}

BudgetPolicy BudgetPolicy::thinking(int floor, int slack) {
    BudgetPolicy p;
    p.thinking_enabled = true;
    p.min_think_tokens = floor;
    p.max_think_tokens = floor + slack;
    p.validate();
    return p;
}

BudgetPolicy BudgetPolicy::disabled() {
    BudgetPolicy p;
    p.thinking_enabled = false;
    p.min_think_tokens = 0;
    p.max_think_tokens = 0;
    return p;
}

BudgetPolicy BudgetPolicy::for_budget(int per_call_budget) {
    if (per_call_budget < 0) throw ValidationError("BudgetPolicy: per-call budget must be >= 0");
    return per_call_budget == 0 ? disabled() : thinking(per_call_budget);
}

void BudgetPolicy::validate() const {
    if (min_think_tokens < 0 || max_think_tokens < 0)
        throw ValidationError("BudgetPolicy: think token bounds must be non-negative");
    if (min_think_tokens > max_think_tokens)
        throw ValidationError("BudgetPolicy: min_think_tokens <= max_think_tokens violated");
    if (!thinking_enabled && (min_think_tokens != 0 || max_think_tokens != 0))
        throw ValidationError("BudgetPolicy: thinking_enabled=false requires min=max=0");
    if (thinking_enabled && min_think_tokens == 0 && max_think_tokens == 0)
        throw ValidationError("BudgetPolicy: thinking_enabled=true requires max_think_tokens > 0");
    if (max_force_iterations < 1)
        throw ValidationError("BudgetPolicy: max_force_iterations >= 1 violated");
    if (no_think_answer_cap < 1)
        throw ValidationError("BudgetPolicy: no_think_answer_cap must be positive");
}

const char* to_string(StrategyKind k) {
    switch (k) {
        case StrategyKind::Vanilla: return "vanilla";
        case StrategyKind::SelfConsistency: return "self_consistency";
        case StrategyKind::Summary: return "summary";
        case StrategyKind::Reflect: return "reflect";
        case StrategyKind::Judge: return "judge";
        case StrategyKind::JudgeWithHistory: return "judge_history";
        case StrategyKind::JudgeReflection: return "judge_reflect";
    }
    return "vanilla";
}

StrategyKind strategy_kind_from_string(const std::string& s) {
    if (s == "vanilla") return StrategyKind::Vanilla;
    if (s == "self_consistency") return StrategyKind::SelfConsistency;
    if (s == "summary") return StrategyKind::Summary;
    if (s == "reflect") return StrategyKind::Reflect;
    if (s == "judge") return StrategyKind::Judge;
    if (s == "judge_history") return StrategyKind::JudgeWithHistory;
    if (s == "judge_reflect") return StrategyKind::JudgeReflection;
    throw ValidationError("unknown strategy kind: " + s);
}

bool is_judge_kind(StrategyKind k) {
    return k == StrategyKind::Judge || k == StrategyKind::JudgeWithHistory ||
           k == StrategyKind::JudgeReflection;
}

StrategySpec StrategySpec::vanilla() {
    return StrategySpec{};
}

StrategySpec StrategySpec::self_consistency(int n) {
    StrategySpec s;
    s.kind = StrategyKind::SelfConsistency;
    s.trace_count = n;
    s.trace_temperature = 1.0;
    s.validate();
    return s;
}

StrategySpec StrategySpec::summary(int n) {
    StrategySpec s;
    s.kind = StrategyKind::Summary;
    s.trace_count = n;
    s.trace_temperature = 1.0;
    s.aggregate_temperature = 1.0;
    s.validate();
    return s;
}

StrategySpec StrategySpec::reflect(int k) {
    StrategySpec s;
    s.kind = StrategyKind::Reflect;
    s.reflect_rounds = k;
    s.validate();
    return s;
}

static StrategySpec make_judge(StrategyKind kind, int max_retries) {
    StrategySpec s;
    s.kind = kind;
    s.max_judge_retries = max_retries;
    s.validate();
    return s;
}

StrategySpec StrategySpec::judge(int max_retries) {
    return make_judge(StrategyKind::Judge, max_retries);
}

StrategySpec StrategySpec::judge_with_history(int max_retries) {
    return make_judge(StrategyKind::JudgeWithHistory, max_retries);
}

StrategySpec StrategySpec::judge_reflection(int max_retries) {
    return make_judge(StrategyKind::JudgeReflection, max_retries);
}

void StrategySpec::validate() const {
    const bool sampled = kind == StrategyKind::SelfConsistency || kind == StrategyKind::Summary;
    if (trace_count < 1)
        throw ValidationError("StrategySpec: trace_count must be positive");
    if (sampled && trace_count < 2)
        throw ValidationError("StrategySpec: SelfConsistency/Summary require trace_count >= 2");
    if (!sampled && trace_count != 1)
        throw ValidationError("StrategySpec: trace_count must be 1 outside SelfConsistency/Summary");
    if (sampled && trace_temperature != 1.0)
        throw ValidationError("StrategySpec: SelfConsistency/Summary require trace_temperature = 1.0");
    if (!sampled && trace_temperature != 0.0)
        throw ValidationError("StrategySpec: trace_temperature must be 0.0 outside SelfConsistency/Summary");
    if (kind == StrategyKind::Reflect && reflect_rounds < 1)
        throw ValidationError("StrategySpec: Reflect requires reflect_rounds >= 1");
    if (kind != StrategyKind::Reflect && reflect_rounds != 0)
        throw ValidationError("StrategySpec: reflect_rounds must be 0 outside Reflect");
    if (max_judge_retries < 0)
        throw ValidationError("StrategySpec: max_judge_retries must be non-negative");
    if (trace_temperature < 0.0 || trace_temperature > 2.0)
        throw ValidationError("StrategySpec: trace_temperature must be in [0,2]");
    if (aggregate_temperature < 0.0 || aggregate_temperature > 2.0)
        throw ValidationError("StrategySpec: aggregate_temperature must be in [0,2]");
}

std::string StrategySpec::label() const {
    switch (kind) {
        case StrategyKind::Vanilla: return "Vanilla";
        case StrategyKind::SelfConsistency:
            return "Self Consistency " + std::to_string(trace_count) + "x";
        case StrategyKind::Summary: return "Summary " + std::to_string(trace_count) + "x";
        case StrategyKind::Reflect: return "Reflect " + std::to_string(reflect_rounds);
        case StrategyKind::Judge: return "Judge-LLM";
        case StrategyKind::JudgeWithHistory: return "Judge-LLM w/history";
        case StrategyKind::JudgeReflection: return "Judge+Reflection";
    }
    return "Vanilla";
}

int StrategySpec::order_key() const {
    int kind_rank = 0;
    int param = 0;
    switch (kind) {
        case StrategyKind::Vanilla: kind_rank = 0; break;
        case StrategyKind::SelfConsistency: kind_rank = 1; param = trace_count; break;
        case StrategyKind::Reflect: kind_rank = 2; param = reflect_rounds; break;
        case StrategyKind::Summary: kind_rank = 3; param = trace_count; break;
        case StrategyKind::Judge: kind_rank = 4; param = max_judge_retries; break;
        case StrategyKind::JudgeWithHistory: kind_rank = 5; param = max_judge_retries; break;
        case StrategyKind::JudgeReflection: kind_rank = 6; param = max_judge_retries; break;
    }
    return kind_rank * 1000 + param;
}

const char* to_string(CallRole r) {
    switch (r) {
        case CallRole::Trace: return "Trace";
        case CallRole::Feedback: return "Feedback";
        case CallRole::Refine: return "Refine";
        case CallRole::Consolidate: return "Consolidate";
        case CallRole::Judge: return "Judge";
        case CallRole::Retry: return "Retry";
    }
    return "Trace";
}

CallRole call_role_from_string(const std::string& s) {
    if (s == "Trace") return CallRole::Trace;
    if (s == "Feedback") return CallRole::Feedback;
    if (s == "Refine") return CallRole::Refine;
    if (s == "Consolidate") return CallRole::Consolidate;
    if (s == "Judge") return CallRole::Judge;
    if (s == "Retry") return CallRole::Retry;
    throw ValidationError("unknown call role: " + s);
}

bool StrategyOutcome::has_flag(const std::string& f) const {
    return std::find(flags.begin(), flags.end(), f) != flags.end();
}

int expected_calls(const StrategySpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case StrategyKind::Vanilla: return 1;
        case StrategyKind::SelfConsistency: return spec.trace_count;
        case StrategyKind::Summary: return spec.trace_count + 1;
        case StrategyKind::Reflect: return 2 * spec.reflect_rounds + 1;
        case StrategyKind::Judge:
        case StrategyKind::JudgeWithHistory:
            // Trace, then (judge + retry answer) per rejection, then the final judge.
            return 2 + 2 * spec.max_judge_retries;
        case StrategyKind::JudgeReflection:
            // Trace, then (judge + feedback + refine) per rejection, then the final judge.
            return 2 + 3 * spec.max_judge_retries;
    }
    return 1;
}

BudgetPlan budget_plan(const StrategySpec& spec, int per_call_budget) {
    if (per_call_budget < 0) throw ValidationError("budget_plan: per_call_budget must be >= 0");
    BudgetPlan plan;
    plan.calls = expected_calls(spec);
    switch (spec.kind) {
        case StrategyKind::Judge:
        case StrategyKind::JudgeWithHistory:
            plan.thinking_calls = 1 + spec.max_judge_retries;
            break;
        case StrategyKind::JudgeReflection:
            plan.thinking_calls = 1 + 2 * spec.max_judge_retries;
            break;
        default:
            plan.thinking_calls = plan.calls;
            break;
    }
    plan.total_budget = static_cast<long long>(per_call_budget) * plan.thinking_calls;
    return plan;
}

}  // namespace budgetlab
