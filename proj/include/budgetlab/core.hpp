#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace budgetlab {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Speaker { System, User, Assistant };

struct Message {
    Speaker speaker = Speaker::User;
    std::string text;
};

const char* to_string(Speaker s);
Speaker speaker_from_string(const std::string& s);

// Per-call thinking-token policy. The budget number quoted in run configs is
// the forcing floor; the cap is floor + slack so forced closure happens
// promptly once the floor is met.
struct BudgetPolicy {
    bool thinking_enabled = true;
    int min_think_tokens = 0;
    int max_think_tokens = 0;
    int max_force_iterations = 8;
    int no_think_answer_cap = 4096;

    static constexpr int kDefaultSlack = 256;

    static BudgetPolicy thinking(int floor, int slack = kDefaultSlack);
    static BudgetPolicy disabled();
    // budget 0 -> disabled, otherwise thinking(budget).
    static BudgetPolicy for_budget(int per_call_budget);

    void validate() const;  // throws ValidationError naming the violated invariant
};

enum class StrategyKind {
    Vanilla,
    SelfConsistency,
    Summary,
    Reflect,
    Judge,
    JudgeWithHistory,
    JudgeReflection,
};

const char* to_string(StrategyKind k);
StrategyKind strategy_kind_from_string(const std::string& s);
bool is_judge_kind(StrategyKind k);

struct StrategySpec {
    StrategyKind kind = StrategyKind::Vanilla;
    int trace_count = 1;       // n, SelfConsistency/Summary only
    int reflect_rounds = 0;    // k, Reflect only
    int max_judge_retries = 1; // Judge kinds only
    double trace_temperature = 0.0;
    double aggregate_temperature = 0.0;

    static StrategySpec vanilla();
    static StrategySpec self_consistency(int n);
    static StrategySpec summary(int n);
    static StrategySpec reflect(int k);
    static StrategySpec judge(int max_retries = 1);
    static StrategySpec judge_with_history(int max_retries = 1);
    static StrategySpec judge_reflection(int max_retries = 1);

    void validate() const;  // throws ValidationError naming the violated invariant

    // Display name matching the published configuration labels,
    // e.g. "Self Consistency 3x", "Reflect 2", "Judge-LLM w/history".
    std::string label() const;

    // Sort key: configuration order used by the results table, then budget.
    int order_key() const;
};

enum class CallRole { Trace, Feedback, Refine, Consolidate, Judge, Retry };

const char* to_string(CallRole r);
CallRole call_role_from_string(const std::string& s);

// One logical model invocation. Budget-forcing continuations happen inside a
// single call; only force_injections records that they occurred.
struct CallRecord {
    std::string run_id;
    std::string question_id;
    int trace_index = 0;
    int call_index = 0;
    CallRole role = CallRole::Trace;
    std::vector<Message> request_messages;
    std::string think_text;
    std::string answer_text;
    int think_tokens = 0;
    int answer_tokens = 0;
    int force_injections = 0;
    long long seed = 0;
    double temperature = 0.0;
    long long wall_time_ms = 0;
};

struct StrategyOutcome {
    std::string question_id;
    std::vector<CallRecord> calls;
    std::vector<std::pair<int, std::optional<std::string>>> candidate_answers;
    std::optional<std::string> final_answer;
    long long total_think_tokens = 0;
    int total_calls = 0;
    std::vector<std::string> flags;

    bool has_flag(const std::string& f) const;
};

// Worst-case number of model invocations for a strategy. For Judge kinds the
// realized count is run-dependent; this returns the every-judge-rejects bound.
int expected_calls(const StrategySpec& spec);

struct BudgetPlan {
    int calls = 0;
    int thinking_calls = 0;
    long long total_budget = 0;
};

// Calls and total thinking budget for one (strategy, per-call budget) cell.
// Every call of a non-Judge strategy thinks; Judge calls never think.
BudgetPlan budget_plan(const StrategySpec& spec, int per_call_budget);

}  // namespace budgetlab
