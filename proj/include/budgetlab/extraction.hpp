#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace budgetlab {

// Canonical answer form: trimmed, $-stripped, decimal integers reduced to
// their shortest form ("007" -> "7"). Non-integers pass through trimmed.
std::string normalize(const std::string& answer);

// Pulls the model's final answer out of raw text: the last \boxed{...} group
// with balanced braces, else the trailing text after the last "final answer"
// marker (case-insensitive, colon optional), else absent. Never throws.
std::optional<std::string> extract_answer(const std::string& text);

// Modal answer among present candidates; ties go to the lowest trace_index
// holding a modal answer. Empty or all-absent input -> absent.
std::optional<std::string> majority_vote(
    const std::vector<std::pair<int, std::optional<std::string>>>& candidates);

bool score(const std::optional<std::string>& predicted, const std::string& gold);

// 100 * correct/total, rounded half-up to two decimals.
double accuracy(const std::vector<bool>& results);
double round_pct_half_up(long long correct, long long total);
std::string format_pct(double pct);  // two decimals, no % sign

}  // namespace budgetlab
