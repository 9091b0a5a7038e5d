#include "budgetlab/extraction.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <map>
#include <stdexcept>

namespace budgetlab {

namespace {

std::string trim(const std::string& s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) b++;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) e--;
    return s.substr(b, e - b);
}

bool is_integer_literal(const std::string& s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) i++;
    if (i >= s.size()) return false;
    for (; i < s.size(); i++)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Content of the balanced-brace group opening right after `pos` (the '{').
std::optional<std::string> balanced_group(const std::string& text, size_t pos) {
    if (pos >= text.size() || text[pos] != '{') return std::nullopt;
    int depth = 0;
    for (size_t i = pos; i < text.size(); i++) {
        if (text[i] == '{') depth++;
        else if (text[i] == '}') {
            depth--;
            if (depth == 0) return text.substr(pos + 1, i - pos - 1);
        }
    }
    return std::nullopt;  // unbalanced
}

}  // namespace

std::string normalize(const std::string& answer) {
    std::string s = trim(answer);
    size_t b = 0, e = s.size();
    while (b < e && s[b] == '$') b++;
    while (e > b && s[e - 1] == '$') e--;
    s = trim(s.substr(b, e - b));
    if (!is_integer_literal(s)) return s;
    bool negative = s[0] == '-';
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    while (i + 1 < s.size() && s[i] == '0') i++;
    std::string digits = s.substr(i);
    if (digits == "0") return "0";
    return negative ? "-" + digits : digits;
}

std::optional<std::string> extract_answer(const std::string& text) {
    static const std::string kBoxed = "\\boxed{";
    // Last \boxed{...} whose braces balance.
    size_t search_end = std::string::npos;
    while (true) {
        size_t pos = text.rfind(kBoxed, search_end);
        if (pos == std::string::npos) break;
        if (auto group = balanced_group(text, pos + kBoxed.size() - 1))
            return normalize(*group);
        if (pos == 0) break;
        search_end = pos - 1;
    }

    // Fallback: trailing text after the last "final answer" marker.
    static const std::string kMarker = "final answer";
    const std::string low = lower(text);
    size_t pos = low.rfind(kMarker);
    if (pos == std::string::npos) return std::nullopt;
    size_t start = pos + kMarker.size();
    while (start < text.size() &&
           (text[start] == ':' || std::isspace(static_cast<unsigned char>(text[start]))))
        start++;
    std::string tail = trim(text.substr(start));
    while (!tail.empty() && (tail.back() == '.' || tail.back() == ',' || tail.back() == '!'))
        tail.pop_back();
    tail = trim(tail);
    if (tail.empty()) return std::nullopt;
    return normalize(tail);
}

std::optional<std::string> majority_vote(
    const std::vector<std::pair<int, std::optional<std::string>>>& candidates) {
    struct Tally {
        int count = 0;
        int first_index = 0;
    };
    std::map<std::string, Tally> tallies;
    for (const auto& [index, answer] : candidates) {
        if (!answer) continue;
        auto [it, inserted] = tallies.emplace(*answer, Tally{0, index});
        it->second.count++;
        it->second.first_index = std::min(it->second.first_index, index);
    }
    std::optional<std::string> best;
    Tally best_tally;
    for (const auto& [answer, tally] : tallies) {
        if (!best || tally.count > best_tally.count ||
            (tally.count == best_tally.count && tally.first_index < best_tally.first_index)) {
            best = answer;
            best_tally = tally;
        }
    }
    return best;
}

bool score(const std::optional<std::string>& predicted, const std::string& gold) {
    if (gold.empty()) throw std::invalid_argument("score: gold answer must be non-empty");
    return predicted.has_value() && normalize(*predicted) == normalize(gold);
}

double round_pct_half_up(long long correct, long long total) {
    if (total <= 0) throw std::domain_error("accuracy: empty result list");
    // floor(10000*c/t + 1/2) in exact integer arithmetic, then /100.
    long long hundredths = (20000 * correct + total) / (2 * total);
    return static_cast<double>(hundredths) / 100.0;
}

double accuracy(const std::vector<bool>& results) {
    if (results.empty()) throw std::domain_error("accuracy: empty result list");
    long long correct = std::count(results.begin(), results.end(), true);
    return round_pct_half_up(correct, static_cast<long long>(results.size()));
}

std::string format_pct(double pct) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", pct);
    return buf;
}

}  // namespace budgetlab
