#pragma once

#include "scx/action.hpp"

#include "json.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace scx {

/// Malformed or out-of-range input (CLI exit code 2). Non-commuting
/// permutations surface separately as NotCommutingError (exit code 3).
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parsed action description: ground-set size, two permutations (normalized
/// to images arrays), degree cap.
struct ActionSpec {
    int k = 0;
    std::vector<int> sigma1, sigma2;
    int degree = 8;

    Z2Action action() const;  // may throw NotCommutingError
};

inline constexpr int kMaxSpecSize = 64;
inline constexpr int kMaxSpecDegree = 32;
inline constexpr int kMaxSweepSize = 8;

/// Accepts {"k": int, "sigma1": cycles-string | images-array, "sigma2": ...,
/// "degree": int (optional, default 8)}.
ActionSpec parse_action_spec(const nlohmann::json& j);
ActionSpec load_action_spec(const std::string& path);

nlohmann::json analyze_report(const ActionSpec& spec);
nlohmann::json compare_report(const ActionSpec& a, const ActionSpec& b);
nlohmann::json decompose_report(const ActionSpec& spec);
/// One row per canonical commuting pair with k <= max_k; max_k in [1, 8].
std::vector<nlohmann::json> sweep_rows(int max_k, int degree);

std::string render_json(const nlohmann::json& report);
std::string render_text(const nlohmann::json& report);
std::string render_sweep_jsonl(const std::vector<nlohmann::json>& rows);
std::string render_sweep_csv(const std::vector<nlohmann::json>& rows);

}  // namespace scx
