#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace subword {

enum class CheckStatus { pass, fail, report_only };

std::string status_name(CheckStatus status);

/// One measured quantity next to the bound or reference it is compared with.
struct Measurement {
    std::string item;  // e.g. "m=7" or "q=3"
    std::string measured;
    std::string bound;
    bool ok = true;
};

struct VerificationResult {
    std::string name;
    CheckStatus status = CheckStatus::fail;
    std::uint64_t n = 0;  // prefix length or horizon
    std::uint64_t m = 0;  // largest factor length
    std::uint64_t q = 0;  // field order or q parameter, 0 when not applicable
    std::string statement;  // the inequality or identity being checked
    std::vector<Measurement> rows;
    std::string first_violation;  // empty on pass
};

/// Overrides for the desk-scale defaults of each check.
struct SuiteParams {
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> max_m;
    std::optional<std::uint32_t> q;
};

/// Smallest accepted prefix length and factor length; smaller overrides are rejected.
inline constexpr std::uint64_t min_prefix = 16;
inline constexpr std::uint64_t min_factor_length = 1;

/// Every known check name in suite order.
std::vector<std::string> check_names();

/// Runs one check; throws Error for an unknown name or parameters below the floors.
VerificationResult run_check(const std::string& name, const SuiteParams& params);

/// Runs the named checks (all of them when `names` is empty).
std::vector<VerificationResult> run_suite(const std::vector<std::string>& names, const SuiteParams& params);

/// CSV with header check,status,N,M,q,item,measured,bound,ok.
void write_results_csv(std::ostream& out, const std::vector<VerificationResult>& results);
/// One human-readable line per check.
void write_results_summary(std::ostream& out, const std::vector<VerificationResult>& results);

}  // namespace subword
