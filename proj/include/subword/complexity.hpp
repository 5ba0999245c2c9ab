#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "subword/words.hpp"

namespace subword {

enum class Engine { naive, fast };

std::string engine_name(Engine engine);
/// Accepts "naive" or "fast".
Engine parse_engine(std::string_view name);

/// Factor counts p(1..M) of a length-N prefix.
struct ComplexityProfile {
    std::size_t prefix_length = 0;
    std::size_t max_length = 0;
    std::vector<std::uint64_t> counts;  // counts[m - 1] = p(m)
    std::string source;
    Engine engine = Engine::fast;

    std::uint64_t p(std::size_t m) const { return counts.at(m - 1); }

    /// Throws Error naming the first violated bound:
    /// 1 <= p(m) <= min(N-m+1, sigma^m), p(m) <= p(m+1)+1, p(m+1) <= sigma p(m),
    /// p(m+n) <= p(m) p(n).
    void check_invariants(std::size_t sigma) const;
};

/// Level-by-level window interning; the oracle engine.
ComplexityProfile profile_naive(std::span<const Symbol> prefix, std::size_t max_length);

/// Suffix automaton of the prefix; counts for every m in one pass.
ComplexityProfile profile_fast(std::span<const Symbol> prefix, std::size_t max_length);

ComplexityProfile compute_profile(std::span<const Symbol> prefix, std::size_t max_length, Engine engine);

/// Distinct factors of length m, explicitly.
std::set<FiniteWord> factor_set(std::span<const Symbol> prefix, std::size_t m);

/// log_base(p(m)) / m.
double entropy_estimate(const ComplexityProfile& profile, std::size_t m, std::uint32_t base);

/// Prefix-level heuristic only: says nothing provable about the infinite word.
struct MorseHedlundReport {
    std::optional<std::size_t> periodicity_candidate;  // smallest m with p(m) <= m
    bool strictly_increasing = true;

    std::string describe() const;
};

MorseHedlundReport morse_hedlund_diagnostic(const ComplexityProfile& profile);

}  // namespace subword
