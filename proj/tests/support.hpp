#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "subword/words.hpp"

namespace test {

using subword::FiniteWord;
using subword::Symbol;

/// Seeded generator shared by the property tests.
class Gen {
   public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::uint64_t below(std::uint64_t n) { return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng_); }
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
    }
    bool coin() { return below(2) == 1; }

    FiniteWord word(std::size_t length, std::uint32_t sigma) {
        FiniteWord w(length);
        for (auto& x : w) x = static_cast<Symbol>(below(sigma));
        return w;
    }

    /// Random word with a repeated pattern and sparse noise, so complexity stays low.
    FiniteWord structured_word(std::size_t length, std::uint32_t sigma) {
        const auto pattern = word(between(1, 12), sigma);
        FiniteWord w(length);
        for (std::size_t i = 0; i < length; ++i)
            w[i] = below(30) == 0 ? static_cast<Symbol>(below(sigma)) : pattern[i % pattern.size()];
        return w;
    }

   private:
    std::mt19937_64 rng_;
};

/// p(m) by listing every window: the slowest and most obvious oracle.
inline std::vector<std::uint64_t> brute_profile(std::span<const Symbol> w, std::size_t max_m) {
    std::vector<std::uint64_t> out;
    for (std::size_t m = 1; m <= max_m; ++m) {
        std::set<FiniteWord> seen;
        for (std::size_t i = 0; i + m <= w.size(); ++i) seen.emplace(w.begin() + i, w.begin() + i + m);
        out.push_back(seen.size());
    }
    return out;
}

}  // namespace test
