#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subword/field.hpp"
#include "subword/laurent.hpp"
#include "subword/words.hpp"

namespace subword {

/// A pair of multiplicatively independent bases and the field for the series layer.
struct DEPairSpec {
    std::uint64_t d = 2;
    std::uint64_t e = 3;
    FieldSpec field = FieldSpec::prime(5);

    /// Throws unless d, e >= 2 and d^a != e^b for 1 <= a, b <= 64.
    static DEPairSpec make(std::uint64_t d, std::uint64_t e, std::optional<FieldSpec> field = std::nullopt);
};

/// Symbol n is 1 iff n = d^k for some k >= 0.
InfiniteWord lacunary_word(std::uint64_t d);

/// b_n = 1 iff n = d^k + e^l with d^k > e^l.
InfiniteWord de_word_b(const DEPairSpec& spec);
/// c_n = 1 iff n = d^k + e^l with d^k < e^l.
InfiniteWord de_word_c(const DEPairSpec& spec);

/// Number of pairs (k, l) with d^k + e^l = n, for every n <= bound.
std::vector<std::uint32_t> representation_counts(const DEPairSpec& spec, std::uint64_t bound);

struct Collision {
    std::uint64_t n = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> representations;  // (k, l), sorted
};

struct CollisionReport {
    std::uint64_t d = 2;
    std::uint64_t e = 3;
    std::uint64_t bound = 0;
    std::vector<Collision> collisions;  // ascending n
    /// Every n in [threshold, bound] has at most one representation.
    std::uint64_t threshold = 0;
};

/// Enumerates all d^k + e^l <= bound; each reported representation is re-checked in big integers.
CollisionReport collision_scan(const DEPairSpec& spec, std::uint64_t bound);

/// h = (sum T^{-d^k}) (sum T^{-e^l}) against h1 + h2 from the b and c words.
struct ProductDecomposition {
    bool holds = false;
    /// Indices and values of P = h - h1 - h2, ascending.
    std::vector<std::pair<std::uint64_t, Symbol>> correction;
    /// Largest index of P, or 0 when P = 0.
    std::uint64_t correction_degree = 0;
    std::string detail;
};

ProductDecomposition product_decomposition_check(const DEPairSpec& spec, std::uint64_t horizon);

/// W_n of the b word for (2, 3): positions 2^n + 1 .. 2^{n+1}.
struct BBlock {
    std::uint32_t n = 0;
    FiniteWord w;
    std::uint32_t m = 0;               // greatest m with 3^m <= 2^n
    std::vector<std::uint64_t> alpha;  // alpha_i = 2 * 3^{i-1} - 1, i = 1..m
    std::uint64_t beta = 0;            // 2^n - 3^m
    /// w == 1 (0^{alpha_1} 1) ... (0^{alpha_m} 1) 0^{beta}.
    bool matches_formula = false;
};

BBlock b_block(std::uint32_t n);

enum class R2Mode { bruteforce, formula };

std::string r2_mode_name(R2Mode mode);
R2Mode parse_r2_mode(std::string_view name);

/// Number of ordered pairs (x, y) in Z^2 with x^2 + y^2 = n.
std::uint64_t r2(std::uint64_t n, R2Mode mode);

/// a_0 = 1, a_n = 2 at positive squares, 0 elsewhere; characteristic 2 is rejected.
InfiniteWord theta_word(const FieldSpec& field);

/// r2(n) mod p as a word over the field (n = 0 gives 1).
InfiniteWord r2_word(const FieldSpec& field, R2Mode mode);

}  // namespace subword
