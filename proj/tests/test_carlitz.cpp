#include <doctest.h>

#include <functional>

#include "subword/carlitz.hpp"
#include "subword/error.hpp"
#include "support.hpp"

using namespace subword;

namespace {

std::vector<std::uint64_t> carlitz_parts(std::uint32_t q, std::uint64_t bound) {
    std::vector<std::uint64_t> parts;
    for (std::uint64_t v = q; v - 1 <= bound; v *= q) parts.push_back(v - 1);
    return parts;
}

// Number of subsets of {q^j - 1 : j >= 1} summing to n, for every n <= bound (0/1 knapsack).
std::vector<std::uint32_t> subset_counts(std::uint32_t q, std::uint64_t bound) {
    std::vector<std::uint32_t> counts(bound + 1, 0);
    counts[0] = 1;
    for (auto part : carlitz_parts(q, bound))
        for (std::uint64_t n = bound; n >= part; --n) counts[n] += counts[n - part];
    return counts;
}

// Signed coefficient by exhaustive enumeration of subsets.
int oracle_sign(std::uint64_t n, std::uint32_t q) {
    const auto parts = carlitz_parts(q, n);
    int result = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << parts.size()); ++mask) {
        std::uint64_t sum = 0;
        int size = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (mask >> i & 1) {
                sum += parts[i];
                ++size;
            }
        if (sum == n) result = size % 2 ? -1 : 1;
    }
    return result;
}

// Partitions of n into parts q^j - 1 by recursive enumeration.
std::uint64_t oracle_partitions(std::uint64_t n, std::uint32_t q) {
    const auto parts = carlitz_parts(q, n);
    std::function<std::uint64_t(std::uint64_t, std::size_t)> count = [&](std::uint64_t rest, std::size_t i) {
        if (rest == 0) return std::uint64_t{1};
        std::uint64_t total = 0;
        for (std::size_t k = i; k < parts.size(); ++k)
            if (parts[k] <= rest) total += count(rest - parts[k], k);
        return total;
    };
    return count(n, 0);
}

FiniteWord symbols(const std::vector<int>& signs, const FieldSpec& field) {
    FiniteWord out;
    for (int s : signs) out.push_back(field.embed(s));
    return out;
}

}  // namespace

TEST_CASE("decomposition into q^j - 1") {
    CHECK(decompose(4, 2) == std::vector<std::uint32_t>{1, 2});
    CHECK_FALSE(decompose(2, 2).has_value());
    CHECK(decompose(10, 3) == std::vector<std::uint32_t>{1, 2});
    CHECK(decompose(0, 3) == std::vector<std::uint32_t>{});
}

TEST_CASE("decomposition is unique and greedy finds it") {
    const std::uint64_t bound = std::uint64_t{1} << 14;
    for (std::uint32_t q : {2U, 3U, 4U, 5U}) {
        const auto counts = subset_counts(q, bound);
        for (std::uint64_t n = 0; n <= bound; ++n) {
            REQUIRE(counts[n] <= 1);
            const auto greedy = decompose(n, q);
            REQUIRE(greedy.has_value() == (counts[n] == 1));
            if (!greedy) continue;
            std::uint64_t sum = 0;
            for (auto j : *greedy) {
                std::uint64_t v = 1;
                for (std::uint32_t i = 0; i < j; ++i) v *= q;
                sum += v - 1;
            }
            REQUIRE(sum == n);
        }
    }
}

TEST_CASE("coefficients of 1/Pi_q") {
    const auto f2 = FieldSpec::prime(2);
    const auto f3 = FieldSpec::prime(3);
    const auto q2 = pq_word_definition(CarlitzWordSpec::make(2)).prefix(15);
    CHECK(word_to_string(q2) == "110110011011000");
    CHECK(pq_symbol(0, 2, f2) == f2.one());
    const auto q3 = pq_word_definition(CarlitzWordSpec::make(3)).prefix(11);
    CHECK(q3 == FiniteWord{1, 0, 2, 0, 0, 0, 0, 0, 2, 0, 1});
    for (std::uint64_t n = 0; n <= 2000; ++n)
        for (std::uint32_t q : {2U, 3U, 4U, 5U}) REQUIRE(pq_sign(n, q) == oracle_sign(n, q));
    // q = 2 in characteristic 3 keeps the sign.
    const auto signed_q2 = pq_word_blocks(CarlitzWordSpec::make(2, f3)).prefix(8);
    CHECK(signed_q2 == symbols({1, -1, 0, -1, 1, 0, 0, -1}, f3));
}

TEST_CASE("generators agree") {
    const auto spec2 = CarlitzWordSpec::make(2);
    const auto def = pq_word_definition(spec2).prefix(std::size_t{1} << 20);
    CHECK(pq_word_blocks(spec2).prefix(def.size()) == def);
    CHECK(pq_word_morphism(spec2).prefix(def.size()) == def);
    for (std::uint32_t q : {3U, 4U, 5U, 9U}) {
        const auto spec = CarlitzWordSpec::make(q);
        REQUIRE(pq_word_blocks(spec).prefix(1'000'000) == pq_word_definition(spec).prefix(1'000'000));
    }
    const auto f3spec = CarlitzWordSpec::make(2, FieldSpec::prime(3));
    CHECK(pq_word_blocks(f3spec).prefix(100'000) == pq_word_definition(f3spec).prefix(100'000));
    CHECK_THROWS_AS(pq_word_morphism(f3spec), Error);
    CHECK_THROWS_AS(CarlitzWordSpec::make(6), Error);
}

TEST_CASE("block structure for q=2") {
    const auto spec = CarlitzWordSpec::make(2);
    const auto b2 = block(spec, 2);
    CHECK(word_to_string(b2.w) == "1100");
    CHECK(word_to_string(b2.u) == "110");
    const auto b5 = block(spec, 5);
    REQUIRE(b5.w.size() == 32);
    CHECK(std::all_of(b5.w.end() - 5, b5.w.end(), [](Symbol s) { return s == 0; }));
    CHECK(b5.w[b5.w.size() - 6] != 0);
    // Z_5: W_5 without its trailing zeros holds no run of five zeros.
    const FiniteWord z(b5.w.begin(), b5.w.end() - 5);
    std::size_t run = 0, longest = 0;
    for (auto s : z) {
        run = s == 0 ? run + 1 : 0;
        longest = std::max(longest, run);
    }
    CHECK(longest < 5);
}

TEST_CASE("q=2 word factors over U_5^2 0^k") {
    const auto spec = CarlitzWordSpec::make(2);
    const auto u5 = block(spec, 5).u;
    const auto w = pq_word_blocks(spec).prefix((std::size_t{1} << 13) - 1);
    std::size_t pos = 0;
    std::size_t pieces = 0;
    while (pos < w.size()) {
        for (int copy = 0; copy < 2; ++copy) {
            REQUIRE(pos + u5.size() <= w.size());
            REQUIRE(std::equal(u5.begin(), u5.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)));
            pos += u5.size();
        }
        std::size_t zeros = 0;
        while (pos < w.size() && w[pos] == 0) {
            ++pos;
            ++zeros;
        }
        REQUIRE(zeros >= 1);
        ++pieces;
    }
    CHECK(pieces == 128);
}

TEST_CASE("block structure for q=3") {
    const auto spec = CarlitzWordSpec::make(3);
    CHECK(carlitz_alpha(3, 2) == 10);
    const auto b2 = block(spec, 2);
    CHECK(b2.alpha == std::optional<std::uint64_t>{10});
    FiniteWord expected{2, 0, 1, 0, 0, 0, 0, 0};
    expected.insert(expected.end(), 10, 0);
    CHECK(b2.w == expected);
    CHECK(b2.u == FiniteWord{1, 0, 2, 0, 0, 0, 0, 0});
}

TEST_CASE("sign law and zero gap for q=3") {
    const auto f3 = FieldSpec::prime(3);
    std::uint64_t top = 1;
    for (int i = 0; i < 9; ++i) top *= 3;
    const auto w = pq_word_blocks(CarlitzWordSpec::make(3)).prefix(top);
    std::uint64_t qn = 3;
    for (std::uint32_t n = 1; n <= 8; ++n, qn *= 3) {
        for (std::uint64_t k = 0; k < qn - 1; ++k) REQUIRE(w[k + qn - 1] == f3.neg(w[k]));
        for (std::uint64_t k = 2 * (qn - 1); k <= 3 * qn - 2; ++k) REQUIRE(w[k] == 0);
    }
}

TEST_CASE("coefficients of Pi_q") {
    const auto f2 = FieldSpec::prime(2);
    const auto f3 = FieldSpec::prime(3);
    CHECK(pi_word(CarlitzWordSpec::make(2)).prefix(4) == FiniteWord{1, 1, 1, 0});
    CHECK(pi_q_coefficient(0, 5, FieldSpec::prime(5)) == FieldSpec::prime(5).one());
    CHECK(pi_q_coefficient(1, 3, f3).is_zero());
    for (std::uint32_t q : {2U, 3U, 5U}) {
        const auto counts = pi_q_counts_mod(80, q, q);
        for (std::uint64_t n = 0; n <= 80; ++n) REQUIRE(counts[n] == oracle_partitions(n, q) % q);
    }
    CHECK(pi_q_coefficient(3, 2, f2).is_zero());
}

TEST_CASE("Pi_q times its inverse is one") {
    CHECK(verify_unit_convolution(2, 100'000));
    CHECK(verify_unit_convolution(3, 100'000));
    CHECK(verify_unit_convolution(4, 20'000));
    CHECK(verify_unit_convolution(2, 20'000, FieldSpec::prime(3)));
}

TEST_CASE("prime powers") {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27, 49, 1024}) CHECK(is_prime_power(q));
    for (std::uint64_t q : {0, 1, 6, 10, 12, 36}) CHECK_FALSE(is_prime_power(q));
}
