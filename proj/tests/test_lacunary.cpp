#include <doctest.h>

#include <numeric>
#include <set>
#include <unordered_map>

#include "subword/complexity.hpp"
#include "subword/error.hpp"
#include "subword/lacunary.hpp"
#include "support.hpp"

using namespace subword;

namespace {

// n -> number of (k, l) with 2^k + 3^l = n, by hashing every sum.
std::unordered_map<std::uint64_t, int> hashed_sums(std::uint64_t bound) {
    std::unordered_map<std::uint64_t, int> sums;
    for (std::uint64_t x = 1; x <= bound; x *= 2)
        for (std::uint64_t y = 1; x + y <= bound; y *= 3) ++sums[x + y];
    return sums;
}

// True when n = 2^k + 3^l for some pair with 2^k > 3^l (b side) or 2^k < 3^l (c side).
bool has_split(std::uint64_t n, bool b_side) {
    for (std::uint64_t x = 1; x <= n; x *= 2)
        for (std::uint64_t y = 1; x + y <= n; y *= 3)
            if (x + y == n && (b_side ? x > y : x < y)) return true;
    return false;
}

std::uint64_t brute_r2(std::int64_t n) {
    std::uint64_t count = 0;
    for (std::int64_t x = -100; x <= 100; ++x)
        for (std::int64_t y = -100; y <= 100; ++y)
            if (x * x + y * y == n) ++count;
    return count;
}

}  // namespace

TEST_CASE("lacunary words") {
    const auto w = lacunary_word(2).prefix(17);
    std::vector<std::size_t> ones;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i]) ones.push_back(i);
    CHECK(ones == std::vector<std::size_t>{1, 2, 4, 8, 16});
    CHECK(lacunary_word(3).at(0) == 0);
    const auto profile = profile_fast(lacunary_word(2).view(100'000), 100);
    for (std::size_t m = 1; m <= 100; ++m) REQUIRE(profile.p(m) <= 4 * m);
    CHECK_THROWS_AS(lacunary_word(1), Error);
}

TEST_CASE("b and c words") {
    const DEPairSpec spec;
    const auto b = de_word_b(spec).prefix(17);
    CHECK(word_to_string(std::span<const Symbol>(b).subspan(2)) == "010101010100000");
    CHECK(b[7] == 1);
    CHECK(b[6] == 0);
    CHECK(de_word_c(spec).at(10) == 1);
    const auto bb = de_word_b(spec).prefix(4000);
    const auto cc = de_word_c(spec).prefix(4000);
    for (std::uint64_t n = 0; n < 4000; ++n) {
        REQUIRE(bb[n] == (has_split(n, true) ? 1U : 0U));
        REQUIRE(cc[n] == (has_split(n, false) ? 1U : 0U));
    }
}

TEST_CASE("b and c words overlap exactly at mixed collisions") {
    const DEPairSpec spec;
    const auto b = de_word_b(spec).prefix(1'000'001);
    const auto c = de_word_c(spec).prefix(1'000'001);
    std::set<std::uint64_t> collisions;
    for (const auto& col : collision_scan(spec, 1'000'000).collisions) collisions.insert(col.n);
    std::set<std::uint64_t> overlap;
    for (std::size_t n = 0; n < b.size(); ++n)
        if (b[n] * c[n] != 0) overlap.insert(n);
    // 5 = 4 + 1 = 2 + 3 has one representation on each side.
    CHECK(overlap.count(5) == 1);
    CHECK(std::includes(collisions.begin(), collisions.end(), overlap.begin(), overlap.end()));
}

TEST_CASE("collision scan") {
    const DEPairSpec spec;
    auto ns = [](const CollisionReport& r) {
        std::vector<std::uint64_t> out;
        for (const auto& c : r.collisions) out.push_back(c.n);
        return out;
    };
    CHECK(ns(collision_scan(spec, 100)) == std::vector<std::uint64_t>{5, 11, 17, 35});
    CHECK(ns(collision_scan(spec, 300)) == std::vector<std::uint64_t>{5, 11, 17, 35, 259});
    CHECK(collision_scan(spec, 2).collisions.empty());
    const auto report = collision_scan(spec, 300);
    CHECK(report.collisions.front().representations ==
          std::vector<std::pair<std::uint32_t, std::uint32_t>>{{1, 1}, {2, 0}});
    CHECK(report.threshold == 260);

    const auto big = collision_scan(spec, 1'000'000);
    std::vector<std::uint64_t> expected;
    for (const auto& [n, count] : hashed_sums(1'000'000))
        if (count >= 2) expected.push_back(n);
    std::sort(expected.begin(), expected.end());
    CHECK(ns(big) == expected);
}

TEST_CASE("multiplicative independence is required") {
    CHECK_THROWS_AS(DEPairSpec::make(2, 4), Error);
    CHECK_THROWS_AS(DEPairSpec::make(8, 32), Error);
    CHECK_NOTHROW(DEPairSpec::make(2, 5));
}

TEST_CASE("product decomposition") {
    const DEPairSpec spec;
    const auto result = product_decomposition_check(spec, 10'000);
    CHECK(result.holds);
    std::vector<std::uint64_t> support;
    for (const auto& [n, v] : result.correction) support.push_back(n);
    // Every collision up to 10^4 pairs a b-side with a c-side representation, so only 2 = 1 + 1 remains.
    CHECK(support == std::vector<std::uint64_t>{2});
    CHECK(result.correction_degree == 2);
}

TEST_CASE("coefficients of h are 0 or 1 past the last collision") {
    const DEPairSpec spec;
    const std::uint64_t n_max = 1'000'000;
    const auto h = ls_cauchy_mul(ls_from_word(lacunary_word(2), spec.field), ls_from_word(lacunary_word(3), spec.field),
                                 n_max);
    const auto threshold = collision_scan(spec, n_max).threshold;
    const auto coeffs = ls_coefficients(h, static_cast<std::int64_t>(threshold), static_cast<std::int64_t>(n_max));
    for (auto c : coeffs) REQUIRE(c <= 1);
}

TEST_CASE("b blocks") {
    const auto b3 = b_block(3);
    CHECK(word_to_string(b3.w) == "10100000");
    CHECK(b3.m == 1);
    CHECK(b3.beta == 5);
    const auto b5 = b_block(5);
    CHECK(b5.m == 3);
    CHECK(b5.beta == 5);
    CHECK(b5.alpha == std::vector<std::uint64_t>{1, 5, 17});
    for (std::uint32_t n = 1; n <= 20; ++n) REQUIRE(b_block(n).matches_formula);
    CHECK_THROWS_AS(b_block(0), Error);
}

TEST_CASE("sums of two squares") {
    CHECK(r2(5, R2Mode::formula) == 8);
    CHECK(r2(3, R2Mode::formula) == 0);
    CHECK(r2(1, R2Mode::formula) == 4);
    CHECK(r2(0, R2Mode::formula) == 1);
    CHECK(r2(0, R2Mode::bruteforce) == 1);
    for (std::int64_t n = 0; n <= 5000; ++n) {
        REQUIRE(r2(static_cast<std::uint64_t>(n), R2Mode::formula) == brute_r2(n));
        REQUIRE(r2(static_cast<std::uint64_t>(n), R2Mode::bruteforce) == brute_r2(n));
    }
}

TEST_CASE("r2 / 4 is multiplicative") {
    test::Gen gen(61);
    int pairs = 0;
    while (pairs < 1000) {
        const auto m = gen.between(1, 1000), n = gen.between(1, 1000);
        if (std::gcd(m, n) != 1) continue;
        ++pairs;
        REQUIRE(4 * r2(m * n, R2Mode::formula) == r2(m, R2Mode::formula) * r2(n, R2Mode::formula));
    }
}

TEST_CASE("theta series") {
    const auto f3 = FieldSpec::prime(3);
    CHECK(theta_word(f3).prefix(10) == FiniteWord{1, 2, 0, 0, 2, 0, 0, 0, 0, 2});
    CHECK_THROWS_AS(theta_word(FieldSpec::prime(2)), Error);
    for (std::uint32_t p : {3U, 5U}) {
        const auto f = FieldSpec::prime(p);
        const auto theta = ls_from_word(theta_word(f), f);
        const auto square = ls_coefficients(ls_cauchy_mul(theta, theta, 10'000), 0, 10'000);
        const auto r2s = r2_word(f, R2Mode::formula).prefix(10'001);
        CHECK(square == r2s);
    }
    CHECK(parse_r2_mode("bruteforce") == R2Mode::bruteforce);
    CHECK_THROWS_AS(parse_r2_mode("fast"), Error);
}
