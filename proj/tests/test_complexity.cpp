#include <doctest.h>

#include <cmath>

#include "subword/carlitz.hpp"
#include "subword/complexity.hpp"
#include "subword/error.hpp"
#include "subword/words.hpp"
#include "support.hpp"

using namespace subword;

namespace {

InfiniteWord fibonacci() { return morphic_fixed_point(Morphism({{0, 1}, {0}}), 0); }
InfiniteWord carlitz2() { return pq_word_blocks(CarlitzWordSpec::make(2)); }

}  // namespace

TEST_CASE("small profiles") {
    CHECK(profile_fast(word_from_string("aaaa"), 3).counts == std::vector<std::uint64_t>{1, 1, 1});
    CHECK(profile_naive(word_from_string("aaaa"), 3).counts == std::vector<std::uint64_t>{1, 1, 1});
    const auto digits = word_from_string("0123456789");
    CHECK(profile_fast(digits, 2).counts == std::vector<std::uint64_t>{10, 9});
    CHECK(profile_naive(digits, 2).counts == std::vector<std::uint64_t>{10, 9});
    CHECK_THROWS_AS(profile_fast(digits, 11), Error);
}

TEST_CASE("fibonacci saturates m+1") {
    const auto w = fibonacci().prefix(10'000);
    const auto profile = profile_fast(w, 50);
    for (std::size_t m = 1; m <= 50; ++m) REQUIRE(profile.p(m) == m + 1);
    CHECK(factor_set(w, 3).size() == 4);
    const auto report = morse_hedlund_diagnostic(profile);
    CHECK_FALSE(report.periodicity_candidate.has_value());
    CHECK(report.strictly_increasing);
}

TEST_CASE("factor sets") {
    CHECK(factor_set(word_from_string("01001"), 2) == std::set<FiniteWord>{{0, 1}, {1, 0}, {0, 0}});
    CHECK(factor_set(FiniteWord(100, 3), 7).size() == 1);
}

TEST_CASE("entropy estimate") {
    const auto constant = profile_fast(FiniteWord(1000, 0), 10);
    for (std::size_t m = 1; m <= 10; ++m) CHECK(entropy_estimate(constant, m, 2) == 0.0);
    // de Bruijn-like: all 2^3 binary windows of length 3 occur.
    const auto full = profile_fast(word_from_string("0001011100"), 3);
    CHECK(entropy_estimate(full, 3, 2) == doctest::Approx(1.0));
    const auto carlitz = profile_fast(carlitz2().view(std::size_t{1} << 21), 20);
    CHECK(entropy_estimate(carlitz, 20, 2) <= 0.5);
}

TEST_CASE("periodicity diagnostic") {
    const auto periodic = profile_fast(periodic_word({}, {0, 1}).view(1000), 10);
    CHECK(morse_hedlund_diagnostic(periodic).periodicity_candidate == std::optional<std::size_t>{2});
    const auto carlitz3 = pq_word_blocks(CarlitzWordSpec::make(3)).prefix(531'441);
    CHECK_FALSE(morse_hedlund_diagnostic(profile_fast(carlitz3, 30)).periodicity_candidate.has_value());
}

TEST_CASE("carlitz profile at m=16 lies within its bounds") {
    const auto p16 = profile_fast(carlitz2().view(std::size_t{1} << 17), 16).p(16);
    const double l = 4.0;
    CHECK(static_cast<double>(p16) >= (16 - l) * (16 - l + 1) / 2);
    CHECK(static_cast<double>(p16) <= (16 - l) * (16 + l + 2) / 2 + 32);
}

TEST_CASE("engines agree with the brute-force oracle on small words") {
    test::Gen gen(5);
    for (int t = 0; t < 300; ++t) {
        const auto sigma = static_cast<std::uint32_t>(gen.between(1, 6));
        const auto length = gen.between(1, 60);
        const auto w = t % 2 ? gen.word(length, sigma) : gen.structured_word(length, sigma);
        const auto expected = test::brute_profile(w, length);
        REQUIRE(profile_fast(w, length).counts == expected);
        REQUIRE(profile_naive(w, length).counts == expected);
    }
}

TEST_CASE("engines agree on random words up to N=10^4") {
    test::Gen gen(17);
    const std::uint32_t sigmas[] = {2, 3, 5};
    for (int t = 0; t < 200; ++t) {
        const auto sigma = sigmas[t % 3];
        const auto length = gen.between(2, 10'000);
        const auto w = t % 2 ? gen.word(length, sigma) : gen.structured_word(length, sigma);
        const auto fast = profile_fast(w, length / 2);
        const auto naive = profile_naive(w, length / 2);
        REQUIRE(fast.counts == naive.counts);
        CHECK_NOTHROW(fast.check_invariants(sigma));
        CHECK_NOTHROW(naive.check_invariants(sigma));
    }
}

TEST_CASE("engines agree on large alphabets") {
    test::Gen gen(23);
    for (std::uint32_t sigma : {9U, 30U, 200U}) {
        const auto w = gen.word(5000, sigma);
        REQUIRE(profile_fast(w, 2500).counts == profile_naive(w, 2500).counts);
    }
}

TEST_CASE("measured complexity grows with the prefix") {
    const auto w = carlitz2();
    std::vector<std::uint64_t> previous(30, 0);
    for (std::size_t n : {std::size_t{1} << 10, std::size_t{1} << 14, std::size_t{1} << 18}) {
        const auto counts = profile_fast(w.view(n), 30).counts;
        for (std::size_t i = 0; i < counts.size(); ++i) REQUIRE(counts[i] >= previous[i]);
        previous = counts;
    }
}

TEST_CASE("engine names") {
    CHECK(parse_engine("fast") == Engine::fast);
    CHECK(engine_name(Engine::naive) == "naive");
    CHECK_THROWS_AS(parse_engine("slow"), Error);
}
