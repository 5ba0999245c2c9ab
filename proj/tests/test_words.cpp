#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "subword/complexity.hpp"
#include "subword/error.hpp"
#include "subword/field.hpp"
#include "subword/words.hpp"
#include "support.hpp"

using namespace subword;

namespace {

const char* thue_morse_dfao = R"(# parity of ones
base 2
states 2
initial 0
trans 0 0 0
trans 0 1 1
trans 1 0 1
trans 1 1 0
out 0 0
out 1 1
)";

const char* cantor_dfao = R"(base 3
states 2
initial 0
trans 0 0 0
trans 0 1 1
trans 0 2 0
trans 1 0 1
trans 1 1 1
trans 1 2 1
out 0 1
out 1 0
)";

std::string prefix_string(const InfiniteWord& w, std::size_t n) { return word_to_string(w.prefix(n)); }

InfiniteWord fibonacci() { return morphic_fixed_point(Morphism({{0, 1}, {0}}), 0); }

// a_n for alpha = sqrt(2)-1 via the interval test {n alpha} >= 1 - alpha, in exact integers:
// with k = floor(n alpha) = isqrt(2n^2) - n the test reads 2(n+1)^2 >= (n+k+2)^2.
Symbol rotation_oracle(std::int64_t n) {
    using boost::multiprecision::cpp_int;
    const cpp_int k = boost::multiprecision::sqrt(cpp_int(2) * n * n) - n;
    const cpp_int lhs = cpp_int(2) * (n + 1) * (n + 1);
    const cpp_int rhs = (n + k + 2) * (n + k + 2);
    return lhs >= rhs ? 1 : 0;
}

}  // namespace

TEST_CASE("periodic words") {
    const auto constant = periodic_word({}, {0});
    CHECK(prefix_string(constant, 5) == "00000");
    CHECK(profile_fast(constant.view(1000), 20).counts == std::vector<std::uint64_t>(20, 1));
    CHECK(prefix_string(periodic_word({0}, {1, 0}), 7) == "0101010");
    CHECK(prefix_string(periodic_word({}, {0, 1}), 6) == "010101");
    CHECK_THROWS_AS(periodic_word({0}, {}), Error);
}

TEST_CASE("morphic fixed points") {
    CHECK(prefix_string(fibonacci(), 13) == "0100101001001");
    CHECK(prefix_string(morphic_fixed_point(Morphism({{0}, {1, 1, 0}}), 1), 15) == "110110011011000");
    CHECK(prefix_string(morphic_fixed_point(Morphism({{0, 1}, {1, 0}}), 0), 8) == "01101001");
    CHECK_THROWS_AS(morphic_fixed_point(Morphism({{0}, {1, 1, 0}}), 0), Error);
    const auto coded = morphic_fixed_point(Morphism({{0, 1}, {0}}), 0, FiniteWord{1, 0});
    CHECK(prefix_string(coded, 5) == "10110");
}

TEST_CASE("morphic fixed point is stable under its morphism") {
    for (const auto& sigma : {Morphism({{0, 1}, {0}}), Morphism({{0, 0, 0, 1}, {1, 1}}), Morphism({{0, 1, 0, 1}, {1, 1}}),
                              Morphism({{0, 1, 2}, {1, 0}, {2, 2, 1}})}) {
        const auto w = morphic_fixed_point(sigma, 0);
        const auto prefix = w.prefix(10'000);
        const auto image = sigma.apply(prefix);
        REQUIRE(image.size() >= prefix.size());
        CHECK(std::equal(prefix.begin(), prefix.end(), image.begin()));
    }
}

TEST_CASE("automatic words") {
    const auto tm = parse_dfao(thue_morse_dfao);
    CHECK(prefix_string(automatic_word(tm), 8) == "01101001");
    CHECK(prefix_string(automatic_word(parse_dfao(cantor_dfao)), 9) == "101000101");
    const auto constant = parse_dfao("base 2\nstates 1\ninitial 0\ntrans 0 0 0\ntrans 0 1 0\nout 0 4\n");
    CHECK(prefix_string(automatic_word(constant), 4) == "4444");
    CHECK_THROWS_AS(parse_dfao("base 2\nstates 2\ninitial 0\ntrans 0 0 1\n"), Error);
}

TEST_CASE("automatic words ignore leading zeros") {
    const auto tm = parse_dfao(thue_morse_dfao);
    const auto cantor = parse_dfao(cantor_dfao);
    test::Gen gen(3);
    for (int t = 0; t < 1000; ++t) {
        for (const auto* a : {&tm, &cantor}) {
            std::uint64_t n = gen.below(1'000'000);
            std::vector<std::uint32_t> digits;
            for (; n > 0; n /= a->base) digits.insert(digits.begin(), static_cast<std::uint32_t>(n % a->base));
            auto padded = digits;
            padded.insert(padded.begin(), gen.between(1, 5), 0);
            REQUIRE(a->evaluate(digits) == a->evaluate(padded));
        }
    }
}

TEST_CASE("cantor word") {
    const auto c = cantor_word();
    CHECK(prefix_string(c, 9) == "101000101");
    CHECK(c.at(2) == 1);
    const auto prefix = c.prefix(30'003);
    for (std::size_t n = 0; n <= 10'000; ++n) {
        REQUIRE(prefix[3 * n] == prefix[n]);
        REQUIRE(prefix[3 * n + 2] == prefix[n]);
        REQUIRE(prefix[3 * n + 1] == 0);
    }
}

TEST_CASE("rotation words") {
    const auto alpha = QuadraticIrrational::make(-1, 1, 1, 2);
    const auto w = rotation_word(alpha);
    CHECK(prefix_string(w, 5) == "00101");
    const auto prefix = w.prefix(100'000);
    for (std::size_t n = 0; n < prefix.size(); ++n) REQUIRE(prefix[n] == rotation_oracle(static_cast<std::int64_t>(n)));
    const auto golden = rotation_word(QuadraticIrrational::make(-1, 1, 2, 5));
    const auto profile = profile_fast(golden.view(100'000), 50);
    for (std::size_t m = 1; m <= 50; ++m) REQUIRE(profile.p(m) == m + 1);
    CHECK_THROWS_AS(QuadraticIrrational::make(0, 1, 1, 4), Error);
}

TEST_CASE("champernowne words") {
    CHECK(prefix_string(champernowne_word(10), 16) == "0123456789101112");
    CHECK(profile_fast(champernowne_word(10).view(1000), 1).p(1) == 10);
    CHECK(prefix_string(champernowne_word(2), 9) == "011011100");
}

TEST_CASE("pointwise field operations") {
    const auto f2 = FieldSpec::prime(2);
    const auto f3 = FieldSpec::prime(3);
    const auto ones = periodic_word({}, {1});
    CHECK(prefix_string(word_pointwise_add(ones, ones, f2), 4) == "0000");
    CHECK(prefix_string(word_pointwise_add(ones, ones, f3), 4) == "2222");
    const auto w = morphic_fixed_point(Morphism({{0}, {1, 1, 0}}), 1);
    CHECK(prefix_string(word_pointwise_add(w, w, f2), 100) == std::string(100, '0'));
    CHECK_THROWS_AS(word_pointwise_add(champernowne_word(10), ones, f3), Error);
}

TEST_CASE("generators are deterministic across restarts") {
    const std::vector<InfiniteWord> words = {
        fibonacci(),
        cantor_word(),
        rotation_word(QuadraticIrrational::make(-1, 1, 1, 3)),
        champernowne_word(7),
        automatic_word(parse_dfao(thue_morse_dfao)),
        periodic_word({2, 1}, {0, 1, 1}),
    };
    for (const auto& w : words) {
        const auto first = w.prefix(100'000);
        w.restart();
        CHECK(w.prefix(100'000) == first);
        const InfiniteWord copy = w;
        CHECK(copy.prefix(100'000) == first);
    }
}

TEST_CASE("growth of letters under a morphism") {
    const Morphism sigma({{0, 0, 0, 1}, {1, 1}});
    const Morphism phi({{0, 1, 0, 1}, {1, 1}});
    CHECK(morphism_growth(sigma, 0, 0) == 1);
    for (std::uint64_t n = 0; n <= 20; ++n) {
        const BigInt two_n = BigInt(1) << n;
        REQUIRE(morphism_growth(phi, 0, n) == BigInt(n + 1) * two_n);
        REQUIRE(morphism_growth(sigma, 1, n) == two_n);
    }
    for (const auto* m : {&sigma, &phi})
        for (Symbol x : {0U, 1U})
            for (std::uint64_t n = 0; morphism_growth(*m, x, n) <= 100'000; ++n)
                REQUIRE(BigInt(m->iterate(x, n).size()) == morphism_growth(*m, x, n));
}

TEST_CASE("word strings") {
    CHECK(word_from_string("0a9z") == FiniteWord{0, 10, 9, 35});
    CHECK(word_to_string(FiniteWord{0, 10, 9, 35}) == "0a9z");
    CHECK_THROWS_AS(word_from_string("A"), Error);
}
