#include <doctest.h>

#include "subword/error.hpp"
#include "subword/field.hpp"
#include "subword/polynomial.hpp"
#include "support.hpp"

using namespace subword;

namespace {

// Schoolbook product of two index-coded elements, reduced by the modulus.
Symbol oracle_mul(const FieldSpec& f, Symbol x, Symbol y) {
    const auto p = f.characteristic();
    const auto n = f.degree();
    const auto a = f.coefficients(x);
    const auto b = f.coefficients(y);
    std::vector<std::uint64_t> prod(2 * n, 0);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    const auto& mod = f.modulus();
    for (std::uint32_t k = 2 * n - 1; k >= n; --k) {
        const auto c = prod[k];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= n; ++i) prod[k - n + i] = (prod[k - n + i] + (p - c) * mod[i]) % p;
    }
    std::vector<std::uint32_t> out(prod.begin(), prod.begin() + n);
    return f.index_of(out);
}

std::vector<FieldSpec> all_builtins() {
    std::vector<FieldSpec> out;
    for (std::uint32_t q : {2, 3, 4, 5, 7, 8, 9, 16, 25, 27}) out.push_back(FieldSpec::builtin(q));
    return out;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
    const auto f3 = FieldSpec::prime(3);
    CHECK(f3.add(2, 2) == 1);
    CHECK(f3.mul(2, 2) == 1);
    CHECK(f3.embed(-1) == 2);
    CHECK(FieldSpec::prime(2).embed(-1) == 1);
    CHECK(FieldSpec::prime(5).embed(8) == 3);
    CHECK(FieldSpec::prime(5).inv(2) == 3);
    CHECK_THROWS_AS(FieldSpec::prime(5).inv(0), Error);
    CHECK_THROWS_AS(FieldSpec::prime(6), Error);
}

TEST_CASE("F4 with modulus t^2+t+1") {
    const auto f4 = FieldSpec::builtin(4);
    CHECK(f4.modulus() == std::vector<std::uint32_t>{1, 1, 1});
    // t has index 2, t+1 has index 3.
    CHECK(f4.mul(2, 2) == oracle_mul(f4, 2, 2));
    CHECK(f4.mul(2, 2) == 3);
    CHECK(f4.inv(2) == 3);
    CHECK(f4.literal() == "F4");
}

TEST_CASE("inverse of one is one") {
    for (const auto& f : all_builtins()) CHECK(f.inv(1) == 1);
}

TEST_CASE("multiplication matches schoolbook reduction") {
    for (const auto& f : all_builtins())
        for (Symbol x = 0; x < f.order(); ++x)
            for (Symbol y = 0; y < f.order(); ++y) REQUIRE(f.mul(x, y) == oracle_mul(f, x, y));
}

TEST_CASE("field axioms on random triples") {
    test::Gen gen(7);
    for (const auto& f : all_builtins()) {
        for (int t = 0; t < 500; ++t) {
            const auto x = static_cast<Symbol>(gen.below(f.order()));
            const auto y = static_cast<Symbol>(gen.below(f.order()));
            const auto z = static_cast<Symbol>(gen.below(f.order()));
            REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
            REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
            REQUIRE(f.add(x, y) == f.add(y, x));
            REQUIRE(f.mul(x, y) == f.mul(y, x));
            REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
            REQUIRE(f.add(x, f.neg(x)) == 0);
            REQUIRE(f.sub(x, y) == f.add(x, f.neg(y)));
        }
    }
}

TEST_CASE("Frobenius fixes every element") {
    test::Gen gen(11);
    for (const auto& f : all_builtins())
        for (int t = 0; t < 200; ++t) {
            const auto x = f.element(static_cast<Symbol>(gen.below(f.order())));
            REQUIRE(x.pow(f.order()) == x);
        }
}

TEST_CASE("inversion is an involution") {
    for (const auto& f : all_builtins())
        for (Symbol x = 1; x < f.order(); ++x) {
            REQUIRE(f.inv(f.inv(x)) == x);
            REQUIRE(f.mul(x, f.inv(x)) == 1);
        }
}

TEST_CASE("field literals") {
    CHECK(FieldSpec::parse("F3") == FieldSpec::prime(3));
    const auto f9 = FieldSpec::parse("Fq(9;t^2+1)");
    CHECK(f9.order() == 9);
    CHECK(f9.characteristic() == 3);
    CHECK(FieldSpec::parse(f9.literal()) == f9);
    CHECK_THROWS_AS(FieldSpec::parse("Fq(9;t^2+2*t+1)"), Error);  // (t+1)^2
    CHECK_THROWS_AS(FieldSpec::parse("F6"), Error);
    CHECK_THROWS_AS(FieldSpec::parse("G3"), ParseError);
}

TEST_CASE("element arithmetic refuses mixed fields") {
    const auto a = FieldSpec::prime(3).one();
    const auto b = FieldSpec::prime(5).one();
    CHECK_THROWS_AS(a + b, Error);
    CHECK((a + a).index() == 2);
    CHECK_THROWS_AS(ff_inv(FieldSpec::prime(3).zero()), Error);
}

TEST_CASE("irreducibility test") {
    CHECK(is_irreducible(2, {1, 1, 1}));
    CHECK_FALSE(is_irreducible(2, {1, 0, 1}));  // (t+1)^2
    CHECK(is_irreducible(3, {1, 0, 1}));
    CHECK(is_irreducible(2, {1, 1, 0, 1}));
}

TEST_CASE("polynomial literals") {
    CHECK(parse_polynomial("T^2+1", 'T').coeffs == std::vector<std::int64_t>{1, 0, 1});
    CHECK(parse_polynomial("2*T^3-T", 'T').coeffs == std::vector<std::int64_t>{0, -1, 0, 2});
    CHECK(parse_polynomial("-1", 'T').coeffs == std::vector<std::int64_t>{-1});
    CHECK(format_polynomial(parse_polynomial("T^2+1", 'T'), 'T') == "T^2+1");
    CHECK_THROWS_AS(parse_polynomial("T^^2", 'T'), ParseError);
}
