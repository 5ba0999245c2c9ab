#include "subword/lacunary.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace subword {

namespace {

/// d^0, d^1, ... while <= bound.
std::vector<std::uint64_t> powers_up_to(std::uint64_t d, std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 1; v <= bound; v *= d) {
        out.push_back(v);
        if (v > std::numeric_limits<std::uint64_t>::max() / d) break;
    }
    return out;
}

enum class Side { b, c };

/// Indicator of {d^k + e^l : d^k > e^l} (or <) on [0, bound].
std::vector<std::uint8_t> split_indicator(std::uint64_t d, std::uint64_t e, std::uint64_t bound, Side side) {
    std::vector<std::uint8_t> out(bound + 1, 0);
    for (auto x : powers_up_to(d, bound))
        for (auto y : powers_up_to(e, bound - x)) {
            const bool keep = side == Side::b ? x > y : x < y;
            if (keep) out[x + y] = 1;
        }
    return out;
}

InfiniteWord split_word(const DEPairSpec& spec, Side side) {
    const auto d = spec.d;
    const auto e = spec.e;
    auto factory = make_factory([d, e, side]() {
        return [d, e, side, n = std::uint64_t{0}, table = std::vector<std::uint8_t>{}]() mutable {
            if (n >= table.size()) table = split_indicator(d, e, std::max<std::uint64_t>(1024, 2 * n), side);
            return Symbol{table[n++]};
        };
    });
    return InfiniteWord(2, std::move(factory));
}

}  // namespace

DEPairSpec DEPairSpec::make(std::uint64_t d, std::uint64_t e, std::optional<FieldSpec> field) {
    if (d < 2 || e < 2) throw Error("bases must be at least 2");
    using boost::multiprecision::pow;
    for (unsigned a = 1; a <= 64; ++a)
        for (unsigned b = 1; b <= 64; ++b)
            if (pow(BigInt(d), a) == pow(BigInt(e), b))
                throw Error(std::to_string(d) + " and " + std::to_string(e) + " are not multiplicatively independent");
    DEPairSpec spec;
    spec.d = d;
    spec.e = e;
    if (field) spec.field = *field;
    return spec;
}

InfiniteWord lacunary_word(std::uint64_t d) {
    if (d < 2) throw Error("base must be at least 2");
    auto factory = make_factory([d]() {
        return [d, n = std::uint64_t{0}, next = std::uint64_t{1}]() mutable {
            const std::uint64_t i = n++;
            if (i != next) return Symbol{0};
            next = next > std::numeric_limits<std::uint64_t>::max() / d ? 0 : next * d;
            return Symbol{1};
        };
    });
    return InfiniteWord(2, std::move(factory), "lac:d=" + std::to_string(d));
}

InfiniteWord de_word_b(const DEPairSpec& spec) { return split_word(spec, Side::b); }

InfiniteWord de_word_c(const DEPairSpec& spec) { return split_word(spec, Side::c); }

std::vector<std::uint32_t> representation_counts(const DEPairSpec& spec, std::uint64_t bound) {
    std::vector<std::uint32_t> counts(bound + 1, 0);
    for (auto x : powers_up_to(spec.d, bound))
        for (auto y : powers_up_to(spec.e, bound - x)) ++counts[x + y];
    return counts;
}

CollisionReport collision_scan(const DEPairSpec& spec, std::uint64_t bound) {
    CollisionReport report;
    report.d = spec.d;
    report.e = spec.e;
    report.bound = bound;
    std::map<std::uint64_t, std::vector<std::pair<std::uint32_t, std::uint32_t>>> reps;
    const auto dp = powers_up_to(spec.d, bound);
    for (std::uint32_t k = 0; k < dp.size(); ++k) {
        const auto ep = powers_up_to(spec.e, bound - dp[k]);
        for (std::uint32_t l = 0; l < ep.size(); ++l) reps[dp[k] + ep[l]].emplace_back(k, l);
    }
    using boost::multiprecision::pow;
    for (auto& [n, list] : reps) {
        if (list.size() < 2) continue;
        for (auto [k, l] : list)
            if (pow(BigInt(spec.d), k) + pow(BigInt(spec.e), l) != BigInt(n))
                throw Error("collision representation failed big-integer verification");
        std::sort(list.begin(), list.end());
        report.collisions.push_back({n, list});
    }
    report.threshold = report.collisions.empty() ? 0 : report.collisions.back().n + 1;
    return report;
}

ProductDecomposition product_decomposition_check(const DEPairSpec& spec, std::uint64_t horizon) {
    const FieldSpec& field = spec.field;
    const auto f = ls_from_word(lacunary_word(spec.d), field);
    const auto g = ls_from_word(lacunary_word(spec.e), field);
    const auto h = ls_cauchy_mul(f, g, horizon);
    const auto h1 = ls_from_word(de_word_b(spec), field);
    const auto h2 = ls_from_word(de_word_c(spec), field);
    const auto p = ls_sub(h, ls_add(h1, h2));
    const auto coeffs = ls_coefficients(p, 0, static_cast<std::int64_t>(horizon));

    const auto counts = representation_counts(spec, horizon);
    const auto b = de_word_b(spec).prefix(horizon + 1);
    const auto c = de_word_c(spec).prefix(horizon + 1);
    std::set<std::uint64_t> allowed;
    for (const auto& col : collision_scan(spec, horizon).collisions) allowed.insert(col.n);
    allowed.insert(2);  // d^0 = e^0: the one pair that is neither b nor c

    ProductDecomposition out;
    out.holds = true;
    for (std::uint64_t n = 0; n <= horizon; ++n) {
        const auto expected = field.embed(static_cast<std::int64_t>(counts[n]) - b[n] - c[n]);
        if (coeffs[n] != expected) {
            out.holds = false;
            out.detail = "coefficient mismatch at n=" + std::to_string(n);
            break;
        }
        if (coeffs[n] != 0) {
            out.correction.emplace_back(n, coeffs[n]);
            out.correction_degree = n;
            if (!allowed.count(n)) {
                out.holds = false;
                out.detail = "correction outside collision set at n=" + std::to_string(n);
                break;
            }
        }
    }
    return out;
}

BBlock b_block(std::uint32_t n) {
    if (n < 1 || n > 26) throw Error("b block index must be in [1, 26]");
    BBlock blk;
    blk.n = n;
    const std::uint64_t two_n = std::uint64_t{1} << n;
    std::uint64_t three_m = 1;
    while (three_m * 3 <= two_n) {
        three_m *= 3;
        ++blk.m;
    }
    blk.beta = two_n - three_m;
    std::uint64_t three_pow = 1;
    for (std::uint32_t i = 1; i <= blk.m; ++i) {
        blk.alpha.push_back(2 * three_pow - 1);
        three_pow *= 3;
    }
    const auto word = de_word_b(DEPairSpec{}).prefix(2 * two_n + 1);
    blk.w.assign(word.begin() + static_cast<std::ptrdiff_t>(two_n + 1), word.end());
    FiniteWord expected{1};
    for (auto a : blk.alpha) {
        expected.insert(expected.end(), a, 0);
        expected.push_back(1);
    }
    expected.insert(expected.end(), blk.beta, 0);
    blk.matches_formula = expected == blk.w;
    return blk;
}

std::string r2_mode_name(R2Mode mode) { return mode == R2Mode::bruteforce ? "bruteforce" : "formula"; }

R2Mode parse_r2_mode(std::string_view name) {
    if (name == "bruteforce") return R2Mode::bruteforce;
    if (name == "formula") return R2Mode::formula;
    throw Error("unknown r2 mode '" + std::string(name) + "'");
}

std::uint64_t r2(std::uint64_t n, R2Mode mode) {
    if (n > (std::uint64_t{1} << 62)) throw Error("r2 argument too large");
    if (mode == R2Mode::bruteforce) {
        std::uint64_t count = 0;
        const std::uint64_t root = isqrt(n);
        for (std::uint64_t x = 0; x <= root; ++x) {
            const std::uint64_t rest = n - x * x;
            const std::uint64_t y = isqrt(rest);
            if (y * y != rest) continue;
            // sign choices for x and y, collapsing zeros
            count += (x == 0 ? 1 : 2) * (y == 0 ? 1 : 2);
        }
        return count;
    }
    if (n == 0) return 1;
    std::uint64_t m = n;
    std::uint64_t product = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        std::uint64_t e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (p % 4 == 3 && e % 2 == 1) return 0;
        if (p % 4 == 1) product *= e + 1;
    }
    if (m > 1) {
        if (m % 4 == 3) return 0;
        if (m % 4 == 1) product *= 2;
    }
    return 4 * product;
}

InfiniteWord theta_word(const FieldSpec& field) {
    if (field.characteristic() == 2) throw Error("theta series needs odd characteristic");
    const Symbol two = field.embed(2);
    auto factory = make_factory([two]() {
        return [two, n = std::uint64_t{0}, root = std::uint64_t{1}]() mutable -> Symbol {
            const std::uint64_t i = n++;
            if (i == 0) return 1;
            if (i == root * root) {
                ++root;
                return two;
            }
            return 0;
        };
    });
    return InfiniteWord(field.order(), std::move(factory));
}

InfiniteWord r2_word(const FieldSpec& field, R2Mode mode) {
    auto factory = make_factory([field, mode]() {
        return [field, mode, n = std::uint64_t{0}]() mutable {
            return field.embed(static_cast<std::int64_t>(r2(n++, mode) % field.characteristic()));
        };
    });
    return InfiniteWord(field.order(), std::move(factory));
}

}  // namespace subword
