#include "subword/carlitz.hpp"

#include <algorithm>
#include <limits>

namespace subword {

namespace {

std::uint32_t prime_of(std::uint64_t q) {
    for (std::uint32_t p = 2; std::uint64_t{p} * p <= q; ++p)
        if (q % p == 0) return p;
    return static_cast<std::uint32_t>(q);
}

/// q^j - 1 for j = 1, 2, ... while the value is <= limit.
std::vector<std::uint64_t> parts_up_to(std::uint64_t limit, std::uint32_t q) {
    std::vector<std::uint64_t> parts;
    std::uint64_t power = q;
    while (power - 1 <= limit) {
        parts.push_back(power - 1);
        if (power > std::numeric_limits<std::uint64_t>::max() / q) break;
        power *= q;
    }
    return parts;
}

Symbol embed_sign(const FieldSpec& field, int sign) { return field.embed(sign); }

}  // namespace

bool is_prime_power(std::uint64_t q) noexcept {
    if (q < 2) return false;
    const std::uint64_t p = prime_of(q);
    while (q % p == 0) q /= p;
    return q == 1;
}

CarlitzWordSpec CarlitzWordSpec::make(std::uint32_t q, std::optional<FieldSpec> field) {
    if (!is_prime_power(q)) throw Error("q = " + std::to_string(q) + " is not a prime power");
    CarlitzWordSpec spec;
    spec.q = q;
    if (field) {
        spec.field = *field;
    } else {
        try {
            spec.field = FieldSpec::builtin(q);
        } catch (const Error&) {
            spec.field = FieldSpec::prime(prime_of(q));
        }
    }
    return spec;
}

std::optional<std::vector<std::uint32_t>> decompose(std::uint64_t n, std::uint32_t q) {
    if (q < 2) throw Error("q must be at least 2");
    const auto parts = parts_up_to(n, q);
    std::vector<std::uint32_t> set;
    std::uint64_t rest = n;
    std::size_t previous = parts.size() + 1;
    while (rest > 0) {
        // j = index (1-based) of the largest part <= rest; J is a set, so j must keep decreasing.
        const auto j = static_cast<std::size_t>(std::upper_bound(parts.begin(), parts.end(), rest) - parts.begin());
        if (j == 0 || j >= previous) return std::nullopt;
        rest -= parts[j - 1];
        set.push_back(static_cast<std::uint32_t>(j));
        previous = j;
    }
    std::reverse(set.begin(), set.end());
    return set;
}

int pq_sign(std::uint64_t n, std::uint32_t q) {
    if (n == 0) return 1;
    const auto set = decompose(n, q);
    if (!set) return 0;
    return set->size() % 2 == 0 ? 1 : -1;
}

FieldElement pq_symbol(std::uint64_t n, std::uint32_t q, const FieldSpec& field) {
    return field.element(embed_sign(field, pq_sign(n, q)));
}

std::string carlitz_engine_name(CarlitzEngine engine) {
    switch (engine) {
        case CarlitzEngine::definition:
            return "definition";
        case CarlitzEngine::blocks:
            return "blocks";
        case CarlitzEngine::morphism:
            return "morphism";
    }
    return "blocks";
}

CarlitzEngine parse_carlitz_engine(std::string_view name) {
    if (name == "definition") return CarlitzEngine::definition;
    if (name == "blocks") return CarlitzEngine::blocks;
    if (name == "morphism") return CarlitzEngine::morphism;
    throw Error("unknown carlitz engine '" + std::string(name) + "'");
}

InfiniteWord pq_word_definition(const CarlitzWordSpec& spec) {
    auto factory = make_factory([spec]() {
        return [spec, n = std::uint64_t{0}]() mutable { return embed_sign(spec.field, pq_sign(n++, spec.q)); };
    });
    return InfiniteWord(spec.field.order(), std::move(factory));
}

InfiniteWord pq_word_blocks(const CarlitzWordSpec& spec) {
    auto factory = make_factory([spec]() {
        struct State {
            std::vector<std::int8_t> prefix;  // signed symbols emitted so far
            std::uint32_t level = 1;          // U_level is being extended to U_{level+1}
            std::size_t u_length = 0;         // |U_level| = q^level - 1
            std::size_t copy_pos = 0;
            std::uint64_t zeros_left = 0;
            bool copying = true;
        };
        State st;
        st.prefix.push_back(1);
        st.prefix.insert(st.prefix.end(), spec.q - 2, 0);
        st.u_length = st.prefix.size();
        return [spec, st, seed_pos = std::size_t{0}]() mutable -> Symbol {
            const Symbol one = spec.field.embed(1);
            const Symbol minus_one = spec.field.embed(-1);
            auto encode = [&](int s) -> Symbol { return s == 0 ? 0 : (s > 0 ? one : minus_one); };
            // U_1 = 1 0^{q-2} is stored up front and replayed first.
            if (seed_pos < spec.q - 1) return encode(st.prefix[seed_pos++]);
            for (;;) {
                if (st.copying) {
                    if (st.copy_pos < st.u_length) {
                        const auto s = static_cast<std::int8_t>(-st.prefix[st.copy_pos++]);
                        st.prefix.push_back(s);
                        return encode(s);
                    }
                    st.copying = false;
                    st.zeros_left = carlitz_alpha(spec.q, st.level);
                }
                if (st.zeros_left > 0) {
                    --st.zeros_left;
                    st.prefix.push_back(0);
                    return 0;
                }
                ++st.level;
                st.u_length = st.prefix.size();
                st.copy_pos = 0;
                st.copying = true;
            }
        };
    });
    return InfiniteWord(spec.field.order(), std::move(factory));
}

InfiniteWord pq_word_morphism(const CarlitzWordSpec& spec) {
    if (spec.q != 2) throw Error("the morphism construction exists for q = 2 only");
    if (spec.field.characteristic() != 2) throw Error("the morphism construction needs characteristic 2");
    const Morphism sigma({FiniteWord{0}, FiniteWord{1, 1, 0}});
    auto w = morphic_fixed_point(sigma, 1, FiniteWord{0, spec.field.embed(1)});
    return InfiniteWord(spec.field.order(), [w]() { return w.open(); });
}

InfiniteWord pq_word(const CarlitzWordSpec& spec, CarlitzEngine engine) {
    switch (engine) {
        case CarlitzEngine::definition:
            return pq_word_definition(spec);
        case CarlitzEngine::morphism:
            return pq_word_morphism(spec);
        case CarlitzEngine::blocks:
            break;
    }
    return pq_word_blocks(spec);
}

std::vector<std::uint32_t> pi_q_counts_mod(std::uint64_t horizon, std::uint32_t q, std::uint32_t p) {
    if (q < 2) throw Error("q must be at least 2");
    if (p < 2) throw Error("modulus must be at least 2");
    std::vector<std::uint32_t> counts(horizon + 1, 0);
    counts[0] = 1 % p;
    for (auto part : parts_up_to(horizon, q)) {
        for (std::uint64_t n = part; n <= horizon; ++n) {
            auto v = counts[n] + counts[n - part];
            if (v >= p) v -= p;
            counts[n] = v;
        }
    }
    return counts;
}

FieldElement pi_q_coefficient(std::uint64_t n, std::uint32_t q, const FieldSpec& field) {
    const auto counts = pi_q_counts_mod(n, q, field.characteristic());
    return field.element(field.embed(counts[n]));
}

InfiniteWord pi_word(const CarlitzWordSpec& spec) {
    auto factory = make_factory([spec]() {
        return [spec, n = std::uint64_t{0}, table = std::vector<std::uint32_t>{}]() mutable {
            if (n >= table.size()) {
                const std::uint64_t horizon = std::max<std::uint64_t>(1024, 2 * n);
                table = pi_q_counts_mod(horizon, spec.q, spec.field.characteristic());
            }
            return spec.field.embed(table[n++]);
        };
    });
    return InfiniteWord(spec.field.order(), std::move(factory));
}

bool verify_unit_convolution(std::uint32_t q, std::uint64_t n_max, std::optional<FieldSpec> field) {
    if (n_max < 1) throw Error("convolution horizon must be at least 1");
    const auto spec = CarlitzWordSpec::make(q, std::move(field));
    const FieldSpec& f = spec.field;
    const auto counts = pi_q_counts_mod(n_max, q, f.characteristic());
    std::vector<Symbol> a(n_max + 1);
    for (std::uint64_t i = 0; i <= n_max; ++i) a[i] = f.embed(counts[i]);

    if (f.characteristic() == 2) {
        // Every coefficient is 0 or 1: the convolution is a XOR of shifted bitsets.
        const std::size_t words = (n_max + 64) / 64;
        std::vector<std::uint64_t> pbits(words, 0);
        std::vector<std::uint64_t> acc(words, 0);
        for (std::uint64_t k = 0; k <= n_max; ++k)
            if (pq_sign(k, q) != 0) pbits[k / 64] |= std::uint64_t{1} << (k % 64);
        for (std::uint64_t i = 0; i <= n_max; ++i) {
            if (a[i] == 0) continue;
            const std::size_t wshift = i / 64;
            const unsigned bshift = i % 64;
            for (std::size_t w = 0; w + wshift < words; ++w) {
                std::uint64_t v = pbits[w] << bshift;
                if (bshift != 0 && w > 0) v |= pbits[w - 1] >> (64 - bshift);
                acc[w + wshift] ^= v;
            }
            // shifted-in bits from the highest pbits word beyond `words` are discarded
        }
        if ((acc[0] & 1U) != 1U) return false;
        acc[0] &= ~std::uint64_t{1};
        const std::uint64_t tail_bits = (n_max + 1) % 64;
        if (tail_bits != 0) acc.back() &= (std::uint64_t{1} << tail_bits) - 1;
        return std::all_of(acc.begin(), acc.end(), [](std::uint64_t v) { return v == 0; });
    }

    std::vector<std::pair<std::uint64_t, Symbol>> nonzero;
    for (std::uint64_t k = 0; k <= n_max; ++k) {
        const int s = pq_sign(k, q);
        if (s != 0) nonzero.emplace_back(k, f.embed(s));
    }
    for (std::uint64_t n = 0; n <= n_max; ++n) {
        Symbol sum = 0;
        for (const auto& [k, pk] : nonzero) {
            if (k > n) break;
            sum = f.add(sum, f.mul(a[n - k], pk));
        }
        if (sum != (n == 0 ? f.one().index() : 0)) return false;
    }
    return true;
}

std::uint64_t carlitz_alpha(std::uint32_t q, std::uint32_t n) {
    std::uint64_t qn = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        if (qn > std::numeric_limits<std::uint64_t>::max() / (std::uint64_t{q} * q)) throw Error("alpha_n overflows");
        qn *= q;
    }
    return (qn * q - 1) - 2 * (qn - 1);
}

BlockStructure block(const CarlitzWordSpec& spec, std::uint32_t n) {
    const std::uint64_t q = spec.q;
    std::uint64_t qn = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        qn *= q;
        if (qn > block_cap) throw Error("block exceeds the materialization cap");
    }
    const std::uint64_t end = qn * q - 1;  // exclusive end of W_n
    if (end > block_cap) throw Error("block exceeds the materialization cap");
    const auto word = pq_word_blocks(spec).prefix(end);
    BlockStructure b;
    b.q = spec.q;
    b.n = n;
    const std::uint64_t start = (n == 0 && q >= 3) ? 1 : qn - 1;
    b.w.assign(word.begin() + static_cast<std::ptrdiff_t>(start), word.end());
    b.u.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(qn - 1));
    if (q >= 3) b.alpha = carlitz_alpha(spec.q, n);
    return b;
}

}  // namespace subword
