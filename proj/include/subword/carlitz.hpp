#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subword/field.hpp"
#include "subword/words.hpp"

namespace subword {

/// q and the field whose prime subfield receives the symbols 0, +1, -1.
struct CarlitzWordSpec {
    std::uint32_t q = 2;
    FieldSpec field = FieldSpec::prime(2);

    /// Throws unless q >= 2 is a prime power. Without a field, F_q is used when
    /// it is built in, otherwise the prime field of characteristic p.
    static CarlitzWordSpec make(std::uint32_t q, std::optional<FieldSpec> field = std::nullopt);
};

/// True when q = p^k for a prime p and k >= 1.
bool is_prime_power(std::uint64_t q) noexcept;

/// The set J (ascending) with n = sum_{j in J} (q^j - 1), found greedily; none when no such set exists.
std::optional<std::vector<std::uint32_t>> decompose(std::uint64_t n, std::uint32_t q);

/// Coefficient p_n of 1/Pi_q: 1 for n = 0, (-1)^|J| when n decomposes, 0 otherwise.
FieldElement pq_symbol(std::uint64_t n, std::uint32_t q, const FieldSpec& field);
/// Same value as a signed integer in {-1, 0, 1}.
int pq_sign(std::uint64_t n, std::uint32_t q);

enum class CarlitzEngine { definition, blocks, morphism };

std::string carlitz_engine_name(CarlitzEngine engine);
CarlitzEngine parse_carlitz_engine(std::string_view name);

/// Symbol n computed independently through pq_symbol.
InfiniteWord pq_word_definition(const CarlitzWordSpec& spec);
/// Streams the block doubling U_{n+1} = U_n (-U_n) 0^{alpha_n}; for q = 2, alpha_n = 1 and in
/// characteristic 2 this is U_n U_n 0.
InfiniteWord pq_word_blocks(const CarlitzWordSpec& spec);
/// Fixed point of 1 -> 110, 0 -> 0; q = 2 over a field of characteristic 2 only.
InfiniteWord pq_word_morphism(const CarlitzWordSpec& spec);
InfiniteWord pq_word(const CarlitzWordSpec& spec, CarlitzEngine engine = CarlitzEngine::blocks);

/// Number of partitions of n into parts q^j - 1 (j >= 1), reduced into the prime subfield.
FieldElement pi_q_coefficient(std::uint64_t n, std::uint32_t q, const FieldSpec& field);
/// Partition counts mod p for every n <= horizon.
std::vector<std::uint32_t> pi_q_counts_mod(std::uint64_t horizon, std::uint32_t q, std::uint32_t p);
/// Coefficient word a_0 a_1 ... of Pi_q.
InfiniteWord pi_word(const CarlitzWordSpec& spec);

/// Checks sum_{i<=n} a_i p_{n-i} = [n = 0] in the field for all n <= n_max.
bool verify_unit_convolution(std::uint32_t q, std::uint64_t n_max, std::optional<FieldSpec> field = std::nullopt);

struct BlockStructure {
    std::uint32_t q = 2;
    std::uint32_t n = 0;
    FiniteWord w;                      // W_n
    FiniteWord u;                      // U_n, the prefix of length q^n - 1
    std::optional<std::uint64_t> alpha;  // alpha_n, q >= 3 only
};

/// Largest |W_n| or |U_n| that block() materializes.
inline constexpr std::uint64_t block_cap = std::uint64_t{1} << 26;

/// alpha_n = (q^{n+1} - 1) - 2(q^n - 1).
std::uint64_t carlitz_alpha(std::uint32_t q, std::uint32_t n);

/// W_n, U_n (and alpha_n) over the spec's field. W_0 is "1" for q = 2 and 0^{q-2} for q >= 3.
BlockStructure block(const CarlitzWordSpec& spec, std::uint32_t n);

}  // namespace subword
