#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "subword/error.hpp"

namespace subword {

class FieldElement;

/**
 * A finite field F_q, q = p^n, realized as (Z/p)[t] modulo a monic irreducible
 * polynomial of degree n.
 *
 * Elements are identified with canonical indices sum_i c_i p^i of their
 * little-endian coefficient vectors, so index 0 is zero, index 1 is one, and the
 * prime subfield occupies indices [0, p). Addition, multiplication, negation and
 * inversion are tabulated at construction; copies share the immutable tables.
 */
class FieldSpec {
   public:
    /// Largest order accepted; tables are q x q.
    static constexpr std::uint32_t max_order = 1024;

    /// The prime field Z/p, with modulus "t" by convention.
    static FieldSpec prime(std::uint32_t p);

    /// F_q for a prime q or one of the built-in extension orders {4, 8, 9, 16, 25, 27}.
    static FieldSpec builtin(std::uint32_t q);

    /// F_{p^n} with a user-supplied monic modulus (little-endian, length n + 1).
    /// Throws when p is not prime or the modulus is not monic irreducible.
    static FieldSpec with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);

    /// Parses "F3", "F4", ... (built-ins) or "Fq(9;t^2+1)".
    static FieldSpec parse(std::string_view literal);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// Monic modulus, little-endian, length degree() + 1.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    /// Canonical literal: "F<q>" when the modulus is the built-in one, else "Fq(q;poly)".
    std::string literal() const;

    // Raw index arithmetic for hot loops. Arguments must be < order().
    Symbol add(Symbol x, Symbol y) const noexcept;
    Symbol sub(Symbol x, Symbol y) const noexcept;
    Symbol mul(Symbol x, Symbol y) const noexcept;
    Symbol neg(Symbol x) const noexcept;
    /// Throws Error("division by zero") for x == 0.
    Symbol inv(Symbol x) const;
    /// Index of (k mod p) in the prime subfield.
    Symbol embed(std::int64_t k) const noexcept;
    bool contains(Symbol x) const noexcept { return x < order(); }

    FieldElement element(Symbol index) const;
    FieldElement zero() const;
    FieldElement one() const;

    /// Coefficients of the element with the given index (length degree()).
    std::vector<std::uint32_t> coefficients(Symbol index) const;
    /// Inverse of coefficients(); throws on wrong length or out-of-range digits.
    Symbol index_of(const std::vector<std::uint32_t>& coeffs) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept;

   private:
    struct Tables;
    explicit FieldSpec(std::shared_ptr<const Tables> tables) : tables_(std::move(tables)) {}
    std::shared_ptr<const Tables> tables_;
};

/// An element of a FieldSpec. Equality is equality of field and canonical index.
class FieldElement {
   public:
    FieldElement(FieldSpec field, Symbol index);

    const FieldSpec& field() const noexcept { return field_; }
    Symbol index() const noexcept { return index_; }
    std::vector<std::uint32_t> coefficients() const { return field_.coefficients(index_); }
    bool is_zero() const noexcept { return index_ == 0; }

    FieldElement pow(std::uint64_t e) const;
    std::string to_string() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept {
        return a.index_ == b.index_ && a.field_ == b.field_;
    }

   private:
    FieldSpec field_;
    Symbol index_;
};

enum class FieldOp { add, sub, mul };

/// Field arithmetic; throws Error("field mismatch") when the operands live in different fields.
FieldElement ff_arith(FieldOp op, const FieldElement& x, const FieldElement& y);
/// Multiplicative inverse; throws Error("division by zero") for zero.
FieldElement ff_inv(const FieldElement& x);
/// k mod p as an element of the prime subfield.
FieldElement ff_embed_int(std::int64_t k, const FieldSpec& field);

FieldElement operator+(const FieldElement& x, const FieldElement& y);
FieldElement operator-(const FieldElement& x, const FieldElement& y);
FieldElement operator*(const FieldElement& x, const FieldElement& y);
FieldElement operator-(const FieldElement& x);

/// Trial-division primality test.
bool is_prime(std::uint64_t n) noexcept;

/// Brute-force irreducibility test of a monic polynomial over Z/p (little-endian coefficients).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic);

}  // namespace subword
