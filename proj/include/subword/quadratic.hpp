#pragma once

#include <cstdint>
#include <string>

namespace subword {

using int128 = __int128;
using uint128 = unsigned __int128;

/// floor(sqrt(v)), exact.
std::uint64_t isqrt(uint128 v) noexcept;

/**
 * An irrational number alpha = (a + b*sqrt(d)) / c in (0, 1).
 *
 * All comparisons are done with integers: b*sqrt(d) is bracketed between
 * consecutive integers by isqrt, never approximated in floating point.
 * The stored form has c > 0 (sign normalized at construction).
 */
class QuadraticIrrational {
   public:
    /// Validates d > 0 squarefree and d != 1, b != 0, c != 0, and 0 < alpha < 1.
    static QuadraticIrrational make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    std::int64_t a() const noexcept { return a_; }
    std::int64_t b() const noexcept { return b_; }
    std::int64_t c() const noexcept { return c_; }
    std::int64_t d() const noexcept { return d_; }

    /// floor(n * alpha) for 0 <= n <= max_index().
    std::int64_t floor_multiple(std::int64_t n) const;

    /// Sign of (u + v*sqrt(d)) for integers u, v (exact).
    int sign_of(int128 u, int128 v) const noexcept;

    /// Largest n accepted by floor_multiple without risking 128-bit overflow.
    std::int64_t max_index() const noexcept { return max_index_; }

    /// Canonical "(a+b*sqrt(d))/c".
    std::string to_string() const;

    double approx() const noexcept;

    friend bool operator==(const QuadraticIrrational&, const QuadraticIrrational&) = default;

   private:
    QuadraticIrrational(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
    std::int64_t a_, b_, c_, d_;
    std::int64_t max_index_;
};

}  // namespace subword
