#include "subword/quadratic.hpp"

#include <cmath>

#include "subword/error.hpp"

namespace subword {

std::uint64_t isqrt(uint128 v) noexcept {
    if (v == 0) return 0;
    auto x = static_cast<uint128>(std::sqrt(static_cast<long double>(v)));
    while (x * x > v) --x;
    while ((x + 1) * (x + 1) <= v) ++x;
    return static_cast<std::uint64_t>(x);
}

namespace {

bool squarefree(std::int64_t d) {
    for (std::int64_t k = 2; k * k <= d; ++k)
        if (d % (k * k) == 0) return false;
    return true;
}

int128 floor_div(int128 x, int128 c) {
    // c > 0
    int128 q = x / c;
    if (x % c != 0 && x < 0) --q;
    return q;
}

}  // namespace

QuadraticIrrational::QuadraticIrrational(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d)
    : a_(a), b_(b), c_(c), d_(d) {
    // n^2 b^2 d and n*|a| must stay well inside 2^126.
    const long double scale = std::fabs(static_cast<long double>(b)) * std::sqrt(static_cast<long double>(d)) +
                              std::fabs(static_cast<long double>(a)) + 1.0L;
    const long double limit = 1.0e18L / scale;
    max_index_ = limit > 9.0e17L ? static_cast<std::int64_t>(9.0e17L) : static_cast<std::int64_t>(limit);
}

QuadraticIrrational QuadraticIrrational::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (c == 0) throw Error("rotation angle: zero denominator");
    if (b == 0) throw Error("rotation angle must be irrational (b = 0)");
    if (d <= 1 || !squarefree(d)) throw Error("rotation angle: d must be a squarefree integer > 1");
    constexpr std::int64_t bound = std::int64_t{1} << 30;
    if (a <= -bound || a >= bound || b <= -bound || b >= bound || c <= -bound || c >= bound || d >= bound)
        throw Error("rotation angle: parameters too large");
    if (c < 0) {
        a = -a;
        b = -b;
        c = -c;
    }
    QuadraticIrrational alpha(a, b, c, d);
    // 0 < (a + b sqrt d)/c  <=>  a + b sqrt d > 0;  alpha < 1  <=>  (a - c) + b sqrt d < 0.
    if (alpha.sign_of(a, b) <= 0 || alpha.sign_of(int128{a} - c, b) >= 0)
        throw Error("rotation angle must lie strictly between 0 and 1");
    return alpha;
}

int QuadraticIrrational::sign_of(int128 u, int128 v) const noexcept {
    // sqrt(d) is irrational, so u + v sqrt(d) == 0 only when u == v == 0.
    if (v == 0) return u > 0 ? 1 : (u < 0 ? -1 : 0);
    if (u >= 0 && v > 0) return 1;
    if (u <= 0 && v < 0) return -1;
    const uint128 uu = static_cast<uint128>(u < 0 ? -u : u) * static_cast<uint128>(u < 0 ? -u : u);
    const uint128 vv = static_cast<uint128>(v < 0 ? -v : v) * static_cast<uint128>(v < 0 ? -v : v) *
                       static_cast<uint128>(d_);
    // Opposite signs: the term with the larger square wins.
    if (u > 0) return uu > vv ? 1 : -1;
    return vv > uu ? 1 : -1;
}

std::int64_t QuadraticIrrational::floor_multiple(std::int64_t n) const {
    if (n < 0 || n > max_index_) throw Error("rotation index out of supported range");
    if (n == 0) return 0;
    // floor(n b sqrt d): b*n*sqrt(d) is never an integer for squarefree d > 1.
    const int128 nb = int128{n} * b_;
    const uint128 sq = static_cast<uint128>(nb < 0 ? -nb : nb) * static_cast<uint128>(nb < 0 ? -nb : nb) *
                       static_cast<uint128>(d_);
    const auto r = static_cast<int128>(isqrt(sq));
    const int128 floor_s = nb > 0 ? r : -r - 1;
    // floor((n a + s)/c) == floor((n a + floor(s))/c) for integer n a and c > 0.
    return static_cast<std::int64_t>(floor_div(int128{n} * a_ + floor_s, c_));
}

std::string QuadraticIrrational::to_string() const {
    std::string s = "(" + std::to_string(a_);
    s += b_ < 0 ? "-" : "+";
    s += std::to_string(b_ < 0 ? -b_ : b_) + "*sqrt(" + std::to_string(d_) + "))/" + std::to_string(c_);
    return s;
}

double QuadraticIrrational::approx() const noexcept {
    return (static_cast<double>(a_) + static_cast<double>(b_) * std::sqrt(static_cast<double>(d_))) /
           static_cast<double>(c_);
}

}  // namespace subword
