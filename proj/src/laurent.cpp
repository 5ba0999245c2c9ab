#include "subword/laurent.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace subword {

FieldPolynomial to_field_polynomial(const PolynomialLiteral& literal, const FieldSpec& field) {
    FieldPolynomial poly;
    poly.reserve(literal.coeffs.size());
    for (auto c : literal.coeffs) poly.push_back(field.embed(c));
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
    return poly;
}

int polynomial_degree(const FieldPolynomial& poly) noexcept {
    for (auto i = poly.size(); i > 0; --i)
        if (poly[i - 1] != 0) return static_cast<int>(i - 1);
    return -1;
}

LaurentSeries::LaurentSeries(FieldSpec field, std::vector<Symbol> principal, InfiniteWord tail,
                             std::optional<std::uint64_t> horizon)
    : field_(std::move(field)), principal_(std::move(principal)), tail_(std::move(tail)), horizon_(horizon) {
    if (tail_.alphabet_size() > field_.order()) throw Error("series coefficients exceed the field");
    for (auto c : principal_)
        if (!field_.contains(c)) throw Error("principal coefficient outside the field");
}

bool LaurentSeries::has_zero_principal() const {
    return std::all_of(principal_.begin(), principal_.end(), [](Symbol c) { return c == 0; });
}

RationalFunction make_rational(const FieldPolynomial& numerator, const FieldPolynomial& denominator) {
    if (polynomial_degree(denominator) < 0) throw Error("rational function with zero denominator");
    RationalFunction r{numerator, denominator};
    r.numerator.resize(static_cast<std::size_t>(polynomial_degree(numerator) + 1));
    r.denominator.resize(static_cast<std::size_t>(polynomial_degree(denominator) + 1));
    return r;
}

namespace {

[[noreturn]] void beyond_horizon() { throw Error("beyond validity horizon"); }

void require_same_field(const LaurentSeries& f, const LaurentSeries& g) {
    if (!(f.field() == g.field())) throw Error("field mismatch");
}

std::optional<std::uint64_t> min_horizon(std::optional<std::uint64_t> a, std::optional<std::uint64_t> b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

/// Sequential access to a_n for n >= -depth; earlier indices read as zero.
class Reader {
   public:
    explicit Reader(const LaurentSeries& f)
        : principal_(f.principal()), source_(f.tail().open()), horizon_(f.horizon()) {}

    Symbol get(std::int64_t n) {
        const auto depth = static_cast<std::int64_t>(principal_.size());
        if (n < -depth) return 0;
        if (n < 0) return principal_[static_cast<std::size_t>(n + depth)];
        const auto idx = static_cast<std::uint64_t>(n);
        if (horizon_ && idx > *horizon_) beyond_horizon();
        while (buffer_.size() <= idx) buffer_.push_back(source_->next());
        return buffer_[idx];
    }

   private:
    std::vector<Symbol> principal_;
    std::unique_ptr<SymbolSource> source_;
    std::optional<std::uint64_t> horizon_;
    std::vector<Symbol> buffer_;
};

/// Builds a series from a generator factory. `make()` returns a callable taking the
/// index n and returning a_n; it is called with n = -depth, -depth + 1, ... in order.
template <class MakeGen>
LaurentSeries build(const FieldSpec& field, std::size_t depth, std::optional<std::uint64_t> horizon, MakeGen make) {
    const auto d = static_cast<std::int64_t>(depth);
    std::vector<Symbol> principal(depth);
    {
        auto gen = make();
        for (std::int64_t n = -d; n < 0; ++n) principal[static_cast<std::size_t>(n + d)] = gen(n);
    }
    auto factory = make_factory([make, d, horizon]() {
        auto gen = make();
        for (std::int64_t n = -d; n < 0; ++n) gen(n);
        return [gen = std::move(gen), horizon, n = std::int64_t{0}]() mutable {
            if (horizon && static_cast<std::uint64_t>(n) > *horizon) beyond_horizon();
            return gen(n++);
        };
    });
    return LaurentSeries(field, std::move(principal), InfiniteWord(field.order(), std::move(factory)), horizon);
}

/// (-n)(-n-1)...(-n-k+1) mod p.
std::int64_t falling_factor(std::int64_t n, std::uint32_t k, std::int64_t p) {
    std::int64_t acc = 1 % p;
    for (std::uint32_t i = 0; i < k; ++i) {
        std::int64_t term = (-n - static_cast<std::int64_t>(i)) % p;
        if (term < 0) term += p;
        acc = acc * term % p;
    }
    return acc;
}

}  // namespace

LaurentSeries ls_zero(const FieldSpec& field) { return ls_from_word(periodic_word({}, {0}), field); }

LaurentSeries ls_from_word(const InfiniteWord& word, const FieldSpec& field) {
    if (word.alphabet_size() > field.order())
        throw Error("word alphabet of size " + std::to_string(word.alphabet_size()) + " exceeds field order " +
                    std::to_string(field.order()));
    return LaurentSeries(field, {}, InfiniteWord(field.order(), [word]() { return word.open(); }, word.label()));
}

LaurentSeries ls_from_polynomial(const FieldPolynomial& poly, const FieldSpec& field) {
    for (auto c : poly)
        if (!field.contains(c)) throw Error("polynomial coefficient outside the field");
    const int deg = polynomial_degree(poly);
    if (deg < 0) return ls_zero(field);
    std::vector<Symbol> principal;
    for (int k = deg; k >= 1; --k) principal.push_back(poly[static_cast<std::size_t>(k)]);
    return LaurentSeries(field, std::move(principal), periodic_word({poly[0]}, {0}).with_label(""));
}

FieldElement ls_coefficient(const LaurentSeries& f, std::int64_t n) {
    const auto depth = static_cast<std::int64_t>(f.depth());
    if (n < -depth) throw Error("below principal part");
    if (n < 0) return f.field().element(f.principal()[static_cast<std::size_t>(n + depth)]);
    if (f.horizon() && static_cast<std::uint64_t>(n) > *f.horizon()) beyond_horizon();
    return f.field().element(f.tail().at(static_cast<std::size_t>(n)));
}

std::vector<Symbol> ls_coefficients(const LaurentSeries& f, std::int64_t from, std::int64_t to) {
    std::vector<Symbol> out;
    if (to < from) return out;
    out.reserve(static_cast<std::size_t>(to - from + 1));
    const auto depth = static_cast<std::int64_t>(f.depth());
    if (to >= 0 && f.horizon() && static_cast<std::uint64_t>(to) > *f.horizon()) beyond_horizon();
    std::span<const Symbol> tail;
    if (to >= 0) tail = f.tail().view(static_cast<std::size_t>(to) + 1);
    for (std::int64_t n = from; n <= to; ++n) {
        if (n < -depth) {
            out.push_back(0);
        } else if (n < 0) {
            out.push_back(f.principal()[static_cast<std::size_t>(n + depth)]);
        } else {
            out.push_back(tail[static_cast<std::size_t>(n)]);
        }
    }
    return out;
}

LaurentSeries ls_add(const LaurentSeries& f, const LaurentSeries& g) {
    require_same_field(f, g);
    const FieldSpec field = f.field();
    return build(field, std::max(f.depth(), g.depth()), min_horizon(f.horizon(), g.horizon()), [f, g, field]() {
        return [rf = Reader(f), rg = Reader(g), field](std::int64_t n) mutable { return field.add(rf.get(n), rg.get(n)); };
    });
}

LaurentSeries ls_neg(const LaurentSeries& f) {
    const FieldSpec field = f.field();
    return build(field, f.depth(), f.horizon(), [f, field]() {
        return [rf = Reader(f), field](std::int64_t n) mutable { return field.neg(rf.get(n)); };
    });
}

LaurentSeries ls_sub(const LaurentSeries& f, const LaurentSeries& g) { return ls_add(f, ls_neg(g)); }

LaurentSeries ls_mul_poly(const FieldPolynomial& b, const LaurentSeries& f) {
    const FieldSpec field = f.field();
    for (auto c : b)
        if (!field.contains(c)) throw Error("polynomial coefficient outside the field");
    const int deg = polynomial_degree(b);
    if (deg < 0) return ls_zero(field);
    std::optional<std::uint64_t> horizon;
    if (f.horizon()) {
        if (*f.horizon() < static_cast<std::uint64_t>(deg)) throw Error("product has no valid coefficients");
        horizon = *f.horizon() - static_cast<std::uint64_t>(deg);
    }
    FieldPolynomial poly(b.begin(), b.begin() + deg + 1);
    return build(field, f.depth() + static_cast<std::size_t>(deg), horizon, [f, field, poly]() {
        // c_n = sum_k b_k a_{n+k}
        return [rf = Reader(f), field, poly](std::int64_t n) mutable {
            Symbol acc = 0;
            for (std::size_t k = 0; k < poly.size(); ++k)
                if (poly[k] != 0) acc = field.add(acc, field.mul(poly[k], rf.get(n + static_cast<std::int64_t>(k))));
            return acc;
        };
    });
}

LaurentSeries ls_mul_rational(const RationalFunction& r, const LaurentSeries& f) {
    const FieldSpec field = f.field();
    const int e = polynomial_degree(r.denominator);
    if (e < 0) throw Error("rational function with zero denominator");
    for (auto c : r.denominator)
        if (!field.contains(c)) throw Error("polynomial coefficient outside the field");
    const LaurentSeries g = ls_mul_poly(r.numerator, f);
    if (polynomial_degree(r.numerator) < 0) return g;
    const auto start = -static_cast<std::int64_t>(g.depth()) + e;  // first index where h may be nonzero
    const std::size_t depth = start < 0 ? static_cast<std::size_t>(-start) : 0;
    std::optional<std::uint64_t> horizon;
    if (g.horizon()) horizon = *g.horizon() + static_cast<std::uint64_t>(e);
    FieldPolynomial q(r.denominator.begin(), r.denominator.begin() + e + 1);
    const Symbol lead_inv = field.inv(q.back());
    // Q h = g, read at index n: sum_k Q_k h_{n+k} = g_n, solved for h_{n+e}.
    return build(field, depth, horizon, [g, field, q, lead_inv, start, e]() {
        return [rg = Reader(g), field, q, lead_inv, start, e, recent = std::deque<Symbol>()](std::int64_t j) mutable {
            if (j < start) return Symbol{0};
            Symbol acc = rg.get(j - e);
            // recent holds h_{j-e} .. h_{j-1}, zero-padded before `start`.
            if (recent.empty()) recent.assign(static_cast<std::size_t>(e), 0);
            for (int k = 0; k < e; ++k)
                if (q[static_cast<std::size_t>(k)] != 0)
                    acc = field.sub(acc, field.mul(q[static_cast<std::size_t>(k)], recent[static_cast<std::size_t>(k)]));
            const Symbol h = field.mul(acc, lead_inv);
            if (e > 0) {
                recent.pop_front();
                recent.push_back(h);
            }
            return h;
        };
    });
}

LaurentSeries ls_cauchy_mul(const LaurentSeries& f, const LaurentSeries& g, std::uint64_t horizon) {
    require_same_field(f, g);
    const FieldSpec& field = f.field();
    const auto df = static_cast<std::int64_t>(f.depth());
    const auto dg = static_cast<std::int64_t>(g.depth());
    const auto n_max = static_cast<std::int64_t>(horizon);
    // c_n = sum_i a_i b_{n-i}; for n <= N this reads a up to N + dg and b up to N + df.
    const auto a = ls_coefficients(f, -df, n_max + dg);
    const auto b = ls_coefficients(g, -dg, n_max + df);
    std::vector<std::pair<std::int64_t, Symbol>> nz_a;
    std::vector<std::pair<std::int64_t, Symbol>> nz_b;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) nz_a.emplace_back(static_cast<std::int64_t>(i) - df, a[i]);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (b[i] != 0) nz_b.emplace_back(static_cast<std::int64_t>(i) - dg, b[i]);
    const std::int64_t low = -df - dg;
    std::vector<Symbol> c(static_cast<std::size_t>(n_max - low + 1), 0);
    for (const auto& [i, ai] : nz_a) {
        for (const auto& [j, bj] : nz_b) {
            if (i + j > n_max) break;
            auto& slot = c[static_cast<std::size_t>(i + j - low)];
            slot = field.add(slot, field.mul(ai, bj));
        }
    }
    std::vector<Symbol> principal(c.begin(), c.begin() + (df + dg));
    auto shared = std::make_shared<const std::vector<Symbol>>(c.begin() + (df + dg), c.end());
    auto factory = make_factory([shared]() {
        return [shared, n = std::size_t{0}]() mutable {
            if (n >= shared->size()) beyond_horizon();
            return (*shared)[n++];
        };
    });
    return LaurentSeries(field, std::move(principal), InfiniteWord(field.order(), std::move(factory)), horizon);
}

LaurentSeries ls_hadamard(const LaurentSeries& f, const LaurentSeries& g) {
    require_same_field(f, g);
    const FieldSpec field = f.field();
    return build(field, std::min(f.depth(), g.depth()), min_horizon(f.horizon(), g.horizon()), [f, g, field]() {
        return [rf = Reader(f), rg = Reader(g), field](std::int64_t n) mutable { return field.mul(rf.get(n), rg.get(n)); };
    });
}

LaurentSeries ls_derivative(const LaurentSeries& f, std::uint32_t k) {
    if (k == 0) return f;
    const FieldSpec field = f.field();
    const auto p = static_cast<std::int64_t>(field.characteristic());
    const std::size_t depth = f.depth() > k ? f.depth() - k : 0;
    std::optional<std::uint64_t> horizon;
    if (f.horizon()) horizon = *f.horizon() + k;
    // a_n T^{-n} differentiates k times to (-n)(-n-1)...(-n-k+1) a_n T^{-n-k}.
    return build(field, depth, horizon, [f, field, k, p]() {
        return [rf = Reader(f), field, k, p](std::int64_t j) mutable {
            const std::int64_t n = j - static_cast<std::int64_t>(k);
            const Symbol a = rf.get(n);
            if (a == 0) return Symbol{0};
            return field.mul(field.embed(falling_factor(n, k, p)), a);
        };
    });
}

LaurentSeries ls_cartier(const LaurentSeries& f, std::uint32_t r) {
    const FieldSpec field = f.field();
    const std::uint32_t q = field.order();
    if (r >= q) throw Error("Cartier index r must satisfy 0 <= r < " + std::to_string(q));
    if (!f.has_zero_principal()) throw Error("Cartier operator needs a series without principal part");
    std::optional<std::uint64_t> horizon;
    if (f.horizon()) {
        if (*f.horizon() < r) throw Error("Cartier image has no valid coefficients");
        horizon = (*f.horizon() - r) / q;
    }
    return build(field, 0, horizon, [f, q, r]() {
        return [rf = Reader(f), q, r](std::int64_t i) mutable { return rf.get(i * q + r); };
    });
}

LaurentSeries ls_substitute_power(const LaurentSeries& f, std::uint32_t k) {
    if (k == 0) throw Error("substitution exponent must be at least 1");
    if (!f.has_zero_principal()) throw Error("power substitution needs a series without principal part");
    std::optional<std::uint64_t> horizon;
    if (f.horizon()) horizon = *f.horizon() * k + (k - 1);
    return build(f.field(), 0, horizon, [f, k]() {
        return [rf = Reader(f), k](std::int64_t n) mutable { return n % k == 0 ? rf.get(n / k) : Symbol{0}; };
    });
}

LaurentSeries ls_shift(const LaurentSeries& f, std::uint32_t s) {
    FieldPolynomial t_s(s + 1, 0);
    t_s.back() = 1;
    return ls_mul_rational(make_rational({1}, t_s), f);
}

bool ls_equal_up_to(const LaurentSeries& f, const LaurentSeries& g, std::int64_t n_max) {
    require_same_field(f, g);
    const auto low = -static_cast<std::int64_t>(std::max(f.depth(), g.depth()));
    return ls_coefficients(f, low, n_max) == ls_coefficients(g, low, n_max);
}

ExpansionShape rational_expansion_shape(const RationalFunction& r, const FieldSpec& field) {
    const int e = polynomial_degree(r.denominator);
    if (e < 0) throw Error("rational function with zero denominator");
    if (e == 0) return {1, 1};  // a polynomial: coefficients vanish from index 1 on
    const auto one = ls_from_polynomial({1}, field);
    const auto expansion = ls_mul_rational(r, one);
    // For j > e the recurrence is homogeneous and the last e coefficients determine the rest.
    constexpr std::uint64_t max_steps = std::uint64_t{1} << 24;
    std::map<std::vector<Symbol>, std::uint64_t> seen;
    std::vector<Symbol> window(static_cast<std::size_t>(e));
    std::uint64_t first = 0;
    std::uint64_t again = 0;
    for (std::uint64_t j = static_cast<std::uint64_t>(e) + 1;; ++j) {
        if (j > max_steps) throw Error("denominator period too long to analyse");
        for (int k = 0; k < e; ++k)
            window[static_cast<std::size_t>(k)] = expansion.tail().at(j - static_cast<std::uint64_t>(e) + 1 + k);
        const auto [it, inserted] = seen.emplace(window, j);
        if (!inserted) {
            first = it->second;
            again = j;
            break;
        }
    }
    const std::uint64_t period = again - first;
    // Periodic from index first - e + 1 on; walk the start back while it still holds.
    std::uint64_t s = first - static_cast<std::uint64_t>(e) + 1;
    while (s > 1 && expansion.tail().at(s - 1) == expansion.tail().at(s - 1 + period)) --s;
    return {std::max<std::uint64_t>(s, 1), period};
}

}  // namespace subword
