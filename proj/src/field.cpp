#include "subword/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "subword/polynomial.hpp"

namespace subword {

struct FieldSpec::Tables {
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t q = 0;
    std::vector<std::uint32_t> modulus;
    bool builtin_modulus = false;
    std::vector<std::uint16_t> add;
    std::vector<std::uint16_t> mul;
    std::vector<std::uint16_t> neg;
    std::vector<std::uint16_t> inv;
};

namespace {

using Poly = std::vector<std::uint32_t>;

const std::map<std::uint32_t, std::pair<std::uint32_t, Poly>>& builtin_moduli() {
    static const std::map<std::uint32_t, std::pair<std::uint32_t, Poly>> table{
        {4, {2, {1, 1, 1}}},         // t^2+t+1
        {8, {2, {1, 1, 0, 1}}},      // t^3+t+1
        {9, {3, {1, 0, 1}}},         // t^2+1
        {16, {2, {1, 1, 0, 0, 1}}},  // t^4+t+1
        {25, {5, {2, 0, 1}}},        // t^2+2
        {27, {3, {1, 2, 0, 1}}},     // t^3+2t+1
    };
    return table;
}

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over Z/p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm && !a.empty()) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly digits(std::uint32_t index, std::uint32_t p, std::uint32_t n) {
    Poly c(n, 0);
    for (std::uint32_t i = 0; i < n; ++i) {
        c[i] = index % p;
        index /= p;
    }
    return c;
}

std::uint32_t undigits(const Poly& c, std::uint32_t p) {
    std::uint32_t v = 0;
    for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
    return v;
}

std::uint32_t ipow(std::uint32_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    for (std::uint32_t i = 0; i < e; ++i) r *= b;
    return static_cast<std::uint32_t>(r);
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& monic) {
    if (monic.size() < 2 || monic.back() != 1) return false;
    const std::uint32_t n = static_cast<std::uint32_t>(monic.size() - 1);
    // Every monic divisor of degree 1..n/2 (leading coefficient 1 implied).
    for (std::uint32_t d = 1; d <= n / 2; ++d) {
        const std::uint32_t count = ipow(p, d);
        for (std::uint32_t low = 0; low < count; ++low) {
            Poly div = digits(low, p, d);
            div.push_back(1);
            if (poly_mod(monic, div, p).empty()) return false;
        }
    }
    return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
    return with_modulus(p, {0, 1});
}

FieldSpec FieldSpec::builtin(std::uint32_t q) {
    if (is_prime(q)) return prime(q);
    const auto& table = builtin_moduli();
    const auto it = table.find(q);
    if (it == table.end()) throw Error("no built-in field of order " + std::to_string(q));
    return with_modulus(it->second.first, it->second.second);
}

FieldSpec FieldSpec::with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
    if (modulus.size() < 2) throw Error("modulus must have degree at least 1");
    for (auto c : modulus)
        if (c >= p) throw Error("modulus coefficient out of range");
    if (modulus.back() != 1) throw Error("modulus must be monic");
    const auto n = static_cast<std::uint32_t>(modulus.size() - 1);
    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        q64 *= p;
        if (q64 > max_order) throw Error("field order exceeds " + std::to_string(max_order));
    }
    if (!is_irreducible(p, modulus)) throw Error("modulus is not irreducible");

    auto t = std::make_shared<Tables>();
    t->p = p;
    t->n = n;
    t->q = static_cast<std::uint32_t>(q64);
    if (n == 1) modulus = {0, 1};  // prime fields: the modulus "t" by convention
    t->modulus = modulus;
    if (n == 1) {
        t->builtin_modulus = true;
    } else {
        const auto& table = builtin_moduli();
        const auto it = table.find(t->q);
        t->builtin_modulus = it != table.end() && it->second.second == modulus;
    }

    const std::uint32_t q = t->q;
    t->add.resize(std::size_t{q} * q);
    t->mul.resize(std::size_t{q} * q);
    t->neg.resize(q);
    t->inv.assign(q, 0);
    std::vector<Poly> d(q);
    for (std::uint32_t x = 0; x < q; ++x) d[x] = digits(x, p, n);
    for (std::uint32_t x = 0; x < q; ++x) {
        Poly nx(n);
        for (std::uint32_t i = 0; i < n; ++i) nx[i] = (p - d[x][i]) % p;
        t->neg[x] = static_cast<std::uint16_t>(undigits(nx, p));
        for (std::uint32_t y = 0; y < q; ++y) {
            Poly s(n);
            for (std::uint32_t i = 0; i < n; ++i) s[i] = (d[x][i] + d[y][i]) % p;
            t->add[std::size_t{x} * q + y] = static_cast<std::uint16_t>(undigits(s, p));

            Poly prod(2 * n - 1, 0);
            for (std::uint32_t i = 0; i < n; ++i)
                for (std::uint32_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + d[x][i] * d[y][j]) % p;
            Poly r = n == 1 ? prod : poly_mod(prod, modulus, p);
            r.resize(n, 0);
            t->mul[std::size_t{x} * q + y] = static_cast<std::uint16_t>(undigits(r, p));
        }
    }
    for (std::uint32_t x = 1; x < q; ++x)
        for (std::uint32_t y = 1; y < q; ++y)
            if (t->mul[std::size_t{x} * q + y] == 1) {
                t->inv[x] = static_cast<std::uint16_t>(y);
                break;
            }
    return FieldSpec(std::move(t));
}

FieldSpec FieldSpec::parse(std::string_view literal) {
    auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
    auto read_uint = [&](std::size_t& pos) {
        if (pos >= literal.size() || !is_digit(literal[pos])) throw ParseError(pos, "expected field order");
        std::uint64_t v = 0;
        while (pos < literal.size() && is_digit(literal[pos])) {
            v = v * 10 + static_cast<std::uint64_t>(literal[pos] - '0');
            if (v > 1'000'000) throw ParseError(pos, "field order too large");
            ++pos;
        }
        return static_cast<std::uint32_t>(v);
    };
    if (literal.empty() || literal[0] != 'F') throw ParseError(0, "field literal must start with 'F'");
    std::size_t pos = 1;
    if (literal.substr(0, 3) == "Fq(") {
        pos = 3;
        const std::uint32_t q = read_uint(pos);
        if (pos >= literal.size() || literal[pos] != ';') throw ParseError(pos, "expected ';'");
        ++pos;
        const auto close = literal.find(')', pos);
        if (close == std::string_view::npos) throw ParseError(literal.size(), "expected ')'");
        if (close + 1 != literal.size()) throw ParseError(close + 1, "trailing characters after field literal");
        PolynomialLiteral poly;
        try {
            poly = parse_polynomial(literal.substr(pos, close - pos), 't');
        } catch (const ParseError& e) {
            throw ParseError(pos + e.position(), "malformed modulus");
        }
        std::uint32_t p = 0;
        for (std::uint32_t c = 2; c <= q; ++c)
            if (q % c == 0) {
                p = c;
                break;
            }
        if (p == 0 || !is_prime(p)) throw ParseError(3, "field order must be a prime power");
        Poly m;
        for (auto c : poly.coeffs) m.push_back(static_cast<std::uint32_t>(((c % p) + p) % p));
        trim(m);
        FieldSpec f = with_modulus(p, m);
        if (f.order() != q) throw ParseError(3, "modulus degree does not match the field order");
        return f;
    }
    const std::uint32_t q = read_uint(pos);
    if (pos != literal.size()) throw ParseError(pos, "trailing characters after field literal");
    return builtin(q);
}

std::uint32_t FieldSpec::characteristic() const noexcept { return tables_->p; }
std::uint32_t FieldSpec::degree() const noexcept { return tables_->n; }
std::uint32_t FieldSpec::order() const noexcept { return tables_->q; }
const std::vector<std::uint32_t>& FieldSpec::modulus() const noexcept { return tables_->modulus; }

std::string FieldSpec::literal() const {
    if (tables_->builtin_modulus) return "F" + std::to_string(order());
    PolynomialLiteral poly;
    for (auto c : tables_->modulus) poly.coeffs.push_back(c);
    return "Fq(" + std::to_string(order()) + ";" + format_polynomial(poly, 't') + ")";
}

Symbol FieldSpec::add(Symbol x, Symbol y) const noexcept { return tables_->add[std::size_t{x} * tables_->q + y]; }
Symbol FieldSpec::sub(Symbol x, Symbol y) const noexcept { return add(x, tables_->neg[y]); }
Symbol FieldSpec::mul(Symbol x, Symbol y) const noexcept { return tables_->mul[std::size_t{x} * tables_->q + y]; }
Symbol FieldSpec::neg(Symbol x) const noexcept { return tables_->neg[x]; }

Symbol FieldSpec::inv(Symbol x) const {
    if (x == 0) throw Error("division by zero");
    return tables_->inv[x];
}

Symbol FieldSpec::embed(std::int64_t k) const noexcept {
    const auto p = static_cast<std::int64_t>(tables_->p);
    return static_cast<Symbol>(((k % p) + p) % p);
}

FieldElement FieldSpec::element(Symbol index) const { return FieldElement(*this, index); }
FieldElement FieldSpec::zero() const { return FieldElement(*this, 0); }
FieldElement FieldSpec::one() const { return FieldElement(*this, 1); }

std::vector<std::uint32_t> FieldSpec::coefficients(Symbol index) const {
    if (index >= order()) throw Error("element index out of range");
    return digits(index, tables_->p, tables_->n);
}

Symbol FieldSpec::index_of(const std::vector<std::uint32_t>& coeffs) const {
    if (coeffs.size() != degree()) throw Error("coefficient vector has wrong length");
    for (auto c : coeffs)
        if (c >= characteristic()) throw Error("coefficient out of range");
    return undigits(coeffs, tables_->p);
}

bool operator==(const FieldSpec& a, const FieldSpec& b) noexcept {
    return a.tables_ == b.tables_ || (a.tables_->p == b.tables_->p && a.tables_->modulus == b.tables_->modulus);
}

FieldElement::FieldElement(FieldSpec field, Symbol index) : field_(std::move(field)), index_(index) {
    if (index_ >= field_.order()) throw Error("element index out of range");
}

FieldElement FieldElement::pow(std::uint64_t e) const {
    Symbol result = 1;
    Symbol base = index_;
    while (e > 0) {
        if (e & 1U) result = field_.mul(result, base);
        base = field_.mul(base, base);
        e >>= 1U;
    }
    return FieldElement(field_, result);
}

std::string FieldElement::to_string() const {
    if (field_.degree() == 1) return std::to_string(index_);
    PolynomialLiteral poly;
    for (auto c : coefficients()) poly.coeffs.push_back(c);
    return format_polynomial(poly, 't');
}

FieldElement ff_arith(FieldOp op, const FieldElement& x, const FieldElement& y) {
    if (!(x.field() == y.field())) throw Error("field mismatch");
    const auto& f = x.field();
    switch (op) {
        case FieldOp::add:
            return FieldElement(f, f.add(x.index(), y.index()));
        case FieldOp::sub:
            return FieldElement(f, f.sub(x.index(), y.index()));
        case FieldOp::mul:
            return FieldElement(f, f.mul(x.index(), y.index()));
    }
    throw Error("unknown field operation");
}

FieldElement ff_inv(const FieldElement& x) { return FieldElement(x.field(), x.field().inv(x.index())); }

FieldElement ff_embed_int(std::int64_t k, const FieldSpec& field) { return FieldElement(field, field.embed(k)); }

FieldElement operator+(const FieldElement& x, const FieldElement& y) { return ff_arith(FieldOp::add, x, y); }
FieldElement operator-(const FieldElement& x, const FieldElement& y) { return ff_arith(FieldOp::sub, x, y); }
FieldElement operator*(const FieldElement& x, const FieldElement& y) { return ff_arith(FieldOp::mul, x, y); }
FieldElement operator-(const FieldElement& x) { return FieldElement(x.field(), x.field().neg(x.index())); }

}  // namespace subword
