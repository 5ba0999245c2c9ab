#include "subword/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace subword {

struct InfiniteWord::Cache {
    std::unique_ptr<SymbolSource> source;
    FiniteWord buffer;
};

InfiniteWord::InfiniteWord(std::size_t alphabet_size, SourceFactory factory, std::string label)
    : alphabet_size_(alphabet_size), factory_(std::move(factory)), label_(std::move(label)) {
    if (alphabet_size_ == 0) throw Error("alphabet must be nonempty");
    if (!factory_) throw Error("word has no generator");
}

InfiniteWord::InfiniteWord(const InfiniteWord& other)
    : alphabet_size_(other.alphabet_size_), factory_(other.factory_), label_(other.label_) {}

InfiniteWord& InfiniteWord::operator=(const InfiniteWord& other) {
    if (this != &other) {
        alphabet_size_ = other.alphabet_size_;
        factory_ = other.factory_;
        label_ = other.label_;
        cache_.reset();
    }
    return *this;
}

InfiniteWord::InfiniteWord(InfiniteWord&&) noexcept = default;
InfiniteWord& InfiniteWord::operator=(InfiniteWord&&) noexcept = default;
InfiniteWord::~InfiniteWord() = default;

InfiniteWord InfiniteWord::with_label(std::string label) const {
    InfiniteWord w(*this);
    w.label_ = std::move(label);
    return w;
}

void InfiniteWord::ensure(std::size_t n) const {
    if (!cache_) {
        cache_ = std::make_unique<Cache>();
        cache_->source = factory_();
    }
    auto& buf = cache_->buffer;
    if (buf.size() >= n) return;
    buf.reserve(std::max(n, buf.size() + buf.size() / 2));
    while (buf.size() < n) {
        const Symbol s = cache_->source->next();
        if (s >= alphabet_size_) {
            throw Error("generator emitted symbol " + std::to_string(s) + " outside alphabet of size " +
                        std::to_string(alphabet_size_));
        }
        buf.push_back(s);
    }
}

Symbol InfiniteWord::at(std::size_t n) const {
    ensure(n + 1);
    return cache_->buffer[n];
}

FiniteWord InfiniteWord::prefix(std::size_t n) const {
    const auto v = view(n);
    return FiniteWord(v.begin(), v.end());
}

std::span<const Symbol> InfiniteWord::view(std::size_t n) const {
    ensure(n);
    return std::span<const Symbol>(cache_->buffer.data(), n);
}

void InfiniteWord::restart() const { cache_.reset(); }

FiniteWord word_from_string(std::string_view text) {
    FiniteWord w;
    w.reserve(text.size());
    for (char ch : text) {
        if (ch >= '0' && ch <= '9') {
            w.push_back(static_cast<Symbol>(ch - '0'));
        } else if (ch >= 'a' && ch <= 'z') {
            w.push_back(static_cast<Symbol>(ch - 'a' + 10));
        } else {
            throw Error(std::string("invalid symbol character '") + ch + "'");
        }
    }
    return w;
}

std::string word_to_string(std::span<const Symbol> word) {
    std::string s;
    s.reserve(word.size());
    for (auto x : word) {
        if (x < 10) {
            s.push_back(static_cast<char>('0' + x));
        } else if (x < 36) {
            s.push_back(static_cast<char>('a' + (x - 10)));
        } else {
            throw Error("symbol " + std::to_string(x) + " has no single-character form");
        }
    }
    return s;
}

// ---------------------------------------------------------------------------

Morphism::Morphism(std::vector<FiniteWord> images) : images_(std::move(images)) {
    if (images_.empty()) throw Error("morphism needs a nonempty alphabet");
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (images_[x].empty()) throw Error("image of letter " + std::to_string(x) + " is empty");
        for (auto y : images_[x])
            if (y >= images_.size()) throw Error("image letter " + std::to_string(y) + " out of range");
    }
}

bool Morphism::prolongable_on(Symbol seed) const {
    return seed < images_.size() && images_[seed].size() >= 2 && images_[seed].front() == seed;
}

FiniteWord Morphism::apply(std::span<const Symbol> word) const {
    FiniteWord out;
    for (auto x : word) {
        const auto& img = images_.at(x);
        out.insert(out.end(), img.begin(), img.end());
    }
    return out;
}

FiniteWord Morphism::iterate(Symbol x, std::size_t n) const {
    FiniteWord w{x};
    for (std::size_t i = 0; i < n; ++i) w = apply(w);
    return w;
}

// ---------------------------------------------------------------------------

void Dfao::validate() const {
    if (base < 2) throw Error("DFAO base must be at least 2");
    if (state_count == 0) throw Error("DFAO needs at least one state");
    if (initial >= state_count) throw Error("DFAO initial state out of range");
    if (transitions.size() != std::size_t{state_count} * base) throw Error("DFAO transitions are not total");
    for (auto t : transitions)
        if (t >= state_count) throw Error("DFAO transition target out of range");
    if (output.size() != state_count) throw Error("DFAO output is not total");
    if (order == DigitOrder::most_significant_first && step(initial, 0) != initial)
        throw Error("DFAO initial state must loop on digit 0 when reading most significant digit first");
}

Symbol Dfao::evaluate(std::span<const std::uint32_t> digits) const {
    std::uint32_t s = initial;
    for (auto d : digits) s = step(s, d);
    return output[s];
}

Symbol Dfao::evaluate_index(std::uint64_t n) const {
    std::vector<std::uint32_t> digits;
    while (n > 0) {
        digits.push_back(static_cast<std::uint32_t>(n % base));
        n /= base;
    }
    if (order == DigitOrder::most_significant_first) std::reverse(digits.begin(), digits.end());
    return evaluate(digits);
}

std::size_t Dfao::alphabet_size() const {
    Symbol m = 0;
    for (auto s : output) m = std::max(m, s);
    return std::size_t{m} + 1;
}

Dfao parse_dfao(std::string_view text) {
    Dfao m;
    bool have_base = false;
    bool have_states = false;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> edges;
    std::vector<std::pair<std::uint32_t, Symbol>> outs;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& msg) { throw Error("DFAO line " + std::to_string(line_no) + ": " + msg); };
    while (std::getline(in, line)) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        auto read = [&]() {
            long long v = -1;
            if (!(ls >> v) || v < 0 || v > 1'000'000) fail("expected a nonnegative integer");
            return static_cast<std::uint32_t>(v);
        };
        if (key == "base") {
            m.base = read();
            have_base = true;
        } else if (key == "states") {
            m.state_count = read();
            have_states = true;
        } else if (key == "initial") {
            m.initial = read();
        } else if (key == "trans") {
            const auto s = read();
            const auto d = read();
            const auto t = read();
            edges.emplace_back(s, d, t);
        } else if (key == "out") {
            const auto s = read();
            const auto v = read();
            outs.emplace_back(s, v);
        } else if (key == "order") {
            std::string o;
            ls >> o;
            if (o == "msf") {
                m.order = DigitOrder::most_significant_first;
            } else if (o == "lsf") {
                m.order = DigitOrder::least_significant_first;
            } else {
                fail("order must be msf or lsf");
            }
        } else {
            fail("unknown directive '" + key + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing tokens");
    }
    if (!have_base || !have_states) throw Error("DFAO must declare base and states");
    if (m.base < 2 || m.state_count == 0) throw Error("DFAO base must be >= 2 and states >= 1");
    constexpr std::uint32_t unset = ~std::uint32_t{0};
    m.transitions.assign(std::size_t{m.state_count} * m.base, unset);
    m.output.assign(m.state_count, unset);
    for (auto [s, d, t] : edges) {
        if (s >= m.state_count || d >= m.base || t >= m.state_count) throw Error("DFAO transition out of range");
        m.transitions[std::size_t{s} * m.base + d] = t;
    }
    for (auto [s, v] : outs) {
        if (s >= m.state_count) throw Error("DFAO output state out of range");
        m.output[s] = v;
    }
    for (auto t : m.transitions)
        if (t == unset) throw Error("DFAO transitions are not total");
    for (auto v : m.output)
        if (v == unset) throw Error("DFAO output is not total");
    m.validate();
    return m;
}

// ---------------------------------------------------------------------------

InfiniteWord periodic_word(FiniteWord preperiod, FiniteWord period) {
    if (period.empty()) throw Error("period must be nonempty");
    Symbol top = 0;
    for (auto x : preperiod) top = std::max(top, x);
    for (auto x : period) top = std::max(top, x);
    auto factory = make_factory([u = std::move(preperiod), v = std::move(period)]() {
        return [u, v, pos = std::size_t{0}]() mutable {
            const std::size_t i = pos++;
            if (i < u.size()) return u[i];
            return v[(i - u.size()) % v.size()];
        };
    });
    return InfiniteWord(std::size_t{top} + 1, std::move(factory));
}

InfiniteWord morphic_fixed_point(const Morphism& sigma, Symbol seed, std::optional<FiniteWord> coding) {
    if (!sigma.prolongable_on(seed)) throw Error("not prolongable");
    std::size_t alphabet = sigma.alphabet_size();
    if (coding) {
        if (coding->size() != sigma.alphabet_size()) throw Error("coding must map every letter of the morphism");
        Symbol top = 0;
        for (auto x : *coding) top = std::max(top, x);
        alphabet = std::size_t{top} + 1;
    }
    auto factory = make_factory([sigma, seed, coding]() {
        // buffer holds the (uncoded) fixed point generated so far; `expand` is the
        // next letter whose image gets appended.
        return [sigma, coding, buffer = sigma.image(seed), expand = std::size_t{1},
                pos = std::size_t{0}]() mutable {
            while (pos >= buffer.size()) {
                const auto& img = sigma.image(buffer[expand++]);
                buffer.insert(buffer.end(), img.begin(), img.end());
            }
            const Symbol x = buffer[pos++];
            return coding ? (*coding)[x] : x;
        };
    });
    return InfiniteWord(alphabet, std::move(factory));
}

InfiniteWord automatic_word(const Dfao& automaton) {
    automaton.validate();
    auto factory = make_factory([automaton]() {
        return [automaton, n = std::uint64_t{0}]() mutable { return automaton.evaluate_index(n++); };
    });
    return InfiniteWord(automaton.alphabet_size(), std::move(factory));
}

InfiniteWord cantor_word() {
    auto factory = make_factory([]() {
        return [n = std::uint64_t{0}]() mutable {
            for (std::uint64_t k = n++; k > 0; k /= 3)
                if (k % 3 == 1) return Symbol{0};
            return Symbol{1};
        };
    });
    return InfiniteWord(2, std::move(factory), "cantor");
}

InfiniteWord rotation_word(const QuadraticIrrational& alpha) {
    auto factory = make_factory([alpha]() {
        return [alpha, n = std::int64_t{0}, prev = std::int64_t{0}]() mutable {
            const std::int64_t next = alpha.floor_multiple(n + 1);
            const auto s = static_cast<Symbol>(next - prev);
            prev = next;
            ++n;
            return s;
        };
    });
    return InfiniteWord(2, std::move(factory), "rotation:alpha=" + alpha.to_string());
}

InfiniteWord champernowne_word(std::uint32_t base) {
    if (base < 2) throw Error("Champernowne base must be at least 2");
    auto factory = make_factory([base]() {
        return [base, k = std::uint64_t{0}, digits = FiniteWord{}, pos = std::size_t{0}]() mutable {
            if (pos == digits.size()) {
                digits.clear();
                std::uint64_t v = k++;
                do {
                    digits.push_back(static_cast<Symbol>(v % base));
                    v /= base;
                } while (v > 0);
                std::reverse(digits.begin(), digits.end());
                pos = 0;
            }
            return digits[pos++];
        };
    });
    return InfiniteWord(base, std::move(factory), "champernowne:b=" + std::to_string(base));
}

namespace {

InfiniteWord combine(const InfiniteWord& a, const InfiniteWord& b, const FieldSpec& field, bool multiply) {
    const auto q = field.order();
    if (a.alphabet_size() > q || b.alphabet_size() > q)
        throw Error("word alphabet exceeds the field order " + std::to_string(q));
    auto factory = make_factory([a, b, field, multiply]() {
        return [sa = std::shared_ptr<SymbolSource>(a.open()), sb = std::shared_ptr<SymbolSource>(b.open()), field,
                multiply]() {
            const Symbol x = sa->next();
            const Symbol y = sb->next();
            if (!field.contains(x) || !field.contains(y)) throw Error("symbol out of field range");
            return multiply ? field.mul(x, y) : field.add(x, y);
        };
    });
    return InfiniteWord(q, std::move(factory));
}

}  // namespace

InfiniteWord word_pointwise_add(const InfiniteWord& a, const InfiniteWord& b, const FieldSpec& field) {
    return combine(a, b, field, false);
}

InfiniteWord word_pointwise_mul(const InfiniteWord& a, const InfiniteWord& b, const FieldSpec& field) {
    return combine(a, b, field, true);
}

InfiniteWord map_word(const InfiniteWord& a, std::size_t alphabet_size, std::function<Symbol(Symbol)> fn,
                      std::string label) {
    auto factory = make_factory([a, fn]() {
        return [src = std::shared_ptr<SymbolSource>(a.open()), fn]() { return fn(src->next()); };
    });
    return InfiniteWord(alphabet_size, std::move(factory), std::move(label));
}

BigInt morphism_growth(const Morphism& sigma, Symbol x, std::uint64_t n) {
    const std::size_t k = sigma.alphabet_size();
    if (x >= k) throw Error("letter out of range");
    using Matrix = std::vector<BigInt>;  // row-major k x k
    auto multiply = [k](const Matrix& a, const Matrix& b) {
        Matrix c(k * k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) {
                if (a[i * k + l] == 0) continue;
                for (std::size_t j = 0; j < k; ++j) c[i * k + j] += a[i * k + l] * b[l * k + j];
            }
        return c;
    };
    // incidence[y][z] = occurrences of y in sigma(z)
    Matrix incidence(k * k);
    for (std::size_t z = 0; z < k; ++z)
        for (auto y : sigma.image(static_cast<Symbol>(z))) incidence[std::size_t{y} * k + z] += 1;
    Matrix power(k * k);
    for (std::size_t i = 0; i < k; ++i) power[i * k + i] = 1;
    for (std::uint64_t e = n; e > 0; e >>= 1U) {
        if (e & 1U) power = multiply(power, incidence);
        if (e > 1) incidence = multiply(incidence, incidence);
    }
    BigInt length = 0;
    for (std::size_t y = 0; y < k; ++y) length += power[y * k + x];
    return length;
}

}  // namespace subword
