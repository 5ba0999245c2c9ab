#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "subword/error.hpp"
#include "subword/field.hpp"
#include "subword/quadratic.hpp"

namespace subword {

using FiniteWord = std::vector<Symbol>;
using BigInt = boost::multiprecision::cpp_int;

/// A single-consumer stream of symbols. Each call to next() yields the following symbol.
class SymbolSource {
   public:
    virtual ~SymbolSource() = default;
    virtual Symbol next() = 0;
};

using SourceFactory = std::function<std::unique_ptr<SymbolSource>()>;

/// Adapts a callable `Symbol()` holding its own state into a SymbolSource.
template <class Fn>
class LambdaSource final : public SymbolSource {
   public:
    explicit LambdaSource(Fn fn) : fn_(std::move(fn)) {}
    Symbol next() override { return fn_(); }

   private:
    Fn fn_;
};

/// Builds a factory from a callable that returns a fresh stateful `Symbol()` generator.
template <class MakeFn>
SourceFactory make_factory(MakeFn make) {
    return [make]() -> std::unique_ptr<SymbolSource> {
        auto gen = make();
        return std::make_unique<LambdaSource<decltype(gen)>>(std::move(gen));
    };
}

/**
 * A deterministic infinite word over the alphabet [0, alphabet_size).
 *
 * The word owns a factory of fresh symbol streams and a lazily grown cache of
 * its prefix. Copies share the factory but not the cache, so two copies can be
 * consumed independently. A single object is not safe for concurrent use;
 * snapshots returned by prefix() are plain values.
 */
class InfiniteWord {
   public:
    InfiniteWord(std::size_t alphabet_size, SourceFactory factory, std::string label = {});

    InfiniteWord(const InfiniteWord& other);
    InfiniteWord& operator=(const InfiniteWord& other);
    InfiniteWord(InfiniteWord&&) noexcept;
    InfiniteWord& operator=(InfiniteWord&&) noexcept;
    ~InfiniteWord();

    std::size_t alphabet_size() const noexcept { return alphabet_size_; }
    const std::string& label() const noexcept { return label_; }
    InfiniteWord with_label(std::string label) const;

    Symbol at(std::size_t n) const;
    /// Copy of the first n symbols.
    FiniteWord prefix(std::size_t n) const;
    /// View of the first n symbols; invalidated by any later call that grows the cache.
    std::span<const Symbol> view(std::size_t n) const;

    /// A fresh stream positioned at symbol 0, independent of the cache.
    std::unique_ptr<SymbolSource> open() const { return factory_(); }
    /// Drops the materialized prefix; the next access regenerates from scratch.
    void restart() const;

   private:
    struct Cache;
    void ensure(std::size_t n) const;

    std::size_t alphabet_size_;
    SourceFactory factory_;
    std::string label_;
    mutable std::unique_ptr<Cache> cache_;
};

/// Words over [0-9a-z] written as text, one character per symbol.
FiniteWord word_from_string(std::string_view text);
std::string word_to_string(std::span<const Symbol> word);

// ---------------------------------------------------------------------------
// Generator descriptions

/// A morphism on the alphabet [0, alphabet_size) with nonempty images.
class Morphism {
   public:
    explicit Morphism(std::vector<FiniteWord> images);

    std::size_t alphabet_size() const noexcept { return images_.size(); }
    const FiniteWord& image(Symbol letter) const { return images_.at(letter); }
    const std::vector<FiniteWord>& images() const noexcept { return images_; }

    bool prolongable_on(Symbol seed) const;
    FiniteWord apply(std::span<const Symbol> word) const;
    /// sigma^n(x), fully expanded. Intended for small n only.
    FiniteWord iterate(Symbol x, std::size_t n) const;

    friend bool operator==(const Morphism&, const Morphism&) = default;

   private:
    std::vector<FiniteWord> images_;
};

enum class DigitOrder { most_significant_first, least_significant_first };

/// Deterministic finite automaton with output reading base-k digits of the index.
struct Dfao {
    std::uint32_t base = 2;
    std::uint32_t state_count = 1;
    std::uint32_t initial = 0;
    std::vector<std::uint32_t> transitions;  // state * base + digit -> state
    std::vector<Symbol> output;              // state -> symbol
    DigitOrder order = DigitOrder::most_significant_first;

    /// Throws when transitions/outputs are not total, or the initial state has no
    /// zero-loop in most-significant-first mode.
    void validate() const;
    std::uint32_t step(std::uint32_t state, std::uint32_t digit) const {
        return transitions[std::size_t{state} * base + digit];
    }
    /// Output after feeding a digit string (in reading order) from the initial state.
    Symbol evaluate(std::span<const std::uint32_t> digits) const;
    /// Output for index n: base-k digits of n in the configured order, empty for n = 0.
    Symbol evaluate_index(std::uint64_t n) const;
    std::size_t alphabet_size() const;
};

/// Parses the line-oriented DFAO text format:
///   base k / states n / initial i / trans s d s' / out s v / order msf|lsf
/// Lines starting with '#' are comments.
Dfao parse_dfao(std::string_view text);

// ---------------------------------------------------------------------------
// Word constructors

/// U V V V ...; throws when V is empty.
InfiniteWord periodic_word(FiniteWord preperiod, FiniteWord period);

/// The fixed point of sigma starting with seed, optionally mapped letterwise by coding.
/// Throws Error("not prolongable") unless sigma(seed) = seed x with x nonempty.
InfiniteWord morphic_fixed_point(const Morphism& sigma, Symbol seed,
                                 std::optional<FiniteWord> coding = std::nullopt);

InfiniteWord automatic_word(const Dfao& automaton);

/// c_n = 1 iff the base-3 expansion of n has no digit 1.
InfiniteWord cantor_word();

/// a_n = floor((n+1) alpha) - floor(n alpha).
InfiniteWord rotation_word(const QuadraticIrrational& alpha);

/// Base-b digits of 0, 1, 2, ... concatenated, one digit per symbol.
InfiniteWord champernowne_word(std::uint32_t base);

/// Termwise sum in `field` of two words whose symbols are element indices.
InfiniteWord word_pointwise_add(const InfiniteWord& a, const InfiniteWord& b, const FieldSpec& field);

/// Termwise product in `field`.
InfiniteWord word_pointwise_mul(const InfiniteWord& a, const InfiniteWord& b, const FieldSpec& field);

/// Applies `fn` to every symbol; the result has the given alphabet size.
InfiniteWord map_word(const InfiniteWord& a, std::size_t alphabet_size, std::function<Symbol(Symbol)> fn,
                      std::string label = {});

/// |sigma^n(x)| from the n-th power of the incidence matrix.
BigInt morphism_growth(const Morphism& sigma, Symbol x, std::uint64_t n);

}  // namespace subword
