#include "subword/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace subword {

std::string engine_name(Engine engine) { return engine == Engine::naive ? "naive" : "fast"; }

Engine parse_engine(std::string_view name) {
    if (name == "naive") return Engine::naive;
    if (name == "fast") return Engine::fast;
    throw Error("unknown engine '" + std::string(name) + "' (expected naive or fast)");
}

namespace {

void check_request(std::size_t n, std::size_t max_length) {
    if (max_length > n)
        throw Error("max length " + std::to_string(max_length) + " exceeds prefix length " + std::to_string(n));
}

/// Maps the symbols of `word` onto [0, sigma) preserving order; returns sigma.
std::uint32_t densify(std::span<const Symbol> word, std::vector<std::uint32_t>& out) {
    Symbol top = 0;
    for (auto x : word) top = std::max(top, x);
    std::vector<std::uint32_t> rank(std::size_t{top} + 1, 0);
    for (auto x : word) rank[x] = 1;
    std::uint32_t sigma = 0;
    for (auto& r : rank) r = r ? sigma++ : 0;
    out.resize(word.size());
    for (std::size_t i = 0; i < word.size(); ++i) out[i] = rank[word[i]];
    return sigma;
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        if (r > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(base, 1)) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        r *= base;
    }
    return r;
}

// Suffix automaton with transitions stored densely (state * sigma + letter).
class DenseTransitions {
   public:
    explicit DenseTransitions(std::uint32_t sigma) : sigma_(sigma) {}
    void reserve(std::size_t states) { next_.reserve(states * sigma_); }
    void add_state() { next_.resize(next_.size() + sigma_, -1); }
    std::int32_t get(std::int32_t v, std::uint32_t c) const { return next_[std::size_t(v) * sigma_ + c]; }
    void set(std::int32_t v, std::uint32_t c, std::int32_t t) { next_[std::size_t(v) * sigma_ + c] = t; }
    void copy(std::int32_t from, std::int32_t to) {
        std::memcpy(&next_[std::size_t(to) * sigma_], &next_[std::size_t(from) * sigma_],
                    sigma_ * sizeof(std::int32_t));
    }

   private:
    std::uint32_t sigma_;
    std::vector<std::int32_t> next_;
};

// Transitions as per-state linked edge lists in a shared pool, for large alphabets.
class SparseTransitions {
   public:
    explicit SparseTransitions(std::uint32_t) {}
    void reserve(std::size_t states) {
        head_.reserve(states);
        edges_.reserve(states * 2);
    }
    void add_state() { head_.push_back(-1); }
    std::int32_t get(std::int32_t v, std::uint32_t c) const {
        for (auto e = head_[v]; e >= 0; e = edges_[e].next)
            if (edges_[e].label == c) return edges_[e].target;
        return -1;
    }
    void set(std::int32_t v, std::uint32_t c, std::int32_t t) {
        for (auto e = head_[v]; e >= 0; e = edges_[e].next) {
            if (edges_[e].label == c) {
                edges_[e].target = t;
                return;
            }
        }
        edges_.push_back({c, t, head_[v]});
        head_[v] = static_cast<std::int32_t>(edges_.size() - 1);
    }
    void copy(std::int32_t from, std::int32_t to) {
        for (auto e = head_[from]; e >= 0; e = edges_[e].next) set(to, edges_[e].label, edges_[e].target);
    }

   private:
    struct Edge {
        std::uint32_t label;
        std::int32_t target;
        std::int32_t next;
    };
    std::vector<std::int32_t> head_;
    std::vector<Edge> edges_;
};

template <class Transitions>
std::vector<std::uint64_t> sam_counts(const std::vector<std::uint32_t>& word, std::uint32_t sigma,
                                      std::size_t max_length) {
    const std::size_t cap = 2 * word.size() + 2;
    Transitions next(sigma);
    next.reserve(cap);
    std::vector<std::int32_t> len;
    std::vector<std::int32_t> link;
    len.reserve(cap);
    link.reserve(cap);
    auto new_state = [&](std::int32_t l, std::int32_t lk) {
        len.push_back(l);
        link.push_back(lk);
        next.add_state();
        return static_cast<std::int32_t>(len.size() - 1);
    };
    std::int32_t last = new_state(0, -1);
    for (auto c : word) {
        const std::int32_t cur = new_state(len[last] + 1, 0);
        std::int32_t p = last;
        while (p >= 0 && next.get(p, c) < 0) {
            next.set(p, c, cur);
            p = link[p];
        }
        if (p >= 0) {
            const std::int32_t q = next.get(p, c);
            if (len[p] + 1 == len[q]) {
                link[cur] = q;
            } else {
                const std::int32_t clone = new_state(len[p] + 1, link[q]);
                next.copy(q, clone);
                while (p >= 0 && next.get(p, c) == q) {
                    next.set(p, c, clone);
                    p = link[p];
                }
                link[q] = clone;
                link[cur] = clone;
            }
        }
        last = cur;
    }
    // Each non-root state represents one factor of every length in (len(link), len].
    std::vector<std::int64_t> diff(max_length + 2, 0);
    for (std::size_t v = 1; v < len.size(); ++v) {
        const auto lo = static_cast<std::size_t>(len[link[v]]) + 1;
        const auto hi = std::min(static_cast<std::size_t>(len[v]), max_length);
        if (lo > hi) continue;
        diff[lo] += 1;
        diff[hi + 1] -= 1;
    }
    std::vector<std::uint64_t> counts(max_length);
    std::int64_t run = 0;
    for (std::size_t m = 1; m <= max_length; ++m) {
        run += diff[m];
        counts[m - 1] = static_cast<std::uint64_t>(run);
    }
    return counts;
}

}  // namespace

void ComplexityProfile::check_invariants(std::size_t sigma) const {
    const std::size_t n = prefix_length;
    const std::size_t top = counts.size();
    auto fail = [](const std::string& what) { throw Error("complexity invariant violated: " + what); };
    if (max_length != top) fail("profile length mismatch");
    if (top > n) fail("M exceeds N");
    for (std::size_t m = 1; m <= top; ++m) {
        const auto pm = p(m);
        const std::uint64_t bound = std::min<std::uint64_t>(n - m + 1, saturating_pow(sigma, m));
        if (pm < 1 || pm > bound) fail("1 <= p(" + std::to_string(m) + ") <= min(N-m+1, sigma^m)");
        if (m < top) {
            if (pm > p(m + 1) + 1) fail("p(" + std::to_string(m) + ") <= p(m+1)+1");
            if (p(m + 1) > sigma * pm) fail("p(" + std::to_string(m + 1) + ") <= sigma p(m)");
        }
    }
    for (std::size_t m = 1; m <= top; ++m)
        for (std::size_t k = 1; m + k <= top; ++k) {
            const auto prod = static_cast<unsigned __int128>(p(m)) * p(k);
            if (p(m + k) > prod)
                fail("p(" + std::to_string(m + k) + ") <= p(" + std::to_string(m) + ") p(" + std::to_string(k) + ")");
        }
}

ComplexityProfile profile_naive(std::span<const Symbol> prefix, std::size_t max_length) {
    const std::size_t n = prefix.size();
    check_request(n, max_length);
    ComplexityProfile out{n, max_length, {}, {}, Engine::naive};
    out.counts.reserve(max_length);
    if (max_length == 0) return out;

    std::vector<std::uint32_t> word;
    const std::uint32_t sigma = densify(prefix, word);
    // ids[i] identifies the window of the current length starting at i.
    std::vector<std::uint32_t> ids(word);
    std::vector<std::uint8_t> seen(sigma, 0);
    std::uint64_t count = 0;
    for (auto x : word) {
        if (seen[x]) continue;
        seen[x] = 1;
        ++count;
    }
    out.counts.push_back(count);

    std::vector<std::uint32_t> table;
    std::unordered_map<std::uint64_t, std::uint32_t> sparse;
    for (std::size_t m = 2; m <= max_length; ++m) {
        const std::size_t windows = n - m + 1;
        if (count == windows + 1) {
            // All windows of length m-1 were distinct, hence so are all longer ones.
            for (; m <= max_length; ++m) out.counts.push_back(n - m + 1);
            break;
        }
        const std::uint64_t keys = count * sigma;
        std::uint32_t fresh = 0;
        if (keys <= 4 * n + 1024) {
            table.assign(keys, std::numeric_limits<std::uint32_t>::max());
            for (std::size_t i = 0; i < windows; ++i) {
                auto& slot = table[std::size_t{ids[i]} * sigma + word[i + m - 1]];
                if (slot == std::numeric_limits<std::uint32_t>::max()) slot = fresh++;
                ids[i] = slot;
            }
        } else {
            sparse.clear();
            for (std::size_t i = 0; i < windows; ++i) {
                const std::uint64_t key = std::uint64_t{ids[i]} * sigma + word[i + m - 1];
                auto [it, inserted] = sparse.try_emplace(key, fresh);
                if (inserted) ++fresh;
                ids[i] = it->second;
            }
        }
        count = fresh;
        out.counts.push_back(count);
    }
    return out;
}

ComplexityProfile profile_fast(std::span<const Symbol> prefix, std::size_t max_length) {
    const std::size_t n = prefix.size();
    check_request(n, max_length);
    if (n >= static_cast<std::size_t>(std::numeric_limits<std::int32_t>::max() / 2))
        throw Error("prefix too long for the suffix automaton");
    ComplexityProfile out{n, max_length, {}, {}, Engine::fast};
    if (max_length == 0) return out;
    std::vector<std::uint32_t> word;
    const std::uint32_t sigma = densify(prefix, word);
    out.counts = sigma <= 8 ? sam_counts<DenseTransitions>(word, sigma, max_length)
                            : sam_counts<SparseTransitions>(word, sigma, max_length);
    return out;
}

ComplexityProfile compute_profile(std::span<const Symbol> prefix, std::size_t max_length, Engine engine) {
    return engine == Engine::naive ? profile_naive(prefix, max_length) : profile_fast(prefix, max_length);
}

std::set<FiniteWord> factor_set(std::span<const Symbol> prefix, std::size_t m) {
    check_request(prefix.size(), m);
    std::set<FiniteWord> factors;
    for (std::size_t i = 0; i + m <= prefix.size(); ++i) factors.emplace(prefix.begin() + i, prefix.begin() + i + m);
    return factors;
}

double entropy_estimate(const ComplexityProfile& profile, std::size_t m, std::uint32_t base) {
    if (m < 1 || m > profile.max_length) throw Error("entropy length out of range");
    if (base < 2) throw Error("entropy base must be at least 2");
    return std::log(static_cast<double>(profile.p(m))) / std::log(static_cast<double>(base)) /
           static_cast<double>(m);
}

std::string MorseHedlundReport::describe() const {
    std::ostringstream s;
    if (periodicity_candidate) {
        s << "eventual-periodicity candidate at finite scale: m=" << *periodicity_candidate;
    } else {
        s << "no eventual-periodicity candidate";
    }
    s << "; p " << (strictly_increasing ? "strictly increasing" : "not strictly increasing")
      << " (prefix-level heuristic, not a proof about the infinite word)";
    return s.str();
}

MorseHedlundReport morse_hedlund_diagnostic(const ComplexityProfile& profile) {
    MorseHedlundReport r;
    for (std::size_t m = 1; m <= profile.max_length; ++m) {
        if (!r.periodicity_candidate && profile.p(m) <= m) r.periodicity_candidate = m;
        if (m > 1 && profile.p(m) <= profile.p(m - 1)) r.strictly_increasing = false;
    }
    return r;
}

}  // namespace subword
