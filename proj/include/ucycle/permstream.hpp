#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucycle/seqcore.hpp"

namespace ucycle {

// One-line notation: a permutation of {1..m} as the sequence of its
// values.
using Perm = std::vector<int>;

inline bool is_valid_permutation(const Perm& p) {
    int m = static_cast<int>(p.size());
    if (m == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
    for (int s : p) {
        if (s < 1 || s > m || seen[static_cast<std::size_t>(s)]) return false;
        seen[static_cast<std::size_t>(s)] = true;
    }
    return true;
}

inline void require_permutation(const Perm& p) {
    if (!is_valid_permutation(p))
        throw std::invalid_argument("not a permutation of {1..m}");
}

// sigma_k acting on positions: left-rotate the first k entries by one,
// so the symbol in position 1 moves to position k.
inline Perm apply_rotation(const Perm& p, int k) {
    if (k < 2 || k > static_cast<int>(p.size()))
        throw std::invalid_argument("rotation length out of range");
    Perm q(p);
    std::rotate(q.begin(), q.begin() + 1, q.begin() + k);
    return q;
}

// Current permutation as a fixed backing array of n symbols plus the
// index t of its last element; a rotation step costs O(1).
class CircularWindow {
public:
    explicit CircularWindow(int n) {
        require_order(n);
        backing_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            backing_[static_cast<std::size_t>(i)] = n - i;
        t_ = n - 1;
    }

    int order() const { return static_cast<int>(backing_.size()); }

    // Emit the first symbol of the current window, then advance; a 1-bit
    // swaps the two symbols that have become last.  Afterwards the
    // window equals apply_rotation(old window, bit_to_rotation(b, n)).
    int step(Bit b) {
        int n = order();
        int out = backing_[static_cast<std::size_t>((t_ + 1) % n)];
        int prev = t_;
        t_ = (t_ + 1) % n;
        if (b)
            std::swap(backing_[static_cast<std::size_t>(t_)],
                      backing_[static_cast<std::size_t>(prev)]);
        return out;
    }

    Perm window() const {
        int n = order();
        Perm p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            p[static_cast<std::size_t>(i)] =
                backing_[static_cast<std::size_t>((t_ + 1 + i) % n)];
        return p;
    }

private:
    std::vector<int> backing_;
    int t_ = 0;
};

// Streams the universal cycle U_n by feeding rotation bits into the
// circular window: one bit consumed per symbol emitted, O(n) space.
template <class BitStream>
class UcycleStream {
public:
    UcycleStream(int n, BitStream bits)
        : bits_(std::move(bits)), win_(n) {}

    bool done() const { return bits_.done(); }
    int next() { return win_.step(bits_.next()); }
    const CircularWindow& window() const { return win_; }

private:
    BitStream bits_;
    CircularWindow win_;
};

template <class BitStream>
UcycleStream(int, BitStream) -> UcycleStream<BitStream>;

// The explicit circular list Pi(n) of all n! permutations, built
// directly from its recursion: every n-th entry prepends n to an entry
// of Pi(n-1); the n-1 entries after n.pi are sigma_n(n.pi),
// sigma_n^2(n.pi), then sigma_{n-1} applied n-3 more times.  Independent
// of the bit generators, so it serves as a cross-check oracle.
inline std::vector<Perm> pi_list(int n, int cap = kDefaultMaterializeCap) {
    require_materializable(n, cap);
    if (n == 2) return {{2, 1}, {1, 2}};
    std::vector<Perm> prev = pi_list(n - 1, cap);
    std::vector<Perm> out;
    out.reserve(factorial(n));
    for (const Perm& pi : prev) {
        Perm base;
        base.reserve(static_cast<std::size_t>(n));
        base.push_back(n);
        base.insert(base.end(), pi.begin(), pi.end());
        out.push_back(base);
        Perm cur = apply_rotation(base, n);
        out.push_back(cur);
        cur = apply_rotation(cur, n);
        out.push_back(cur);
        for (int s = 0; s < n - 3; ++s) {
            cur = apply_rotation(cur, n - 1);
            out.push_back(cur);
        }
    }
    return out;
}

// The flattening of Pi(n): all permutations concatenated into one
// circular string of n * n! symbols.
inline std::vector<int> flatten(int n, int cap = kDefaultMaterializeCap) {
    std::vector<Perm> perms = pi_list(n, cap);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n) * factorial(n));
    for (const Perm& p : perms) out.insert(out.end(), p.begin(), p.end());
    return out;
}

// The unique element of [n] absent from an (n-1)-window.
inline int missing_symbol(const std::vector<int>& window) {
    int n = static_cast<int>(window.size()) + 1;
    if (n < 2 || n > 31)
        throw std::invalid_argument("window length out of range");
    std::uint32_t seen = 0;
    for (int s : window) {
        if (s < 1 || s > n)
            throw std::invalid_argument("window symbol out of range");
        if (seen & (1u << s))
            throw std::invalid_argument("window repeats a symbol");
        seen |= 1u << s;
    }
    for (int s = 1; s <= n; ++s)
        if (!(seen & (1u << s))) return s;
    throw std::logic_error("unreachable");  // n-1 distinct symbols leave one
}

// Completes every circular (n-1)-window of a shorthand universal cycle
// with its missing symbol, returning the n! permutations in cycle order.
// Rejects inputs whose windows are invalid or repeat.
inline std::vector<Perm> expand_shorthand(const std::vector<int>& u, int n) {
    require_order(n);
    std::uint64_t len = factorial(n);
    if (u.size() != len)
        throw std::invalid_argument("universal cycle must have length n!");
    std::vector<Perm> out;
    out.reserve(len);
    std::set<std::vector<int>> seen;
    for (std::uint64_t i = 0; i < len; ++i) {
        std::vector<int> w(static_cast<std::size_t>(n) - 1);
        for (int k = 0; k < n - 1; ++k)
            w[static_cast<std::size_t>(k)] =
                u[(i + static_cast<std::uint64_t>(k)) % len];
        if (!seen.insert(w).second)
            throw std::invalid_argument("window repeats at position " +
                                        std::to_string(i));
        int missing = missing_symbol(w);
        w.push_back(missing);
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace ucycle
