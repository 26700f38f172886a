#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ucycle {

// A rotation bit selects which cycle acts next on the one-line notation:
// 0 applies the full rotation sigma_n, 1 applies sigma_{n-1}.
using Bit = std::uint8_t;

// Cap for operations that materialize all n! symbols at once.
inline constexpr int kDefaultMaterializeCap = 12;

// Streaming generators count emitted symbols in 64 bits; 20! is the last
// factorial that fits.
inline constexpr int kMaxStreamOrder = 20;

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

inline void require_order(int n) {
    if (n < 2)
        throw std::invalid_argument("order must be at least 2, got " +
                                    std::to_string(n));
    if (n > kMaxStreamOrder)
        throw std::invalid_argument("order " + std::to_string(n) +
                                    " exceeds 64-bit symbol counting");
}

inline void require_materializable(int n, int cap) {
    require_order(n);
    if (n > cap)
        throw std::length_error("refusing to materialize " + std::to_string(n) +
                                "! symbols (cap is n = " + std::to_string(cap) +
                                ")");
}

// Rotation length selected by a bit: 0 -> n, 1 -> n-1.
inline int bit_to_rotation(Bit b, int n) { return b ? n - 1 : n; }

// Ground-truth construction of S_n.  S_2 = 00; S_{n+1} is obtained by
// writing 00 1^{n-2} followed by the flipped i-th bit of S_n, for every
// bit of S_n in order.
inline std::vector<Bit> build_s_recursive(int n,
                                          int cap = kDefaultMaterializeCap) {
    require_materializable(n, cap);
    std::vector<Bit> s = {0, 0};
    for (int m = 2; m < n; ++m) {
        std::vector<Bit> next;
        next.reserve(factorial(m + 1));
        for (Bit x : s) {
            next.push_back(0);
            next.push_back(0);
            for (int i = 0; i < m - 2; ++i) next.push_back(1);
            next.push_back(static_cast<Bit>(1 - x));
        }
        s = std::move(next);
    }
    return s;
}

// R_2 = 11; R_{n+1} prefixes n copies of the value n before every entry
// of R_n.  Entry i is the most significant position that changes at step
// i of counting in multi-radix base 2x3x...xn (positions numbered from
// the left).
inline std::vector<int> build_r_recursive(int n,
                                          int cap = kDefaultMaterializeCap) {
    require_materializable(n, cap);
    std::vector<int> r = {1, 1};
    for (int m = 2; m < n; ++m) {
        std::vector<int> next;
        next.reserve(factorial(m + 1));
        for (int y : r) {
            for (int i = 0; i < m; ++i) next.push_back(m);
            next.push_back(y);
        }
        r = std::move(next);
    }
    return r;
}

// Emits S_n by counting in multi-radix base 2x3x...xn.  Digit a_j ranges
// over [0, n-j]; j is the lowest index not at its maximum.  Amortized
// O(1) work per bit, worst case O(n) at carry chains.
//
// The output expression is [j odd XOR a_j <= 1].  With the parity
// flipped ([j even XOR ...]) the stream is the bitwise complement of
// S_n; that variant stays selectable so tests can demonstrate it.
class CountingStream {
public:
    struct Step {
        Bit bit;
        int position;  // the R_n entry for this step
    };

    explicit CountingStream(int n, bool complemented_parity = false)
        : complemented_(complemented_parity) {
        require_order(n);
        n_ = n;
        total_ = factorial(n);
        a_.assign(static_cast<std::size_t>(n) + 2, 0);
    }

    int order() const { return n_; }
    std::uint64_t size() const { return total_; }
    bool done() const { return emitted_ == total_; }

    Step next_step() {
        int j = 1;
        while (a_[static_cast<std::size_t>(j)] == n_ - j) {
            a_[static_cast<std::size_t>(j)] = 0;
            ++j;
        }
        bool low = a_[static_cast<std::size_t>(j)] <= 1;
        bool odd = (j & 1) != 0;
        Bit out = static_cast<Bit>(complemented_ ? (odd == low) : (odd != low));
        ++a_[static_cast<std::size_t>(j)];
        ++emitted_;
        // The final step wraps the whole counter; its change position is
        // the leftmost digit.
        int pos = n_ - (j < n_ - 1 ? j : n_ - 1);
        return {out, pos};
    }

    Bit next() { return next_step().bit; }

private:
    int n_ = 0;
    bool complemented_ = false;
    std::vector<int> a_;  // digits, 1-based, sentinels at n and n+1
    std::uint64_t total_ = 0;
    std::uint64_t emitted_ = 0;
};

// Loopless generator for S_n: a fixed number of primitive operations
// between successive bits, independent of n.  Digits a follow the
// multi-radix Gray code, d holds the per-digit directions, and the focus
// pointers f locate the next digit to change without scanning.
class LooplessStream {
public:
    explicit LooplessStream(int n) {
        require_order(n);
        n_ = n;
        total_ = factorial(n);
        a_.assign(static_cast<std::size_t>(n) + 3, 0);
        d_.assign(static_cast<std::size_t>(n) + 3, 1);
        f_.assign(static_cast<std::size_t>(n) + 3, 0);
        for (int j = 1; j < n; ++j) f_[static_cast<std::size_t>(j)] = j;
        // f_n = n+1 so the final iteration runs to completion.
        f_[static_cast<std::size_t>(n)] = n + 1;
    }

    int order() const { return n_; }
    std::uint64_t size() const { return total_; }
    bool done() const { return emitted_ == total_; }

    Bit next() { return advance(nullptr); }

protected:
    // When ops is non-null it receives the number of counted primitive
    // operations (array reads/writes, additions/subtractions,
    // comparisons, the parity test) executed for this bit.
    Bit advance(unsigned* ops) {
        unsigned c = 0;
        int j = f_[1];
        c += 1;  // read f[1]
        f_[1] = 1;
        c += 1;  // write f[1]
        auto uj = static_cast<std::size_t>(j);
        int probe = a_[uj] - d_[uj];
        c += 3;  // two reads, one subtraction
        bool low = probe <= 0;
        c += 1;
        bool high = probe >= n_ - j;
        c += 2;  // subtraction, comparison
        bool odd = (j & 1) != 0;
        c += 1;  // parity test
        Bit out = static_cast<Bit>(odd != (low || high));
        c += 2;  // or, xor
        a_[uj] += d_[uj];
        c += 4;  // two reads, addition, write
        bool at_min = a_[uj] == 0;
        c += 2;  // read, comparison
        bool at_max = false;
        if (!at_min) {
            at_max = a_[uj] == n_ - j;
            c += 3;  // read, subtraction, comparison
        }
        if (at_min || at_max) {
            d_[uj] = -d_[uj];
            c += 3;  // read, negation, write
            f_[uj] = f_[uj + 1];
            c += 2;  // read, write
            f_[uj + 1] = j + 1;
            c += 2;  // addition, write
        }
        c += 1;  // termination test j >= n
        ++emitted_;
        if (ops) *ops = c;
        return out;
    }

private:
    int n_ = 0;
    std::vector<int> a_;  // digits, 1-based, sentinels past n
    std::vector<int> d_;  // directions in {+1, -1}
    std::vector<int> f_;  // focus pointers
    std::uint64_t total_ = 0;
    std::uint64_t emitted_ = 0;
};

// Same bits as LooplessStream, plus the per-bit primitive-operation
// count.  The maximum over a full run is a constant independent of n.
class InstrumentedLooplessStream : private LooplessStream {
public:
    struct Sample {
        Bit bit;
        unsigned ops;
    };

    explicit InstrumentedLooplessStream(int n) : LooplessStream(n) {}

    using LooplessStream::done;
    using LooplessStream::order;
    using LooplessStream::size;

    Sample next() {
        unsigned ops = 0;
        Bit b = advance(&ops);
        return {b, ops};
    }
};

}  // namespace ucycle
