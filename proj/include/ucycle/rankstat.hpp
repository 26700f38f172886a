#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "ucycle/permstream.hpp"

namespace ucycle {

// Exact arbitrary-precision natural; rank values live in [0, n!-1].
using Natural = boost::multiprecision::cpp_int;

inline Natural factorial_exact(int n) {
    Natural f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

namespace detail {

// rank(alpha m beta) where m is the maximum value in the sequence:
//   0                                   if alpha = beta = empty
//   m * rank(beta)                      if alpha = empty
//   m - |alpha| + m * rank(rot(beta) alpha)  otherwise,
// rot(beta) rotating beta one position to the right.  Sub-calls receive
// permutations of [m-1] after the maximum is dropped.
inline Natural rank_rec(const std::vector<int>& seq) {
    int m = static_cast<int>(seq.size());
    if (m == 1) return 0;
    auto it = std::max_element(seq.begin(), seq.end());
    int k = static_cast<int>(it - seq.begin());
    if (k == 0) {
        std::vector<int> beta(seq.begin() + 1, seq.end());
        return m * rank_rec(beta);
    }
    std::vector<int> arg;
    arg.reserve(static_cast<std::size_t>(m) - 1);
    // rot(beta): last element of beta first
    if (k + 1 < m) {
        arg.push_back(seq.back());
        arg.insert(arg.end(), seq.begin() + k + 1, seq.end() - 1);
    }
    arg.insert(arg.end(), seq.begin(), seq.begin() + k);
    return (m - k) + m * rank_rec(arg);
}

}  // namespace detail

// Position of p in the circular list Pi(m), m = length of p.
// O(m^2) symbol operations, recursion depth m.
inline Natural rank(const Perm& p) {
    require_permutation(p);
    return detail::rank_rec(p);
}

// Inverse of rank: returns Pi(n)_r.
inline Perm unrank(int n, const Natural& r) {
    if (n < 1) throw std::invalid_argument("order must be at least 1");
    if (r < 0 || r >= factorial_exact(n))
        throw std::out_of_range("rank out of [0, n!-1]");
    if (n == 1) return {1};
    int i = static_cast<int>(r % n);
    Perm b = unrank(n - 1, r / n);
    Perm out;
    out.reserve(static_cast<std::size_t>(n));
    if (i == 0) {
        out.push_back(n);
        out.insert(out.end(), b.begin(), b.end());
    } else if (i == 1) {
        out = b;
        out.push_back(n);
    } else {
        out.insert(out.end(), b.begin() + (i - 1), b.end());
        out.push_back(n);
        out.insert(out.end(), b.begin() + 1, b.begin() + (i - 1));
        out.push_back(b.front());
    }
    return out;
}

// f_n, the number of sigma_n steps in phi(S_n):
// f_1 = 1, f_2 = 2, f_{n+1} = 3*n! - f_n for n > 1.
inline Natural sigma_n_count(int n) {
    if (n < 1) throw std::invalid_argument("order must be at least 1");
    if (n == 1) return 1;
    Natural f = 2;
    for (int k = 2; k < n; ++k) f = 3 * factorial_exact(k) - f;
    return f;
}

// Lower bound on sigma_n edges over all Hamilton cycles: 2n(n-2)! - 2.
inline Natural min_sigma_edges(int n) {
    if (n < 3) throw std::invalid_argument("bound requires n >= 3");
    return 2 * n * factorial_exact(n - 2) - 2;
}

}  // namespace ucycle
