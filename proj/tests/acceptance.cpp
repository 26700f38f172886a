// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <new>
#include <string>
#include <vector>

#include "ucycle/graphoracle.hpp"
#include "ucycle/rankstat.hpp"

using namespace ucycle;

// ---- allocation accounting (criterion 10: streaming memory) ----------

namespace {
std::size_t g_live_bytes = 0;
std::size_t g_peak_bytes = 0;
bool g_tracking = false;
}  // namespace

// 16-byte header keeps the returned storage default-aligned
constexpr std::size_t kHeader = alignof(std::max_align_t);

void* operator new(std::size_t size) {
    void* p = std::malloc(size + kHeader);
    if (!p) throw std::bad_alloc();
    *static_cast<std::size_t*>(p) = size;
    if (g_tracking) {
        g_live_bytes += size;
        g_peak_bytes = std::max(g_peak_bytes, g_live_bytes);
    }
    return static_cast<char*>(p) + kHeader;
}

void operator delete(void* p) noexcept {
    if (!p) return;
    void* base = static_cast<char*>(p) - kHeader;
    if (g_tracking) {
        std::size_t size = *static_cast<std::size_t*>(base);
        g_live_bytes -= std::min(g_live_bytes, size);
    }
    std::free(base);
}

void operator delete(void* p, std::size_t) noexcept { operator delete(p); }

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool ok,
            const std::string& detail = "") {
    std::printf("%s  criterion %2d: %s%s%s\n", ok ? "PASS" : "FAIL",
                criterion, name.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!ok) ++g_failures;
}

std::vector<Bit> collect_counting(int n) {
    CountingStream s(n);
    std::vector<Bit> out;
    out.reserve(s.size());
    while (!s.done()) out.push_back(s.next());
    return out;
}

std::vector<Bit> collect_loopless(int n) {
    LooplessStream s(n);
    std::vector<Bit> out;
    out.reserve(s.size());
    while (!s.done()) out.push_back(s.next());
    return out;
}

Perm perm_of(const char* digits) {
    Perm p;
    for (const char* c = digits; *c; ++c) p.push_back(*c - '0');
    return p;
}

// 1. counting_stream(n) and loopless_stream(n) equal build_s_recursive(n)
//    bit-exactly for n in 2..8.
void criterion_bit_exact() {
    bool ok = true;
    for (int n = 2; n <= 8 && ok; ++n) {
        auto truth = build_s_recursive(n);
        ok = collect_counting(n) == truth && collect_loopless(n) == truth;
    }
    report(1, "counting and loopless streams equal S_n for n in 2..8", ok);
}

// 2. Bit-exact reproduction of the n = 4 reference table: R_4, S_4,
//    Pi(4), U_4 and the rank column, all 24 rows.
void criterion_table() {
    const std::vector<int> r4 = {3, 3, 3, 2, 3, 3, 3, 2, 3, 3, 3, 1,
                                 3, 3, 3, 2, 3, 3, 3, 2, 3, 3, 3, 1};
    const char* s4 = "001100110010001100110010";
    const char* pi4[] = {"4321", "3214", "2143", "1423", "4213", "2134",
                         "1342", "3412", "4132", "1324", "3241", "2431",
                         "4312", "3124", "1243", "2413", "4123", "1234",
                         "2341", "3421", "4231", "2314", "3142", "1432"};
    const std::vector<int> u4 = {4, 3, 2, 1, 4, 2, 1, 3, 4, 1, 3, 2,
                                 4, 3, 1, 2, 4, 1, 2, 3, 4, 2, 3, 1};
    bool ok = build_r_recursive(4) == r4;
    auto bits = build_s_recursive(4);
    std::string bit_str;
    for (Bit b : bits) bit_str += static_cast<char>('0' + b);
    ok = ok && bit_str == s4;
    auto perms = pi_list(4);
    ok = ok && perms.size() == 24;
    for (std::size_t i = 0; ok && i < 24; ++i) {
        ok = perms[i] == perm_of(pi4[i]) && rank(perms[i]) == i;
    }
    UcycleStream stream(4, LooplessStream(4));
    std::vector<int> u;
    while (!stream.done()) u.push_back(stream.next());
    ok = ok && u == u4;
    report(2, "n = 4 reference table (R_4, S_4, Pi(4), U_4, ranks)", ok);
}

// 3. validate_hamilton(S_n, n) passes for n in 2..8.
void criterion_hamilton() {
    bool ok = true;
    for (int n = 2; n <= 8 && ok; ++n)
        ok = validate_hamilton(build_s_recursive(n), n).ok();
    report(3, "phi(S_n) is a Hamilton cycle for n in 2..8", ok);
}

// 4. verify_universal(U_n, n) passes for n in 2..8.
void criterion_universal() {
    bool ok = true;
    for (int n = 2; n <= 8 && ok; ++n) {
        UcycleStream stream(n, LooplessStream(n));
        std::vector<int> u;
        while (!stream.done()) u.push_back(stream.next());
        ok = verify_universal(u, n).ok;
    }
    report(4, "U_n is a universal cycle for n in 2..8", ok);
}

// 5. Ranking round trips: rank(pi_list(n)[r]) = r for n in 2..7, the
//    three frozen table ranks, and unrank inverses exhaustively.
void criterion_ranking() {
    bool ok = rank(perm_of("4321")) == 0 && rank(perm_of("2431")) == 11 &&
              rank(perm_of("1432")) == 23;
    for (int n = 2; n <= 7 && ok; ++n) {
        auto perms = pi_list(n);
        for (std::size_t r = 0; ok && r < perms.size(); ++r)
            ok = rank(perms[r]) == r && unrank(n, r) == perms[r] &&
                 rank(unrank(n, r)) == r;
    }
    report(5, "ranking and unranking are exact for n in 2..7", ok);
}

// 6. f_n values for n = 1..10 and agreement with the 0-bit count of S_n.
void criterion_fn() {
    const long long expected[] = {1,    2,     4,      14,     58,
                                  302,  1858,  13262,  107698, 980942};
    bool ok = true;
    for (int n = 1; n <= 10 && ok; ++n)
        ok = sigma_n_count(n) == expected[n - 1];
    for (int n = 2; n <= 10 && ok; ++n) {
        auto s = build_s_recursive(n);
        std::uint64_t zeros = 0;
        for (Bit b : s)
            if (b == 0) ++zeros;
        ok = sigma_n_count(n) == zeros;
    }
    report(6, "f_n values for n = 1..10 match and equal S_n zero counts", ok);
}

// 7. Brute-force minimum sigma_n edge counts at n = 3, 4 match
//    2n(n-2)!-2.
void criterion_bruteforce() {
    auto r3 = min_hamilton_sigma_edges_bruteforce(3);
    auto r4 = min_hamilton_sigma_edges_bruteforce(4);
    bool ok = r3.conclusive && r3.min_sigma_edges == 4 && r4.conclusive &&
              r4.min_sigma_edges == 14 && min_sigma_edges(3) == 4 &&
              min_sigma_edges(4) == 14;
    report(7, "brute-force minimum sigma_n edges equals 2n(n-2)!-2", ok);
}

// 8. S_n's sigma_n edges span Q_n as a tree for n = 4, 5 but not n = 6.
void criterion_spanning() {
    bool ok = sigma_edges_spanning_check(4).is_tree &&
              sigma_edges_spanning_check(5).is_tree &&
              !sigma_edges_spanning_check(6).is_tree;
    report(8, "sigma_n edges form a spanning tree iff n < 6", ok);
}

// 9. Multiversality and the shift lemma for n in 3..7; the n = 3 offset
//    table is reproduced verbatim.
void criterion_multiversal() {
    bool ok = true;
    for (int n = 3; n <= 7 && ok; ++n) {
        auto flat = flatten(n);
        ok = verify_multiversal(flat, n).ok && check_shift_lemma(flat, n).ok;
    }
    auto flat3 = flatten(3);
    auto expect = std::vector<std::vector<std::vector<int>>>{
        {{3, 2}, {2, 1}, {1, 3}, {3, 1}, {1, 2}, {2, 3}},
        {{2, 1}, {1, 3}, {3, 2}, {1, 2}, {2, 3}, {3, 1}},
        {{1, 2}, {3, 1}, {2, 3}, {2, 1}, {3, 2}, {1, 3}}};
    for (int m = 0; m < 3 && ok; ++m)
        ok = offset_class_windows(flat3, 3, m) ==
             expect[static_cast<std::size_t>(m)];
    report(9, "flatten(n) is multiversal and shift-invariant for n in 3..7",
           ok);
}

// 10. Loopless property: max per-bit primitive-operation count is the
//     same constant for n in {4, 6, 8, 10, 12}, and streaming memory
//     grows at most linearly (measured at n = 8 vs n = 12).
void criterion_loopless() {
    bool ok = true;
    unsigned reference = 0;
    for (int n : {4, 6, 8, 10, 12}) {
        InstrumentedLooplessStream s(n);
        unsigned max_ops = 0;
        while (!s.done()) max_ops = std::max(max_ops, s.next().ops);
        if (reference == 0)
            reference = max_ops;
        else
            ok = ok && max_ops == reference;
    }

    auto streaming_peak = [](int n) {
        g_live_bytes = 0;
        g_peak_bytes = 0;
        g_tracking = true;
        {
            UcycleStream stream(n, LooplessStream(n));
            for (int i = 0; i < 100000 && !stream.done(); ++i) stream.next();
        }
        g_tracking = false;
        return g_peak_bytes;
    };
    std::size_t peak8 = streaming_peak(8);
    std::size_t peak12 = streaming_peak(12);
    // four int arrays grow by one slot per unit of n; allow headroom
    ok = ok && peak12 >= peak8 && peak12 - peak8 <= 1024 &&
         peak12 <= 16 * 1024;
    report(10, "loopless op count is n-independent; memory grows linearly",
           ok,
           "max ops = " + std::to_string(reference) +
               ", peak bytes n=8: " + std::to_string(peak8) +
               ", n=12: " + std::to_string(peak12));
}

// 11. Q_4 has the 3-cube fingerprint: 8 supervertices, 3-regular,
//     diameter 3.
void criterion_q4() {
    auto q4 = build_coset_graph(4);
    bool ok = q4.coset_count == 8;
    for (const auto& nbrs : q4.adj) ok = ok && nbrs.size() == 3;
    ok = ok && coset_graph_diameter(q4) == 3;
    report(11, "Q_4 is the 3-cube (8 vertices, 3-regular, diameter 3)", ok);
}

// 12. Executable erratum demonstration: the complemented output parity
//     emits the bitwise complement of S_3.
void criterion_erratum() {
    CountingStream flipped(3, /*complemented_parity=*/true);
    std::string bits;
    while (!flipped.done())
        bits += static_cast<char>('0' + flipped.next());
    bool ok = bits == "110110";
    auto truth = build_s_recursive(3);
    for (std::size_t i = 0; ok && i < truth.size(); ++i)
        ok = (bits[i] - '0') == 1 - truth[i];
    report(12, "the [j even ...] parity emits the complement of S_3", ok,
           "complemented stream gives " + bits + ", S_3 = 001001");
}

}  // namespace

int main() {
    criterion_bit_exact();
    criterion_table();
    criterion_hamilton();
    criterion_universal();
    criterion_ranking();
    criterion_fn();
    criterion_bruteforce();
    criterion_spanning();
    criterion_multiversal();
    criterion_loopless();
    criterion_q4();
    criterion_erratum();
    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all 12 criteria passed\n");
    return 0;
}
