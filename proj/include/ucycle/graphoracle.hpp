#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ucycle/permstream.hpp"

namespace ucycle {

// Lexicographic rank of a permutation, used as a dense vertex index.
inline std::uint64_t lex_rank(const Perm& p) {
    int n = static_cast<int>(p.size());
    std::uint64_t r = 0;
    for (int i = 0; i < n; ++i) {
        std::uint64_t smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[static_cast<std::size_t>(j)] <
                p[static_cast<std::size_t>(i)])
                ++smaller;
        r = r * static_cast<std::uint64_t>(n - i) + smaller;
    }
    return r;
}

inline Perm descending_perm(int n) {
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - i;
    return p;
}

// The directed Cayley graph Xi_n: vertices are all n! permutations in
// lexicographic order (index = lex_rank), with the two labeled successor
// functions.  Label 0 applies sigma_n, label 1 applies sigma_{n-1}.
struct CayleyGraph {
    int n = 0;
    std::vector<Perm> verts;
    std::vector<std::uint32_t> succ0;
    std::vector<std::uint32_t> succ1;
};

inline CayleyGraph build_cayley(int n) {
    if (n < 2 || n > 8)
        throw std::invalid_argument("cayley oracle supports 2 <= n <= 8");
    CayleyGraph g;
    g.n = n;
    std::uint64_t size = factorial(n);
    g.verts.reserve(size);
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i + 1;
    do {
        g.verts.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    g.succ0.resize(size);
    g.succ1.resize(size);
    for (std::uint64_t i = 0; i < size; ++i) {
        const Perm& v = g.verts[i];
        g.succ0[i] = static_cast<std::uint32_t>(lex_rank(apply_rotation(v, n)));
        // sigma_1 is the identity, so at n = 2 label 1 is a self-loop.
        g.succ1[i] = n >= 3 ? static_cast<std::uint32_t>(
                                  lex_rank(apply_rotation(v, n - 1)))
                            : static_cast<std::uint32_t>(i);
    }
    return g;
}

struct HamiltonReport {
    bool distinct = false;
    bool closes = false;
    std::uint64_t failure_index = 0;  // step of first revisit or failed close
    bool ok() const { return distinct && closes; }
};

// Walks phi(bits) from n n-1 ... 1 and checks that all n! permutations
// are distinct and the final transition returns to the start.
inline HamiltonReport validate_hamilton(const std::vector<Bit>& bits, int n) {
    require_order(n);
    std::uint64_t size = factorial(n);
    if (bits.size() != size)
        throw std::invalid_argument("bit sequence must have length n!");
    Perm start = descending_perm(n);
    Perm cur = start;
    std::vector<bool> visited(size, false);
    visited[lex_rank(cur)] = true;
    HamiltonReport rep;
    rep.distinct = true;
    auto apply = [n](const Perm& v, Bit b) {
        int k = bit_to_rotation(b, n);
        return k >= 2 ? apply_rotation(v, k) : v;
    };
    for (std::uint64_t i = 0; i + 1 < size; ++i) {
        cur = apply(cur, bits[i]);
        std::uint64_t idx = lex_rank(cur);
        if (visited[idx]) {
            rep.distinct = false;
            rep.failure_index = i + 1;
            return rep;
        }
        visited[idx] = true;
    }
    cur = apply(cur, bits.back());
    rep.closes = cur == start;
    if (!rep.closes) rep.failure_index = size;
    return rep;
}

struct CheckReport {
    bool ok = true;
    std::string detail;
};

inline std::vector<int> circular_window(const std::vector<int>& s,
                                        std::uint64_t start, int len) {
    std::vector<int> w(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k)
        w[static_cast<std::size_t>(k)] =
            s[(start + static_cast<std::uint64_t>(k)) % s.size()];
    return w;
}

inline bool is_partial_perm(const std::vector<int>& w, int n) {
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int s : w) {
        if (s < 1 || s > n || seen[static_cast<std::size_t>(s)]) return false;
        seen[static_cast<std::size_t>(s)] = true;
    }
    return true;
}

// True iff all n! circular windows of length n-1 are distinct valid
// (n-1)-permutations of [n].
inline CheckReport verify_universal(const std::vector<int>& u, int n) {
    require_order(n);
    CheckReport rep;
    if (u.size() != factorial(n)) {
        rep.ok = false;
        rep.detail = "length is not n!";
        return rep;
    }
    std::set<std::vector<int>> seen;
    for (std::uint64_t i = 0; i < u.size(); ++i) {
        std::vector<int> w = circular_window(u, i, n - 1);
        if (!is_partial_perm(w, n)) {
            rep.ok = false;
            rep.detail = "invalid window at position " + std::to_string(i);
            return rep;
        }
        if (!seen.insert(std::move(w)).second) {
            rep.ok = false;
            rep.detail = "repeated window at position " + std::to_string(i);
            return rep;
        }
    }
    return rep;
}

// The (n-1)-windows of one residue class of start offsets: positions
// m, m+n, m+2n, ... in the flattened string, indices mod n*n!.
inline std::vector<std::vector<int>> offset_class_windows(
    const std::vector<int>& flat, int n, int m) {
    std::uint64_t count = factorial(n);
    std::vector<std::vector<int>> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        out.push_back(circular_window(
            flat, static_cast<std::uint64_t>(m) + i * static_cast<std::uint64_t>(n),
            n - 1));
    return out;
}

// True iff every residue class of start offsets yields the complete set
// of (n-1)-permutations of [n].
inline CheckReport verify_multiversal(const std::vector<int>& flat, int n) {
    require_order(n);
    CheckReport rep;
    if (flat.size() != static_cast<std::uint64_t>(n) * factorial(n)) {
        rep.ok = false;
        rep.detail = "length is not n * n!";
        return rep;
    }
    for (int m = 0; m < n; ++m) {
        std::set<std::vector<int>> seen;
        for (const auto& w : offset_class_windows(flat, n, m)) {
            if (!is_partial_perm(w, n) || !seen.insert(w).second) {
                rep.ok = false;
                rep.detail = "offset class " + std::to_string(m) +
                             " misses some (n-1)-permutation";
                return rep;
            }
        }
        // n! distinct valid windows = all of them
    }
    return rep;
}

// a_i = a_{i+n-1} for every index with i mod n not in {0, n-1}.
inline CheckReport check_shift_lemma(const std::vector<int>& a, int n) {
    require_order(n);
    CheckReport rep;
    if (a.size() != static_cast<std::uint64_t>(n) * factorial(n)) {
        rep.ok = false;
        rep.detail = "length is not n * n!";
        return rep;
    }
    std::uint64_t len = a.size();
    for (std::uint64_t i = 0; i < len; ++i) {
        std::uint64_t r = i % static_cast<std::uint64_t>(n);
        if (r == 0 || r == static_cast<std::uint64_t>(n - 1)) continue;
        if (a[i] != a[(i + static_cast<std::uint64_t>(n) - 1) % len]) {
            rep.ok = false;
            rep.detail = "shift identity fails at index " + std::to_string(i);
            return rep;
        }
    }
    return rep;
}

// Xi_n with every sigma_{n-1}-coset contracted to one supervertex; the
// sigma_n edges pair into 2-cycles between coset pairs, giving an
// undirected (multi)graph.
struct CosetGraph {
    int n = 0;
    int coset_count = 0;
    std::vector<int> coset_of;                     // per vertex of Xi_n
    std::vector<std::set<int>> adj;                // deduplicated
    std::map<std::pair<int, int>, int> edge_mult;  // sigma_n 2-cycles per pair
    std::vector<Perm> representative;              // lex-min member per coset
};

inline CosetGraph build_coset_graph(int n) {
    if (n < 3 || n > 8)
        throw std::invalid_argument("coset oracle supports 3 <= n <= 8");
    CayleyGraph g = build_cayley(n);
    std::uint64_t size = g.verts.size();
    CosetGraph q;
    q.n = n;
    q.coset_of.assign(size, -1);
    for (std::uint64_t v = 0; v < size; ++v) {
        if (q.coset_of[v] != -1) continue;
        int id = q.coset_count++;
        q.representative.push_back(g.verts[v]);
        std::uint64_t w = v;
        int orbit = 0;
        do {
            q.coset_of[w] = id;
            w = g.succ1[w];
            ++orbit;
        } while (w != v);
        if (orbit != n - 1)
            throw std::logic_error("sigma_{n-1} orbit has wrong size");
    }
    std::vector<std::uint32_t> pred1(size);
    for (std::uint64_t v = 0; v < size; ++v) pred1[g.succ1[v]] = v;
    q.adj.resize(static_cast<std::size_t>(q.coset_count));
    for (std::uint64_t u = 0; u < size; ++u) {
        std::uint32_t w = g.succ0[u];
        // partner edge of u -> w in the 2-cycle between the same cosets
        std::uint32_t x = pred1[w];
        std::uint32_t y = g.succ0[x];
        if (pred1[y] != u)
            throw std::logic_error("sigma_n edge pairing identity fails");
        if (u >= x) continue;  // count each 2-cycle once
        int cu = q.coset_of[u];
        int cw = q.coset_of[w];
        auto key = std::minmax(cu, cw);
        ++q.edge_mult[{key.first, key.second}];
        q.adj[static_cast<std::size_t>(cu)].insert(cw);
        q.adj[static_cast<std::size_t>(cw)].insert(cu);
    }
    return q;
}

// Eccentricity-based diameter of the deduplicated coset graph.
inline int coset_graph_diameter(const CosetGraph& q) {
    int best = 0;
    for (int s = 0; s < q.coset_count; ++s) {
        std::vector<int> dist(static_cast<std::size_t>(q.coset_count), -1);
        std::queue<int> bfs;
        dist[static_cast<std::size_t>(s)] = 0;
        bfs.push(s);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (int w : q.adj[static_cast<std::size_t>(v)])
                if (dist[static_cast<std::size_t>(w)] < 0) {
                    dist[static_cast<std::size_t>(w)] =
                        dist[static_cast<std::size_t>(v)] + 1;
                    bfs.push(w);
                }
        }
        for (int d : dist) {
            if (d < 0) return -1;  // disconnected
            best = std::max(best, d);
        }
    }
    return best;
}

struct SpanningReport {
    int vertex_count = 0;
    int used_pair_count = 0;   // sigma_n 2-cycles used by phi(S_n)
    int dedup_edge_count = 0;  // distinct coset pairs
    bool connected = false;
    bool is_tree = false;
};

// Projects the sigma_n edges used by phi(S_n) onto Q_n and reports
// whether the deduplicated edge set forms a spanning tree.
inline SpanningReport sigma_edges_spanning_check(int n) {
    if (n < 3 || n > 7)
        throw std::invalid_argument("spanning check supports 3 <= n <= 7");
    CosetGraph q = build_coset_graph(n);
    std::vector<Bit> bits = build_s_recursive(n);
    SpanningReport rep;
    rep.vertex_count = q.coset_count;
    std::set<std::pair<int, int>> used;
    int sigma_edges = 0;
    Perm cur = descending_perm(n);
    for (Bit b : bits) {
        Perm next = apply_rotation(cur, bit_to_rotation(b, n));
        if (b == 0) {
            ++sigma_edges;
            int cu = q.coset_of[lex_rank(cur)];
            int cw = q.coset_of[lex_rank(next)];
            auto key = std::minmax(cu, cw);
            used.insert({key.first, key.second});
        }
        cur = std::move(next);
    }
    rep.used_pair_count = sigma_edges / 2;
    rep.dedup_edge_count = static_cast<int>(used.size());
    // union-find over cosets
    std::vector<int> parent(static_cast<std::size_t>(q.coset_count));
    for (int i = 0; i < q.coset_count; ++i)
        parent[static_cast<std::size_t>(i)] = i;
    auto find = [&parent](int v) {
        while (parent[static_cast<std::size_t>(v)] != v)
            v = parent[static_cast<std::size_t>(v)] =
                parent[static_cast<std::size_t>(
                    parent[static_cast<std::size_t>(v)])];
        return v;
    };
    int components = q.coset_count;
    for (const auto& e : used) {
        int a = find(e.first), b = find(e.second);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --components;
        }
    }
    rep.connected = components == 1;
    rep.is_tree =
        rep.connected && rep.dedup_edge_count == q.coset_count - 1;
    return rep;
}

struct BruteForceResult {
    bool conclusive = false;
    std::uint64_t min_sigma_edges = 0;
    std::uint64_t nodes_explored = 0;
};

namespace detail {

struct HamiltonSearch {
    const CayleyGraph* g = nullptr;
    std::uint64_t size = 0;
    std::vector<char> visited;
    std::vector<Bit> labels;
    std::uint64_t best = 0;
    std::uint64_t nodes = 0;
    std::chrono::steady_clock::time_point deadline{};
    bool use_deadline = false;
    bool timed_out = false;
    bool prune_on_best = true;

    // callback receives the full bit sequence of each Hamilton cycle
    // found; returning false stops the search
    bool (*on_cycle)(void*, const std::vector<Bit>&, std::uint64_t) = nullptr;
    void* on_cycle_ctx = nullptr;

    bool dfs(std::uint32_t v, std::uint64_t depth, std::uint64_t sigma) {
        if ((++nodes & 0xfff) == 0 && use_deadline &&
            std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        if (depth == size) {
            // close back to the fixed start vertex 0
            Bit close;
            std::uint64_t cost;
            if (g->succ0[v] == 0) {
                close = 0;
                cost = 1;
            } else if (g->succ1[v] == 0) {
                close = 1;
                cost = 0;
            } else {
                return true;
            }
            if (prune_on_best && sigma + cost >= best) return true;
            best = std::min(best, sigma + cost);
            if (on_cycle) {
                labels.push_back(close);
                bool keep = on_cycle(on_cycle_ctx, labels, sigma + cost);
                labels.pop_back();
                return keep;
            }
            return true;
        }
        for (Bit b : {Bit{0}, Bit{1}}) {
            std::uint32_t w = b == 0 ? g->succ0[v] : g->succ1[v];
            std::uint64_t cost = b == 0 ? 1 : 0;
            if (visited[w]) continue;
            if (prune_on_best && sigma + cost >= best) continue;
            visited[w] = 1;
            labels.push_back(b);
            bool keep = dfs(w, depth + 1, sigma + cost);
            labels.pop_back();
            visited[w] = 0;
            if (!keep) return false;
        }
        return true;
    }
};

}  // namespace detail

// Exhaustive branch-and-bound over Hamilton cycles of Xi_n, minimizing
// the sigma_n edge count.  The search starts from the known achievable
// value f_n and looks for anything strictly better, so the returned
// minimum is exact when the search completes.  On budget exhaustion the
// result is marked inconclusive.
inline BruteForceResult min_hamilton_sigma_edges_bruteforce(
    int n, std::chrono::milliseconds budget = std::chrono::minutes(2)) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("brute force supports 3 <= n <= 5");
    CayleyGraph g = build_cayley(n);
    detail::HamiltonSearch s;
    s.g = &g;
    s.size = g.verts.size();
    s.visited.assign(s.size, 0);
    // f_n is achieved by phi(S_n), so it is a valid incumbent
    std::uint64_t fn = factorial(n);  // placeholder, replaced below
    {
        // recurrence f_2 = 2, f_{k+1} = 3*k! - f_k
        std::uint64_t f = 2;
        for (int k = 2; k < n; ++k) f = 3 * factorial(k) - f;
        fn = f;
    }
    s.best = fn;
    s.use_deadline = true;
    s.deadline = std::chrono::steady_clock::now() + budget;
    s.visited[0] = 1;
    s.dfs(0, 1, 0);
    BruteForceResult res;
    res.conclusive = !s.timed_out;
    res.min_sigma_edges = s.best;
    res.nodes_explored = s.nodes;
    return res;
}

// Enumerates Hamilton cycles of Xi_n from a fixed start vertex, invoking
// fn(bits, sigma_count) for each until fn returns false or limit cycles
// have been reported.
template <class F>
inline std::uint64_t for_each_hamilton_cycle(int n, F&& fn,
                                             std::uint64_t limit = UINT64_MAX) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("enumeration supports 3 <= n <= 5");
    CayleyGraph g = build_cayley(n);
    struct Ctx {
        F* fn;
        std::uint64_t found;
        std::uint64_t limit;
    } ctx{&fn, 0, limit};
    detail::HamiltonSearch s;
    s.g = &g;
    s.size = g.verts.size();
    s.visited.assign(s.size, 0);
    s.best = 0;
    s.prune_on_best = false;
    s.on_cycle_ctx = &ctx;
    s.on_cycle = [](void* p, const std::vector<Bit>& bits,
                    std::uint64_t sigma) {
        auto* c = static_cast<Ctx*>(p);
        ++c->found;
        bool keep = (*c->fn)(bits, sigma);
        return keep && c->found < c->limit;
    };
    s.visited[0] = 1;
    s.dfs(0, 1, 0);
    return ctx.found;
}

inline std::string perm_label(const Perm& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i && p.size() > 9) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

// DOT text for Xi_n; when highlight bits are given, the edges of the
// phi(bits) cycle are styled distinctly.  Output ordering is
// lexicographic by vertex label, hence byte-deterministic.
inline std::string export_dot(const CayleyGraph& g,
                              const std::vector<Bit>* highlight = nullptr) {
    std::set<std::pair<std::uint64_t, int>> hot;  // (vertex index, label)
    if (highlight) {
        if (highlight->size() != g.verts.size())
            throw std::invalid_argument("highlight must have length n!");
        std::uint64_t v = lex_rank(descending_perm(g.n));
        for (Bit b : *highlight) {
            hot.insert({v, b});
            v = b == 0 ? g.succ0[v] : g.succ1[v];
        }
    }
    std::ostringstream out;
    out << "digraph cayley {\n";
    for (const Perm& v : g.verts)
        out << "  \"" << perm_label(v) << "\";\n";
    for (std::uint64_t i = 0; i < g.verts.size(); ++i) {
        for (int label = 0; label <= 1; ++label) {
            std::uint64_t j = label == 0 ? g.succ0[i] : g.succ1[i];
            out << "  \"" << perm_label(g.verts[i]) << "\" -> \""
                << perm_label(g.verts[j]) << "\" [label=" << label;
            if (hot.count({i, label}))
                out << ", style=bold, color=red";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

// DOT text for the deduplicated coset graph Q_n.
inline std::string export_dot(const CosetGraph& q) {
    std::vector<std::pair<std::string, int>> labels;
    labels.reserve(static_cast<std::size_t>(q.coset_count));
    for (int c = 0; c < q.coset_count; ++c)
        labels.push_back({perm_label(q.representative[static_cast<std::size_t>(c)]), c});
    std::sort(labels.begin(), labels.end());
    std::ostringstream out;
    out << "graph coset {\n";
    for (const auto& [label, c] : labels) out << "  \"" << label << "\";\n";
    std::set<std::pair<std::string, std::string>> edges;
    std::vector<std::string> by_id(static_cast<std::size_t>(q.coset_count));
    for (const auto& [label, c] : labels) by_id[static_cast<std::size_t>(c)] = label;
    for (const auto& [pair, mult] : q.edge_mult) {
        auto a = by_id[static_cast<std::size_t>(pair.first)];
        auto b = by_id[static_cast<std::size_t>(pair.second)];
        if (b < a) std::swap(a, b);
        edges.insert({a, b});
    }
    for (const auto& [a, b] : edges)
        out << "  \"" << a << "\" -- \"" << b << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace ucycle
