// Command-line surface for the universal-cycle generators, ranking and
// verification oracles.  Streaming commands keep memory at O(n) unless
// a materializing command is requested explicitly.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ucycle/graphoracle.hpp"
#include "ucycle/rankstat.hpp"

using namespace ucycle;

namespace {

enum class Method { recursive, counting, loopless };
enum class Format { compact, lines, csv };

const std::map<std::string, Method> kMethods{
    {"recursive", Method::recursive},
    {"counting", Method::counting},
    {"loopless", Method::loopless}};
const std::map<std::string, Format> kFormats{{"compact", Format::compact},
                                             {"lines", Format::lines},
                                             {"csv", Format::csv}};

struct SymbolPrinter {
    Format format;
    bool wide;  // two-digit symbols need separators in compact mode
    std::uint64_t emitted = 0;

    void put(int symbol) {
        switch (format) {
            case Format::compact:
                if (wide && emitted) std::cout << ' ';
                std::cout << symbol;
                break;
            case Format::lines:
                std::cout << symbol << '\n';
                break;
            case Format::csv:
                if (emitted) std::cout << ',';
                std::cout << symbol;
                break;
        }
        ++emitted;
    }

    void finish() {
        if (format != Format::lines && emitted) std::cout << '\n';
    }
};

// Emits bits from whichever generator was chosen, up to limit symbols.
template <class Sink>
void drive_bits(int n, Method method, std::uint64_t limit, Sink&& sink) {
    if (method == Method::recursive) {
        auto bits = build_s_recursive(n);
        std::uint64_t count = 0;
        for (Bit b : bits) {
            if (count++ == limit) break;
            sink(b);
        }
        return;
    }
    if (method == Method::counting) {
        CountingStream s(n);
        for (std::uint64_t i = 0; i < limit && !s.done(); ++i) sink(s.next());
        return;
    }
    LooplessStream s(n);
    for (std::uint64_t i = 0; i < limit && !s.done(); ++i) sink(s.next());
}

Perm parse_perm(const std::string& text) {
    Perm p;
    if (text.find_first_of(", ") != std::string::npos) {
        std::string token;
        for (char c : text + ",") {
            if (c == ',' || c == ' ') {
                if (!token.empty()) p.push_back(std::stoi(token));
                token.clear();
            } else {
                token += c;
            }
        }
    } else {
        for (char c : text) {
            if (c < '1' || c > '9')
                throw std::invalid_argument("bad symbol in permutation");
            p.push_back(c - '0');
        }
    }
    return p;
}

int run_verify(int n) {
    bool all_ok = true;
    auto line = [&all_ok](const char* what, bool ok, const std::string& detail) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << what;
        if (!ok && !detail.empty()) std::cout << " -- " << detail;
        std::cout << '\n';
        all_ok = all_ok && ok;
    };

    auto bits = build_s_recursive(n);
    auto ham = validate_hamilton(bits, n);
    line("hamilton cycle", ham.ok(),
         "failure at step " + std::to_string(ham.failure_index));

    std::vector<int> u;
    u.reserve(bits.size());
    CircularWindow w(n);
    for (Bit b : bits) u.push_back(w.step(b));
    auto uni = verify_universal(u, n);
    line("universal cycle", uni.ok, uni.detail);

    if (n >= 3) {
        auto flat = flatten(n);
        auto multi = verify_multiversal(flat, n);
        line("multiversal cycle", multi.ok, multi.detail);
        auto shift = check_shift_lemma(flat, n);
        line("shift identity", shift.ok, shift.detail);
    } else {
        std::cout << "SKIP  multiversal cycle (needs n >= 3)\n";
        std::cout << "SKIP  shift identity (needs n >= 3)\n";
    }
    return all_ok ? 0 : 1;
}

int run_bench(int n_min, int n_max) {
    std::cout << "n,max_ops,mean_ops\n";
    for (int n = n_min; n <= n_max; ++n) {
        InstrumentedLooplessStream s(n);
        unsigned max_ops = 0;
        std::uint64_t total_ops = 0;
        std::uint64_t bits = 0;
        while (!s.done()) {
            auto [bit, ops] = s.next();
            (void)bit;
            max_ops = std::max(max_ops, ops);
            total_ops += ops;
            ++bits;
        }
        std::cout << n << ',' << max_ops << ','
                  << static_cast<double>(total_ops) / static_cast<double>(bits)
                  << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"explicit universal cycles for (n-1)-permutations of [n]"};
    app.require_subcommand(1);

    int n = 4;
    Method method = Method::loopless;
    Format format = Format::compact;
    std::uint64_t limit = UINT64_MAX;

    auto add_common = [&](CLI::App* cmd, bool with_method = true) {
        cmd->add_option("--n", n, "order of the set")->required();
        if (with_method)
            cmd->add_option("--method", method, "generator to use")
                ->transform(CLI::CheckedTransformer(kMethods));
        cmd->add_option("--format", format, "output format")
            ->transform(CLI::CheckedTransformer(kFormats));
        cmd->add_option("--limit", limit, "maximum symbols to emit");
    };

    auto* bits_cmd = app.add_subcommand("bits", "emit the bit sequence S_n");
    add_common(bits_cmd);

    auto* rseq_cmd =
        app.add_subcommand("rseq", "emit the position sequence R_n");
    add_common(rseq_cmd, false);

    auto* ucycle_cmd =
        app.add_subcommand("ucycle", "emit the universal cycle U_n");
    add_common(ucycle_cmd);

    auto* perms_cmd = app.add_subcommand(
        "perms", "emit the permutations of Pi(n), one per line");
    perms_cmd->add_option("--n", n, "order of the set")->required();
    perms_cmd->add_option("--method", method, "generator to use")
        ->transform(CLI::CheckedTransformer(kMethods));
    perms_cmd->add_option("--limit", limit, "maximum permutations to emit");

    std::string perm_text;
    auto* rank_cmd =
        app.add_subcommand("rank", "rank of a permutation in Pi(n) order");
    rank_cmd->add_option("perm", perm_text, "permutation, e.g. 2431")
        ->required();

    std::string rank_text;
    auto* unrank_cmd =
        app.add_subcommand("unrank", "the permutation Pi(n)_r");
    unrank_cmd->add_option("--n", n, "order of the set")->required();
    unrank_cmd->add_option("--rank", rank_text, "rank r in [0, n!-1]")
        ->required();

    auto* stats_cmd =
        app.add_subcommand("stats", "rotation statistics for order n");
    stats_cmd->add_option("--n", n, "order of the set")->required();

    auto* verify_cmd = app.add_subcommand(
        "verify", "run the oracle checks against the generated cycle");
    verify_cmd->add_option("--n", n, "order of the set")->required();

    std::string graph_kind = "cayley";
    bool highlight = false;
    auto* dot_cmd = app.add_subcommand("dot", "graph text output (DOT)");
    dot_cmd->add_option("--n", n, "order of the set")->required();
    dot_cmd->add_option("--graph", graph_kind, "cayley or coset")
        ->check(CLI::IsMember({"cayley", "coset"}));
    dot_cmd->add_flag("--highlight", highlight,
                      "mark the phi(S_n) Hamilton cycle");

    int n_min = 4, n_max = 10;
    auto* bench_cmd = app.add_subcommand(
        "bench", "per-symbol op-count summary of the loopless generator");
    bench_cmd->add_option("--n-min", n_min, "first order");
    bench_cmd->add_option("--n-max", n_max, "last order");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bits_cmd->parsed()) {
            SymbolPrinter out{format, false};
            drive_bits(n, method, limit,
                       [&out](Bit b) { out.put(b); });
            out.finish();
        } else if (rseq_cmd->parsed()) {
            SymbolPrinter out{format, n > 10};
            CountingStream s(n);
            for (std::uint64_t i = 0; i < limit && !s.done(); ++i)
                out.put(s.next_step().position);
            out.finish();
        } else if (ucycle_cmd->parsed()) {
            SymbolPrinter out{format, n > 9};
            CircularWindow w(n);
            drive_bits(n, method, limit,
                       [&out, &w](Bit b) { out.put(w.step(b)); });
            out.finish();
        } else if (perms_cmd->parsed()) {
            CircularWindow w(n);
            std::uint64_t total = factorial(n);
            bool wide = n > 9;
            auto emit = [&w, wide] {
                Perm p = w.window();
                for (std::size_t i = 0; i < p.size(); ++i) {
                    if (wide && i) std::cout << ' ';
                    std::cout << p[i];
                }
                std::cout << '\n';
            };
            std::uint64_t emitted = 0;
            drive_bits(n, method, std::min(limit, total),
                       [&](Bit b) {
                           emit();
                           ++emitted;
                           w.step(b);
                       });
            (void)emitted;
        } else if (rank_cmd->parsed()) {
            std::cout << rank(parse_perm(perm_text)) << '\n';
        } else if (unrank_cmd->parsed()) {
            Natural r(rank_text);
            Perm p = unrank(n, r);
            bool wide = n > 9;
            for (std::size_t i = 0; i < p.size(); ++i) {
                if (wide && i) std::cout << ' ';
                std::cout << p[i];
            }
            std::cout << '\n';
        } else if (stats_cmd->parsed()) {
            std::cout << "n: " << n << '\n';
            std::cout << "total symbols (n!): " << factorial_exact(n) << '\n';
            std::cout << "sigma_n steps (f_n): " << sigma_n_count(n) << '\n';
            std::cout << "sigma_{n-1} steps: "
                      << factorial_exact(n) - sigma_n_count(n) << '\n';
            if (n >= 3)
                std::cout << "minimum sigma_n edges (any Hamilton cycle): "
                          << min_sigma_edges(n) << '\n';
        } else if (verify_cmd->parsed()) {
            return run_verify(n);
        } else if (dot_cmd->parsed()) {
            if (graph_kind == "cayley") {
                auto g = build_cayley(n);
                if (highlight) {
                    auto s = build_s_recursive(n);
                    std::cout << export_dot(g, &s);
                } else {
                    std::cout << export_dot(g);
                }
            } else {
                std::cout << export_dot(build_coset_graph(n));
            }
        } else if (bench_cmd->parsed()) {
            return run_bench(n_min, n_max);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
