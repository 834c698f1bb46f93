// Acceptance suite: each criterion runs standalone (--criterion N) and prints
// one PASS/FAIL line. Exit code 0 iff the requested criteria all pass.
//
// Criterion 4 is expected to stay red on one sub-check: the published
// extended-cycle chi+ formula claims 5n/2-1 when n/2 is even, but the exact
// maximum over all complete extensions of C_8 is 17 = 5n/2-3 (no extension
// keeps an alternating half-cycle independent without being bipartite). The
// suite reports the honest numbers; see `gcsum verify T3.4`.

#include <atomic>
#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gcsum/chromatic.hpp"
#include "gcsum/extension.hpp"
#include "gcsum/generate.hpp"
#include "gcsum/graph.hpp"
#include "gcsum/isomorphism.hpp"
#include "gcsum/matching.hpp"
#include "gcsum/oracle.hpp"
#include "gcsum/patterns.hpp"
#include "gcsum/predict.hpp"
#include "gcsum/verify.hpp"

using namespace gcsum;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1. Path sums reproduce the closed forms for n = 1..12 in under 5 s.
Outcome criterion_1() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    for (int n = 1; n <= 12; ++n) {
        auto r = chi_sums(path_graph(n));
        long want_min = n == 1 ? 1 : (n % 2 == 0 ? 3L * n / 2 : 3L * (n / 2) + 1);
        long want_max = n == 1 ? 1 : (n % 2 == 0 ? 3L * n / 2 : 3L * (n / 2) + 2);
        out.expect(r.chi_sum_min == want_min && r.chi_sum_max == want_max,
                   "P_" + std::to_string(n) + " got (" + std::to_string(r.chi_sum_min) + "," +
                       std::to_string(r.chi_sum_max) + ")");
    }
    double dt = seconds_since(t0);
    out.expect(dt < 5.0, "runtime " + std::to_string(dt) + " s");
    return out;
}

// 2. Cycle sums: chi' always matches; chi+ matches for odd n; for even n the
// verifier must record the documented mismatch with both numbers printed
// (exact 3n/2 vs published 5n/2).
Outcome criterion_2() {
    Outcome out;
    for (int n = 3; n <= 12; ++n) {
        auto r = chi_sums(cycle_graph(n));
        out.expect(r.chi_sum_min == 3L * ((n + 1) / 2),
                   "C_" + std::to_string(n) + " chi' " + std::to_string(r.chi_sum_min));
        long want_max = n % 2 == 1 ? 5L * (n / 2) + 1 : 3L * n / 2;
        out.expect(r.chi_sum_max == want_max,
                   "C_" + std::to_string(n) + " chi+ " + std::to_string(r.chi_sum_max));
    }
    auto rep = verify_theorem("T3.2", {3, 12, 0, 0});
    out.expect(rep.mismatches == 5,
               "expected 5 recorded mismatches, got " + std::to_string(rep.mismatches));
    for (const auto& row : rep.rows) {
        if (row.status != "MISMATCH") continue;
        bool both_printed = row.exact_max.has_value() && row.paper_max.has_value();
        out.expect(both_printed, row.instance + " missing numbers");
        if (both_printed) {
            long n = 2 * (*row.exact_max) / 3;
            out.expect(*row.paper_max == 5 * n / 2 && *row.exact_max == 3 * n / 2,
                       row.instance + " numbers (" + std::to_string(*row.exact_max) + " vs " +
                           std::to_string(*row.paper_max) + ")");
        }
    }
    return out;
}

// 3. Extended paths: (7,9) at n=4 and (3n/2, 5n/2-1) at n=6,8,10; n=10 under 60 s.
Outcome criterion_3() {
    Outcome out;
    auto check = [&](int n, long want_min, long want_max, double budget) {
        auto t0 = std::chrono::steady_clock::now();
        auto r = chi_sums_over_extensions(path_graph(n));
        double dt = seconds_since(t0);
        out.expect(r.chi_sum_min == want_min && r.chi_sum_max == want_max,
                   "P^x_" + std::to_string(n) + " got (" + std::to_string(r.chi_sum_min) + "," +
                       std::to_string(r.chi_sum_max) + ")");
        if (budget > 0)
            out.expect(dt < budget, "P^x_" + std::to_string(n) + " took " + std::to_string(dt) + " s");
    };
    check(4, 7, 9, 0);
    check(6, 9, 14, 0);
    check(8, 12, 19, 0);
    check(10, 15, 24, 60.0);
    return out;
}

// 4. Extended cycles, published values asserted verbatim. The n=8 chi+ branch
// (n/2 even -> 5n/2-1) contradicts the exact computation and stays red.
Outcome criterion_4() {
    Outcome out;
    auto c4 = chi_sums_over_extensions(cycle_graph(4));
    out.expect(c4.chi_sum_min == 10 && c4.chi_sum_max == 10, "C^x_4");
    for (int n : {6, 8, 10}) {
        auto r = chi_sums_over_extensions(cycle_graph(n));
        out.expect(r.chi_sum_min == 3L * n / 2,
                   "C^x_" + std::to_string(n) + " chi' " + std::to_string(r.chi_sum_min));
        long want_max = (n / 2) % 2 == 0 ? 5L * n / 2 - 1 : 5L * n / 2 - 3;
        out.expect(r.chi_sum_max == want_max,
                   "C^x_" + std::to_string(n) + " chi+ exact " + std::to_string(r.chi_sum_max) +
                       " vs published " + std::to_string(want_max));
    }
    return out;
}

// 5. The P4 and P6 extension catalogs, including the published matching list.
Outcome criterion_5() {
    Outcome out;
    auto p4 = complete_extensions(path_graph(4));
    out.expect(p4.matchings.size() == 1, "P_4 extension count");

    auto p6 = complete_extensions(path_graph(6));
    out.expect(p6.matchings.size() == 5,
               "P_6 extension count " + std::to_string(p6.matchings.size()));
    out.expect(p6.iso_classes.size() == 4,
               "P_6 class count " + std::to_string(p6.iso_classes.size()));
    std::vector<Matching> published = {
        normalized_matching({{0, 5}, {1, 3}, {2, 4}}),
        normalized_matching({{0, 2}, {1, 4}, {3, 5}}),
        normalized_matching({{0, 3}, {1, 4}, {2, 5}}),
        normalized_matching({{0, 4}, {1, 3}, {2, 5}}),
        normalized_matching({{0, 3}, {1, 5}, {2, 4}}),
    };
    for (const auto& m : published)
        out.expect(std::count(p6.matchings.begin(), p6.matchings.end(), m) == 1,
                   "published matching missing");
    return out;
}

// 6. Hall-condition corpus: preserving extension chi' = 3n/2, swap extension
// chi+ = 5n/2-3.
Outcome criterion_6() {
    Outcome out;
    auto check = [&](const std::string& name, const Graph& g, const BipartitePartition& p) {
        const long n = g.n();
        out.expect(hall_condition_nc(g, p), name + " Hall");
        auto keep = chi_sums(bipartite_preserving_extension(g, p));
        out.expect(keep.chi_sum_min == 3 * n / 2,
                   name + " preserving chi' " + std::to_string(keep.chi_sum_min));
        auto swapped = chi_sums(bipartite_swap_extension(g, p));
        out.expect(swapped.chi_sum_max == 5 * n / 2 - 3,
                   name + " swap chi+ " + std::to_string(swapped.chi_sum_max));
    };
    check("C_6", cycle_graph(6), cycle_bipartition(6));
    check("C_8", cycle_graph(8), cycle_bipartition(8));
    check("K_{3,3}-PM", complete_bipartite_minus_pm(3), split_bipartition(3, 3));
    check("K_{4,4}-PM", complete_bipartite_minus_pm(4), split_bipartition(4, 4));
    return out;
}

// 7. Existence of complete extensions under max degree < n/2.
Outcome criterion_7() {
    Outcome out;
    for (int n : {4, 6}) {
        long total = 0, failures = 0;
        enumerate_graphs_max_degree(n, n / 2 - 1, [&](const Graph& g) {
            if (!is_connected(g)) return;
            ++total;
            auto ext = complete_extensions(g);
            if (ext.matchings.empty()) ++failures;
            if (hamiltonian_cycle(complement(g)) && ext.matchings.size() < 2) ++failures;
        });
        out.expect(failures == 0, "exhaustive n=" + std::to_string(n));
        if (n == 6) out.expect(total > 0, "the n=6 sweep saw no graphs");
    }
    Rng rng(0xace0fba5u);
    int checked = 0;
    for (int n : {8, 10, 12}) {
        for (int i = 0; i < (n == 8 ? 68 : 66); ++i) {
            Graph g = random_connected_max_degree(rng, n, n / 2 - 1, rand_below(rng, 2 * n));
            ++checked;
            if (n == 8) {
                auto ext = complete_extensions(g);
                out.expect(!ext.matchings.empty(), "random n=8 without extension");
                if (hamiltonian_cycle(complement(g)))
                    out.expect(ext.matchings.size() >= 2, "Hamiltonian complement, one extension");
            } else {
                int found = 0;
                enumerate_perfect_matchings(complement(g), [&](const Matching&) {
                    ++found;
                    return found < 2;
                });
                out.expect(found >= 1, "random n=" + std::to_string(n) + " without extension");
                if (hamiltonian_cycle(complement(g)))
                    out.expect(found >= 2, "Hamiltonian complement, one extension");
            }
        }
    }
    out.expect(checked == 200, "random sample size " + std::to_string(checked));
    return out;
}

// 8. Exhaustive dense sweep for n <= 8: diameter <= 2, triangle-free iff
// bipartite, bipartite implies K_{n/2,n/2}.
Outcome criterion_8() {
    Outcome out;
    long total = 0;
    for (int n = 2; n <= 8; ++n) {
        long bad = 0;
        total += for_each_dense_graph(n, [&](const Graph& g) {
            auto lem = check_lemma_4_1(g);
            if (!lem.applicable || !lem.holds) ++bad;
            auto cls = classify_dense_graph(g);
            if (cls.triangle_free != cls.bipartite) ++bad;
            if (cls.bipartite && !cls.is_krr) ++bad;
        });
        out.expect(bad == 0, "n=" + std::to_string(n) + " counterexamples " + std::to_string(bad));
    }
    out.expect(total > 150000, "sweep unexpectedly small: " + std::to_string(total));
    return out;
}

// 9. 100 random treelike compositions keep the base chromatic number, with a
// proper constructive coloring.
Outcome criterion_9() {
    Outcome out;
    auto rep = verify_theorem("T4.2", {0, 0, 100, 0});
    out.expect(static_cast<int>(rep.rows.size()) == 100, "spec count");
    out.expect(rep.mismatches == 0, std::to_string(rep.mismatches) + " failing specs");
    return out;
}

// 10. Oracle equivalence over every connected graph with n <= 7 plus 300
// random graphs with n <= 9; perfect-matching counts must agree as well.
Outcome criterion_10() {
    Outcome out;

    auto check_graph = [](const Graph& g) -> bool {
        auto fast = chi_sums(g);
        auto slow = oracle::brute_chi_sums(g);
        if (fast.chi != oracle::brute_chi(g)) return false;
        if (fast.chi_sum_min != slow.first || fast.chi_sum_max != slow.second) return false;
        if (g.n() % 2 == 0 &&
            enumerate_perfect_matchings(g).size() != oracle::brute_perfect_matchings(g).size())
            return false;
        return true;
    };

    long connected_total = 0;
    for (int n = 1; n <= 6; ++n) {
        std::vector<VertexPair> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        long bad = 0;
        for (std::size_t mask = 0; mask < (std::size_t{1} << slots.size()); ++mask) {
            std::vector<VertexPair> edges;
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask & (std::size_t{1} << i)) edges.push_back(slots[i]);
            Graph g(n, edges);
            if (!is_connected(g)) continue;
            ++connected_total;
            if (!check_graph(g)) ++bad;
        }
        out.expect(bad == 0, "n=" + std::to_string(n) + " discrepancies " + std::to_string(bad));
    }

    {
        const int n = 7;
        std::vector<VertexPair> slots;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
        const std::size_t total = std::size_t{1} << slots.size();
        unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::atomic<long> bad{0}, seen{0};
        std::atomic<std::size_t> cursor{0};
        constexpr std::size_t chunk = 1 << 14;
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                long local_bad = 0, local_seen = 0;
                for (;;) {
                    std::size_t lo = cursor.fetch_add(chunk);
                    if (lo >= total) break;
                    std::size_t hi = std::min(total, lo + chunk);
                    for (std::size_t mask = lo; mask < hi; ++mask) {
                        std::vector<VertexPair> edges;
                        for (std::size_t i = 0; i < slots.size(); ++i)
                            if (mask & (std::size_t{1} << i)) edges.push_back(slots[i]);
                        Graph g(n, edges);
                        if (!is_connected(g)) continue;
                        ++local_seen;
                        if (!check_graph(g)) ++local_bad;
                    }
                }
                bad += local_bad;
                seen += local_seen;
            });
        }
        for (auto& t : pool) t.join();
        connected_total += seen.load();
        out.expect(bad.load() == 0, "n=7 discrepancies " + std::to_string(bad.load()));
        out.expect(seen.load() == 1866256, "n=7 connected count " + std::to_string(seen.load()));
    }

    Rng rng(0x04ac1e50u);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + rand_below(rng, 8);
        Graph g = random_graph(rng, n);
        if (!check_graph(g)) out.expect(false, "random graph #" + std::to_string(i));
    }
    out.detail = "corpus: " + std::to_string(connected_total) + " connected + 300 random" +
                 (out.detail.empty() ? "" : "; " + out.detail);
    if (!out.pass) out.detail = "FAILURES; " + out.detail;
    return out;
}

// 11. Balanced bipartite adjudication report, oracle-confirmed.
Outcome criterion_11() {
    Outcome out;
    auto corpus = bipartite_corpus();
    out.expect(corpus.size() >= 20, "corpus size " + std::to_string(corpus.size()));
    auto rep = verify_theorem("T3.6");
    out.expect(rep.rows.size() == corpus.size(), "report rows");
    int confirmed = 0;
    for (const auto& inst : corpus) {
        try {
            auto built = bipartite_extension_construct(inst.graph, inst.partition);
            auto fast = chi_sums(built.graph);
            auto slow = oracle::brute_chi_sums(built.graph);
            out.expect(fast.chi_sum_min == slow.first,
                       inst.name + " oracle exact chi' disagrees");
            ++confirmed;
        } catch (const error& e) {
            out.expect(e.code() == errc::leftover_unpairable, inst.name + " unexpected error");
        }
    }
    out.expect(confirmed >= 15, "too few feasible constructions: " + std::to_string(confirmed));
    std::ostringstream extra;
    extra << confirmed << " exact values oracle-confirmed, " << rep.mismatches
          << " formula deviations recorded";
    out.detail = out.detail.empty() ? extra.str() : out.detail + "; " + extra.str();
    return out;
}

// 12. Hopcroft-Karp equals brute-force maximum matching on 500 random
// bipartite graphs with n <= 14, in under 10 s.
Outcome criterion_12() {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(0x12bbcafeu);
    for (int i = 0; i < 500; ++i) {
        int nx = 1 + rand_below(rng, 7);
        int ny = 1 + rand_below(rng, std::min(7, 14 - nx));
        auto [g, p] = random_bipartite(rng, nx, ny);
        if (hopcroft_karp(g, p).size() != oracle::brute_max_matching(g, p)) {
            out.expect(false, "disagreement at sample " + std::to_string(i));
            break;
        }
    }
    double dt = seconds_since(t0);
    out.expect(dt < 10.0, "runtime " + std::to_string(dt) + " s");
    return out;
}

const char* kDescriptions[13] = {
    "",
    "path chromatic sums, n = 1..12",
    "cycle chromatic sums with documented even-n chi+ deviation, n = 3..12",
    "extended path sums, n = 4..10",
    "extended cycle sums, n = 4..10 (published n=8 chi+ asserted verbatim)",
    "extension catalogs of P_4 and P_6",
    "Hall-condition corpus: preserving and swap extensions",
    "extension existence under max degree < n/2",
    "dense sweep n <= 8: diameter, triangle-free iff bipartite, K_{r,r}",
    "100 random treelike compositions keep chi",
    "oracle equivalence on all connected n <= 7 plus 300 random graphs",
    "balanced bipartite adjudication, oracle-confirmed",
    "Hopcroft-Karp vs brute maximum matching, 500 graphs",
};

Outcome run_criterion(int k) {
    switch (k) {
        case 1: return criterion_1();
        case 2: return criterion_2();
        case 3: return criterion_3();
        case 4: return criterion_4();
        case 5: return criterion_5();
        case 6: return criterion_6();
        case 7: return criterion_7();
        case 8: return criterion_8();
        case 9: return criterion_9();
        case 10: return criterion_10();
        case 11: return criterion_11();
        case 12: return criterion_12();
    }
    return {false, "unknown criterion"};
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
    }
    int failures = 0;
    for (int k = 1; k <= 12; ++k) {
        if (only != 0 && k != only) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome r = run_criterion(k);
        double dt = seconds_since(t0);
        std::cout << "criterion " << k << (r.pass ? " PASS " : " FAIL ") << "(" << kDescriptions[k]
                  << ", " << dt << " s)";
        if (!r.detail.empty()) std::cout << " - " << r.detail;
        std::cout << "\n";
        if (!r.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
