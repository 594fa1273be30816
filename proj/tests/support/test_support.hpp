#pragma once

#include "excycles/bigint.hpp"
#include "excycles/graph.hpp"
#include "excycles/rng.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

namespace testsupport {

/// Brute-force multigraph isomorphism for tiny cores (n <= 8).
inline bool multigraph_iso(const excycles::Multigraph& a, const excycles::Multigraph& b) {
    if (a.n() != b.n() || a.total_edge_count() != b.total_edge_count()) return false;
    const int n = a.n();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u; v < n && ok; ++v)
                if (a.multiplicity(u, v) != b.multiplicity(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Random subdivision of a multigraph into a simple graph: every loop is cut
/// at least twice, every parallel edge at least once, plain edges any number
/// of times. Returns the simple graph; original vertices keep ids 0..n-1.
inline excycles::LabeledGraph subdivide_multigraph(const excycles::Multigraph& m,
                                                   excycles::SeededRng& rng, int max_extra = 2) {
    std::vector<std::pair<int, int>> edges;
    int next = m.n();
    std::map<std::pair<int, int>, int> seen_between;
    for (const auto& [e, mult] : m.edge_map()) {
        for (int copy = 0; copy < mult; ++copy) {
            int min_subs = 0;
            if (e.first == e.second) min_subs = 2;
            else if (mult > 1 || seen_between.count(e)) min_subs = 1;
            int subs = min_subs + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_extra + 1)));
            int prev = e.first;
            for (int s = 0; s < subs; ++s) {
                edges.emplace_back(prev, next);
                prev = next++;
            }
            edges.emplace_back(prev, e.second);
            seen_between[e] = 1;
        }
    }
    return excycles::build_graph(next, edges);
}

/// Brute-force count of labeled coloured hairy cycles on n vertices: graphs
/// whose 2-core is a single cycle with every off-cycle vertex of degree 1 or
/// 2, times the 2^(cycle length) rim colorings. `restricted` instead counts
/// colorings with at least three rim vertices black or of degree >= 3.
inline excycles::BigInt count_coloured_hairy_cycles(int n, bool restricted) {
    using excycles::BigInt;
    using excycles::LabeledGraph;
    BigInt total;
    const std::uint64_t masks = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        LabeledGraph g = excycles::mask_to_graph(n, mask);
        if (excycles::components(g).size() != 1) continue;
        auto core = excycles::two_core_vertices(g);
        if (core.empty()) continue;
        std::vector<char> in_core(n, 0);
        for (int v : core) in_core[v] = 1;
        bool cycle_core = true;
        for (int v : core) {
            int d = 0;
            for (int w : g.neighbors(v))
                if (in_core[w]) ++d;
            if (d != 2) cycle_core = false;
        }
        if (!cycle_core) continue;
        // connected + every core vertex of core-degree 2 => the core is one cycle
        bool paths_ok = true;
        for (int v = 0; v < n && paths_ok; ++v)
            if (!in_core[v] && g.degree(v) > 2) paths_ok = false;
        if (!paths_ok) continue;
        int len = static_cast<int>(core.size());
        if (!restricted) {
            total += BigInt(1) << static_cast<unsigned>(len);
            continue;
        }
        int high = 0; // rim vertices that are special regardless of colour
        for (int v : core)
            if (g.degree(v) >= 3) ++high;
        int low = len - high;
        // specials = high + (black among the low-degree rim); need >= 3
        BigInt colorings;
        for (int j = 0; j <= low; ++j) {
            if (high + j < 3) continue;
            colorings += BigInt::binomial(static_cast<unsigned>(low), static_cast<unsigned>(j));
        }
        total += colorings * (BigInt(1) << static_cast<unsigned>(high));
    }
    return total;
}

} // namespace testsupport
