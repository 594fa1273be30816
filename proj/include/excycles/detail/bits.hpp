#pragma once

#include "excycles/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace excycles::detail {

inline std::vector<std::uint64_t> bit_rows(const LabeledGraph& g) {
    std::vector<std::uint64_t> rows(g.n(), 0);
    for (int u = 0; u < g.n(); ++u) {
        if (g.has_bits()) {
            rows[u] = g.row(u);
        } else {
            for (int v : g.neighbors(u)) rows[u] |= 1ull << v;
        }
    }
    return rows;
}

/// Acyclicity of the subgraph induced by `active` (n <= 64), union-find.
inline bool forest_bits(const std::vector<std::uint64_t>& rows, std::uint64_t active) {
    int parent[64];
    std::uint64_t m = active;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        parent[v] = v;
    }
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    m = active;
    while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        // only edges to higher-numbered active vertices
        std::uint64_t higher = (u + 1 < 64) ? ~((1ull << (u + 1)) - 1) : 0ull;
        std::uint64_t nb = rows[u] & active & higher;
        while (nb) {
            int v = std::countr_zero(nb);
            nb &= nb - 1;
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
    }
    return true;
}

inline std::uint64_t full_mask(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }

inline bool two_disjoint_cycles(const std::vector<std::uint64_t>& cycles) {
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if (!(cycles[i] & cycles[j])) return true;
    return false;
}

inline bool three_disjoint_cycles(const std::vector<std::uint64_t>& cycles, int n) {
    if (n < 9) return false; // every cycle uses >= 3 vertices
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j) {
            if (cycles[i] & cycles[j]) continue;
            std::uint64_t used = cycles[i] | cycles[j];
            for (std::size_t l = j + 1; l < cycles.size(); ++l)
                if (!(cycles[l] & used)) return true;
        }
    return false;
}

inline std::vector<int> mask_to_vec(std::uint64_t m) {
    std::vector<int> v;
    while (m) {
        v.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return v;
}

/// First induced cycle (as a vertex mask) inside the active set, or 0 when
/// the induced subgraph is acyclic. Deterministic: least starting vertex,
/// then least second vertex, extending in ascending order.
inline std::uint64_t first_chordless_cycle(const std::vector<std::uint64_t>& rows,
                                           std::uint64_t active) {
    const int n = static_cast<int>(rows.size());
    std::uint64_t found = 0;
    std::vector<int> path;
    auto dfs = [&](auto&& self, std::uint64_t path_mask, std::uint64_t interior_adj,
                   int last) -> bool {
        std::uint64_t cand = rows[last] & active & ~path_mask;
        cand &= ~((path[0] + 1 < 64) ? ((1ull << (path[0] + 1)) - 1) : ~0ull);
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            if (rows[w] & interior_adj) continue;
            if ((rows[w] >> path[0]) & 1u) {
                if (path.size() >= 2 && path[1] < w) {
                    found = path_mask | (1ull << w);
                    return true;
                }
                continue;
            }
            path.push_back(w);
            bool done = self(self, path_mask | (1ull << w), interior_adj | (1ull << last), w);
            path.pop_back();
            if (done) return true;
        }
        return false;
    };
    for (int s = 0; s < n; ++s) {
        if (!((active >> s) & 1u)) continue;
        path.assign(1, s);
        std::uint64_t firsts = rows[s] & active;
        firsts &= ~((s + 1 < 64) ? ((1ull << (s + 1)) - 1) : ~0ull);
        while (firsts) {
            int v = std::countr_zero(firsts);
            firsts &= firsts - 1;
            path.push_back(v);
            if (dfs(dfs, (1ull << s) | (1ull << v), 0ull, v)) return found;
            path.pop_back();
        }
    }
    return 0;
}

} // namespace excycles::detail
