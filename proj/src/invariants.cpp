#include "excycles/invariants.hpp"

#include "excycles/common.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace excycles {

namespace {

void check_hint(const LabeledGraph& g, const std::vector<int>& s) {
    std::vector<char> removed(g.n(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw std::invalid_argument("blocker hint: vertex out of range");
        removed[v] = 1;
    }
    std::vector<int> parent(g.n());
    for (int i = 0; i < g.n(); ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (int u = 0; u < g.n(); ++u) {
        if (removed[u]) continue;
        for (int v : g.neighbors(u)) {
            if (removed[v] || v <= u) continue;
            int ru = find(u), rv = find(v);
            if (ru == rv) throw std::invalid_argument("blocker hint is not a blocker");
            parent[ru] = rv;
        }
    }
}

// Can a proper c-coloring of G[S] (given in s_color) extend over the forest
// G-S? Bottom-up feasibility: a color survives at v unless some child is
// pinned to exactly that color.
bool forest_extends(const LabeledGraph& g, const std::vector<int>& s, const std::vector<int>& s_color,
                    int c, const std::vector<char>& in_s) {
    const int n = g.n();
    const std::uint32_t all = c >= 32 ? ~0u : ((1u << c) - 1);
    std::vector<std::uint32_t> feas(n, 0);
    std::vector<int> state(n, 0); // 0 unvisited, 1 visited
    std::vector<int> order, parent(n, -1);
    std::vector<int> s_color_of(n, -1);
    for (std::size_t i = 0; i < s.size(); ++i) s_color_of[s[i]] = s_color[i];

    for (int root = 0; root < n; ++root) {
        if (in_s[root] || state[root]) continue;
        order.clear();
        order.push_back(root);
        state[root] = 1;
        parent[root] = -1;
        for (std::size_t h = 0; h < order.size(); ++h) {
            int v = order[h];
            for (int w : g.neighbors(v))
                if (!in_s[w] && !state[w]) {
                    state[w] = 1;
                    parent[w] = v;
                    order.push_back(w);
                }
        }
        // leaves last; process in reverse BFS order
        for (std::size_t h = order.size(); h-- > 0;) {
            int v = order[h];
            std::uint32_t ok = all;
            for (int w : g.neighbors(v))
                if (in_s[w]) ok &= ~(1u << s_color_of[w]);
            for (int w : g.neighbors(v)) {
                if (in_s[w] || parent[w] != v) continue;
                std::uint32_t f = feas[w];
                if (std::popcount(f) == 1) ok &= ~f; // child pinned
                if (f == 0) return false;
            }
            feas[v] = ok;
            if (ok == 0) return false;
        }
    }
    return true;
}

bool hinted_colorable(const LabeledGraph& g, const std::vector<int>& s, int c) {
    if (c <= 0) return g.n() == 0;
    std::vector<char> in_s(g.n(), 0);
    for (int v : s) in_s[v] = 1;
    std::vector<int> s_color(s.size(), -1);
    // enumerate proper colorings of G[S] with colors < c
    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == s.size()) return forest_extends(g, s, s_color, c, in_s);
        for (int col = 0; col < c; ++col) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j)
                if (s_color[j] == col && g.has_edge(s[i], s[j])) ok = false;
            if (!ok) continue;
            s_color[i] = col;
            if (self(self, i + 1)) return true;
        }
        s_color[i] = -1;
        return false;
    };
    return rec(rec, 0);
}

// exact chromatic number by branch and bound on uncolored vertices,
// saturation-first order
int chi_search(const LabeledGraph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    if (n > 20) throw SizeGuardError("chromatic_number: unhinted exact search limited to n <= 20");
    std::vector<int> color(n, -1);
    int best = 0; // greedy upper bound first
    {
        for (int v = 0; v < n; ++v) {
            std::uint32_t used = 0;
            for (int w : g.neighbors(v))
                if (color[w] >= 0) used |= 1u << color[w];
            int col = std::countr_one(used);
            color[v] = col;
            best = std::max(best, col + 1);
        }
        std::fill(color.begin(), color.end(), -1);
    }
    int used_count = 0;
    auto rec = [&](auto&& self, int colored) -> void {
        if (used_count >= best) return;
        if (colored == n) {
            best = used_count;
            return;
        }
        // pick uncolored vertex with most distinctly-colored neighbors
        int pick = -1, sat_best = -1;
        for (int v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            std::uint32_t seen = 0;
            for (int w : g.neighbors(v))
                if (color[w] >= 0) seen |= 1u << color[w];
            int sat = std::popcount(seen);
            if (sat > sat_best) {
                sat_best = sat;
                pick = v;
            }
        }
        std::uint32_t forbidden = 0;
        for (int w : g.neighbors(pick))
            if (color[w] >= 0) forbidden |= 1u << color[w];
        int limit = std::min(used_count + 1, best - 1); // new color only one step past current
        for (int col = 0; col < limit; ++col) {
            if ((forbidden >> col) & 1u) continue;
            int prev = used_count;
            color[pick] = col;
            used_count = std::max(used_count, col + 1);
            self(self, colored + 1);
            color[pick] = -1;
            used_count = prev;
        }
    };
    rec(rec, 0);
    return best;
}

int omega_search(const LabeledGraph& g) {
    const int n = g.n();
    if (n == 0) return 0;
    if (n > 20) throw SizeGuardError("clique_number: unhinted exact search limited to n <= 20");
    // bitset max clique, candidates restricted to higher-numbered vertices
    std::vector<std::uint64_t> rows(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) rows[u] |= 1ull << v;
    int best = 0;
    auto rec = [&](auto&& self, std::uint64_t cand, int size) -> void {
        if (size + std::popcount(cand) <= best) return;
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + std::popcount(cand) <= best) return;
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, cand & rows[v], size + 1);
        }
    };
    rec(rec, (n >= 64 ? ~0ull : (1ull << n) - 1), 0);
    return best;
}

int hinted_omega(const LabeledGraph& g, const std::vector<int>& s) {
    const int k = static_cast<int>(s.size());
    if (k > 20) throw SizeGuardError("clique_number: hint larger than 20 vertices");
    std::vector<char> in_s(g.n(), 0);
    std::vector<int> s_index(g.n(), -1);
    for (int i = 0; i < k; ++i) {
        in_s[s[i]] = 1;
        s_index[s[i]] = i;
    }
    // omega_in[mask] = max clique of G[S] inside the subset; a max clique
    // either avoids the top vertex or contains it plus a clique among its
    // neighbors below
    std::vector<std::uint32_t> nbr_in_s(k, 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && g.has_edge(s[i], s[j])) nbr_in_s[i] |= 1u << j;
    std::vector<int> omega_in(std::size_t{1} << k, 0);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        int hi = 31 - std::countl_zero(mask);
        std::uint32_t rest = mask & ~(1u << hi);
        omega_in[mask] = std::max(omega_in[rest], 1 + omega_in[rest & nbr_in_s[hi]]);
    }
    auto s_mask_of_neighbors = [&](int v) {
        std::uint32_t m = 0;
        for (int w : g.neighbors(v))
            if (in_s[w]) m |= 1u << s_index[w];
        return m;
    };
    int best = omega_in[(1u << k) - 1]; // cliques entirely inside S
    for (int v = 0; v < g.n(); ++v) {
        if (in_s[v]) continue;
        best = std::max(best, 1 + omega_in[s_mask_of_neighbors(v)]);
        for (int w : g.neighbors(v)) {
            if (in_s[w] || w <= v) continue;
            best = std::max(best, 2 + omega_in[s_mask_of_neighbors(v) & s_mask_of_neighbors(w)]);
        }
    }
    return best;
}

} // namespace

int chromatic_number(const LabeledGraph& g, const std::optional<std::vector<int>>& blocker_hint) {
    if (g.n() == 0) return 0;
    if (!blocker_hint) return chi_search(g);
    check_hint(g, *blocker_hint);
    std::vector<int> s = *blocker_hint;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int c = 1; c <= static_cast<int>(s.size()) + 2; ++c)
        if (hinted_colorable(g, s, c)) return c;
    throw std::logic_error("chromatic_number: no coloring within |S|+2 colors despite blocker hint");
}

int clique_number(const LabeledGraph& g, const std::optional<std::vector<int>>& blocker_hint) {
    if (g.n() == 0) return 0;
    if (!blocker_hint) return omega_search(g);
    check_hint(g, *blocker_hint);
    std::vector<int> s = *blocker_hint;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return hinted_omega(g, s);
}

ColoringResult chi_omega(const LabeledGraph& g, const std::optional<std::vector<int>>& blocker_hint) {
    ColoringResult r;
    r.chi = chromatic_number(g, blocker_hint);
    r.omega = clique_number(g, blocker_hint);
    if (r.omega > r.chi) throw std::logic_error("invariant violated: omega > chi");
    if (blocker_hint) {
        std::vector<int> s = *blocker_hint;
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (r.chi > static_cast<int>(s.size()) + 2)
            throw std::logic_error("invariant violated: chi exceeds |S|+2 with blocker hint");
    }
    return r;
}

} // namespace excycles
