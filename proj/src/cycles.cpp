#include "excycles/cycles.hpp"

#include "excycles/common.hpp"
#include "excycles/detail/bits.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace excycles {

namespace {

using detail::bit_rows;
using detail::forest_bits;
using detail::full_mask;
using detail::mask_to_vec;

using detail::first_chordless_cycle;

void guard_exact(const LabeledGraph& g, const char* what) {
    if (g.n() > 16)
        throw SizeGuardError(std::string(what) + ": exact search limited to n <= 16, got n = " +
                             std::to_string(g.n()));
}

void pack_dfs(const std::vector<std::uint64_t>& cycles, std::size_t i, std::uint64_t used,
              std::vector<std::size_t>& cur, int& best, std::vector<std::size_t>& best_sel) {
    if (static_cast<int>(cur.size() + (cycles.size() - i)) <= best) return;
    if (i == cycles.size()) {
        if (static_cast<int>(cur.size()) > best) {
            best = static_cast<int>(cur.size());
            best_sel = cur;
        }
        return;
    }
    if (!(cycles[i] & used)) {
        cur.push_back(i);
        pack_dfs(cycles, i + 1, used | cycles[i], cur, best, best_sel);
        cur.pop_back();
    }
    pack_dfs(cycles, i + 1, used, cur, best, best_sel);
}

bool fvs_exists(const std::vector<std::uint64_t>& rows, std::uint64_t active, int budget) {
    std::uint64_t cyc = first_chordless_cycle(rows, active);
    if (!cyc) return true;
    if (budget == 0) return false;
    while (cyc) {
        int v = std::countr_zero(cyc);
        cyc &= cyc - 1;
        if (fvs_exists(rows, active & ~(1ull << v), budget - 1)) return true;
    }
    return false;
}

} // namespace

std::pair<int, PackingWitness> cycle_packing_number(const LabeledGraph& g) {
    guard_exact(g, "cycle_packing_number");
    auto cycles = chordless_cycle_masks(g);
    int best = 0;
    std::vector<std::size_t> cur, best_sel;
    pack_dfs(cycles, 0, 0, cur, best, best_sel);
    PackingWitness w;
    for (std::size_t i : best_sel) w.cycles.push_back(mask_to_vec(cycles[i]));
    return {best, w};
}

bool is_in_ex_cycles(const LabeledGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("is_in_ex_cycles: k must be >= 0");
    guard_exact(g, "is_in_ex_cycles");
    return cycle_packing_number(g).first <= k;
}

int min_blocker_size(const LabeledGraph& g) {
    guard_exact(g, "min_blocker");
    auto rows = bit_rows(g);
    std::uint64_t active = full_mask(g.n());
    for (int s = 0;; ++s)
        if (fvs_exists(rows, active, s)) return s;
}

std::vector<int> min_blocker(const LabeledGraph& g) {
    guard_exact(g, "min_blocker");
    auto rows = bit_rows(g);
    std::uint64_t active = full_mask(g.n());
    int target = min_blocker_size(g);
    std::vector<int> chosen;
    for (int v = 0; v < g.n() && static_cast<int>(chosen.size()) < target; ++v) {
        if (fvs_exists(rows, active & ~(1ull << v), target - static_cast<int>(chosen.size()) - 1)) {
            chosen.push_back(v);
            active &= ~(1ull << v);
        }
    }
    return chosen;
}

std::pair<bool, std::optional<std::vector<int>>> is_apex_forest(const LabeledGraph& g, int k) {
    if (k < 0) throw std::invalid_argument("is_apex_forest: k must be >= 0");
    const int n = g.n();
    if (n <= 64) {
        auto rows = bit_rows(g);
        std::uint64_t all = full_mask(n);
        int kk = std::min(k, n);
        // sizes in increasing order, subsets of each size in lexicographic order
        for (int s = 0; s <= kk; ++s) {
            std::vector<int> comb(s);
            for (int i = 0; i < s; ++i) comb[i] = i;
            while (true) {
                std::uint64_t removed = 0;
                for (int v : comb) removed |= 1ull << v;
                if (forest_bits(rows, all & ~removed)) return {true, comb};
                if (s == 0) break;
                int i = s - 1;
                while (i >= 0 && comb[i] == n - s + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < s; ++j) comb[j] = comb[j - 1] + 1;
            }
            if (s == 0 && n == 0) return {true, std::vector<int>{}};
        }
        return {false, std::nullopt};
    }
    // adjacency-list fallback for large graphs, same enumeration
    std::vector<char> removed(n, 0);

    auto acyclic = [&]() {
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (int u = 0; u < n; ++u) {
            if (removed[u]) continue;
            for (int v : g.neighbors(u)) {
                if (removed[v] || v <= u) continue;
                int ru = find(u), rv = find(v);
                if (ru == rv) return false;
                parent[ru] = rv;
            }
        }
        return true;
    };
    // try sizes in increasing order so the witness is minimal, lexicographically least
    for (int s = 0; s <= std::min(k, n); ++s) {
        std::vector<int> c(s);
        for (int i = 0; i < s; ++i) c[i] = i;
        while (true) {
            std::fill(removed.begin(), removed.end(), 0);
            for (int v : c) removed[v] = 1;
            if (acyclic()) return {true, c};
            if (s == 0) break;
            int i = s - 1;
            while (i >= 0 && c[i] == n - s + i) --i;
            if (i < 0) break;
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
        }
    }
    return {false, std::nullopt};
}

namespace {

struct RedundantState {
    const LabeledGraph* g;
    std::vector<char> alive;
    std::vector<char> in_q;
    std::vector<int> q_sorted; // current Q, ascending
};

// trees of the forest part (alive and not in Q), each sorted, in min-vertex order
std::vector<std::vector<int>> forest_trees(const RedundantState& st) {
    const LabeledGraph& g = *st.g;
    std::vector<char> seen(g.n(), 0);
    std::vector<std::vector<int>> trees;
    for (int s = 0; s < g.n(); ++s) {
        if (!st.alive[s] || st.in_q[s] || seen[s]) continue;
        std::vector<int> tree, stack = {s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            tree.push_back(v);
            for (int w : g.neighbors(v))
                if (st.alive[w] && !st.in_q[w] && !seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        std::sort(tree.begin(), tree.end());
        trees.push_back(std::move(tree));
    }
    return trees;
}

void redundant_rec(RedundantState& st, int depth_left, std::vector<int>& s_out,
                   std::vector<int>& a_out) {
    const LabeledGraph& g = *st.g;
    auto trees = forest_trees(st);

    // first tree (in min-vertex order) where some x in Q has two neighbors
    const std::vector<int>* tree = nullptr;
    for (const auto& t : trees) {
        std::vector<char> in_t(g.n(), 0);
        for (int v : t) in_t[v] = 1;
        for (int x : st.q_sorted) {
            int cnt = 0;
            for (int w : g.neighbors(x))
                if (st.alive[w] && in_t[w] && ++cnt >= 2) break;
            if (cnt >= 2) {
                tree = &t;
                break;
            }
        }
        if (tree) break;
    }
    if (!tree) return; // base case: S and A stay empty from here down

    if (depth_left == 0)
        throw NotInExCyclesError(
            "redundant_blocker: recursion depth exhausted; the graph has k+1 disjoint cycles");

    // root the tree at its least vertex
    int root = tree->front();
    std::vector<char> in_t(g.n(), 0);
    for (int v : *tree) in_t[v] = 1;
    std::vector<int> parent(g.n(), -1), depth(g.n(), -1), order;
    order.reserve(tree->size());
    depth[root] = 0;
    order.push_back(root);
    for (std::size_t h = 0; h < order.size(); ++h) {
        int v = order[h];
        for (int w : g.neighbors(v))
            if (in_t[w] && st.alive[w] && depth[w] < 0) {
                depth[w] = depth[v] + 1;
                parent[w] = v;
                order.push_back(w);
            }
    }

    // cnt[x][v] = neighbors of x inside the subtree rooted at v (post-order DP)
    std::vector<int> r_candidates;
    int u = -1, best_depth = -1;
    {
        std::vector<std::vector<int>> cnt(st.q_sorted.size(), std::vector<int>(g.n(), 0));
        for (std::size_t qi = 0; qi < st.q_sorted.size(); ++qi) {
            int x = st.q_sorted[qi];
            auto& c = cnt[qi];
            for (int w : g.neighbors(x))
                if (in_t[w] && st.alive[w]) c[w] = 1;
            for (std::size_t h = order.size(); h-- > 1;) {
                int v = order[h];
                c[parent[v]] += c[v];
            }
        }
        for (int v : *tree) {
            bool in_r = false;
            for (std::size_t qi = 0; qi < st.q_sorted.size() && !in_r; ++qi)
                if (cnt[qi][v] >= 2) in_r = true;
            if (!in_r) continue;
            if (depth[v] > best_depth || (depth[v] == best_depth && v < u)) {
                best_depth = depth[v];
                u = v;
            }
        }
        // z: least x in Q with two neighbors in the subtree at u
        int z = -1;
        std::vector<char> in_sub(g.n(), 0);
        for (int v : order) {
            if (v == u || (parent[v] >= 0 && in_sub[parent[v]])) in_sub[v] = 1;
        }
        for (std::size_t qi = 0; qi < st.q_sorted.size(); ++qi) {
            if (cnt[qi][u] >= 2) {
                z = st.q_sorted[qi];
                break;
            }
        }
        // remove the subtree at u and the blocker vertex z, then recurse
        for (int v = 0; v < g.n(); ++v)
            if (in_sub[v]) st.alive[v] = 0;
        st.alive[z] = 0;
        st.in_q[z] = 0;
        st.q_sorted.erase(std::find(st.q_sorted.begin(), st.q_sorted.end(), z));

        redundant_rec(st, depth_left - 1, s_out, a_out);
        s_out.push_back(z);
        a_out.push_back(u);
    }
}

} // namespace

BlockerCertificate redundant_blocker(const LabeledGraph& g, int k, const std::vector<int>& q) {
    if (k < 0) throw std::invalid_argument("redundant_blocker: k must be >= 0");
    std::vector<int> q_sorted = q;
    std::sort(q_sorted.begin(), q_sorted.end());
    q_sorted.erase(std::unique(q_sorted.begin(), q_sorted.end()), q_sorted.end());
    for (int v : q_sorted)
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("redundant_blocker: Q contains vertex out of range");

    // eager check that Q blocks (cheap); membership in ex(k+1)C is detected
    // lazily through recursion depth
    {
        std::vector<char> removed(g.n(), 0);
        for (int v : q_sorted) removed[v] = 1;
        std::vector<int> parent(g.n());
        for (int i = 0; i < g.n(); ++i) parent[i] = i;
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (int a = 0; a < g.n(); ++a) {
            if (removed[a]) continue;
            for (int b : g.neighbors(a)) {
                if (removed[b] || b <= a) continue;
                int ra = find(a), rb = find(b);
                if (ra == rb) throw std::invalid_argument("redundant_blocker: Q is not a blocker");
                parent[ra] = rb;
            }
        }
    }

    RedundantState st;
    st.g = &g;
    st.alive.assign(g.n(), 1);
    st.in_q.assign(g.n(), 0);
    for (int v : q_sorted) st.in_q[v] = 1;
    st.q_sorted = q_sorted;

    BlockerCertificate cert;
    cert.k = k;
    cert.Q = q_sorted;
    redundant_rec(st, k, cert.S, cert.A);
    std::sort(cert.S.begin(), cert.S.end());
    std::sort(cert.A.begin(), cert.A.end());
    cert.B = q_sorted;
    cert.B.insert(cert.B.end(), cert.A.begin(), cert.A.end());
    std::sort(cert.B.begin(), cert.B.end());
    return cert;
}

bool verify_redundant(const LabeledGraph& g, const std::vector<int>& b, int k) {
    std::vector<int> bs = b;
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    auto blocked = [&](const std::vector<char>& removed) {
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
                if (ru == rv) return false;
                parent[ru] = rv;
            }
        }
        return true;
    };
    std::vector<char> removed(g.n(), 0);
    for (int v : bs) removed[v] = 1;
    if (!blocked(removed)) return false;
    int exceptions = 0;
    for (int v : bs) {
        removed[v] = 0;
        if (!blocked(removed)) ++exceptions;
        removed[v] = 1;
    }
    return exceptions <= k;
}

std::string BlockerCertificate::to_json() const {
    auto arr = [](const std::vector<int>& v) {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i] + 1;
        os << "]";
        return os.str();
    };
    std::ostringstream os;
    os << "{\"Q\":" << arr(Q) << ",\"S\":" << arr(S) << ",\"A\":" << arr(A) << ",\"B\":" << arr(B)
       << ",\"k\":" << k << "}";
    return os.str();
}

} // namespace excycles
