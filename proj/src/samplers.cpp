#include "excycles/samplers.hpp"

#include "excycles/common.hpp"
#include "excycles/detail/bits.hpp"
#include "excycles/enumeration.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <thread>

namespace excycles {

namespace {

struct ForestTables {
    std::vector<BigInt> f;    // forest counts
    std::vector<BigInt> tpow; // tree counts, tpow[0] unused
};

std::shared_mutex tables_mutex;
ForestTables g_tables;

void warm_locked(int max_n) {
    auto& t = g_tables;
    if (t.f.empty()) {
        t.f.emplace_back(1);
        t.tpow.emplace_back(0);
    }
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    while (static_cast<int>(t.f.size()) <= max_n) {
        int m = static_cast<int>(t.f.size());
        t.tpow.push_back(tree_count(m));
        // f[m] = sum over the size s of the component holding the least label
        auto partial = [&](int s_lo, int s_hi) {
            BigInt acc;
            BigInt binom = BigInt::binomial(static_cast<unsigned>(m - 1), static_cast<unsigned>(s_lo - 1));
            for (int s = s_lo; s < s_hi; ++s) {
                acc += binom * t.tpow[s] * t.f[m - s];
                binom.mul_small(static_cast<std::uint64_t>(m - s));
                binom.divexact_small(static_cast<std::uint64_t>(s));
            }
            return acc;
        };
        BigInt total;
        if (m < 256 || hw == 1) {
            total = partial(1, m + 1);
        } else {
            int chunks = static_cast<int>(hw);
            std::vector<BigInt> parts(chunks);
            std::vector<std::thread> pool;
            for (int c = 0; c < chunks; ++c) {
                int lo = 1 + static_cast<int>(static_cast<long long>(m) * c / chunks);
                int hi = 1 + static_cast<int>(static_cast<long long>(m) * (c + 1) / chunks);
                pool.emplace_back([&parts, &partial, c, lo, hi] { parts[c] = partial(lo, hi); });
            }
            for (auto& th : pool) th.join();
            for (auto& p : parts) total += p;
        }
        t.f.push_back(std::move(total));
    }
}

// uniform tree on the given sorted label set, edges appended to out
void random_tree_on(const std::vector<int>& labels, SeededRng& rng,
                    std::vector<std::pair<int, int>>& out) {
    const int m = static_cast<int>(labels.size());
    if (m <= 1) return;
    if (m == 2) {
        out.emplace_back(labels[0], labels[1]);
        return;
    }
    std::vector<int> seq(m - 2);
    for (int& x : seq) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(m)));
    // linear Prufer decode over positions 0..m-1
    std::vector<int> deg(m, 1);
    for (int x : seq) ++deg[x];
    int ptr = 0;
    while (deg[ptr] != 1) ++ptr;
    int leaf = ptr;
    for (int i = 0; i < m - 2; ++i) {
        int v = seq[i];
        out.emplace_back(labels[leaf], labels[v]);
        if (--deg[v] == 1 && v < ptr) {
            leaf = v;
        } else {
            ++ptr;
            while (deg[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    out.emplace_back(labels[leaf], labels[m - 1]);
}

// exact-uniform forest on the given sorted label set (tables must cover it)
void sample_forest_on(std::vector<int> labels, SeededRng& rng,
                      std::vector<std::pair<int, int>>& out) {
    const auto& t = g_tables;
    while (labels.size() > 1) {
        const int nn = static_cast<int>(labels.size());
        BigInt u = rng.below_big(t.f[nn]);
        // scan component sizes from nn downward; mass concentrates at the top
        int chosen = -1;
        BigInt acc;
        BigInt binom = 1; // C(nn-1, m-1) at m = nn
        for (int m = nn; m >= 1; --m) {
            acc += binom * t.tpow[m] * t.f[nn - m];
            if (u < acc) {
                chosen = m;
                break;
            }
            if (m > 1) {
                binom.mul_small(static_cast<std::uint64_t>(m - 1));
                binom.divexact_small(static_cast<std::uint64_t>(nn - m + 1));
            }
        }
        assert(chosen >= 1);
        // the component holds the least label plus a uniform (chosen-1)-subset
        std::vector<int> rest(labels.begin() + 1, labels.end());
        for (int i = 0; i < chosen - 1; ++i) {
            std::size_t j = i + rng.below(rest.size() - i);
            std::swap(rest[i], rest[j]);
        }
        std::vector<int> comp(rest.begin(), rest.begin() + (chosen - 1));
        comp.push_back(labels[0]);
        std::sort(comp.begin(), comp.end());
        random_tree_on(comp, rng, out);
        std::vector<int> remaining(rest.begin() + (chosen - 1), rest.end());
        std::sort(remaining.begin(), remaining.end());
        labels = std::move(remaining);
    }
}

} // namespace

void warm_forest_tables(int max_n) {
    if (max_n < 0) return;
    std::unique_lock lock(tables_mutex);
    warm_locked(max_n);
}

LabeledGraph random_tree(int n, SeededRng& rng) {
    if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    std::vector<std::pair<int, int>> edges;
    random_tree_on(labels, rng, edges);
    return build_graph(n, edges);
}

LabeledGraph random_forest(int n, SeededRng& rng) {
    if (n < 0) throw std::invalid_argument("random_forest: n must be >= 0");
    warm_forest_tables(n);
    std::shared_lock lock(tables_mutex);
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    std::vector<std::pair<int, int>> edges;
    sample_forest_on(std::move(labels), rng, edges);
    return build_graph(n, edges);
}

std::pair<LabeledGraph, ApexConstruction> random_apex_construction(int n, int k, SeededRng& rng) {
    if (k < 0) throw std::invalid_argument("random_apex_construction: k must be >= 0");
    if (n <= k) throw std::invalid_argument("random_apex_construction: need n > k");
    warm_forest_tables(n - k);
    std::shared_lock lock(tables_mutex);

    ApexConstruction cons;
    // (i) uniform k-set S and a uniform graph on it
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    for (int i = 0; i < k; ++i) {
        std::size_t j = i + rng.below(pool.size() - i);
        std::swap(pool[i], pool[j]);
    }
    cons.s.assign(pool.begin(), pool.begin() + k);
    std::sort(cons.s.begin(), cons.s.end());
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (rng.coin()) cons.s_edges.emplace_back(cons.s[i], cons.s[j]);

    // (ii) uniform forest on the complement
    std::vector<char> in_s(n, 0);
    for (int v : cons.s) in_s[v] = 1;
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!in_s[v]) rest.push_back(v);
    sample_forest_on(rest, rng, cons.forest_edges);

    // (iii) uniform bipartite layer between S and the rest
    for (int s : cons.s)
        for (int v : rest)
            if (rng.coin()) cons.bipartite_edges.emplace_back(s, v);

    std::vector<std::pair<int, int>> all = cons.s_edges;
    all.insert(all.end(), cons.forest_edges.begin(), cons.forest_edges.end());
    all.insert(all.end(), cons.bipartite_edges.begin(), cons.bipartite_edges.end());
    return {build_graph(n, all), std::move(cons)};
}

LabeledGraph exact_uniform_ex(int n, int k, SeededRng& rng) {
    if (n < 1 || n > 7)
        throw SizeGuardError("exact_uniform_ex: enumeration-backed sampler limited to n <= 7");
    if (k < 0 || k > 2) throw SizeGuardError("exact_uniform_ex: k must be between 0 and 2");

    static std::map<std::pair<int, int>, std::vector<std::uint32_t>> cache;
    static std::mutex cache_mutex;
    const std::vector<std::uint32_t>* members = nullptr;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto key = std::make_pair(n, k);
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<std::uint32_t> list;
            const std::uint64_t total = 1ull << (n * (n - 1) / 2);
            for (std::uint64_t mask = 0; mask < total; ++mask) {
                LabeledGraph g = mask_to_graph(n, mask);
                auto cycles = chordless_cycle_masks(g);
                bool in;
                if (k == 0) in = cycles.empty();
                else if (k == 1) in = !detail::two_disjoint_cycles(cycles);
                else in = !detail::three_disjoint_cycles(cycles, n);
                if (in) list.push_back(static_cast<std::uint32_t>(mask));
            }
            it = cache.emplace(key, std::move(list)).first;
        }
        members = &it->second;
    }
    std::uint32_t pick = (*members)[rng.below(members->size())];
    return mask_to_graph(n, pick);
}

} // namespace excycles
