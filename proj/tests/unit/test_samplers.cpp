#include "doctest.h"

#include "excycles/common.hpp"
#include "excycles/cycles.hpp"
#include "excycles/enumeration.hpp"
#include "excycles/graph.hpp"
#include "excycles/rng.hpp"
#include "excycles/samplers.hpp"

#include <cmath>
#include <map>
#include <set>
#include <vector>

using namespace excycles;

namespace {

double chi_square(const std::map<std::uint64_t, std::uint64_t>& counts, std::uint64_t draws,
                  std::uint64_t cells) {
    double expect = static_cast<double>(draws) / static_cast<double>(cells);
    double stat = 0.0;
    std::uint64_t seen = 0;
    for (const auto& [cell, c] : counts) {
        double d = static_cast<double>(c) - expect;
        stat += d * d / expect;
        ++seen;
    }
    stat += static_cast<double>(cells - seen) * expect; // empty cells
    return stat;
}

} // namespace

TEST_CASE("rng determinism and splitting") {
    SeededRng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    SeededRng s1 = SeededRng(7).split(3), s2 = SeededRng(7).split(3), s3 = SeededRng(7).split(4);
    CHECK(s1.next_u64() == s2.next_u64());
    CHECK(s1.next_u64() != s3.next_u64()); // overwhelmingly likely, fixed seeds
    SeededRng big(9);
    BigInt bound = BigInt::power(10, 30);
    for (int i = 0; i < 50; ++i) CHECK(big.below_big(bound) < bound);
}

TEST_CASE("random trees: tiny cases and shape") {
    SeededRng rng(1);
    LabeledGraph t1 = random_tree(1, rng);
    CHECK(t1.n() == 1);
    CHECK(t1.edge_count() == 0);
    LabeledGraph t2 = random_tree(2, rng);
    CHECK(t2.edge_count() == 1);
    for (int it = 0; it < 50; ++it) {
        int n = 2 + static_cast<int>(rng.below(40));
        LabeledGraph t = random_tree(n, rng);
        CHECK(t.edge_count() == n - 1);
        CHECK(is_forest(t));
        CHECK(components(t).size() == 1);
    }
    CHECK_THROWS_AS(random_tree(0, rng), std::invalid_argument);
}

TEST_CASE("random_tree is uniform over the 16 labeled trees on 4 vertices") {
    SeededRng rng(20240601);
    std::map<std::uint64_t, std::uint64_t> counts;
    const std::uint64_t draws = 16000;
    for (std::uint64_t i = 0; i < draws; ++i) ++counts[graph_to_mask(random_tree(4, rng))];
    CHECK(counts.size() == 16);
    // 0.999 quantile of chi^2 with 15 degrees of freedom
    CHECK(chi_square(counts, draws, 16) < 37.697);
}

TEST_CASE("random forests: tiny cases") {
    SeededRng rng(2);
    LabeledGraph f0 = random_forest(0, rng);
    CHECK(f0.n() == 0);
    // n = 2: the edge appears with probability exactly 1/2
    std::uint64_t edges = 0;
    const std::uint64_t draws = 10000;
    for (std::uint64_t i = 0; i < draws; ++i) edges += random_forest(2, rng).edge_count();
    double p = static_cast<double>(edges) / draws;
    CHECK(p > 0.47);
    CHECK(p < 0.53);
}

TEST_CASE("random_forest is uniform over the 38 forests on 4 vertices") {
    SeededRng rng(424242);
    std::map<std::uint64_t, std::uint64_t> counts;
    const std::uint64_t draws = 38000;
    for (std::uint64_t i = 0; i < draws; ++i) {
        LabeledGraph f = random_forest(4, rng);
        CHECK(is_forest(f));
        ++counts[graph_to_mask(f)];
    }
    CHECK(counts.size() == 38);
    // 0.999 quantile of chi^2 with 37 degrees of freedom
    CHECK(chi_square(counts, draws, 38) < 69.346);
}

TEST_CASE("apex construction with k = 0 collapses to the forest sampler") {
    SeededRng r1(555), r2(555);
    for (int it = 0; it < 20; ++it) {
        auto sample = random_apex_construction(9, 0, r1);
        LabeledGraph f = random_forest(9, r2);
        CHECK(sample.first == f);
        CHECK(sample.second.s.empty());
    }
}

TEST_CASE("apex construction output always carries its witness") {
    SeededRng rng(31337);
    for (int it = 0; it < 80; ++it) {
        int k = static_cast<int>(rng.below(3));
        int n = k + 1 + static_cast<int>(rng.below(12));
        auto sample = random_apex_construction(n, k, rng);
        const auto& s = sample.second.s;
        CHECK(static_cast<int>(s.size()) == k);
        // G - S is a forest
        std::vector<char> in_s(n, 0);
        for (int v : s) in_s[v] = 1;
        LabeledGraph rest(n);
        for (auto [u, v] : sample.first.edges())
            if (!in_s[u] && !in_s[v]) rest.add_edge(u, v);
        CHECK(is_forest(rest));
        if (n <= 12) CHECK(is_apex_forest(sample.first, k).first);
    }
    CHECK_THROWS_AS(random_apex_construction(2, 2, rng), std::invalid_argument);
}

TEST_CASE("apex construction at n=4, k=1 never yields K4") {
    SeededRng rng(99991);
    for (int it = 0; it < 4000; ++it) {
        auto sample = random_apex_construction(4, 1, rng);
        CHECK(graph_to_mask(sample.first) != 63);
    }
}

TEST_CASE("exact uniform sampler over small ex classes") {
    SeededRng rng(123);
    // n=3, k=0: uniform over the 7 forests
    std::map<std::uint64_t, std::uint64_t> counts;
    const std::uint64_t draws = 14000;
    for (std::uint64_t i = 0; i < draws; ++i) {
        LabeledGraph g = exact_uniform_ex(3, 0, rng);
        CHECK(is_forest(g));
        ++counts[graph_to_mask(g)];
    }
    CHECK(counts.size() == 7);
    CHECK(chi_square(counts, draws, 7) < 22.458); // 0.999 quantile, 6 dof

    // n=4, k=1: all 64 graphs
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 6000; ++i) seen.insert(graph_to_mask(exact_uniform_ex(4, 1, rng)));
    CHECK(seen.size() == 64);

    // n=6, k=1: postcondition only
    for (int i = 0; i < 150; ++i) CHECK(is_in_ex_cycles(exact_uniform_ex(6, 1, rng), 1));

    CHECK_THROWS_AS(exact_uniform_ex(8, 1, rng), SizeGuardError);
    CHECK_THROWS_AS(exact_uniform_ex(5, 3, rng), SizeGuardError);
}

TEST_CASE("spike counts concentrate on large random forests") {
    SeededRng rng(777);
    const int reps = 200, n = 1000;
    warm_forest_tables(n);
    std::vector<double> counts;
    for (int i = 0; i < reps; ++i)
        counts.push_back(static_cast<double>(spikes(random_forest(n, rng)).size()));
    double mean = 0, var = 0, mn = 1e18;
    for (double c : counts) {
        mean += c;
        mn = std::min(mn, c);
    }
    mean /= reps;
    for (double c : counts) var += (c - mean) * (c - mean);
    var /= reps - 1;
    double cv = std::sqrt(var) / mean;
    CHECK(cv < 0.2);
    CHECK(mn > mean / 2);
}
