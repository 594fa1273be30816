#include "doctest.h"

#include "excycles/cycles.hpp"
#include "excycles/graph.hpp"
#include "excycles/invariants.hpp"
#include "excycles/rng.hpp"
#include "excycles/samplers.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

using namespace excycles;

namespace {

LabeledGraph complete(int n) {
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("chromatic number examples") {
    LabeledGraph forest = build_graph(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK(chromatic_number(forest, std::vector<int>{}) == 2);
    CHECK(chromatic_number(build_graph(3, {})) == 1);
    CHECK(chromatic_number(complete(4)) == 4);

    // wheel W6: hub 0 joined to all of a 5-cycle; odd rim needs 3, hub adds 1
    // (hub alone leaves the rim cycle, so the smallest hints add a rim vertex)
    LabeledGraph w6(6);
    for (int i = 1; i <= 5; ++i) {
        w6.add_edge(0, i);
        w6.add_edge(i, i == 5 ? 1 : i + 1);
    }
    CHECK(chromatic_number(w6, std::vector<int>{0, 1}) == 4);
    CHECK(chromatic_number(w6) == 4); // unstructured search agrees
}

TEST_CASE("clique number examples") {
    CHECK(clique_number(build_graph(4, {{0, 1}, {2, 3}})) == 2);
    CHECK(clique_number(complete(4)) == 4);
    // triangle plus an apex adjacent to everything, via the hint path
    LabeledGraph k4 = complete(4);
    CHECK(clique_number(k4, std::vector<int>{2, 3}) == 4);
    CHECK(chromatic_number(k4, std::vector<int>{2, 3}) == 4);
}

TEST_CASE("hint validation") {
    LabeledGraph tri = complete(3);
    CHECK_THROWS_AS(chromatic_number(tri, std::vector<int>{}), std::invalid_argument);
    CHECK_THROWS_AS(clique_number(tri, std::vector<int>{5}), std::invalid_argument);
}

TEST_CASE("hinted and unhinted paths agree on all small graphs with small blockers") {
    for (int n = 1; n <= 6; ++n) {
        const std::uint64_t total = 1ull << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            LabeledGraph g = mask_to_graph(n, mask);
            auto mb = min_blocker(g);
            if (mb.size() > 2) continue;
            int chi = chromatic_number(g);
            int omega = clique_number(g);
            CHECK(chromatic_number(g, mb) == chi);
            CHECK(clique_number(g, mb) == omega);
            CHECK(omega <= chi);
            CHECK(chi <= static_cast<int>(mb.size()) + 2);
        }
    }
}

TEST_CASE("randomized cross-validation at n = 7 and 8") {
    SeededRng rng(55);
    int done = 0;
    while (done < 400) {
        int n = 7 + static_cast<int>(rng.below(2));
        LabeledGraph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(100) < 30) g.add_edge(u, v);
        auto mb = min_blocker(g);
        if (mb.size() > 2) continue;
        ++done;
        CHECK(chromatic_number(g, mb) == chromatic_number(g));
        CHECK(clique_number(g, mb) == clique_number(g));
    }
}

TEST_CASE("apex construction samples stay within the chi bound") {
    SeededRng rng(77);
    for (int it = 0; it < 60; ++it) {
        int k = 1 + static_cast<int>(rng.below(3));
        int n = k + 5 + static_cast<int>(rng.below(20));
        auto sample = random_apex_construction(n, k, rng);
        const LabeledGraph& g = sample.first;
        const auto& s = sample.second.s;
        ColoringResult cr = chi_omega(g, s);
        CHECK(cr.chi <= k + 2);
        CHECK(cr.omega <= cr.chi);
        // lower bound applies once a spike closes a triangle with an apex
        // vertex and the forest part has an edge
        if (!sample.second.forest_edges.empty()) {
            std::vector<char> in_s(g.n(), 0);
            for (int v : s) in_s[v] = 1;
            LabeledGraph forest_part(g.n());
            for (auto [u, v] : sample.second.forest_edges) forest_part.add_edge(u, v);
            bool spike_triangle = false;
            for (auto [leaf, mid] : spikes(forest_part))
                for (int apex : s)
                    if (g.has_edge(apex, leaf) && g.has_edge(apex, mid)) spike_triangle = true;
            if (spike_triangle) CHECK(cr.chi >= 3);
        }
    }
}
