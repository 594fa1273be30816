#include "doctest.h"

#include "excycles/classify.hpp"
#include "excycles/common.hpp"
#include "excycles/cycles.hpp"
#include "excycles/graph.hpp"
#include "excycles/rng.hpp"
#include "support/test_support.hpp"

#include <string>

using namespace excycles;

namespace {

LabeledGraph complete(int n) {
    LabeledGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("K4 is a wheel and not an apex forest") {
    Ex2CLabel lab = classify_ex2c(complete(4));
    CHECK(lab.member);
    CHECK(lab.labels.count(Ex2CClass::WHEEL) == 1);
    CHECK(lab.labels.count(Ex2CClass::APEX_FOREST) == 0);
}

TEST_CASE("K5 carries the K label") {
    Ex2CLabel lab = classify_ex2c(complete(5));
    CHECK(lab.member);
    CHECK(lab.labels.count(Ex2CClass::K_TYPE) == 1);
    CHECK(lab.to_json().find("\"K_TYPE\"") != std::string::npos);
}

TEST_CASE("triangle with pendant trees is both apex forest and B type") {
    LabeledGraph g = build_graph(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {1, 5}, {5, 6}});
    Ex2CLabel lab = classify_ex2c(g);
    CHECK(lab.member);
    CHECK(lab.labels.count(Ex2CClass::APEX_FOREST) == 1);
    CHECK(lab.labels.count(Ex2CClass::B_TYPE) == 1);
    CHECK(lab.labels.count(Ex2CClass::WHEEL) == 0);
}

TEST_CASE("theta graphs are B type") {
    LabeledGraph theta = build_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}});
    Ex2CLabel lab = classify_ex2c(theta);
    CHECK(lab.member);
    CHECK(lab.labels.count(Ex2CClass::B_TYPE) == 1);
}

TEST_CASE("forests and the empty graph are members via the apex label") {
    CHECK(classify_ex2c(build_graph(3, {})).member);
    CHECK(classify_ex2c(LabeledGraph(0)).member);
    CHECK(classify_ex2c(build_graph(2, {{0, 1}})).labels.count(Ex2CClass::APEX_FOREST) == 1);
}

TEST_CASE("two disjoint triangles are not members") {
    LabeledGraph g = build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    Ex2CLabel lab = classify_ex2c(g);
    CHECK_FALSE(lab.member);
    CHECK(lab.labels.empty());
}

TEST_CASE("exhaustive oracle agreement for n = 4, 5, 6") {
    for (int n = 4; n <= 6; ++n) {
        OracleReport rep = ex2c_oracle_check(n, 2);
        CHECK(rep.mismatches == 0);
        CHECK(rep.graphs_checked == (1ull << (n * (n - 1) / 2)));
    }
}

TEST_CASE("labels are invariant under subdividing a core edge") {
    SeededRng rng(17);
    // graphs whose cores exercise each matcher
    std::vector<LabeledGraph> bases;
    bases.push_back(complete(4));
    bases.push_back(complete(5));
    bases.push_back(build_graph(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}));
    bases.push_back(build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 4}, {4, 5}}));
    // wheel W5 with a doubled spoke realized as a parallel path
    bases.push_back(build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 1}, {0, 2}, {0, 3}, {0, 4}, {4, 1}, {1, 5}, {5, 0}}));
    for (const auto& g : bases) {
        Ex2CLabel base = classify_ex2c(g);
        auto core_vs = two_core_vertices(g);
        std::vector<char> in_core(g.n(), 0);
        for (int v : core_vs) in_core[v] = 1;
        for (int rep = 0; rep < 6; ++rep) {
            // subdivide a random core edge
            std::vector<std::pair<int, int>> core_edges;
            for (auto [u, v] : g.edges())
                if (in_core[u] && in_core[v]) core_edges.push_back({u, v});
            if (core_edges.empty()) continue;
            auto [a, b] = core_edges[rng.below(core_edges.size())];
            LabeledGraph sub(g.n() + 1);
            for (auto [u, v] : g.edges())
                if (!(u == a && v == b)) sub.add_edge(u, v);
            sub.add_edge(a, g.n());
            sub.add_edge(g.n(), b);
            Ex2CLabel after = classify_ex2c(sub);
            CHECK(after.member == base.member);
            CHECK(after.labels.count(Ex2CClass::WHEEL) == base.labels.count(Ex2CClass::WHEEL));
            CHECK(after.labels.count(Ex2CClass::B_TYPE) == base.labels.count(Ex2CClass::B_TYPE));
            CHECK(after.labels.count(Ex2CClass::K_TYPE) == base.labels.count(Ex2CClass::K_TYPE));
        }
    }
}

TEST_CASE("oracle guard") {
    CHECK_THROWS_AS(ex2c_oracle_check(8), SizeGuardError);
}
