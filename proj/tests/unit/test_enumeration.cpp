#include "doctest.h"

#include "excycles/common.hpp"
#include "excycles/cycles.hpp"
#include "excycles/enumeration.hpp"
#include "excycles/graph.hpp"

#include <string>

using namespace excycles;

namespace {

// independent oracle: count forests/trees by raw mask sweep with is_forest
std::pair<std::uint64_t, std::uint64_t> sweep_forests_trees(int n) {
    std::uint64_t forests = 0, trees = 0;
    const std::uint64_t total = 1ull << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        LabeledGraph g = mask_to_graph(n, mask);
        if (!is_forest(g)) continue;
        ++forests;
        if (g.edge_count() == n - 1) ++trees;
    }
    return {forests, trees};
}

} // namespace

TEST_CASE("tree counts") {
    CHECK(tree_count(1) == BigInt(1));
    CHECK(tree_count(2) == BigInt(1));
    CHECK(tree_count(3) == BigInt(3));
    CHECK(tree_count(4) == BigInt(16)); // cross-checked below by enumeration
    CHECK(sweep_forests_trees(4).second == 16);
    CHECK(tree_count(10).to_string() == "100000000");
    CHECK_THROWS_AS(tree_count(0), std::invalid_argument);
}

TEST_CASE("forest counts against exhaustive enumeration") {
    CHECK(forest_count(0) == BigInt(1));
    CHECK(forest_count(3) == BigInt(7));
    CHECK(forest_count(4) == BigInt(38));
    for (int n = 1; n <= 6; ++n)
        CHECK(forest_count(n) == BigInt::from_u64(sweep_forests_trees(n).first));
}

TEST_CASE("forests by component count") {
    CHECK(forest_count_by_components(3, 3) == BigInt(1)); // edgeless
    CHECK(forest_count_by_components(3, 1) == tree_count(3));
    CHECK_THROWS_AS(forest_count_by_components(3, 4), std::invalid_argument);
    // row sums reproduce the forest counts
    for (int n = 0; n <= 30; ++n) {
        BigInt sum;
        for (int j = 0; j <= n; ++j) sum += forest_count_by_components(n, j);
        CHECK(sum == forest_count(n));
    }
}

TEST_CASE("component tail bound holds exactly for n <= 12") {
    // #forests with at least t+1 components is at most forest_count(n)/t!
    for (int n = 1; n <= 12; ++n) {
        for (int t = 1; t <= n; ++t) {
            BigInt tail;
            for (int j = t + 1; j <= n; ++j) tail += forest_count_by_components(n, j);
            CHECK(tail * BigInt::factorial(static_cast<unsigned>(t)) <= forest_count(n));
        }
    }
}

TEST_CASE("census n=3 kmax=0") {
    CountRecord r = census(3, 0);
    CHECK(r.forests == BigInt(7));
    CHECK(r.apex[0] == BigInt(7));
    CHECK(r.exc[0] == BigInt(7));
    CHECK(r.trees == BigInt(3));
}

TEST_CASE("census n=4 kmax=1: the difference class is exactly K4") {
    CountRecord r = census(4, 1);
    CHECK(r.exc[1] == BigInt(64));
    CHECK(r.apex[1] == BigInt(63));
    CHECK(r.diff[1] == BigInt(1));
    CHECK(r.forests == BigInt(38));
    CHECK(r.trees == BigInt(16));
    // the lone member must be K4: full mask, not apex, still no two disjoint cycles
    LabeledGraph k4 = mask_to_graph(4, (1ull << 6) - 1);
    CHECK(is_in_ex_cycles(k4, 1));
    CHECK_FALSE(is_apex_forest(k4, 1).first);
}

TEST_CASE("census n=5 kmax=1: inclusion and the vertex-count bound") {
    CountRecord r = census(5, 1);
    CHECK(r.exc[1] == BigInt(1024)); // every 5-vertex graph lacks two disjoint cycles
    CHECK(r.apex[1] <= r.exc[1]);
}

TEST_CASE("census guards and parallel determinism") {
    CHECK_THROWS_AS(census(8, 1), SizeGuardError);
    CHECK_THROWS_AS(census(9, 1, 1, true), SizeGuardError);
    CHECK_THROWS_AS(census(4, 3), SizeGuardError);
    CountRecord a = census(5, 1, 1);
    CountRecord b = census(5, 1, 4);
    CHECK(a.exc[1] == b.exc[1]);
    CHECK(a.apex[1] == b.apex[1]);
    CHECK(a.wheel == b.wheel);
    CHECK(a.wheel_rooted == b.wheel_rooted);
    CHECK(a.btype == b.btype);
}

TEST_CASE("census row serialization") {
    CountRecord r = census(4, 1);
    std::string rows = r.to_json_rows();
    CHECK(rows.find("{\"n\":4,\"class\":\"ex2C\",\"k\":1,\"count\":\"64\"}") != std::string::npos);
    CHECK(rows.find("{\"n\":4,\"class\":\"apex1F\",\"k\":1,\"count\":\"63\"}") != std::string::npos);
    CHECK(rows.find("{\"n\":4,\"class\":\"forests\",\"count\":\"38\"}") != std::string::npos);
    std::string csv = r.to_csv();
    CHECK(csv.find("4,ex2C,1,64") != std::string::npos);
    CHECK(csv.rfind("n,class,k,count", 0) == 0);
}

TEST_CASE("count record inclusions hold for every n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        CountRecord r = census(n, 2, 2);
        CHECK(r.forests == r.apex[0]);
        CHECK(r.forests == r.exc[0]);
        BigInt all = BigInt(1) << static_cast<unsigned>(n * (n - 1) / 2);
        for (int k = 0; k <= 2; ++k) {
            CHECK(r.apex[k] <= r.exc[k]);
            CHECK(r.exc[k] <= all);
            CHECK(r.diff[k] == r.exc[k] - r.apex[k]);
        }
        CHECK(r.apex[0] <= r.apex[1]);
        CHECK(r.apex[1] <= r.apex[2]);
    }
}
