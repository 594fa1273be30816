#pragma once

#include "excycles/bigint.hpp"
#include "excycles/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace excycles {

/// Number of labeled trees on n vertices: n^(n-2) for n >= 2, 1 for n = 1.
BigInt tree_count(int n);

/// Number of labeled forests on n vertices, by the decomposition over the
/// component containing vertex 1. forest_count(0) = 1.
BigInt forest_count(int n);

/// Labeled forests on n vertices with exactly j tree components.
BigInt forest_count_by_components(int n, int j);

/// Exact class counts from one exhaustive sweep over all 2^C(n,2) labeled
/// graphs. apex[k] counts graphs with a blocker of size <= k, exc[k] counts
/// graphs with no k+1 disjoint cycles, diff[k] = exc[k] - apex[k]. The
/// structure labels (k = 1 classes) are only filled when kmax >= 1.
/// wheel counts graphs with a wheel-matching core; wheel_rooted counts
/// pairs (connected graph, hub reading of its core), which is exactly what
/// the wheel series W(z) enumerates.
struct CountRecord {
    int n = 0;
    int kmax = 0;
    BigInt forests, trees;
    std::vector<BigInt> apex, exc, diff;
    BigInt wheel, wheel_rooted, btype, ktype;

    std::string to_json_rows() const; // one JSON object per line
    std::string to_csv() const;
};

/// Exhaustive census. n <= 7 unguarded; n = 8 only with allow_n8 (2^28
/// graphs); kmax <= 2.
CountRecord census(int n, int kmax, int workers = 1, bool allow_n8 = false);

} // namespace excycles
