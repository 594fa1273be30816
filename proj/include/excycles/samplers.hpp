#pragma once

#include "excycles/bigint.hpp"
#include "excycles/graph.hpp"
#include "excycles/rng.hpp"

#include <utility>
#include <vector>

namespace excycles {

/// Record of the three construction steps behind a random apex graph:
/// a k-set S with an arbitrary graph on it, a forest on the rest, and a
/// bipartite layer in between. The union always has S as a blocker.
struct ApexConstruction {
    std::vector<int> s;                              // the chosen k-set, ascending
    std::vector<std::pair<int, int>> s_edges;        // edges inside S
    std::vector<std::pair<int, int>> forest_edges;   // edges of the forest part
    std::vector<std::pair<int, int>> bipartite_edges; // S to forest edges
};

/// Uniform labeled tree on n >= 1 vertices via a uniform Prufer sequence.
LabeledGraph random_tree(int n, SeededRng& rng);

/// Exactly uniform labeled forest, by sampling the size of the component
/// containing the smallest vertex with its exact probability (all weights
/// are exact integers; the choice uses a uniform integer below the total,
/// so no floating point enters the distribution).
LabeledGraph random_forest(int n, SeededRng& rng);

/// Uniform three-step apex construction on n > k vertices. With k = 0 the
/// first and third steps are empty and the output equals random_forest(n)
/// on the same stream.
std::pair<LabeledGraph, ApexConstruction> random_apex_construction(int n, int k, SeededRng& rng);

/// Exactly uniform member of the class of graphs with no k+1 disjoint
/// cycles, backed by full enumeration; n <= 7, k <= 2.
LabeledGraph exact_uniform_ex(int n, int k, SeededRng& rng);

/// Precomputes forest counts and tree powers up to max_n so that the
/// samplers above can be driven cheaply in a loop. Built lazily and cached
/// process-wide; safe for concurrent readers.
void warm_forest_tables(int max_n);

} // namespace excycles
