#pragma once

#include "excycles/graph.hpp"

#include <optional>
#include <vector>

namespace excycles {

struct ColoringResult {
    int chi = 0;
    int omega = 0;
};

/// Exact chromatic number. With a blocker hint S the search enumerates
/// proper colorings of G[S] and decides extendability over the forest G-S
/// by bottom-up feasible-color propagation, which keeps thousand-vertex
/// instances exact. Without a hint, branch-and-bound guarded to n <= 20.
int chromatic_number(const LabeledGraph& g,
                     const std::optional<std::vector<int>>& blocker_hint = std::nullopt);

/// Exact clique number. With a blocker hint S, a clique meets the forest
/// G-S in at most two vertices, so the search ranges over forest vertices,
/// forest edges, and subsets of S restricted to common neighborhoods.
int clique_number(const LabeledGraph& g,
                  const std::optional<std::vector<int>>& blocker_hint = std::nullopt);

/// Both invariants at once, with the omega <= chi and (when hinted)
/// chi <= |S|+2 sanity checks enforced.
ColoringResult chi_omega(const LabeledGraph& g,
                         const std::optional<std::vector<int>>& blocker_hint = std::nullopt);

} // namespace excycles
