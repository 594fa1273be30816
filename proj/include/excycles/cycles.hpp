#pragma once

#include "excycles/graph.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace excycles {

struct PackingWitness {
    std::vector<std::vector<int>> cycles; // pairwise disjoint vertex sets, each containing a cycle
};

/// Certificate produced by redundant_blocker: B = Q u A is a blocker and
/// B \ {v} still blocks for every v outside the exceptional set S.
struct BlockerCertificate {
    std::vector<int> Q, S, A, B;
    int k = 0;
    std::string to_json() const; // {"Q":[...],"S":[...],"A":[...],"B":[...],"k":k}, 1-based
};

/// Maximum number of pairwise vertex-disjoint cycles, with a witness.
/// Exact search over chordless cycles (every cycle contains a chordless one
/// on a subset of its vertices, so the optimum is attained there). n <= 16.
std::pair<int, PackingWitness> cycle_packing_number(const LabeledGraph& g);

/// True iff the graph has no k+1 pairwise disjoint cycles.
bool is_in_ex_cycles(const LabeledGraph& g, int k);

/// Lexicographically least minimum-cardinality blocker (feedback vertex
/// set). Exact iterative-deepening branch on a chordless cycle; n <= 16.
std::vector<int> min_blocker(const LabeledGraph& g);
int min_blocker_size(const LabeledGraph& g);

/// Membership in apex^k F: does some vertex set of size <= k block every
/// cycle? Returns the lexicographically least witness when one exists.
std::pair<bool, std::optional<std::vector<int>>> is_apex_forest(const LabeledGraph& g, int k);

/// Constructive redundancy: given a blocker Q of a graph with no k+1
/// disjoint cycles, finds S subseteq Q and A disjoint from Q, both of size
/// <= k, such that no cycle of G-S meets Q u A in fewer than two vertices.
/// Each recursion level removes one subtree and one blocker vertex; running
/// out of depth proves the graph has k+1 disjoint cycles.
BlockerCertificate redundant_blocker(const LabeledGraph& g, int k, const std::vector<int>& q);

/// True iff b is a blocker and at most k vertices v of b have b \ {v} fail
/// to be a blocker.
bool verify_redundant(const LabeledGraph& g, const std::vector<int>& b, int k);

} // namespace excycles
