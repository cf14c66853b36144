#pragma once

#include "spectral_er/graph.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace ser {

// Restricts which graphs an enumeration emits. min_lambda_hint prunes only
// soundly: a skipped graph satisfies lambda < hint (via lambda <= sqrt(2m)).
struct EnumerationFilter {
    std::optional<int> min_edges;
    std::optional<int> max_edges;
    bool connected_only = false;
    std::optional<double> min_lambda_hint;

    bool admits(const Graph& g) const;
};

// One canonical-augmentation step: all accepted children of `parent` (one more
// vertex), exactly one representative per isomorphism class across the whole
// level when parents are pairwise non-isomorphic. A child is kept iff its
// canonical deletion undoes the augmentation. max_edges prunes the subtree.
std::vector<Graph> augment_children(const Graph& parent, std::optional<int> max_edges = {});

// All isomorphism classes on k vertices (cached; k <= 9).
const std::vector<Graph>& graph_classes(int k, int workers = 1);

// Exactly one representative per isomorphism class satisfying the filter,
// n <= 10 (documented scale limit).
void enumerate_nonisomorphic(int n, const EnumerationFilter& filter,
                             const std::function<void(const Graph&)>& visit, int workers = 1);
std::vector<Graph> enumerate_nonisomorphic(int n, const EnumerationFilter& filter = {});

}  // namespace ser
