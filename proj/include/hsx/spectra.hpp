#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsx/simplicial_complex.hpp"
#include "hsx/walks.hpp"
#include "hsx/weighted_graph.hpp"

namespace hsx {

inline constexpr double kEigTol = 1e-9;

/// Eigen- or singular-value spectrum of one walk/graph, sorted descending.
struct SpectralReport {
    std::string object_id;
    std::string kind; // "eigen" | "singular"
    std::vector<double> values;
    double tolerance = kEigTol;

    double value(std::size_t i) const { return values.at(i); }
};

/// Singular values under the Pi-weighted inner products, computed as the
/// standard singular values of diag(Pi_cod)^{1/2} M diag(Pi_dom)^{-1/2}.
SpectralReport singular_values(const WalkOperator& op);

/// Eigenvalues of the normalized adjacency via the similar symmetric
/// matrix deg^{-1/2} W deg^{-1/2}, sorted descending.
SpectralReport eigenvalues(const WeightedGraph& g);

/// sigma_2 of a graph: |lambda_2| of its normalized adjacency.
/// Requires at least two vertices.
double second_singular_value(const WeightedGraph& g);

/// Number of eigenvalues >= tau - tol. tau must lie in [-1, 1].
int threshold_rank(const WeightedGraph& g, double tau, double tol = kEigTol);
int threshold_rank(const SpectralReport& eigen_report, double tau, double tol = kEigTol);

/// A k-splitting tree: k leaves labeled 1, root labeled k, every internal
/// label the sum of its two children.
struct SplittingTree {
    int label = 1;
    std::vector<SplittingTree> children; // empty or exactly two

    bool is_leaf() const { return children.empty(); }
};

/// Throws InputError if t is not a valid k-splitting tree.
void validate_splitting_tree(const SplittingTree& t, int k);

/// Child-label pairs (a, b) with a <= b over the internal nodes of t;
/// these determine Swap(T, X).
std::vector<std::pair<int, int>> tree_swap_pairs(const SplittingTree& t);

struct SplittabilityResult {
    bool splittable = false;
    double tau = 0.0;
    int required_rank = 0;
    /// min over k-splitting trees of the max swap-graph threshold rank.
    int best_rank = 0;
    /// Tree achieving best_rank (the witness when splittable).
    SplittingTree witness;
    /// Graph in the witness tree attaining best_rank; blocks the verdict
    /// when not splittable.
    std::string blocking_graph;
    /// rank per (a,b) pair actually evaluated, keyed "G(a,b)".
    std::vector<std::pair<std::string, int>> pair_ranks;
};

/// Decides (tau, r)-splittability by dynamic programming over split
/// labels; Swap(T, X) depends only on the child-label pairs, so label
/// multisets stand in for tree shapes. k above max_k is rejected.
SplittabilityResult splittability(const SimplicialComplex& x, double tau, int r,
                                  int max_k = 8, double tol = kEigTol);

struct LinkExpansionResult {
    /// max over s in X(<= k-2) of sigma_2(G(X_s)); link expansion is 1 - gamma.
    double gamma = 0.0;
    Face witness;
    int links_checked = 0;
};

/// Scans every link up to level k-2 (the empty face included).
/// A link whose skeleton has an isolated vertex raises InputError naming
/// the face.
LinkExpansionResult hdx_gamma(const SimplicialComplex& x);

} // namespace hsx
