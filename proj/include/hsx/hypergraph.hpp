#pragma once

#include <vector>

#include "hsx/face.hpp"

namespace hsx {

/// A k-uniform weighted hypergraph. Edges are canonical faces in
/// lexicographic order; weights form the top-level probability measure
/// Pi_k. Every vertex of {0..n-1} appears in at least one edge.
struct Hypergraph {
    int k = 0;
    int n = 0;
    std::vector<Face> edges;
    std::vector<double> weights;

    std::size_t edge_count() const { return edges.size(); }

    /// Pi_k-weighted degree: sum of weights of edges containing v.
    double vertex_degree(Vertex v) const;

    /// Sum of all vertex degrees (= k for a probability measure).
    double total_volume() const;
};

/// Canonicalizes and validates. Pass an empty weight vector for uniform
/// Pi_k. Duplicate edges are merged by summing weight. Throws InputError
/// naming the first violation (non-uniform edge, vertex out of range,
/// nonpositive weight, weight sum != 1, uncovered vertex).
Hypergraph make_hypergraph(int k, int n, std::vector<Face> edges,
                           std::vector<double> weights = {});

inline constexpr double kWeightSumTol = 1e-12;

} // namespace hsx
