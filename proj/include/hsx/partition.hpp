#pragma once

#include <string>
#include <vector>

#include "hsx/hypergraph.hpp"
#include "hsx/simplicial_complex.hpp"
#include "hsx/weighted_graph.hpp"

namespace hsx {

inline constexpr int kDefaultOracleCap = 24;
inline constexpr double kVolumeTol = 1e-12;
inline constexpr double kBoundTol = 1e-9;

struct ConductanceResult {
    double phi = 0.0;
    double boundary_weight = 0.0;
    double volume = 0.0;
    /// vol(S) <= vol(V)/2 + 1e-12; phi is reported either way.
    bool within_half = false;
};

/// phi_H(S) = Pi_k(boundary of S) / vol_H(S), with Pi-weighted degrees.
/// S must be a nonempty proper subset of {0..n-1}.
ConductanceResult conductance_hypergraph(const Hypergraph& h, const std::vector<Vertex>& set);

/// Same on a weighted graph; `set` holds vertex indices into g.
ConductanceResult conductance_graph(const WeightedGraph& g, const std::vector<int>& set);

struct OracleResult {
    std::vector<Vertex> set;
    double phi = 0.0;
    double boundary_weight = 0.0;
    double volume = 0.0;
};

/// Exact minimizer of phi_H over all S with vol(S) <= vol(V)/2, by
/// enumerating all 2^n - 2 subsets. Ties go to the lexicographically
/// smallest set. Throws BudgetError when n exceeds the cap.
OracleResult brute_force_min_conductance(const Hypergraph& h, int vertex_cap = kDefaultOracleCap);

struct SweepResult {
    std::vector<int> set; // graph vertex indices, sorted
    double phi = 0.0;
    double lambda2 = 0.0;
    /// sqrt(2 (1 - lambda2)); the returned phi never exceeds it.
    double cheeger_bound = 0.0;
};

/// Fiedler sweep on the second eigenvector of the normalized adjacency:
/// vertices sorted by the degree-rescaled eigenvector entry (ties by
/// vertex id), all prefixes of both orientations scanned, minimum taken
/// over the volume-smaller side.
SweepResult fiedler_sweep(const WeightedGraph& g);

/// Certificate returned by the hypergraph sparse-cut algorithm.
struct CutCertificate {
    std::vector<Vertex> set;
    int level = 2; // the l in D_{1,l}
    double phi_hypergraph = 0.0;
    double phi_b2 = 0.0;           // conductance of `set` in B^2_{1,2}
    double sigma2_d12 = 0.0;       // sigma_2(D_{1,2})
    double sigma2_d1l = 0.0;       // sigma_2(D_{1,l})
    double epsilon = 0.0;          // 1 - sigma_2(D_{1,2})
    double epsilon_l = 0.0;        // 1 - sigma_2(D_{1,l})
    double lambda2_updown = 0.0;   // lambda_2(N^2_{1,l}) = sigma_2(D_{1,l})^2
    double lower_bound = 0.0;      // (1 - lambda_2(N^2_{1,l})) / k <= phi_H
    double upper_bound = 0.0;      // phi_H(set) <= 4 sqrt(epsilon)
    bool within_half = false;
    bool upper_ok = false;         // phi_hypergraph <= upper_bound + 1e-9
    bool relate_ok = false;        // phi_hypergraph <= 2 phi_b2 + 1e-9
};

/// Spectral sparse cut: computes epsilon from D_{1,l}, sweeps B^2_{1,2},
/// and returns the set with its certified bounds. Requires 2 <= l <= k.
CutCertificate hypergraph_sparse_cut(const Hypergraph& h, int l,
                                     std::size_t face_budget = kDefaultFaceBudget);

struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0; // amount by which the inequality holds
    bool pass = false;  // slack >= -1e-9
};

struct BoundReport {
    std::vector<BoundCheck> checks;
    bool all_pass = false;
};

/// Evaluates the four boundary/conductance inequalities relating H to
/// B^2_{1,2} and B^2_{1,l} for the given set:
///   (k-1) Pi(dH(S)) <= w(dB2_{1,2}(S))
///   w(dB2_{1,l}(S)) <= C(k,l) C(l,2) Pi(dH(S))
///   phi_H(S) <= 2 phi_{B2_{1,2}}(S)
///   phi_H(S) >= (2/k) phi_{B2_{1,l}}(S)
BoundReport verify_expansion_bounds(const Hypergraph& h, const std::vector<Vertex>& set, int l,
                                    std::size_t face_budget = kDefaultFaceBudget);

} // namespace hsx
