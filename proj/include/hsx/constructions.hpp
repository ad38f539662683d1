#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hsx/hypergraph.hpp"
#include "hsx/partition.hpp"
#include "hsx/simplicial_complex.hpp"

namespace hsx {

/// Sunflower: r edges of size k pairwise intersecting exactly in vertex 0,
/// e_i = {0} u {(i-1)(k-1)+1, ..., i(k-1)}, on n = r(k-1)+1 vertices,
/// uniform weights. Expanding (phi_H >= 1/k) but non-splittable.
Hypergraph sunflower_hypergraph(int r, int k);

/// Cycle-link: all C(n,k) k-subsets of {0..n-1} plus the n cycle edges
/// augmented with the fixed tail {n,...,n+k-3}; n+k-2 vertices, uniform
/// weights. Expanding but with poor link expansion at the tail face.
Hypergraph cycle_link_hypergraph(int n, int k);

/// Same shape with an arbitrary base graph in place of the cycle: the
/// tail face's link skeleton becomes exactly that graph. Base edges are
/// pairs over {0..n-1} and must cover no vertex twice per edge.
Hypergraph graph_link_hypergraph(int n, int k,
                                 const std::vector<std::pair<int, int>>& base_edges);

struct Claim {
    std::string id;
    double measured = 0.0;
    double bound = 0.0;
    std::string relation; // ">=", "<=", "==", ">"
    bool pass = false;
    std::string detail;
};

struct ClaimReport {
    std::string construction;
    std::vector<std::pair<std::string, int>> params;
    std::string note;
    std::vector<Claim> claims; // sorted by id
    bool all_pass = false;
};

/// Numeric verification of the sunflower claims at the given size:
/// lambda_r(G_{m,l}) = 1 for every admissible (m,l), lambda_r(N^2_{m,l}) = 1
/// for 2 <= m < l <= k, swap-graph component counts, B_{2,k} component
/// count, oracle conductance >= 1/k, and non-splittability over a tau grid.
ClaimReport verify_sunflower_claims(int r, int k, double tol_eig = 1e-9,
                                    int oracle_cap = kDefaultOracleCap,
                                    std::size_t face_budget = kDefaultFaceBudget);

/// Numeric verification of the cycle-link claims: tail-link skeleton is
/// the n-cycle with sigma_2 = cos(2 pi / n), hdx_gamma at least that,
/// degree structure, and oracle conductance >= 1/(3k)^k.
ClaimReport verify_cycle_link_claims(int n, int k, double tol_eig = 1e-9,
                                     int oracle_cap = kDefaultOracleCap,
                                     std::size_t face_budget = kDefaultFaceBudget);

} // namespace hsx
