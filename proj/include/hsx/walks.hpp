#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hsx/simplicial_complex.hpp"
#include "hsx/weighted_graph.hpp"

namespace hsx {

inline constexpr double kStochasticTol = 1e-12;

/// A linear map between level function spaces, stored as a dense
/// row-stochastic matrix indexed (codomain face, domain face), together
/// with the Pi measures that define the inner products on both sides.
struct WalkOperator {
    std::string id;
    int domain_level = 0;
    int codomain_level = 0;
    std::vector<Face> domain_faces;
    std::vector<Face> codomain_faces;
    Eigen::VectorXd domain_measure;
    Eigen::VectorXd codomain_measure;
    Eigen::MatrixXd matrix;

    /// Adjoint under the Pi-weighted inner products, computed in closed
    /// form as diag(Pi_dom)^{-1} M^T diag(Pi_cod).
    WalkOperator adjoint() const;
};

/// <f,g>_mu = sum_s mu(s) f(s) g(s).
double weighted_inner(const Eigen::VectorXd& f, const Eigen::VectorXd& g,
                      const Eigen::VectorXd& mu);

/// U_i : functions on X(i) -> X(i+1), uniform sub-face averaging.
/// Its matrix is the transition map of the walk X(i+1) -> X(i).
WalkOperator up_operator(const SimplicialComplex& x, int i);

/// D_j : functions on X(j) -> X(j-1), Pi-proportional super-face
/// transition. Its matrix is the transition map of the walk X(j-1) -> X(j).
WalkOperator down_operator(const SimplicialComplex& x, int j);

/// D_{m,l} = D_{m+1} ... D_l (identity when m == l).
WalkOperator compose_down(const SimplicialComplex& x, int m, int l);

/// U_{l,m} = U_{l-1} ... U_m (identity when l == m).
WalkOperator compose_up(const SimplicialComplex& x, int l, int m);

/// N^2_{m,l} = D_{m,l} U_{l,m}, the up-down walk on X(m) through X(l).
WalkOperator updown_walk(const SimplicialComplex& x, int m, int l);

/// S_{m,l} : functions on X(l) -> X(m); walks from s in X(m) to the
/// disjoint t in X(l) with s \sqcup t in X(m+l). Requires m,l >= 1 and
/// m+l <= k.
WalkOperator swap_operator(const SimplicialComplex& x, int m, int l);

/// B_{m,l}: bipartite graph between X(m) and X(l) (sides 0 and 1), edges
/// s <= t with weight C(k,l) Pi_l(t). Its random walk is N_{m,l}.
WeightedGraph bipartite_walk_graph(const SimplicialComplex& x, int m, int l);

/// B^2_{m,l}: graph on X(m) with w(s,t) = C(k,l) sum_{s' >= s u t} Pi_l(s'),
/// self-loops included. Its random walk is D_{m,l} U_{l,m}.
WeightedGraph two_step_graph(const SimplicialComplex& x, int m, int l);

/// G_{m,l}: bipartite swap graph between X(m) and X(l) with
/// w(s,t) = Pi_{m+l}(s u t)/C(m+l,m); built on tagged sides so the m == l
/// case doubles cleanly.
WeightedGraph swap_graph(const SimplicialComplex& x, int m, int l);

/// Closed-form B^2 edge weight (valid for s == t as well):
/// C(k-|sut|, l-|sut|) sum_{e >= s u t} Pi_k(e).
double two_step_weight_closed_form(const Hypergraph& h, const Face& s, const Face& t, int l);

/// Closed-form B^2 degree: C(l,m)^2 (C(k,l)/C(k,m)) sum_{e >= s} Pi_k(e).
double two_step_degree_closed_form(const Hypergraph& h, const Face& s, int m, int l);

} // namespace hsx
