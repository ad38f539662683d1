#pragma once

#include <cstddef>
#include <vector>

#include "hsx/face.hpp"
#include "hsx/hypergraph.hpp"
#include "hsx/weighted_graph.hpp"

namespace hsx {

inline constexpr std::size_t kDefaultFaceBudget = 200000;
inline constexpr double kMeasureTol = 1e-12;

/// The weighted simplicial complex induced by a k-uniform hypergraph:
/// the downward closure of the edge set with level measures
/// Pi_l(s) = (1/C(k,l)) sum_{e >= s} Pi_k(e). Pure by construction.
/// Level tables are lexicographically sorted so matrix indices are
/// deterministic. Immutable after construction.
class SimplicialComplex {
public:
    static SimplicialComplex induce(const Hypergraph& h,
                                    std::size_t face_budget = kDefaultFaceBudget);

    /// Builds the downward closure of an arbitrary family of same-size top
    /// faces carrying a probability measure. Links use this with the
    /// original vertex labels kept.
    static SimplicialComplex from_top_faces(int k, const std::vector<Face>& tops,
                                            const std::vector<double>& top_weights,
                                            std::size_t face_budget = kDefaultFaceBudget);

    int dimension() const { return k_; }

    const std::vector<Face>& faces(int level) const;
    const std::vector<double>& measure(int level) const;

    /// Index of a face in its level table, or -1.
    int face_index(int level, const Face& f) const;
    bool contains(const Face& f) const;
    double face_measure(int level, const Face& f) const;

    std::size_t total_faces() const;

private:
    SimplicialComplex() = default;

    int k_ = 0;
    std::vector<std::vector<Face>> faces_;     // levels 0..k
    std::vector<std::vector<double>> measures_;
};

/// Link complex X_s = {t \ s | s <= t in X}, with level-j measure equal to
/// Pi_{j+|s|} restricted to supersets of s and renormalized. Vertex labels
/// are kept from X. Throws InputError if s is not a face of x.
SimplicialComplex link(const SimplicialComplex& x, const Face& s);

/// Weighted graph on X(1) with edge weights Pi_2 over X(2).
/// Requires dimension >= 2.
WeightedGraph skeleton(const SimplicialComplex& x);

} // namespace hsx
