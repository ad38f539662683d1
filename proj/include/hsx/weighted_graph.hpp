#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hsx/face.hpp"

namespace hsx {

/// Graph vertex label. Walk graphs on two levels keep the levels apart
/// via `side` (0 = first level, 1 = second); plain graphs use side 0.
struct GraphVertex {
    int side = 0;
    Face face;
};

bool operator==(const GraphVertex& a, const GraphVertex& b);

/// A weighted undirected graph with labeled vertices. Self-loops live on
/// the diagonal of the weight matrix and count once toward the degree.
class WeightedGraph {
public:
    WeightedGraph(std::vector<GraphVertex> vertices, Eigen::MatrixXd weights,
                  std::string id);

    int size() const { return static_cast<int>(vertices_.size()); }
    const std::string& id() const { return id_; }
    const std::vector<GraphVertex>& vertices() const { return vertices_; }
    const GraphVertex& vertex(int i) const { return vertices_[static_cast<std::size_t>(i)]; }
    const Eigen::MatrixXd& weights() const { return w_; }
    double weight(int i, int j) const { return w_(i, j); }
    double degree(int i) const { return deg_(i); }
    const Eigen::VectorXd& degrees() const { return deg_; }
    double total_volume() const { return deg_.sum(); }

    /// D^{-1} W. Throws InputError if some vertex is isolated.
    Eigen::MatrixXd random_walk_matrix() const;

    /// D^{-1/2} W D^{-1/2}, similar to the random-walk matrix.
    /// Throws InputError if some vertex is isolated.
    Eigen::MatrixXd sym_normalized_adjacency() const;

    int component_count() const;
    std::vector<int> component_ids() const;

private:
    void require_positive_degrees() const;

    std::vector<GraphVertex> vertices_;
    Eigen::MatrixXd w_;
    Eigen::VectorXd deg_;
    std::string id_;
};

} // namespace hsx
