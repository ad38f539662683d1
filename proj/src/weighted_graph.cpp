#include "hsx/weighted_graph.hpp"

#include <numeric>
#include <utility>

#include "hsx/errors.hpp"

namespace hsx {

bool operator==(const GraphVertex& a, const GraphVertex& b) {
    return a.side == b.side && a.face == b.face;
}

WeightedGraph::WeightedGraph(std::vector<GraphVertex> vertices, Eigen::MatrixXd weights,
                             std::string id)
    : vertices_(std::move(vertices)), w_(std::move(weights)), id_(std::move(id)) {
    const int n = static_cast<int>(vertices_.size());
    if (w_.rows() != n || w_.cols() != n) {
        throw InputError("weight matrix shape does not match vertex count in graph " + id_);
    }
    if (((w_ - w_.transpose()).cwiseAbs().maxCoeff() > 1e-12 && n > 0)) {
        throw InputError("weight matrix not symmetric in graph " + id_);
    }
    if (n > 0 && w_.minCoeff() < 0.0) {
        throw InputError("negative edge weight in graph " + id_);
    }
    deg_ = w_.rowwise().sum();
}

void WeightedGraph::require_positive_degrees() const {
    for (int i = 0; i < size(); ++i) {
        if (!(deg_(i) > 0.0)) {
            throw InputError("isolated vertex " + face_to_string(vertex(i).face) +
                             " in graph " + id_);
        }
    }
}

Eigen::MatrixXd WeightedGraph::random_walk_matrix() const {
    require_positive_degrees();
    return deg_.cwiseInverse().asDiagonal() * w_;
}

Eigen::MatrixXd WeightedGraph::sym_normalized_adjacency() const {
    require_positive_degrees();
    Eigen::VectorXd inv_sqrt = deg_.cwiseSqrt().cwiseInverse();
    return inv_sqrt.asDiagonal() * w_ * inv_sqrt.asDiagonal();
}

namespace {

int find_root(std::vector<int>& parent, int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] =
            parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
    }
    return x;
}

} // namespace

std::vector<int> WeightedGraph::component_ids() const {
    const int n = size();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (w_(i, j) > 0.0) {
                int ri = find_root(parent, i);
                int rj = find_root(parent, j);
                if (ri != rj) parent[static_cast<std::size_t>(ri)] = rj;
            }
        }
    }
    std::vector<int> ids(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = find_root(parent, i);
    return ids;
}

int WeightedGraph::component_count() const {
    auto ids = component_ids();
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return static_cast<int>(ids.size());
}

} // namespace hsx
