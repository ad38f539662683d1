#include "hsx/simplicial_complex.hpp"

#include <algorithm>
#include <map>

#include "hsx/errors.hpp"

namespace hsx {

SimplicialComplex SimplicialComplex::from_top_faces(int k, const std::vector<Face>& tops,
                                                    const std::vector<double>& top_weights,
                                                    std::size_t face_budget) {
    SimplicialComplex x;
    x.k_ = k;
    std::vector<std::map<Face, double>> acc(static_cast<std::size_t>(k) + 1);
    std::size_t total = 0;
    for (std::size_t i = 0; i < tops.size(); ++i) {
        const Face& e = tops[i];
        const double w = top_weights[i];
        for (int l = 0; l <= k; ++l) {
            const double share = w / binomial(k, l);
            auto& level_acc = acc[static_cast<std::size_t>(l)];
            for_each_subset(e, l, [&](const Face& s) {
                auto [it, inserted] = level_acc.try_emplace(s, 0.0);
                it->second += share;
                if (inserted && ++total > face_budget) {
                    throw BudgetError("face budget " + std::to_string(face_budget) +
                                      " exceeded while enumerating level " +
                                      std::to_string(l));
                }
            });
        }
    }
    x.faces_.resize(static_cast<std::size_t>(k) + 1);
    x.measures_.resize(static_cast<std::size_t>(k) + 1);
    for (int l = 0; l <= k; ++l) {
        auto& level_acc = acc[static_cast<std::size_t>(l)];
        auto& fs = x.faces_[static_cast<std::size_t>(l)];
        auto& ms = x.measures_[static_cast<std::size_t>(l)];
        fs.reserve(level_acc.size());
        ms.reserve(level_acc.size());
        for (auto& [f, p] : level_acc) {
            fs.push_back(f);
            ms.push_back(p);
        }
    }
    return x;
}

SimplicialComplex SimplicialComplex::induce(const Hypergraph& h, std::size_t face_budget) {
    return from_top_faces(h.k, h.edges, h.weights, face_budget);
}

const std::vector<Face>& SimplicialComplex::faces(int level) const {
    if (level < 0 || level > k_) {
        throw InputError("level " + std::to_string(level) + " out of range [0," +
                         std::to_string(k_) + "]");
    }
    return faces_[static_cast<std::size_t>(level)];
}

const std::vector<double>& SimplicialComplex::measure(int level) const {
    if (level < 0 || level > k_) {
        throw InputError("level " + std::to_string(level) + " out of range [0," +
                         std::to_string(k_) + "]");
    }
    return measures_[static_cast<std::size_t>(level)];
}

int SimplicialComplex::face_index(int level, const Face& f) const {
    if (level < 0 || level > k_) return -1;
    const auto& fs = faces_[static_cast<std::size_t>(level)];
    auto it = std::lower_bound(fs.begin(), fs.end(), f);
    if (it == fs.end() || *it != f) return -1;
    return static_cast<int>(it - fs.begin());
}

bool SimplicialComplex::contains(const Face& f) const {
    return face_index(static_cast<int>(f.size()), f) >= 0;
}

double SimplicialComplex::face_measure(int level, const Face& f) const {
    const int i = face_index(level, f);
    if (i < 0) {
        throw InputError("face " + face_to_string(f) + " not in complex at level " +
                         std::to_string(level));
    }
    return measures_[static_cast<std::size_t>(level)][static_cast<std::size_t>(i)];
}

std::size_t SimplicialComplex::total_faces() const {
    std::size_t total = 0;
    for (const auto& fs : faces_) total += fs.size();
    return total;
}

SimplicialComplex link(const SimplicialComplex& x, const Face& s) {
    if (!x.contains(s)) {
        throw InputError("face " + face_to_string(s) + " not in complex");
    }
    if (s.empty()) return x;

    const int k = x.dimension();
    const int m = static_cast<int>(s.size());
    std::vector<Face> tops;
    std::vector<double> weights;
    const auto& top_faces = x.faces(k);
    const auto& top_measure = x.measure(k);
    double total = 0.0;
    for (std::size_t i = 0; i < top_faces.size(); ++i) {
        if (face_contains(top_faces[i], s)) {
            tops.push_back(face_difference(top_faces[i], s));
            weights.push_back(top_measure[i]);
            total += top_measure[i];
        }
    }
    for (double& w : weights) w /= total;
    return SimplicialComplex::from_top_faces(k - m, tops, weights);
}

WeightedGraph skeleton(const SimplicialComplex& x) {
    if (x.dimension() < 2) {
        throw InputError("skeleton requires a complex of dimension >= 2, got " +
                         std::to_string(x.dimension()));
    }
    const auto& verts = x.faces(1);
    const auto& pairs = x.faces(2);
    const auto& pair_measure = x.measure(2);
    const int n = static_cast<int>(verts.size());

    std::vector<GraphVertex> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) labels[static_cast<std::size_t>(i)] = {0, verts[static_cast<std::size_t>(i)]};

    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const int a = x.face_index(1, {pairs[p][0]});
        const int b = x.face_index(1, {pairs[p][1]});
        w(a, b) = pair_measure[p];
        w(b, a) = pair_measure[p];
    }
    return WeightedGraph(std::move(labels), std::move(w), "skeleton");
}

} // namespace hsx
