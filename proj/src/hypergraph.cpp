#include "hsx/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "hsx/errors.hpp"

namespace hsx {

namespace {

std::string fmt_double(double x) {
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

} // namespace

double Hypergraph::vertex_degree(Vertex v) const {
    double d = 0.0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (std::binary_search(edges[i].begin(), edges[i].end(), v)) d += weights[i];
    }
    return d;
}

double Hypergraph::total_volume() const {
    double total = 0.0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        total += static_cast<double>(edges[i].size()) * weights[i];
    }
    return total;
}

Hypergraph make_hypergraph(int k, int n, std::vector<Face> edges,
                           std::vector<double> weights) {
    if (k < 2) throw InputError("uniformity k must be >= 2, got " + std::to_string(k));
    if (n < k) {
        throw InputError("vertex count " + std::to_string(n) +
                         " too small for k = " + std::to_string(k));
    }
    if (edges.empty()) throw InputError("hypergraph has no edges");

    const bool uniform = weights.empty();
    if (!uniform && weights.size() != edges.size()) {
        throw InputError("got " + std::to_string(weights.size()) + " weights for " +
                         std::to_string(edges.size()) + " edges");
    }

    for (std::size_t i = 0; i < edges.size(); ++i) {
        Face& e = edges[i];
        std::sort(e.begin(), e.end());
        const bool distinct = std::adjacent_find(e.begin(), e.end()) == e.end();
        if (!distinct || static_cast<int>(e.size()) != k) {
            throw InputError("edge " + std::to_string(i) + " is not a " +
                             std::to_string(k) + "-subset of distinct vertices");
        }
        if (e.front() < 0 || e.back() >= n) {
            throw InputError("edge " + std::to_string(i) + " has vertex out of range [0," +
                             std::to_string(n - 1) + "]");
        }
        if (!uniform && !(weights[i] > 0.0)) {
            throw InputError("edge " + std::to_string(i) + " has nonpositive weight " +
                             fmt_double(weights[i]));
        }
    }

    // canonical order + duplicate merge; unweighted input is uniform over
    // the distinct edge set, so duplicate listings are idempotent there
    std::map<Face, double> merged;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (uniform) {
            merged[edges[i]] = 1.0;
        } else {
            merged[edges[i]] += weights[i];
        }
    }

    Hypergraph h;
    h.k = k;
    h.n = n;
    h.edges.reserve(merged.size());
    h.weights.reserve(merged.size());
    double sum = 0.0;
    for (auto& [e, w] : merged) {
        h.edges.push_back(e);
        h.weights.push_back(w);
        sum += w;
    }
    if (uniform) {
        for (double& w : h.weights) w /= sum;
    } else if (std::abs(sum - 1.0) > kWeightSumTol) {
        throw InputError("weights sum to " + fmt_double(sum) + ", expected 1");
    }

    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const Face& e : h.edges) {
        for (Vertex v : e) covered[static_cast<std::size_t>(v)] = 1;
    }
    for (Vertex v = 0; v < n; ++v) {
        if (!covered[static_cast<std::size_t>(v)]) {
            throw InputError("vertex " + std::to_string(v) + " appears in no edge");
        }
    }
    return h;
}

} // namespace hsx
