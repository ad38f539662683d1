#include "hsx/spectra.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <map>

#include "hsx/errors.hpp"

namespace hsx {

SpectralReport singular_values(const WalkOperator& op) {
    Eigen::MatrixXd sym = op.codomain_measure.cwiseSqrt().asDiagonal() * op.matrix *
                          op.domain_measure.cwiseSqrt().cwiseInverse().asDiagonal();
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(sym);
    SpectralReport report;
    report.object_id = op.id;
    report.kind = "singular";
    report.values.reserve(static_cast<std::size_t>(svd.singularValues().size()));
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        report.values.push_back(std::max(0.0, svd.singularValues()(i)));
    }
    return report;
}

SpectralReport eigenvalues(const WeightedGraph& g) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(g.sym_normalized_adjacency(),
                                                          Eigen::EigenvaluesOnly);
    SpectralReport report;
    report.object_id = g.id();
    report.kind = "eigen";
    const auto& ev = solver.eigenvalues();
    report.values.reserve(static_cast<std::size_t>(ev.size()));
    for (Eigen::Index i = ev.size() - 1; i >= 0; --i) {
        report.values.push_back(ev(i));
    }
    return report;
}

double second_singular_value(const WeightedGraph& g) {
    if (g.size() < 2) {
        throw InputError("sigma_2 needs at least two vertices in graph " + g.id());
    }
    return std::abs(eigenvalues(g).values[1]);
}

int threshold_rank(const SpectralReport& eigen_report, double tau, double tol) {
    if (tau < -1.0 - tol || tau > 1.0 + tol) {
        throw InputError("threshold tau must lie in [-1,1]");
    }
    int rank = 0;
    for (double v : eigen_report.values) {
        if (v >= tau - tol) ++rank;
    }
    return rank;
}

int threshold_rank(const WeightedGraph& g, double tau, double tol) {
    return threshold_rank(eigenvalues(g), tau, tol);
}

void validate_splitting_tree(const SplittingTree& t, int k) {
    if (t.label != k) {
        throw InputError("splitting tree root label " + std::to_string(t.label) +
                         " != " + std::to_string(k));
    }
    if (t.is_leaf()) {
        if (k != 1) throw InputError("leaf labeled " + std::to_string(k) + ", expected 1");
        return;
    }
    if (t.children.size() != 2) {
        throw InputError("internal splitting-tree node must have two children");
    }
    if (t.children[0].label + t.children[1].label != t.label) {
        throw InputError("splitting-tree label " + std::to_string(t.label) +
                         " is not the sum of its children");
    }
    validate_splitting_tree(t.children[0], t.children[0].label);
    validate_splitting_tree(t.children[1], t.children[1].label);
}

namespace {

void collect_pairs(const SplittingTree& t, std::vector<std::pair<int, int>>& out) {
    if (t.is_leaf()) return;
    const int a = t.children[0].label;
    const int b = t.children[1].label;
    out.emplace_back(std::min(a, b), std::max(a, b));
    collect_pairs(t.children[0], out);
    collect_pairs(t.children[1], out);
}

} // namespace

std::vector<std::pair<int, int>> tree_swap_pairs(const SplittingTree& t) {
    std::vector<std::pair<int, int>> pairs;
    collect_pairs(t, pairs);
    return pairs;
}

SplittabilityResult splittability(const SimplicialComplex& x, double tau, int r,
                                  int max_k, double tol) {
    const int k = x.dimension();
    if (k < 2) throw InputError("splittability needs dimension >= 2");
    if (k > max_k) {
        throw BudgetError("splitting-tree enumeration budget: k = " + std::to_string(k) +
                          " exceeds cap " + std::to_string(max_k));
    }
    if (tau < -1.0 - tol || tau > 1.0 + tol) {
        throw InputError("threshold tau must lie in [-1,1]");
    }

    // rank of G(a,b) depends only on {a,b}; cache on a <= b
    std::map<std::pair<int, int>, int> rank_cache;
    auto pair_rank = [&](int a, int b) {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = rank_cache.find(key);
        if (it != rank_cache.end()) return it->second;
        const int rank = threshold_rank(swap_graph(x, key.first, key.second), tau, tol);
        rank_cache.emplace(key, rank);
        return rank;
    };

    // best[c] = min over trees with root label c of the max rank inside
    std::vector<int> best(static_cast<std::size_t>(k) + 1, 0);
    std::vector<int> split_at(static_cast<std::size_t>(k) + 1, 0);
    for (int c = 2; c <= k; ++c) {
        int best_val = -1;
        int best_a = 1;
        for (int a = 1; a <= c / 2; ++a) {
            const int v = std::max({pair_rank(a, c - a), best[static_cast<std::size_t>(a)],
                                    best[static_cast<std::size_t>(c - a)]});
            if (best_val < 0 || v < best_val) {
                best_val = v;
                best_a = a;
            }
        }
        best[static_cast<std::size_t>(c)] = best_val;
        split_at[static_cast<std::size_t>(c)] = best_a;
    }

    std::function<SplittingTree(int)> build = [&](int c) {
        SplittingTree t;
        t.label = c;
        if (c == 1) return t;
        const int a = split_at[static_cast<std::size_t>(c)];
        t.children.push_back(build(a));
        t.children.push_back(build(c - a));
        return t;
    };

    SplittabilityResult result;
    result.tau = tau;
    result.required_rank = r;
    result.best_rank = best[static_cast<std::size_t>(k)];
    result.splittable = result.best_rank <= r;
    result.witness = build(k);
    for (const auto& [ab, rank] : rank_cache) {
        result.pair_ranks.emplace_back(
            "G(" + std::to_string(ab.first) + "," + std::to_string(ab.second) + ")", rank);
    }
    // the pair in the best tree attaining the max
    for (const auto& [a, b] : tree_swap_pairs(result.witness)) {
        if (pair_rank(a, b) == result.best_rank) {
            result.blocking_graph = "G(" + std::to_string(a) + "," + std::to_string(b) + ")";
            break;
        }
    }
    return result;
}

LinkExpansionResult hdx_gamma(const SimplicialComplex& x) {
    const int k = x.dimension();
    if (k < 2) throw InputError("hdx_gamma needs dimension >= 2");
    LinkExpansionResult result;
    result.gamma = -1.0;
    for (int level = 0; level <= k - 2; ++level) {
        for (const Face& s : x.faces(level)) {
            const SimplicialComplex xs = link(x, s);
            WeightedGraph g = skeleton(xs);
            for (int i = 0; i < g.size(); ++i) {
                if (!(g.degree(i) > 0.0)) {
                    throw InputError("link of " + face_to_string(s) +
                                     " has isolated skeleton vertex " +
                                     face_to_string(g.vertex(i).face));
                }
            }
            const double sigma2 = second_singular_value(g);
            if (sigma2 > result.gamma) {
                result.gamma = sigma2;
                result.witness = s;
            }
            ++result.links_checked;
        }
    }
    return result;
}

} // namespace hsx
