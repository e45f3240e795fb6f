#include "linedraw/core.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

namespace linedraw {

WeightedGraph::WeightedGraph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), labels_(std::move(labels)) {
    if (n_ <= 0) {
        throw std::invalid_argument("graph must have at least one vertex");
    }
    if (labels_.empty()) {
        labels_.reserve(n_);
        for (int i = 0; i < n_; ++i) {
            labels_.push_back(std::to_string(i));
        }
    }
    if (static_cast<int>(labels_.size()) != n_) {
        throw std::invalid_argument("label count does not match vertex count");
    }
    if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
        throw std::invalid_argument("vertex labels must be distinct");
    }

    std::set<std::pair<int, int>> seen;
    for (Edge& e : edges_) {
        if (e.u > e.v) {
            std::swap(e.u, e.v);
        }
        if (e.u < 0 || e.v >= n_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loops are not allowed");
        }
        if (!seen.insert({e.u, e.v}).second) {
            throw std::invalid_argument("parallel edges are not allowed");
        }
        if (e.weight <= 0) {
            throw std::invalid_argument("edge weights must be strictly positive");
        }
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });

    adjacency_.resize(n_);
    for (const Edge& e : edges_) {
        adjacency_[e.u].emplace_back(e.v, e.weight);
        adjacency_[e.v].emplace_back(e.u, e.weight);
    }
    for (auto& list : adjacency_) {
        std::sort(list.begin(), list.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
}

std::optional<Rational> WeightedGraph::weight(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) {
        return std::nullopt;
    }
    const auto& list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const auto& entry, int key) { return entry.first < key; });
    if (it != list.end() && it->first == v) {
        return it->second;
    }
    return std::nullopt;
}

bool WeightedGraph::complete() const {
    return static_cast<long long>(edges_.size()) * 2 == static_cast<long long>(n_) * (n_ - 1);
}

SimilarityMatrix::SimilarityMatrix(std::vector<std::vector<Entry>> rows) {
    n_ = static_cast<int>(rows.size());
    if (n_ <= 0) {
        throw std::invalid_argument("similarity matrix must be at least 1x1");
    }
    entries_.reserve(static_cast<std::size_t>(n_) * n_);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_) {
            throw std::invalid_argument("similarity matrix must be square");
        }
        for (const auto& entry : row) {
            entries_.push_back(entry);
        }
    }

    std::optional<Rational> max_off_diagonal;
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            const Entry& ij = at(i, j);
            const Entry& ji = at(j, i);
            if (ij.has_value() != ji.has_value() || (ij.has_value() && *ij != *ji)) {
                throw std::invalid_argument("similarity matrix must be symmetric");
            }
            if (ij.has_value()) {
                if (*ij <= 0) {
                    throw std::invalid_argument("similarity values must be strictly positive");
                }
                if (!max_off_diagonal || *ij > *max_off_diagonal) {
                    max_off_diagonal = *ij;
                }
            }
        }
    }
    Rational expected_diagonal = max_off_diagonal.value_or(Rational(1));
    for (int i = 0; i < n_; ++i) {
        const Entry& d = at(i, i);
        if (!d.has_value() || *d != expected_diagonal) {
            throw std::invalid_argument(
                "diagonal entries must equal the maximum specified off-diagonal entry");
        }
    }
}

SimilarityMatrix SimilarityMatrix::unchecked(int n, std::vector<Entry> entries) {
    SimilarityMatrix m;
    m.n_ = n;
    m.entries_ = std::move(entries);
    return m;
}

bool SimilarityMatrix::complete() const {
    for (int i = 0; i < n_; ++i) {
        for (int j = i + 1; j < n_; ++j) {
            if (!specified(i, j)) {
                return false;
            }
        }
    }
    return true;
}

Ordering::Ordering(std::vector<int> perm) : perm_(std::move(perm)) {
    if (perm_.empty()) {
        throw std::invalid_argument("ordering must not be empty");
    }
    std::vector<bool> seen(perm_.size(), false);
    for (int v : perm_) {
        if (v < 0 || v >= static_cast<int>(perm_.size()) || seen[v]) {
            throw std::invalid_argument("ordering must be a permutation of {0,...,n-1}");
        }
        seen[v] = true;
    }
}

Ordering Ordering::identity(int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) {
        perm[i] = i;
    }
    return Ordering(std::move(perm));
}

Ordering Ordering::inverse() const {
    std::vector<int> inv(perm_.size());
    for (int i = 0; i < size(); ++i) {
        inv[perm_[i]] = i;
    }
    return Ordering(std::move(inv));
}

Ordering Ordering::reversed() const {
    return Ordering(std::vector<int>(perm_.rbegin(), perm_.rend()));
}

Drawing::Drawing(std::map<int, Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) {
        throw std::invalid_argument("drawing must place at least one vertex");
    }
    std::set<Rational> values;
    for (const auto& [v, x] : coords_) {
        if (v < 0) {
            throw std::invalid_argument("drawing vertex indices must be nonnegative");
        }
        if (!values.insert(x).second) {
            throw std::invalid_argument("drawing must be injective");
        }
    }
}

const Rational& Drawing::at(int v) const {
    auto it = coords_.find(v);
    if (it == coords_.end()) {
        throw std::invalid_argument("drawing has no coordinate for vertex " + std::to_string(v));
    }
    return it->second;
}

SimilarityMatrix matrix_from_graph(const WeightedGraph& g) {
    const int n = g.size();
    Rational diagonal(1);  // edgeless graphs get an inert diagonal of 1
    if (!g.edges().empty()) {
        diagonal = std::max_element(g.edges().begin(), g.edges().end(),
                                    [](const Edge& a, const Edge& b) { return a.weight < b.weight; })
                       ->weight;
    }

    std::vector<std::vector<SimilarityMatrix::Entry>> rows(
        n, std::vector<SimilarityMatrix::Entry>(n));
    for (int i = 0; i < n; ++i) {
        rows[i][i] = diagonal;
    }
    for (const Edge& e : g.edges()) {
        rows[e.u][e.v] = e.weight;
        rows[e.v][e.u] = e.weight;
    }
    return SimilarityMatrix(std::move(rows));
}

WeightedGraph graph_from_matrix(const SimilarityMatrix& a, std::vector<std::string> labels) {
    std::vector<Edge> edges;
    for (int i = 0; i < a.size(); ++i) {
        for (int j = i + 1; j < a.size(); ++j) {
            if (a.specified(i, j)) {
                edges.push_back({i, j, *a.at(i, j)});
            }
        }
    }
    return WeightedGraph(a.size(), std::move(edges), std::move(labels));
}

SimilarityMatrix permute(const SimilarityMatrix& a, const Ordering& pi) {
    if (pi.size() != a.size()) {
        throw std::invalid_argument("ordering size does not match matrix dimension");
    }
    const int n = a.size();
    std::vector<SimilarityMatrix::Entry> entries(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            entries[static_cast<std::size_t>(i) * n + j] = a.at(pi[i], pi[j]);
        }
    }
    // Symmetry and the diagonal rule are permutation invariant.
    return SimilarityMatrix::unchecked(n, std::move(entries));
}

Ordering induced_ordering(const Drawing& d) {
    const int n = d.size();
    std::vector<std::pair<Rational, int>> by_coord;
    by_coord.reserve(n);
    for (const auto& [v, x] : d.coords()) {
        if (v >= n) {
            throw std::invalid_argument("induced_ordering requires coordinates on {0,...,n-1}");
        }
        by_coord.emplace_back(x, v);
    }
    std::sort(by_coord.begin(), by_coord.end());
    std::vector<int> perm;
    perm.reserve(n);
    for (const auto& [x, v] : by_coord) {
        perm.push_back(v);
    }
    return Ordering(std::move(perm));
}

}  // namespace linedraw
