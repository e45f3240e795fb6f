#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "linedraw/rational.hpp"

namespace linedraw {

/// Undirected edge with a strictly positive weight. Stored with u < v.
struct Edge {
    int u;
    int v;
    Rational weight;
};

/// Immutable undirected weighted graph: no self-loops, no parallel edges,
/// all weights strictly positive. Vertex labels are carried along so tools
/// can name vertices in output; algorithms work on indices.
class WeightedGraph {
public:
    /// Throws std::invalid_argument when an invariant is violated. An empty
    /// label vector is replaced by "0", "1", ..., "n-1".
    WeightedGraph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    int size() const { return n_; }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Weight of {u, v}, or nullopt when the edge is absent.
    std::optional<Rational> weight(int u, int v) const;

    /// Incident edges of t as (neighbor, weight) pairs, ascending neighbor.
    const std::vector<std::pair<int, Rational>>& incident(int t) const { return adjacency_[t]; }

    bool complete() const;

private:
    int n_;
    std::vector<Edge> edges_;
    std::vector<std::string> labels_;
    std::vector<std::vector<std::pair<int, Rational>>> adjacency_;
};

/// Symmetric n-by-n matrix of optional positive rationals: the extended
/// weighted adjacency matrix of a graph, with unspecified entries standing
/// for absent edges. Diagonal entries are always present and equal to the
/// maximum specified off-diagonal entry (1 for an edgeless matrix).
class SimilarityMatrix {
public:
    using Entry = std::optional<Rational>;

    /// Validates symmetry, positivity and the diagonal rule; throws
    /// std::invalid_argument on violation.
    explicit SimilarityMatrix(std::vector<std::vector<Entry>> rows);

    int size() const { return n_; }
    const Entry& at(int i, int j) const { return entries_[static_cast<std::size_t>(i) * n_ + j]; }
    bool specified(int i, int j) const { return at(i, j).has_value(); }

    /// True when no off-diagonal entry is absent.
    bool complete() const;

    /// The common diagonal value.
    const Rational& diagonal() const { return *at(0, 0); }

    bool operator==(const SimilarityMatrix& other) const = default;

private:
    SimilarityMatrix() = default;
    static SimilarityMatrix unchecked(int n, std::vector<Entry> entries);

    int n_ = 0;
    std::vector<Entry> entries_;  // row-major n*n

    friend SimilarityMatrix permute(const SimilarityMatrix&, const class Ordering&);
};

/// Permutation of {0, ..., n-1}; position i holds vertex perm()[i].
class Ordering {
public:
    explicit Ordering(std::vector<int> perm);
    static Ordering identity(int n);

    int size() const { return static_cast<int>(perm_.size()); }
    int operator[](int position) const { return perm_[position]; }
    const std::vector<int>& perm() const { return perm_; }

    Ordering inverse() const;
    Ordering reversed() const;

    bool operator==(const Ordering& other) const = default;

private:
    std::vector<int> perm_;
};

/// Injective assignment of rational line coordinates to vertex indices.
class Drawing {
public:
    explicit Drawing(std::map<int, Rational> coords);

    const std::map<int, Rational>& coords() const { return coords_; }
    bool has(int v) const { return coords_.count(v) != 0; }
    const Rational& at(int v) const;
    int size() const { return static_cast<int>(coords_.size()); }

    bool operator==(const Drawing& other) const = default;

private:
    std::map<int, Rational> coords_;
};

/// Extended weighted adjacency matrix of g: entry {i,j} is the edge weight
/// when the edge exists, absent otherwise; diagonal is the maximum edge
/// weight (1 for an edgeless graph).
SimilarityMatrix matrix_from_graph(const WeightedGraph& g);

/// Inverse conversion: specified off-diagonal entries become edges.
WeightedGraph graph_from_matrix(const SimilarityMatrix& a, std::vector<std::string> labels = {});

/// Simultaneous row/column reordering: result[i][j] = a[pi_i][pi_j].
SimilarityMatrix permute(const SimilarityMatrix& a, const Ordering& pi);

/// Vertices sorted by ascending coordinate. The drawing must cover exactly
/// the indices {0, ..., n-1}.
Ordering induced_ordering(const Drawing& d);

}  // namespace linedraw
