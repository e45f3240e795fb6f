#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "linedraw/core.hpp"

namespace linedraw {

/// Which algorithm produced a recognition answer.
enum class RecognitionMethod { CompletePoly, SubsetDp, BruteForce };

struct RecognitionResult {
    std::optional<Ordering> ordering;  // present iff a Robinson ordering exists
    RecognitionMethod method = RecognitionMethod::SubsetDp;

    bool found() const { return ordering.has_value(); }
};

struct EnumerationResult {
    std::vector<Ordering> orderings;
    bool truncated = false;  // budget ran out with orderings left unenumerated
};

/// Vertex-count limit for the exponential recognition path (2^n subsets).
inline constexpr int kDefaultRecognitionCap = 22;

/// True iff the specified entries of a are monotone nondecreasing in rows
/// and columns moving towards the diagonal: for every specified a[i][l]
/// with i < l, a[i][l] <= a[i][j] and a[i][l] <= a[k][l] for all specified
/// entries with j, k in [i, l].
bool is_robinson(const SimilarityMatrix& a);

/// All vertices u outside `placed` that may be appended next to it: for
/// every k in placed and p outside placed (p != u), a[k][u] >= a[k][p] and
/// a[p][u] >= a[p][k] whenever both sides are specified. Returned ascending.
std::vector<int> good_elements(const SimilarityMatrix& a, const std::vector<int>& placed);

/// Subset dynamic program over the 2^n vertex subsets: a subset is a viable
/// prefix iff it can be built by repeatedly appending a good element.
/// Returns a Robinson ordering (smallest-vertex-first tie-breaking) or none.
/// Throws std::invalid_argument when a.size() > cap.
RecognitionResult find_robinson_ordering(const SimilarityMatrix& a,
                                         int cap = kDefaultRecognitionCap);

/// Polynomial-time recognition for complete matrices via multisweep
/// similarity-first search. Every candidate sweep is re-validated with
/// is_robinson; if no sweep validates, the subset DP settles the answer (and
/// the result is tagged SubsetDp). Throws std::invalid_argument when called
/// on an incomplete matrix.
RecognitionResult find_robinson_ordering_complete(const SimilarityMatrix& a);

/// Enumerates Robinson orderings of a (paths of the subset DAG) in
/// deterministic smallest-vertex-first order, up to `budget` of them.
EnumerationResult enumerate_robinson_orderings(const SimilarityMatrix& a, std::size_t budget,
                                               int cap = kDefaultRecognitionCap);

}  // namespace linedraw
