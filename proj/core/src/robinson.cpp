#include "linedraw/robinson.hpp"

#include <algorithm>
#include <cstdint>
#include <list>
#include <stdexcept>
#include <utility>

namespace linedraw {

namespace {

// Dense integer view of a similarity matrix: specified entries are replaced
// by their rank among the distinct values (order preserving), unspecified
// entries by -1. All recognition loops run on plain int comparisons.
struct RankMatrix {
    int n = 0;
    std::vector<int> rank;  // row-major, -1 = unspecified

    int at(int i, int j) const { return rank[static_cast<std::size_t>(i) * n + j]; }

    static RankMatrix from(const SimilarityMatrix& a) {
        RankMatrix r;
        r.n = a.size();
        std::vector<Rational> values;
        for (int i = 0; i < r.n; ++i) {
            for (int j = 0; j < r.n; ++j) {
                if (a.specified(i, j)) {
                    values.push_back(*a.at(i, j));
                }
            }
        }
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        r.rank.resize(static_cast<std::size_t>(r.n) * r.n, -1);
        for (int i = 0; i < r.n; ++i) {
            for (int j = 0; j < r.n; ++j) {
                if (a.specified(i, j)) {
                    auto it = std::lower_bound(values.begin(), values.end(), *a.at(i, j));
                    r.rank[static_cast<std::size_t>(i) * r.n + j] =
                        static_cast<int>(it - values.begin());
                }
            }
        }
        return r;
    }
};

// Bitmask of the good elements for the subset `placed`, in O(n^2).
//
// Condition 1 per anchor k in placed: a[k][u] must be >= every specified
// a[k][p] with p unplaced, p != u; precomputing the two largest such entries
// per k makes the per-u test O(1). Condition 2 per outside witness p: a[p][u]
// must be >= the largest specified a[p][k] with k placed.
std::uint32_t good_mask(const RankMatrix& m, std::uint32_t placed) {
    const int n = m.n;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    const std::uint32_t unplaced = full & ~placed;

    // max1/max2: largest and second largest specified rank from k to the
    // unplaced side, with the vertex attaining max1.
    std::vector<int> max1(n, -1), max2(n, -1), arg1(n, -1);
    for (int k = 0; k < n; ++k) {
        if (!(placed >> k & 1u)) {
            continue;
        }
        for (int p = 0; p < n; ++p) {
            if (!(unplaced >> p & 1u)) {
                continue;
            }
            int v = m.at(k, p);
            if (v < 0) {
                continue;
            }
            if (v > max1[k]) {
                max2[k] = max1[k];
                max1[k] = v;
                arg1[k] = p;
            } else if (v > max2[k]) {
                max2[k] = v;
            }
        }
    }
    // best_to_placed[p]: largest specified rank from unplaced p into placed.
    std::vector<int> best_to_placed(n, -1);
    for (int p = 0; p < n; ++p) {
        if (!(unplaced >> p & 1u)) {
            continue;
        }
        for (int k = 0; k < n; ++k) {
            if ((placed >> k & 1u) && m.at(p, k) > best_to_placed[p]) {
                best_to_placed[p] = m.at(p, k);
            }
        }
    }

    std::uint32_t good = 0;
    for (int u = 0; u < n; ++u) {
        if (!(unplaced >> u & 1u)) {
            continue;
        }
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            if (!(placed >> k & 1u)) {
                continue;
            }
            int toward_u = m.at(k, u);
            if (toward_u < 0) {
                continue;  // nothing to compare for this anchor
            }
            int strongest_other = (arg1[k] == u) ? max2[k] : max1[k];
            if (toward_u < strongest_other) {
                ok = false;
            }
        }
        for (int p = 0; p < n && ok; ++p) {
            if (p == u || !(unplaced >> p & 1u)) {
                continue;
            }
            int toward_u = m.at(p, u);
            if (toward_u >= 0 && toward_u < best_to_placed[p]) {
                ok = false;
            }
        }
        if (ok) {
            good |= 1u << u;
        }
    }
    return good;
}

// Depth-first enumeration of source-to-sink paths of the subset DAG.
// Subsets from which the full set is unreachable are memoized as dead, so
// each subset is fully expanded at most once across the whole search.
class PrefixSearch {
public:
    // With exact_truncation the search keeps going after the budget fills
    // until it either proves the list complete or finds one more ordering;
    // without it the search stops as soon as the budget is reached.
    PrefixSearch(const RankMatrix& m, std::size_t budget, bool exact_truncation)
        : m_(m),
          n_(m.n),
          full_((m.n == 32) ? ~0u : ((1u << m.n) - 1)),
          budget_(budget),
          exact_truncation_(exact_truncation),
          dead_(std::size_t{1} << m.n, 0) {}

    EnumerationResult run() {
        prefix_.reserve(n_);
        dfs(0);
        return {std::move(found_), truncated_};
    }

private:
    // Returns true when at least one complete ordering was emitted below mask.
    bool dfs(std::uint32_t mask) {
        if (mask == full_) {
            if (found_.size() == budget_) {
                truncated_ = true;
                stop_ = true;
                return false;
            }
            found_.push_back(Ordering(prefix_));
            return true;
        }
        if (dead_[mask]) {
            return false;
        }
        bool found = false;
        std::uint32_t good = good_mask(m_, mask);
        for (int u = 0; u < n_; ++u) {
            if (!(good >> u & 1u)) {
                continue;
            }
            prefix_.push_back(u);
            found |= dfs(mask | (1u << u));
            prefix_.pop_back();
            if (stop_) {
                return found;
            }
        }
        if (!found) {
            dead_[mask] = 1;
        }
        return found;
    }

    const RankMatrix& m_;
    int n_;
    std::uint32_t full_;
    std::size_t budget_;
    std::vector<std::uint8_t> dead_;
    std::vector<int> prefix_;
    std::vector<Ordering> found_;
    bool truncated_ = false;
    bool stop_ = false;
};

void check_cap(const SimilarityMatrix& a, int cap) {
    if (cap < 1 || cap > 31) {
        throw std::invalid_argument("recognition cap must be between 1 and 31");
    }
    if (a.size() > cap) {
        throw std::invalid_argument("instance with " + std::to_string(a.size()) +
                                    " vertices exceeds the recognition cap of " +
                                    std::to_string(cap));
    }
}

// One similarity-first search sweep over a complete matrix. Maintains an
// ordered partition of the unvisited vertices; visiting p splits every class
// into runs of equal similarity to p, most similar first, preserving the
// incoming order inside each run. `priority` fixes the initial internal
// order, so passing the reverse of a previous sweep yields a "+" sweep.
std::vector<int> sfs_sweep(const RankMatrix& m, const std::vector<int>& priority) {
    std::list<std::vector<int>> classes;
    classes.push_back(priority);
    std::vector<int> order;
    order.reserve(priority.size());

    while (!classes.empty()) {
        std::vector<int>& front = classes.front();
        int p = front.front();
        front.erase(front.begin());
        if (front.empty()) {
            classes.pop_front();
        }
        order.push_back(p);

        for (auto it = classes.begin(); it != classes.end();) {
            std::vector<int>& cls = *it;
            std::stable_sort(cls.begin(), cls.end(),
                             [&](int x, int y) { return m.at(p, x) > m.at(p, y); });
            // Split into runs of equal similarity.
            std::size_t start = 0;
            std::vector<std::vector<int>> runs;
            for (std::size_t i = 1; i <= cls.size(); ++i) {
                if (i == cls.size() || m.at(p, cls[i]) != m.at(p, cls[start])) {
                    runs.emplace_back(cls.begin() + start, cls.begin() + i);
                    start = i;
                }
            }
            if (runs.size() == 1) {
                ++it;
                continue;
            }
            it = classes.erase(it);
            for (auto& run : runs) {
                classes.insert(it, std::move(run));
            }
        }
    }
    return order;
}

}  // namespace

bool is_robinson(const SimilarityMatrix& a) {
    const int n = a.size();
    for (int i = 0; i < n; ++i) {
        for (int l = i + 1; l < n; ++l) {
            if (!a.specified(i, l)) {
                continue;
            }
            const Rational& outer = *a.at(i, l);
            for (int j = i; j <= l; ++j) {
                if (a.specified(i, j) && outer > *a.at(i, j)) {
                    return false;
                }
                if (a.specified(j, l) && outer > *a.at(j, l)) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::vector<int> good_elements(const SimilarityMatrix& a, const std::vector<int>& placed) {
    const int n = a.size();
    if (n > 31) {
        throw std::invalid_argument("good_elements supports at most 31 vertices");
    }
    std::uint32_t placed_mask = 0;
    for (int v : placed) {
        if (v < 0 || v >= n) {
            throw std::invalid_argument("placed vertex out of range");
        }
        placed_mask |= 1u << v;
    }
    RankMatrix m = RankMatrix::from(a);
    std::uint32_t good = good_mask(m, placed_mask);
    std::vector<int> result;
    for (int u = 0; u < n; ++u) {
        if (good >> u & 1u) {
            result.push_back(u);
        }
    }
    return result;
}

RecognitionResult find_robinson_ordering(const SimilarityMatrix& a, int cap) {
    check_cap(a, cap);
    RankMatrix m = RankMatrix::from(a);
    EnumerationResult first = PrefixSearch(m, 1).run();
    RecognitionResult result;
    result.method = RecognitionMethod::SubsetDp;
    if (!first.orderings.empty()) {
        result.ordering = std::move(first.orderings.front());
    }
    return result;
}

RecognitionResult find_robinson_ordering_complete(const SimilarityMatrix& a) {
    if (!a.complete()) {
        throw std::invalid_argument("find_robinson_ordering_complete requires a complete matrix");
    }
    const int n = a.size();
    RankMatrix m = RankMatrix::from(a);

    std::vector<int> sweep(n);
    for (int i = 0; i < n; ++i) {
        sweep[i] = i;
    }
    // Multisweep: n-1 similarity-first search sweeps, each seeded with the
    // reverse of the previous one. The sweep order of a Robinsonian matrix
    // converges to a Robinson ordering; every candidate is contract-checked.
    const int sweeps = std::max(1, n - 1);
    for (int t = 0; t < sweeps; ++t) {
        sweep = sfs_sweep(m, t == 0 ? sweep : std::vector<int>(sweep.rbegin(), sweep.rend()));
        Ordering candidate(sweep);
        if (is_robinson(permute(a, candidate))) {
            return {candidate, RecognitionMethod::CompletePoly};
        }
    }

    // No sweep validated: either the matrix is not Robinsonian or the sweep
    // heuristic missed. The subset DP settles it exactly while the instance
    // is small enough; beyond the cap the multisweep verdict stands.
    if (n <= kDefaultRecognitionCap) {
        return find_robinson_ordering(a, kDefaultRecognitionCap);
    }
    return {std::nullopt, RecognitionMethod::CompletePoly};
}

EnumerationResult enumerate_robinson_orderings(const SimilarityMatrix& a, std::size_t budget,
                                               int cap) {
    check_cap(a, cap);
    if (budget == 0) {
        return {{}, true};
    }
    RankMatrix m = RankMatrix::from(a);
    return PrefixSearch(m, budget).run();
}

}  // namespace linedraw
