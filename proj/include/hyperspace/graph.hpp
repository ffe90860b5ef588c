#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include "hyperspace/assoc_array.hpp"

namespace hyperspace {

/// Edge arrays of a hyper-multi-graph. A stored E_out(k, v) means edge k
/// leaves vertex v; a stored E_in(k, v) means edge k enters v.
struct IncidencePair {
    AssocArray e_out;
    AssocArray e_in;
};

struct BfsResult {
    /// First-visit depth of each reached vertex; seeds are at depth 0.
    std::map<Key, std::size_t> levels;
    /// Frontier row vectors (row key `:frontier`), one per depth.
    std::vector<AssocArray> frontiers;
};

/// A = E_out^T (+).(x) E_in. Under plus.times with unit incidence values
/// A(i,j) counts the edges from i to j.
inline AssocArray adjacency(const IncidencePair& inc) {
    return array_mult(transpose(inc.e_out), inc.e_in);
}

inline constexpr std::size_t unlimited_depth = std::numeric_limits<std::size_t>::max();

/// Level-synchronous BFS by repeated vector-array products.
///
/// Runs on |a|0 and zero-norms each frontier, so only the topology of `a`
/// matters and mixed-sign weights cannot cancel a reachable vertex away.
/// Vertices already visited are stripped from each frontier. Seeds absent from the graph
/// are still reported at depth 0.
inline BfsResult bfs(const AssocArray& a, const KeyVector& seeds,
                     std::size_t max_depth = unlimited_depth) {
    const Semiring& s = a.semiring();
    const AssocArray pattern = zero_norm(a);
    BfsResult result;
    std::vector<Triple> start;
    for (const auto& k : seeds) {
        start.push_back({keys::frontier, k, s.one()});
        result.levels.emplace(k, 0);
    }
    AssocArray frontier = build(std::move(start), s);
    result.frontiers.push_back(frontier);

    for (std::size_t depth = 1; depth <= max_depth && !frontier.empty(); ++depth) {
        AssocArray next = zero_norm(array_mult(frontier, pattern));
        std::vector<Triple> fresh;
        for (const auto& t : next.entries()) {
            if (result.levels.emplace(t.col, depth).second) fresh.push_back(t);
        }
        frontier = AssocArray::from_canonical(s, std::move(fresh));
        if (frontier.empty()) break;
        result.frontiers.push_back(frontier);
    }
    return result;
}

/// Element-wise (+): the edge sets are merged.
inline AssocArray graph_union(const AssocArray& a, const AssocArray& b) { return ewise_add(a, b); }

/// Element-wise (x): only edges present in both survive.
inline AssocArray graph_intersection(const AssocArray& a, const AssocArray& b) {
    return ewise_mult(a, b);
}

}  // namespace hyperspace
