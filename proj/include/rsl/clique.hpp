#pragma once

#include <cstdint>
#include <vector>

#include "rsl/elem_set.hpp"
#include "rsl/parallel.hpp"

namespace rsl {

struct CliqueOptions {
    double budget_secs = 60.0;
    Parallelism par;
    bool enumerate_all = false;
};

struct CliqueReport {
    std::size_t omega = 0;
    /// Lexicographically least maximum clique, or all maximum cliques in
    /// lexicographic order when enumeration was requested.
    std::vector<ElemSet> witnesses;
    std::uint64_t nodes_explored = 0;
    double wall_time_s = 0.0;
    /// Budget exhausted: omega is only a lower bound and witnesses may be
    /// incomplete. Never a silent answer; callers must check.
    bool timed_out = false;
};

/// Exact maximum clique over adjacency rows (vertex v adjacent to row bits).
/// Branch and bound on bitset candidate sets with a greedy-coloring bound;
/// fully deterministic for fixed options, including under parallelism.
CliqueReport max_clique(const std::vector<ElemSet>& adj, const CliqueOptions& opts = {});

/// As max_clique, then enumerates every maximum clique.
CliqueReport enumerate_max_cliques(const std::vector<ElemSet>& adj, const CliqueOptions& opts = {});

/// Greedy-coloring upper bound on the clique number of the subgraph induced
/// by `cand` (used by the decomposition search for window pruning).
std::size_t coloring_bound(const std::vector<ElemSet>& adj, const ElemSet& cand);

} // namespace rsl
