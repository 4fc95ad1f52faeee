#include "rsl/clique.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>

namespace rsl {

namespace {

using Clock = std::chrono::steady_clock;

struct ColorEntry {
    std::uint32_t vertex;
    std::uint32_t color;
};

// Greedy sequential coloring of cand by ascending idx within color classes.
// Output is ordered by color ascending; deterministic.
void color_sort(const std::vector<ElemSet>& adj, const ElemSet& cand, std::vector<ColorEntry>& out) {
    out.clear();
    ElemSet uncolored = cand;
    std::uint32_t color = 0;
    while (uncolored.any()) {
        ++color;
        ElemSet cls = uncolored;
        while (cls.any()) {
            std::uint64_t v = cls.find_first();
            cls.reset(v);
            cls -= adj[v];
            uncolored.reset(v);
            out.push_back({static_cast<std::uint32_t>(v), color});
        }
    }
}

// Deterministic greedy clique from ascending vertex scan; gives the initial
// lower bound shared by all branches.
std::size_t greedy_clique_size(const std::vector<ElemSet>& adj) {
    if (adj.empty()) return 0;
    ElemSet cand(adj.size());
    cand.fill();
    std::size_t size = 0;
    while (cand.any()) {
        std::uint64_t v = cand.find_first();
        ++size;
        cand &= adj[v];
    }
    return size;
}

std::vector<std::uint32_t> degeneracy_order(const std::vector<ElemSet>& adj) {
    std::size_t n = adj.size();
    std::vector<std::uint32_t> order;
    order.reserve(n);
    ElemSet remaining(n);
    remaining.fill();
    std::vector<std::size_t> deg(n);
    for (std::size_t v = 0; v < n; ++v) deg[v] = adj[v].count();
    for (std::size_t step = 0; step < n; ++step) {
        std::uint64_t best = ElemSet::npos;
        std::size_t best_deg = ~std::size_t{0};
        remaining.for_each([&](std::uint64_t v) {
            if (deg[v] < best_deg) {
                best_deg = deg[v];
                best = v;
            }
        });
        order.push_back(static_cast<std::uint32_t>(best));
        remaining.reset(best);
        (adj[best] & remaining).for_each([&](std::uint64_t u) { --deg[u]; });
    }
    return order;
}

struct BranchState {
    const std::vector<ElemSet>* adj;
    Clock::time_point deadline;
    std::size_t best = 0; // branch-local bound
    std::vector<std::uint32_t> best_clique;
    std::vector<std::uint32_t> current;
    std::uint64_t nodes = 0;
    bool timed_out = false;
    std::vector<std::vector<ColorEntry>> color_pool;

    bool out_of_time() {
        if ((nodes & 63) == 1 && Clock::now() > deadline) timed_out = true;
        return timed_out;
    }

    void expand(const ElemSet& cand, std::size_t depth) {
        ++nodes;
        if (out_of_time()) return;
        if (cand.none()) {
            if (current.size() > best) {
                best = current.size();
                best_clique = current;
            }
            return;
        }
        // pool sized up-front (depth < n); resizing here would invalidate
        // references held by parent frames
        auto& order = color_pool[depth];
        color_sort(*adj, cand, order);
        ElemSet live = cand;
        for (std::size_t i = order.size(); i-- > 0;) {
            auto [v, c] = order[i];
            if (current.size() + c <= best) return; // colors ascend: nothing left can beat best
            current.push_back(v);
            expand(live & (*adj)[v], depth + 1);
            current.pop_back();
            if (timed_out) return;
            live.reset(v);
        }
    }
};

struct BranchResult {
    std::size_t best = 0;
    std::vector<std::uint32_t> clique;
    std::uint64_t nodes = 0;
    bool timed_out = false;
};

ElemSet to_elem_set(std::size_t n, const std::vector<std::uint32_t>& vs) {
    ElemSet s(n);
    for (auto v : vs) s.set(v);
    return s;
}

// Exhaustive DFS for cliques of exactly `target` size, visiting increasing
// idx sequences in lexicographic order. With stop_at_first the first hit is
// the lexicographically least witness.
struct TargetSearch {
    const std::vector<ElemSet>* adj;
    std::size_t target;
    bool stop_at_first;
    Clock::time_point deadline;
    std::vector<std::uint32_t> current;
    std::vector<ElemSet>* found = nullptr;
    std::uint64_t nodes = 0;
    bool timed_out = false;
    std::vector<std::vector<ColorEntry>> color_pool;

    bool dfs(const ElemSet& cand, std::size_t depth) {
        ++nodes;
        if ((nodes & 63) == 1 && Clock::now() > deadline) {
            timed_out = true;
            return true;
        }
        if (current.size() == target) {
            found->push_back(to_elem_set(adj->size(), current));
            return stop_at_first;
        }
        if (current.size() + cand.count() < target) return false;
        auto& order = color_pool[depth];
        color_sort(*adj, cand, order);
        std::size_t bound = order.empty() ? 0 : order.back().color;
        if (current.size() + bound < target) return false;
        ElemSet rest = cand;
        for (std::uint64_t v = cand.find_first(); v != ElemSet::npos; v = cand.find_next_from(v + 1)) {
            rest.reset(v);
            current.push_back(v);
            if (dfs(rest & (*adj)[v], depth + 1)) return true;
            current.pop_back();
        }
        return false;
    }
};

CliqueReport run(const std::vector<ElemSet>& adj, const CliqueOptions& opts, bool enumerate_all) {
    auto t0 = Clock::now();
    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(opts.budget_secs));
    std::size_t n = adj.size();
    CliqueReport rep;
    if (n == 0) return rep;

    std::size_t lb = greedy_clique_size(adj);
    auto order = degeneracy_order(adj);

    // Root branches follow the degeneracy order; candidates are the
    // later-ordered neighbours, so every clique lands in exactly one branch.
    std::vector<ElemSet> branch_cand(n, ElemSet(n));
    {
        ElemSet later(n);
        later.fill();
        for (std::size_t i = 0; i < n; ++i) {
            later.reset(order[i]);
            branch_cand[i] = adj[order[i]] & later;
        }
    }

    std::vector<BranchResult> results(n);
    bool chain_bounds = opts.par.workers <= 1; // serial reference chains bounds between branches
    if (chain_bounds) {
        std::size_t running = lb;
        for (std::size_t i = 0; i < n; ++i) {
            BranchState st;
            st.adj = &adj;
            st.deadline = deadline;
            st.best = running; // only strict improvements matter; `running` is already realized
            st.current.assign(1, order[i]);
            st.color_pool.resize(n + 1);
            st.expand(branch_cand[i], 0);
            results[i] = {st.best, st.best_clique, st.nodes, st.timed_out};
            running = std::max(running, st.best);
            if (st.timed_out) break;
        }
    } else {
        parallel_branches(opts.par.workers, n, [&](std::size_t i) {
            BranchState st;
            st.adj = &adj;
            st.deadline = deadline;
            st.best = lb; // branch-local bound only: deterministic node counts
            st.current.assign(1, order[i]);
            st.color_pool.resize(n + 1);
            st.expand(branch_cand[i], 0);
            results[i] = {st.best, st.best_clique, st.nodes, st.timed_out};
        });
    }

    std::size_t omega = std::max<std::size_t>(lb, 1);
    for (auto& r : results) {
        omega = std::max(omega, r.best);
        rep.nodes_explored += r.nodes;
        rep.timed_out = rep.timed_out || r.timed_out;
    }
    rep.omega = omega;

    if (rep.timed_out) {
        // best-so-far witness only; flagged as a lower bound
        for (auto& r : results)
            if (r.best == omega && !r.clique.empty()) {
                rep.witnesses.push_back(to_elem_set(n, r.clique));
                break;
            }
        rep.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
        return rep;
    }

    // Canonical witness extraction: lexicographically least clique(s) of size
    // omega, independent of how the bound phase explored.
    TargetSearch ts;
    ts.adj = &adj;
    ts.target = omega;
    ts.stop_at_first = !enumerate_all;
    ts.deadline = deadline;
    ts.found = &rep.witnesses;
    ts.color_pool.resize(n + 1);
    ElemSet all(n);
    all.fill();
    ts.dfs(all, 0);
    rep.nodes_explored += ts.nodes;
    rep.timed_out = rep.timed_out || ts.timed_out;
    rep.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

} // namespace

CliqueReport max_clique(const std::vector<ElemSet>& adj, const CliqueOptions& opts) {
    return run(adj, opts, false);
}

CliqueReport enumerate_max_cliques(const std::vector<ElemSet>& adj, const CliqueOptions& opts) {
    return run(adj, opts, true);
}

std::size_t coloring_bound(const std::vector<ElemSet>& adj, const ElemSet& cand) {
    std::size_t colors = 0;
    ElemSet uncolored = cand;
    while (uncolored.any()) {
        ++colors;
        ElemSet cls = uncolored;
        while (cls.any()) {
            std::uint64_t v = cls.find_first();
            cls.reset(v);
            cls -= adj[v];
            uncolored.reset(v);
        }
    }
    return colors;
}

} // namespace rsl
