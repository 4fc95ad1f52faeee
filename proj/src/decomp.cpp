#include "rsl/decomp.hpp"

#include <algorithm>
#include <chrono>
#include <string>

#include "rsl/clique.hpp"
#include "rsl/density.hpp"
#include "rsl/nt.hpp"

namespace rsl {

namespace {

using Clock = std::chrono::steady_clock;

struct SearchCore {
    const FieldCtx& ctx;
    const std::vector<ElemSet>& adj;
    ElemSet target;
    std::size_t target_count;
    bool full_sumset; // doubles count towards coverage
    std::size_t n_min, n_max;
    bool symmetry;
    std::vector<Elem> dilators; // S_d members != 1

    Clock::time_point deadline;
    std::uint64_t nodes = 0;
    bool timed_out = false;

    std::vector<Elem> cur;
    ElemSet covered;
    std::size_t covered_count = 0;
    std::vector<std::vector<Elem>> found;

    SearchCore(const FieldCtx& c, const std::vector<ElemSet>& a) : ctx(c), adj(a), covered(c.q) {}

    bool out_of_time() {
        if ((nodes & 63) == 1 && Clock::now() > deadline) timed_out = true;
        return timed_out;
    }

    // lex comparison of sorted(u * cur) against cur; true when some dilate is
    // strictly smaller, i.e. the prefix cannot start a canonical solution
    bool prefix_dominated() const {
        std::vector<Elem> img(cur.size());
        for (Elem u : dilators) {
            for (std::size_t i = 0; i < cur.size(); ++i) img[i] = ctx.mul(u, cur[i]);
            std::sort(img.begin(), img.end());
            if (std::lexicographical_compare(img.begin(), img.end(), cur.begin(), cur.end()))
                return true;
        }
        return false;
    }

    // can the least uncovered target element still be written as a sum?
    bool least_uncovered_attainable(const ElemSet& cand) const {
        ElemSet uncovered = target;
        uncovered -= covered;
        Elem s = uncovered.find_first();
        if (s == ElemSet::npos) return true;
        for (Elem a : cur) {
            if (cand.test(ctx.sub(s, a))) return true;
        }
        for (Elem x = cand.find_first(); x != ElemSet::npos; x = cand.find_next_from(x + 1)) {
            Elem y = ctx.sub(s, x);
            if (cand.test(y) && (full_sumset || y != x)) return true;
        }
        return false;
    }

    void record() { found.push_back(cur); }

    void dfs(const ElemSet& cand) {
        ++nodes;
        if (out_of_time()) return;

        if (covered_count == target_count && cur.size() >= n_min && cur.size() <= n_max) record();
        if (cur.size() >= n_max) return;

        std::size_t r = cand.count();
        if (cur.size() + r < n_min) return;

        std::size_t remaining = target_count - covered_count;
        if (remaining > 0) {
            std::size_t max_new = r * (r - 1) / 2 + cur.size() * r + (full_sumset ? r : 0);
            if (max_new < remaining) return;
            if (!least_uncovered_attainable(cand)) return;
        }

        if (cur.size() + coloring_bound(adj, cand) < n_min) return;

        ElemSet rest = cand;
        for (Elem v = cand.find_first(); v != ElemSet::npos; v = cand.find_next_from(v + 1)) {
            rest.reset(v);
            cur.push_back(v);
            if (symmetry && prefix_dominated()) {
                cur.pop_back();
                continue;
            }
            // coverage from the new element (all sums land in target by the
            // adjacency/vertex-set invariants)
            std::vector<Elem> newly;
            for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
                Elem s = ctx.add(cur[i], v);
                if (!covered.test(s)) {
                    covered.set(s);
                    ++covered_count;
                    newly.push_back(s);
                }
            }
            if (full_sumset) {
                Elem s = ctx.add(v, v);
                if (!covered.test(s)) {
                    covered.set(s);
                    ++covered_count;
                    newly.push_back(s);
                }
            }
            dfs(rest & adj[v]);
            for (Elem s : newly) covered.reset(s);
            covered_count -= newly.size();
            cur.pop_back();
            if (timed_out) return;
        }
    }
};

ElemSet to_set(std::uint64_t q, const std::vector<Elem>& v) {
    ElemSet s(q);
    for (auto x : v) s.set(x);
    return s;
}

} // namespace

DecompositionReport search_decomposition(const FieldCtx& ctx, std::uint64_t d, DecompMode mode,
                                         const DecompOptions& opts) {
    auto t0 = Clock::now();
    SubgroupSd sd = compute_subgroup(ctx, d);

    DecompositionReport rep;
    rep.q = ctx.q;
    rep.d = d;
    rep.mode = mode;

    bool full = mode != DecompMode::RestrictedExact;
    ElemSet target = sd.members;
    if (mode == DecompMode::FullExactZero) target.set(0);
    std::size_t target_count = target.count();

    // connection for pair sums is the target set itself
    CayleyGraph g = build_gps(ctx, d, /*include_zero=*/mode == DecompMode::FullExactZero);

    // vertex universe: every element in full modes must have its double in
    // the target; restricted mode admits everything
    ElemSet universe(ctx.q);
    universe.fill();
    if (full) {
        ElemSet ok(ctx.q);
        for (Elem x = 0; x < ctx.q; ++x)
            if (target.test(ctx.add(x, x))) ok.set(x);
        universe = ok;
    }

    // size window
    std::size_t n_min = 1;
    auto pairs = [&](std::size_t n) { return full ? n * (n + 1) / 2 : n * (n - 1) / 2; };
    while (pairs(n_min) < target_count) ++n_min;
    std::uint64_t root = nt::isqrt(ctx.q);
    std::size_t n_max;
    if (full) {
        n_max = root; // |A| <= sqrt(q) whenever A+A misses nothing outside S_d u {0}
    } else {
        n_max = (root * root == ctx.q) ? root + 2 : root + 3; // |A| < sqrt(q) + 3
    }

    auto deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(opts.budget_secs));
    std::vector<Elem> dilators;
    sd.members.for_each([&](Elem u) {
        if (u != 1) dilators.push_back(u);
    });

    auto make_core = [&]() {
        SearchCore core(ctx, g.rows);
        core.target = target;
        core.target_count = target_count;
        core.full_sumset = full;
        core.n_min = n_min;
        core.n_max = n_max;
        core.symmetry = opts.symmetry_reduction;
        core.dilators = dilators;
        core.deadline = deadline;
        return core;
    };

    std::vector<std::vector<Elem>> found;
    if (opts.par.workers <= 1) {
        SearchCore core = make_core();
        core.dfs(universe);
        found = std::move(core.found);
        rep.stats.nodes = core.nodes;
        rep.stats.timed_out = core.timed_out;
    } else {
        // split on the first element; merge per-branch results in index order
        auto roots = universe.to_vector();
        std::vector<SearchCore> cores;
        cores.reserve(roots.size());
        for (std::size_t i = 0; i < roots.size(); ++i) cores.push_back(make_core());
        parallel_branches(opts.par.workers, roots.size(), [&](std::size_t i) {
            SearchCore& core = cores[i];
            Elem v = roots[i];
            ElemSet rest = universe;
            for (std::size_t j = 0; j <= i; ++j) rest.reset(roots[j]);
            core.cur.push_back(v);
            if (core.symmetry && core.prefix_dominated()) return;
            if (full) {
                Elem s = ctx.add(v, v);
                core.covered.set(s);
                core.covered_count = 1;
            }
            core.dfs(rest & g.rows[v]);
        });
        for (auto& core : cores) {
            for (auto& sol : core.found) found.push_back(sol);
            rep.stats.nodes += core.nodes;
            rep.stats.timed_out = rep.stats.timed_out || core.timed_out;
        }
    }
    rep.stats.n_min = n_min;
    rep.stats.n_max = n_max;

    // orbit bookkeeping: canonical representative = lex-least dilate
    std::vector<ElemSet> canon;
    for (auto& sol : found) {
        ElemSet s = to_set(ctx.q, sol);
        ElemSet best = s;
        sd.members.for_each([&](Elem u) {
            ElemSet img = dilate(ctx, u, s);
            if (img.lex_less(best)) best = img;
        });
        bool seen = false;
        for (auto& c : canon) seen = seen || (c == best);
        if (!seen) canon.push_back(best);
    }
    std::sort(canon.begin(), canon.end(), [](const ElemSet& a, const ElemSet& b) { return a.lex_less(b); });

    for (auto& c : canon) {
        DecompSolution sol;
        sol.canonical = c;
        sd.members.for_each([&](Elem u) {
            ElemSet img = dilate(ctx, u, c);
            bool seen = false;
            for (auto& o : sol.orbit) seen = seen || (o == img);
            if (!seen) sol.orbit.push_back(img);
        });
        std::sort(sol.orbit.begin(), sol.orbit.end(),
                  [](const ElemSet& a, const ElemSet& b) { return a.lex_less(b); });
        rep.solutions.push_back(std::move(sol));
    }

    if (mode == DecompMode::RestrictedExact) {
        for (auto& sol : rep.solutions)
            rep.structural.push_back(check_sidon_structure(ctx, sd, sol.canonical));
    }

    rep.stats.wall_time_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return rep;
}

VerifyResult verify_decomposition(const FieldCtx& ctx, const SubgroupSd& sd, const ElemSet& a_set) {
    VerifyResult r;
    ElemSet rs = restricted_sumset(ctx, a_set);
    r.missing = sd.members;
    r.missing -= rs;
    r.excess = rs;
    r.excess -= sd.members;
    r.ok = r.missing.none() && r.excess.none();
    return r;
}

StructuralVerdict check_sidon_structure(const FieldCtx& ctx, const SubgroupSd& sd,
                                        const ElemSet& a_set) {
    auto ver = verify_decomposition(ctx, sd, a_set);
    if (!ver.ok)
        throw Error(ErrorKind::NotADecomposition, "A +^ A != S_d");

    StructuralVerdict v;
    v.decomposition_ok = true;
    v.size = a_set.count();
    v.size_even = v.size % 2 == 0;
    v.zero_in_set = a_set.test(0);
    v.sidon = is_sidon(ctx, a_set);
    auto [dbl_sd, dbl_sd0] = doubles_condition(ctx, sd, a_set);
    v.doubles_in_sd = dbl_sd;

    if (!v.size_even || v.zero_in_set) {
        v.sidon_ok = v.sidon == SidonClass::Sidon;
        v.doubles_ok = dbl_sd == 0;
        v.q_formula_ok = ctx.q == sd.d * v.size * (v.size - 1) / 2 + 1;
        v.ok = v.sidon_ok && v.doubles_ok && v.q_formula_ok;
    } else {
        // even |A| without 0: size pinned by the ceiling, fraction in (1/2, 3/4)
        using boost::multiprecision::cpp_int;
        cpp_int num = cpp_int(ctx.q) - 1;
        cpp_int den = 2 * cpp_int(sd.d);
        cpp_int alpha = ceil_sqrt_rational(num, den);
        v.ceiling_ok = cpp_int(v.size) == 2 * alpha;
        v.window_ok = frac_window_test(num, den, {1, 2}, {3, 4});
        v.ok = v.ceiling_ok && v.window_ok;
    }
    return v;
}

HpBoundResult hp_bound_check(const FieldCtx& ctx, const SubgroupSd& sd, const ElemSet& a_set,
                             const ElemSet& b_set) {
    ElemSet sd0 = sd.members;
    sd0.set(0);
    ElemSet ab = sumset(ctx, a_set, b_set);
    if (!ab.is_subset_of(sd0))
        throw Error(ErrorKind::PreconditionViolated, "A+B is not contained in S_d u {0}");
    std::uint64_t e = sd.index_exponent;
    if (!kummer_nonvanishing(b_set.count() - 1 + e, e, ctx.p))
        throw Error(ErrorKind::PreconditionViolated, "binomial coefficient vanishes mod p");

    HpBoundResult r;
    r.lhs = a_set.count() * b_set.count();
    r.subgroup_size = e;
    ElemSet neg_b(ctx.q);
    b_set.for_each([&](Elem b) { neg_b.set(ctx.neg(b)); });
    r.overlap = a_set.intersection_count(neg_b);
    r.ok = r.lhs <= r.subgroup_size + r.overlap;
    return r;
}

bool kummer_nonvanishing(std::uint64_t m_plus_n, std::uint64_t n, std::uint64_t p) {
    if (n > m_plus_n) return false;
    std::uint64_t m = m_plus_n - n;
    // no carries when adding m + n in base p
    std::uint64_t carry = 0;
    while (m || n || carry) {
        std::uint64_t s = m % p + n % p + carry;
        carry = s >= p ? 1 : 0;
        if (carry) return false;
        m /= p;
        n /= p;
    }
    return true;
}

std::uint64_t digit_driven_b_size(std::uint64_t a_size, std::uint64_t p, std::uint64_t d) {
    if (a_size == 0) return 0;
    std::uint64_t v = a_size - 1;
    std::vector<std::uint64_t> digs;
    do {
        digs.push_back(v % p);
        v /= p;
    } while (v);
    std::uint64_t k = digs.size() - 1;
    std::uint64_t ck = digs.back();
    std::uint64_t step = (p - 1) / d;
    if (ck <= p - 1 - step) {
        std::uint64_t pk = 1;
        for (std::uint64_t i = 0; i < k; ++i) pk *= p;
        return ck * pk + 1;
    }
    std::uint64_t all = 0, pw = 1;
    for (std::uint64_t i = 0; i <= k; ++i) {
        all += (p - 1 - step) * pw;
        pw *= p;
    }
    return all + 1;
}

NagellVerdict nagell_gate(std::uint64_t q) {
    NagellVerdict v;
    std::uint64_t disc = 4 * q - 3;
    std::uint64_t t = nt::isqrt(disc);
    if (t * t == disc) v.n_value = (1 + t) / 2;

    auto fac = nt::factor(q);
    bool prime_power = std::all_of(fac.begin(), fac.end(), [&](std::uint64_t f) { return f == fac[0]; });
    v.prime_power_r_ge_2 = prime_power && fac.size() >= 2;
    // classical fact: the only prime power p^r, r >= 2, of the form N^2-N+1
    // is 343 = 7^3 (N = 19)
    v.exceptional = v.prime_power_r_ge_2 && v.n_value.has_value() && q == 343;
    return v;
}

Thm14Verdict check_thm14(const FieldCtx& ctx, std::uint64_t d, const DecompOptions& opts) {
    Thm14Verdict v;
    v.q = ctx.q;
    v.d = d;
    std::uint64_t k = nt::isqrt(d / 2);
    if (2 * k * k != d || k < 3)
        throw Error(ErrorKind::PreconditionViolated, "d must be 2k^2 with k >= 3");
    v.k = k;
    if (ctx.k % 2 != 0)
        throw Error(ErrorKind::PreconditionViolated, "q must be an even power of p");
    if (ctx.p % d != 1)
        throw Error(ErrorKind::PreconditionViolated, "p must be 1 mod d");

    auto rep = search_decomposition(ctx, d, DecompMode::RestrictedExact, opts);
    v.search_complete = !rep.stats.timed_out;
    v.search_empty = rep.solutions.empty();

    std::uint64_t r = ctx.k / 2;
    std::uint64_t p_r = 1;
    for (std::uint64_t i = 0; i < r; ++i) p_r *= ctx.p;

    // odd branch: q = d N(N-1)/2 + 1 for some N
    std::uint64_t twice = 2 * (ctx.q - 1) / d;
    std::uint64_t disc = 1 + 4 * twice;
    std::uint64_t t = nt::isqrt(disc);
    if (t * t == disc && (1 + t) % 2 == 0) {
        v.odd_size_exists = true;
        v.odd_size = (1 + t) / 2;
        // were such a solution odd-sized, (2p^r + 2kN - k) | (k^2 - 4) would
        // be forced; the divisor dwarfs k^2 - 4
        v.odd_divisor_blocked = 2 * p_r + 2 * k * v.odd_size - k > k * k - 4;
    } else {
        v.odd_divisor_blocked = true; // no integer size at all
    }

    // even branch: the fractional part sits in (0, 1/2k), disjoint from (1/2, 3/4)
    v.two_k_divides = (p_r - 1) % (2 * k) == 0;
    using boost::multiprecision::cpp_int;
    cpp_int num = cpp_int(ctx.q) - 1;
    cpp_int den = 2 * cpp_int(d);
    v.frac_in_low_interval = frac_window_test(num, den, {0, 1}, {1, 2 * k});
    v.window_excluded = !frac_window_test(num, den, {1, 2}, {3, 4});

    v.ok = v.search_complete && v.search_empty && v.odd_divisor_blocked && v.two_k_divides &&
           v.frac_in_low_interval && v.window_excluded;
    return v;
}

} // namespace rsl
