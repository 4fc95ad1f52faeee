#include "rsl/cayley.hpp"

#include <string>

#include "rsl/nt.hpp"

namespace rsl {

namespace {

std::vector<ElemSet> sum_rows(const FieldCtx& ctx, const ElemSet& conn) {
    std::vector<ElemSet> rows(ctx.q, ElemSet(ctx.q));
    auto cv = conn.to_vector();
    for (Elem x = 0; x < ctx.q; ++x) {
        for (Elem s : cv) {
            Elem y = ctx.sub(s, x);
            if (y != x) rows[x].set(y);
        }
    }
    return rows;
}

} // namespace

CayleyGraph build_gps(const FieldCtx& ctx, std::uint64_t d, bool include_zero) {
    SubgroupSd sd = compute_subgroup(ctx, d);
    CayleyGraph g;
    g.ctx = ctx;
    g.d = d;
    g.kind = GraphKind::CayleySum;
    g.connection = sd.members;
    if (include_zero) g.connection.set(0);
    g.zero_in_connection = include_zero;
    g.rows = sum_rows(ctx, g.connection);
    return g;
}

CayleyGraph build_gp(const FieldCtx& ctx, std::uint64_t d) {
    if (d <= 1 || (ctx.q - 1) % d != 0)
        throw Error(ErrorKind::NotADivisor, "d must divide q-1");
    if ((ctx.q - 1) % (2 * d) != 0)
        throw Error(ErrorKind::ParityViolation,
                    "GP(q,d) needs q = 1 mod 2d; q = " + std::to_string(ctx.q) + ", d = " + std::to_string(d));
    SubgroupSd sd = compute_subgroup(ctx, d);
    CayleyGraph g;
    g.ctx = ctx;
    g.d = d;
    g.kind = GraphKind::Cayley;
    g.connection = sd.members;
    g.zero_in_connection = false;
    g.rows.assign(ctx.q, ElemSet(ctx.q));
    auto cv = g.connection.to_vector();
    for (Elem x = 0; x < ctx.q; ++x)
        for (Elem s : cv) g.rows[x].set(ctx.add(x, s));
    return g;
}

EkrReport classify_ekr(const FieldCtx& ctx, std::uint64_t d, const std::vector<ElemSet>& witnesses) {
    if (ctx.k % 2 != 0)
        throw Error(ErrorKind::NotASquare, "q = " + std::to_string(ctx.q) + " is not a perfect square");
    std::uint64_t root = 1;
    for (std::uint64_t i = 0; i < ctx.k / 2; ++i) root *= ctx.p;

    EkrReport rep;
    rep.subfield = ElemSet(ctx.q);
    for (Elem x = 0; x < ctx.q; ++x)
        if (ctx.pow(x, root) == x) rep.subfield.set(x);

    SubgroupSd sd = compute_subgroup(ctx, d);
    rep.all_canonical = true;
    for (const auto& w : witnesses) {
        EkrVerdict v;
        if (w.count() == root && w.test(0)) {
            Elem w0 = w.find_next_from(1);
            if (w0 != ElemSet::npos) {
                ElemSet normalized(ctx.q);
                Elem w0_inv = ctx.inv(w0);
                w.for_each([&](Elem x) { normalized.set(ctx.mul(w0_inv, x)); });
                if (normalized == rep.subfield) {
                    // w = w0 * F_root; the dilation factor is determined up to
                    // F_root^*, so scan that coset for the least alpha in S_d.
                    Elem best = 0;
                    rep.subfield.for_each([&](Elem f) {
                        if (f == 0) return;
                        Elem alpha = ctx.mul(w0, f);
                        if (sd.members.test(alpha) && (best == 0 || alpha < best)) best = alpha;
                    });
                    if (best != 0) {
                        v.cls = EkrClass::Canonical;
                        v.alpha = best;
                    }
                }
            }
        }
        if (v.cls != EkrClass::Canonical) rep.all_canonical = false;
        rep.per_witness.push_back(v);
    }
    return rep;
}

} // namespace rsl
