#include "rsl/sumsets.hpp"

#include <vector>

namespace rsl {

ElemSet restricted_sumset(const FieldCtx& ctx, const ElemSet& a_set) {
    ElemSet out(ctx.q);
    auto v = a_set.to_vector();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            out.set(ctx.add(v[i], v[j]));
    return out;
}

ElemSet sumset(const FieldCtx& ctx, const ElemSet& a_set, const ElemSet& b_set) {
    ElemSet out(ctx.q);
    auto va = a_set.to_vector();
    auto vb = b_set.to_vector();
    for (Elem a : va)
        for (Elem b : vb) out.set(ctx.add(a, b));
    return out;
}

SidonClass is_sidon(const FieldCtx& ctx, const ElemSet& a_set) {
    auto v = a_set.to_vector();
    if (v.size() <= 1) return SidonClass::Sidon;

    // multiplicity of each value as a sum a_i + a_j with i <= j
    std::vector<std::uint32_t> strict_mult(ctx.q, 0), double_mult(ctx.q, 0);
    bool strict_collision = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i; j < v.size(); ++j) {
            Elem s = ctx.add(v[i], v[j]);
            if (i == j)
                ++double_mult[s];
            else if (++strict_mult[s] > 1)
                strict_collision = true;
        }
    }
    if (strict_collision) return SidonClass::Neither;
    for (Elem s = 0; s < ctx.q; ++s) {
        // q odd, so distinct elements have distinct doubles
        if (double_mult[s] && strict_mult[s]) return SidonClass::WeakSidon;
    }
    return SidonClass::Sidon;
}

std::pair<std::uint64_t, std::uint64_t>
doubles_condition(const FieldCtx& ctx, const SubgroupSd& sd, const ElemSet& a_set) {
    std::uint64_t in_sd = 0, in_sd0 = 0;
    a_set.for_each([&](Elem a) {
        Elem twice = ctx.add(a, a);
        if (sd.members.test(twice)) {
            ++in_sd;
            ++in_sd0;
        } else if (twice == 0) {
            ++in_sd0;
        }
    });
    return {in_sd, in_sd0};
}

ElemSet dilate(const FieldCtx& ctx, Elem u, const ElemSet& a_set) {
    ElemSet out(ctx.q);
    a_set.for_each([&](Elem a) { out.set(ctx.mul(u, a)); });
    return out;
}

} // namespace rsl
