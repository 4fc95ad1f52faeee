#include "rsl/subgroup.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace rsl {

SubgroupSd compute_subgroup(const FieldCtx& ctx, std::uint64_t d) {
    if (d <= 1 || (ctx.q - 1) % d != 0)
        throw Error(ErrorKind::NotADivisor, "d = " + std::to_string(d) + " must divide q-1 and exceed 1");

    SubgroupSd sd;
    sd.d = d;
    sd.index_exponent = (ctx.q - 1) / d;

    // d-th power image
    ElemSet image(ctx.q);
    if (ctx.has_tables()) {
        for (std::uint64_t t = 0; t < ctx.q - 1; t += d) image.set(ctx.antilog_entry(t));
    } else {
        for (Elem x = 1; x < ctx.q; ++x) image.set(ctx.pow(x, d));
    }

    // exponent test
    ElemSet by_exponent(ctx.q);
    for (Elem x = 1; x < ctx.q; ++x)
        if (ctx.pow(x, sd.index_exponent) == 1) by_exponent.set(x);

    if (!(image == by_exponent))
        throw Error(ErrorKind::PreconditionViolated, "subgroup image and exponent test disagree");
    sd.members = image;
    return sd;
}

Residue residue_symbol(const FieldCtx& ctx, const SubgroupSd& sd, Elem x) {
    if (x == 0) return Residue::Zero;
    return ctx.pow(x, sd.index_exponent) == 1 ? Residue::InSd : Residue::NotInSd;
}

std::complex<double> char_sum(const FieldCtx& ctx, std::uint64_t d, const ElemSet& a_set) {
    if (d <= 1 || (ctx.q - 1) % d != 0)
        throw Error(ErrorKind::NotADivisor, "character order must divide q-1");
    if (!ctx.has_tables())
        throw Error(ErrorKind::TablesUnavailable, "character sums need discrete-log tables");

    // Tally a+b by residue class t = log(a+b) mod d, then apply the character
    // once per class.
    std::vector<std::uint64_t> class_count(d, 0);
    auto members = a_set.to_vector();
    for (Elem a : members) {
        for (Elem b : members) {
            Elem s = ctx.add(a, b);
            if (s != 0) ++class_count[ctx.log_entry(s) % d];
        }
    }
    std::complex<double> total = 0.0;
    for (std::uint64_t t = 0; t < d; ++t) {
        double ang = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(d);
        total += static_cast<double>(class_count[t]) * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return total;
}

} // namespace rsl
