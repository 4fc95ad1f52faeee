#pragma once

#include <json.hpp>

#include "rsl/cayley.hpp"
#include "rsl/clique.hpp"
#include "rsl/decomp.hpp"
#include "rsl/density.hpp"
#include "rsl/emint.hpp"
#include "rsl/stepanov.hpp"
#include "rsl/subgroup.hpp"

namespace rsl {

using nlohmann::json;

inline json to_json(const ElemSet& s) {
    json arr = json::array();
    s.for_each([&](std::uint64_t v) { arr.push_back(v); });
    return arr;
}

inline json to_json(const FieldCtx& f) {
    return json{{"p", f.p},
                {"k", f.k},
                {"q", f.q},
                {"modulus", f.modulus},
                {"generator", f.generator},
                {"log_tables", f.has_tables()}};
}

inline json to_json(const CliqueReport& r) {
    json witnesses = json::array();
    for (auto& w : r.witnesses) witnesses.push_back(to_json(w));
    return json{{"omega", r.omega},
                {"witnesses", witnesses},
                {"nodes_explored", r.nodes_explored},
                {"wall_time_s", r.wall_time_s},
                {"timed_out", r.timed_out}};
}

inline const char* to_string(SidonClass c) {
    switch (c) {
        case SidonClass::Sidon: return "sidon";
        case SidonClass::WeakSidon: return "weak-sidon";
        case SidonClass::Neither: return "neither";
    }
    return "?";
}

inline json to_json(const StructuralVerdict& v) {
    return json{{"size", v.size},
                {"size_even", v.size_even},
                {"zero_in_set", v.zero_in_set},
                {"sidon_class", to_string(v.sidon)},
                {"doubles_in_sd", v.doubles_in_sd},
                {"q_formula_ok", v.q_formula_ok},
                {"ceiling_ok", v.ceiling_ok},
                {"window_ok", v.window_ok},
                {"ok", v.ok}};
}

inline const char* to_string(DecompMode m) {
    switch (m) {
        case DecompMode::RestrictedExact: return "exact";
        case DecompMode::FullExact: return "subset";
        case DecompMode::FullExactZero: return "subset0";
    }
    return "?";
}

inline json to_json(const DecompositionReport& r) {
    json solutions = json::array();
    for (std::size_t i = 0; i < r.solutions.size(); ++i) {
        json orbit = json::array();
        for (auto& m : r.solutions[i].orbit) orbit.push_back(to_json(m));
        json entry{{"canonical", to_json(r.solutions[i].canonical)},
                   {"orbit", orbit},
                   {"orbit_size", r.solutions[i].orbit.size()}};
        if (i < r.structural.size()) entry["structure"] = to_json(r.structural[i]);
        solutions.push_back(entry);
    }
    return json{{"q", r.q},
                {"d", r.d},
                {"mode", to_string(r.mode)},
                {"solutions", solutions},
                {"stats",
                 {{"nodes", r.stats.nodes},
                  {"wall_time_s", r.stats.wall_time_s},
                  {"timed_out", r.stats.timed_out},
                  {"n_min", r.stats.n_min},
                  {"n_max", r.stats.n_max}}}};
}

inline const char* to_string(CertVariant v) {
    switch (v) {
        case CertVariant::OddN: return "odd";
        case CertVariant::EvenN: return "even";
        case CertVariant::EvenNRefined: return "even-refined";
    }
    return "?";
}

inline json to_json(const CertificateReport& r) {
    json vanishing = json::array();
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        vanishing.push_back(json{{"element", r.points[i]},
                                 {"achieved", i < r.achieved_multiplicity.size()
                                                  ? r.achieved_multiplicity[i]
                                                  : 0},
                                 {"required", i < r.required_multiplicity.size()
                                                  ? r.required_multiplicity[i]
                                                  : 0}});
    }
    json j{{"variant", to_string(r.variant)},
           {"q", r.q},
           {"d", r.d},
           {"set_size", r.set_size},
           {"n_points", r.n_points},
           {"m", r.m},
           {"degenerate", r.degenerate},
           {"f_degree", r.f_degree},
           {"degree_bound_ok", r.degree_bound_ok},
           {"vanishing", vanishing},
           {"multiplicity_ok", r.multiplicity_ok},
           {"sumset_outside_sd0", r.sumset_outside_sd0},
           {"witness_ok", r.witness_ok},
           {"identically_zero", r.identically_zero},
           {"inequality", {{"lhs", r.inequality_lhs}, {"rhs", r.inequality_rhs}, {"ok", r.inequality_ok}}},
           {"accepted", r.accepted}};
    if (r.nonzero_witness) j["nonzero_witness"] = *r.nonzero_witness;
    if (r.variant == CertVariant::EvenNRefined && r.identically_zero) {
        j["binom_nonzero"] = r.binom_nonzero;
        j["doubles_disjoint"] = r.doubles_disjoint;
        j["mod8_ok"] = r.mod8_ok;
    }
    return j;
}

inline json to_json(const DensitySummary& s) {
    return json{{"d", s.d},
                {"s", s.s},
                {"limit", s.limit},
                {"primes_scanned", s.primes_scanned},
                {"dtilde_hits", s.dtilde_hits},
                {"window_hits", s.window_hits},
                {"boundary_hits", s.boundary_hits},
                {"cd_hits", s.cd_hits},
                {"digit_hits", s.digit_hits},
                {"fraction", s.fraction},
                {"predicted", s.predicted}};
}

inline json to_json(const EmSearchReport& r) {
    return json{{"N", r.range},
                {"d", r.d},
                {"best_size", r.best_size},
                {"witnesses", r.witnesses},
                {"nodes", r.nodes},
                {"wall_time_s", r.wall_time_s},
                {"timed_out", r.timed_out}};
}

inline json to_json(const SieveBound& b) {
    json j{{"N", b.range},
           {"d", b.d},
           {"Q", b.q_cutoff},
           {"primes_used", b.primes_used},
           {"numerator", b.numerator},
           {"denominator", b.denominator},
           {"asymptote", b.asymptote},
           {"unbounded", !b.bound.has_value()}};
    if (b.bound) j["bound"] = *b.bound;
    return j;
}

} // namespace rsl
