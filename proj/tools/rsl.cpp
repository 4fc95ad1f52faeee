// rsl: search and verification toolkit for restricted sumsets in
// multiplicative subgroups of finite fields, with the integer-side
// perfect-power searches. Every command emits structured output and runs
// deterministically for a fixed flag set.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>

#include "rsl/acceptance.hpp"
#include "rsl/json_out.hpp"
#include "rsl/nt.hpp"

using namespace rsl;
using nlohmann::json;

namespace {

constexpr const char* kSchema = "rsl/1";

std::string g_format = "json";

std::string iso_timestamp() {
    std::time_t t = std::time(nullptr);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
    return buf;
}

void flatten(const json& node, const std::string& prefix, std::ostream& os) {
    if (node.is_object()) {
        for (auto& [k, v] : node.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (node.is_array()) {
        bool scalar = true;
        for (auto& v : node) scalar = scalar && !v.is_structured();
        if (scalar) {
            os << prefix << " = " << node.dump() << "\n";
        } else {
            std::size_t i = 0;
            for (auto& v : node) flatten(v, prefix + "[" + std::to_string(i++) + "]", os);
        }
    } else {
        os << prefix << " = " << node.dump() << "\n";
    }
}

void emit(const std::string& command, json result) {
    if (g_format == "table") {
        std::cout << "command: " << command << "\n";
        flatten(result, "", std::cout);
        return;
    }
    json envelope{{"schema", kSchema},
                  {"command", command},
                  {"timestamp", iso_timestamp()},
                  {"result", std::move(result)}};
    std::cout << envelope.dump(2) << "\n";
}

[[noreturn]] void emit_error_and_exit(const Error& e) {
    json envelope{{"schema", kSchema},
                  {"error", {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}}}};
    std::cerr << envelope.dump(2) << "\n";
    std::exit(e.kind() == ErrorKind::Timeout ? 3 : 2);
}

std::vector<std::uint64_t> parse_set(const std::string& csv) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < csv.size()) {
        std::size_t next = csv.find(',', pos);
        if (next == std::string::npos) next = csv.size();
        std::string tok = csv.substr(pos, next - pos);
        if (!tok.empty()) out.push_back(std::stoull(tok));
        pos = next + 1;
    }
    return out;
}

ElemSet to_elem_set(std::uint64_t q, const std::vector<std::uint64_t>& v) {
    ElemSet s(q);
    for (auto x : v) {
        if (x >= q) throw Error(ErrorKind::PreconditionViolated, "element index out of range");
        s.set(x);
    }
    return s;
}

double env_budget(double fallback) {
    if (const char* e = std::getenv("RSL_BUDGET_SECS")) {
        try {
            return std::stod(e);
        } catch (...) {
        }
    }
    return fallback;
}

struct Common {
    std::uint64_t p = 0, k = 1, d = 2;
    double budget = 60.0;
    unsigned workers = Parallelism::autodetect().workers;
};

int run_verify_thm(const std::string& name, const Common& c);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"restricted-sumset search and verification toolkit"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    Common c;
    c.budget = env_budget(60.0);

    app.add_option("--format", g_format, "json | csv | table (csv only where a table exists)")
        ->check(CLI::IsMember({"json", "csv", "table"}));

    // field-info
    auto* cmd_field = app.add_subcommand("field-info", "describe F_{p^k}");
    cmd_field->add_option("--p", c.p, "odd prime")->required();
    cmd_field->add_option("--k", c.k, "extension degree");

    // subgroup
    bool list_members = false;
    auto* cmd_sub = app.add_subcommand("subgroup", "multiplicative subgroup S_d");
    cmd_sub->add_option("--p", c.p)->required();
    cmd_sub->add_option("--k", c.k);
    cmd_sub->add_option("--d", c.d)->required();
    cmd_sub->add_flag("--list", list_members, "include the member list");

    // sumset
    std::string set_csv;
    bool restricted = false;
    auto* cmd_sum = app.add_subcommand("sumset", "(restricted) sumset of a set");
    cmd_sum->add_option("--p", c.p)->required();
    cmd_sum->add_option("--k", c.k);
    cmd_sum->add_option("--set", set_csv, "comma-separated element indices")->required();
    cmd_sum->add_flag("--restricted", restricted, "distinct-pair sums only");

    // clique
    std::string graph_kind = "gps";
    bool enumerate = false;
    bool classify = false;
    auto* cmd_clique = app.add_subcommand("clique", "exact maximum clique of GP/GPS");
    cmd_clique->add_option("--p", c.p)->required();
    cmd_clique->add_option("--k", c.k);
    cmd_clique->add_option("--d", c.d)->required();
    cmd_clique->add_option("--graph", graph_kind, "gp | gps | gps-nozero")
        ->check(CLI::IsMember({"gp", "gps", "gps-nozero"}));
    cmd_clique->add_flag("--enumerate", enumerate, "enumerate all maximum cliques");
    cmd_clique->add_flag("--classify-ekr", classify,
                         "classify witnesses as subfield dilates (square q; reports, asserts nothing)");
    cmd_clique->add_option("--budget", c.budget, "seconds");
    cmd_clique->add_option("--workers", c.workers, "worker threads");

    // certify
    std::string variant = "odd";
    auto* cmd_cert = app.add_subcommand("certify", "auxiliary-polynomial certificate");
    cmd_cert->add_option("--p", c.p)->required();
    cmd_cert->add_option("--k", c.k);
    cmd_cert->add_option("--d", c.d)->required();
    cmd_cert->add_option("--set", set_csv)->required();
    cmd_cert->add_option("--variant", variant, "odd | even | even-refined")
        ->check(CLI::IsMember({"odd", "even", "even-refined"}));

    // decomp
    std::string mode = "exact";
    bool no_symmetry = false;
    auto* cmd_decomp = app.add_subcommand("decomp", "decomposition search");
    cmd_decomp->add_option("--p", c.p)->required();
    cmd_decomp->add_option("--k", c.k);
    cmd_decomp->add_option("--d", c.d)->required();
    cmd_decomp->add_option("--mode", mode, "exact | subset | subset0")
        ->check(CLI::IsMember({"exact", "subset", "subset0"}));
    cmd_decomp->add_flag("--no-symmetry", no_symmetry, "disable the dilation quotient");
    cmd_decomp->add_option("--budget", c.budget, "seconds");
    cmd_decomp->add_option("--workers", c.workers, "worker threads");

    // verify-thm
    std::string thm_name;
    auto* cmd_verify = app.add_subcommand("verify-thm", "batch verification suites (CSV)");
    cmd_verify->add_option("--name", thm_name, "1.1 | 1.4 | 1.5 | 1.6 | 2.6 | 4.1")
        ->required()
        ->check(CLI::IsMember({"1.1", "1.4", "1.5", "1.6", "2.6", "4.1"}));
    cmd_verify->add_option("--budget", c.budget, "seconds");

    // density-scan
    std::uint64_t s_param = 1, limit = 1'000'000;
    std::string csv_path;
    auto* cmd_density = app.add_subcommand("density-scan", "prime scan of the window predicates");
    cmd_density->add_option("--d", c.d)->required();
    cmd_density->add_option("--s", s_param, "field exponent");
    cmd_density->add_option("--limit", limit, "prime cutoff");
    cmd_density->add_option("--csv", csv_path, "write per-prime CSV here");

    // em-search
    std::uint64_t range_n = 30;
    auto* cmd_em = app.add_subcommand("em-search", "largest set with perfect-power pairwise sums");
    cmd_em->add_option("--N", range_n, "range {1..N}")->required();
    cmd_em->add_option("--d", c.d, "power");
    cmd_em->add_option("--budget", c.budget, "seconds");
    cmd_em->add_option("--workers", c.workers, "worker threads");

    // em-verify
    auto* cmd_emv = app.add_subcommand("em-verify", "check pairwise sums of a candidate set");
    cmd_emv->add_option("--set", set_csv)->required();
    cmd_emv->add_option("--d", c.d, "power");

    // sieve-bound
    double q_cut = -1;
    std::string residues = "1";
    auto* cmd_sieve = app.add_subcommand("sieve-bound", "larger-sieve size bound");
    cmd_sieve->add_option("--N", range_n)->required();
    cmd_sieve->add_option("--d", c.d, "power");
    cmd_sieve->add_option("--Q", q_cut, "prime cutoff (default: proof choice)");
    cmd_sieve->add_option("--residues", residues,
                          "residue classes mod d to sieve on (only \"1\" has a proven cap)");

    // reproduce
    std::string suite = "paper";
    auto* cmd_repro = app.add_subcommand("reproduce", "run the full acceptance suite");
    cmd_repro->add_option("--suite", suite)->check(CLI::IsMember({"paper"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    if (g_format == "csv" && !*cmd_density && !*cmd_verify) {
        std::cerr << "--format csv applies to density-scan and verify-thm only\n";
        return 1;
    }

    try {
        if (*cmd_field) {
            emit("field-info", to_json(make_field(c.p, c.k)));
        } else if (*cmd_sub) {
            auto f = make_field(c.p, c.k);
            auto sd = compute_subgroup(f, c.d);
            json result{{"q", f.q}, {"d", sd.d}, {"size", sd.members.count()},
                        {"index_exponent", sd.index_exponent}};
            if (list_members) result["members"] = to_json(sd.members);
            emit("subgroup", result);
        } else if (*cmd_sum) {
            auto f = make_field(c.p, c.k);
            auto a = to_elem_set(f.q, parse_set(set_csv));
            ElemSet out = restricted ? restricted_sumset(f, a) : sumset(f, a, a);
            emit("sumset", json{{"q", f.q},
                                {"set", to_json(a)},
                                {"restricted", restricted},
                                {"sumset", to_json(out)}});
        } else if (*cmd_clique) {
            auto f = make_field(c.p, c.k);
            CayleyGraph g = graph_kind == "gp" ? build_gp(f, c.d)
                                               : build_gps(f, c.d, graph_kind != "gps-nozero");
            CliqueOptions opts;
            opts.budget_secs = c.budget;
            opts.par.workers = c.workers;
            auto rep = enumerate ? enumerate_max_cliques(g.rows, opts) : max_clique(g.rows, opts);
            json result = to_json(rep);
            result["q"] = f.q;
            result["d"] = c.d;
            result["graph"] = graph_kind;
            if (classify) {
                auto cls = classify_ekr(f, c.d, rep.witnesses);
                json per = json::array();
                for (auto& v : cls.per_witness) {
                    json entry{{"canonical", v.cls == EkrClass::Canonical}};
                    if (v.cls == EkrClass::Canonical) entry["alpha"] = v.alpha;
                    per.push_back(entry);
                }
                result["ekr"] = {{"subfield", to_json(cls.subfield)},
                                 {"per_witness", per},
                                 {"all_canonical", cls.all_canonical}};
            }
            emit("clique", result);
            return rep.timed_out ? 3 : 0;
        } else if (*cmd_cert) {
            auto f = make_field(c.p, c.k);
            auto sd = compute_subgroup(f, c.d);
            auto a = to_elem_set(f.q, parse_set(set_csv));
            CertVariant v = variant == "odd" ? CertVariant::OddN
                            : variant == "even" ? CertVariant::EvenN
                                                : CertVariant::EvenNRefined;
            auto rep = build_certificate(f, sd, a, v);
            emit("certify", to_json(rep));
            return rep.accepted ? 0 : 2;
        } else if (*cmd_decomp) {
            auto f = make_field(c.p, c.k);
            DecompMode m = mode == "exact" ? DecompMode::RestrictedExact
                           : mode == "subset" ? DecompMode::FullExact
                                              : DecompMode::FullExactZero;
            DecompOptions opts;
            opts.budget_secs = c.budget;
            opts.symmetry_reduction = !no_symmetry;
            opts.par.workers = c.workers;
            auto rep = search_decomposition(f, c.d, m, opts);
            emit("decomp", to_json(rep));
            return rep.stats.timed_out ? 3 : 0;
        } else if (*cmd_verify) {
            return run_verify_thm(thm_name, c);
        } else if (*cmd_density) {
            std::vector<ScanRecord> records;
            bool want_records = !csv_path.empty() || g_format == "csv";
            auto summary = empirical_density(c.d, s_param, limit, want_records ? &records : nullptr);
            auto write_csv = [&](std::ostream& out) {
                out << "p,alpha,in_window,boundary_half,digits_ok,in_cd,in_dtilde\n";
                for (auto& r : records)
                    out << r.p << ',' << r.alpha.str() << ',' << r.in_window << ','
                        << r.boundary_half << ',' << r.digits_ok << ',' << r.in_cd << ','
                        << r.in_dtilde << '\n';
            };
            if (!csv_path.empty()) {
                std::ofstream out(csv_path);
                if (!out) throw Error(ErrorKind::PreconditionViolated, "cannot open " + csv_path);
                write_csv(out);
            }
            if (g_format == "csv") {
                write_csv(std::cout);
                return 0;
            }
            json result = to_json(summary);
            if (!csv_path.empty()) result["csv"] = csv_path;
            emit("density-scan", result);
        } else if (*cmd_em) {
            CliqueOptions opts;
            opts.budget_secs = c.budget;
            opts.par.workers = c.workers;
            auto rep = search_max_em_set(range_n, c.d, opts);
            emit("em-search", to_json(rep));
            return rep.timed_out ? 3 : 0;
        } else if (*cmd_emv) {
            auto set = parse_set(set_csv);
            bool ok = em_verify(set, c.d);
            emit("em-verify", json{{"set", set}, {"d", c.d}, {"ok", ok}});
            return ok ? 0 : 2;
        } else if (*cmd_sieve) {
            if (residues != "1")
                throw Error(ErrorKind::PreconditionViolated,
                            "only the residue class {1 mod d} carries a proven per-prime cap");
            auto rep = gallagher_bound(range_n, c.d,
                                       q_cut > 0 ? std::optional<double>(q_cut) : std::nullopt);
            emit("sieve-bound", to_json(rep));
        } else if (*cmd_repro) {
            auto results = run_acceptance_suite(&std::cerr);
            json arr = json::array();
            bool all = true;
            for (auto& r : results) {
                arr.push_back(json{{"id", r.id},
                                   {"name", r.name},
                                   {"pass", r.pass},
                                   {"detail", r.detail},
                                   {"seconds", r.seconds}});
                all = all && r.pass;
            }
            emit("reproduce", json{{"criteria", arr}, {"all_pass", all}});
            return all ? 0 : 2;
        }
    } catch (const Error& e) {
        emit_error_and_exit(e);
    } catch (const std::exception& e) {
        json envelope{{"schema", kSchema},
                      {"error", {{"kind", "Internal"}, {"message", e.what()}}}};
        std::cerr << envelope.dump(2) << "\n";
        return 2;
    }
    return 0;
}

namespace {

struct CsvRow {
    std::string instance;
    bool pass;
    std::string detail;
};

int emit_csv(const std::string& name, const std::vector<CsvRow>& rows) {
    std::cout << "suite,instance,pass,detail\n";
    bool all = true;
    for (auto& r : rows) {
        std::cout << name << ',' << r.instance << ',' << (r.pass ? "1" : "0") << ",\"" << r.detail
                  << "\"\n";
        all = all && r.pass;
    }
    return all ? 0 : 2;
}

int run_verify_thm(const std::string& name, const Common& c) {
    std::vector<CsvRow> rows;
    DecompOptions opts;
    opts.budget_secs = c.budget;

    auto prime_powers = [](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (std::uint64_t q = lo; q <= hi; ++q) {
            if (q % 2 == 0) continue;
            auto fac = nt::factor(q);
            bool pp = !fac.empty();
            for (auto f : fac) pp = pp && (f == fac[0]);
            if (pp) out.emplace_back(fac[0], fac.size());
        }
        return out;
    };

    if (name == "1.1") {
        // square decompositions exist only at q = 3, 7, 13
        for (auto [p, k] : prime_powers(3, 343)) {
            auto f = make_field(p, k);
            auto rep = search_decomposition(f, 2, DecompMode::RestrictedExact, opts);
            std::size_t n = 0;
            for (auto& s : rep.solutions) n += s.orbit.size();
            bool expected_some = f.q == 3 || f.q == 7 || f.q == 13;
            bool pass = !rep.stats.timed_out && (expected_some ? n > 0 : n == 0);
            rows.push_back({"q=" + std::to_string(f.q), pass,
                            std::to_string(n) + " solutions"});
        }
    } else if (name == "1.4") {
        for (auto [p, k] : {std::pair<std::uint64_t, std::uint64_t>{19, 2}, {37, 2}}) {
            auto f = make_field(p, k);
            auto v = check_thm14(f, 18, opts);
            rows.push_back({"q=" + std::to_string(f.q), v.ok,
                            v.search_empty ? "search empty, obstructions hold" : "solution found"});
        }
    } else if (name == "1.5") {
        for (std::uint64_t q : {3ull, 7ull, 13ull}) {
            auto f = make_field(q, 1);
            auto sd = compute_subgroup(f, 2);
            auto rep = search_decomposition(f, 2, DecompMode::RestrictedExact, opts);
            for (auto& sol : rep.solutions)
                for (auto& member : sol.orbit) {
                    auto v = check_sidon_structure(f, sd, member);
                    rows.push_back({"q=" + std::to_string(q), v.ok,
                                    std::string("sidon=") + (v.sidon_ok ? "1" : "0") +
                                        " formula=" + (v.q_formula_ok ? "1" : "0")});
                }
        }
    } else if (name == "1.6") {
        for (std::uint64_t d : {2, 3, 4}) {
            for (std::uint64_t p : prime_stream(d, 200)) {
                if (p == 2) continue;
                auto f = make_field(p, 1);
                CliqueOptions copts;
                copts.budget_secs = c.budget;
                auto rep = max_clique(build_gps(f, d).rows, copts);
                std::uint64_t w = rep.omega;
                std::uint64_t x = 2 * (p - 1) / d + 1;
                bool hp = w <= 2 || (w - 2) * (w - 2) <= x;
                bool sqrt_ok = w < 3 || (w - 3) * (w - 3) < p;
                rows.push_back({"p=" + std::to_string(p) + " d=" + std::to_string(d),
                                !rep.timed_out && hp && sqrt_ok,
                                "omega=" + std::to_string(w)});
            }
        }
    } else if (name == "2.6") {
        // exhaustive micro-sweep plus structured subfield pairs
        for (auto [p, k] : prime_powers(3, 31)) {
            auto f = make_field(p, k);
            for (std::uint64_t d = 2; d <= 4; ++d) {
                if ((f.q - 1) % d != 0) continue;
                auto sd = compute_subgroup(f, d);
                ElemSet sd0 = sd.members;
                sd0.set(0);
                std::size_t tested = 0, holds = 0;
                for (Elem seed_a = 0; seed_a < f.q; ++seed_a)
                    for (Elem seed_b = 0; seed_b < f.q; ++seed_b) {
                        if (!sd0.test(f.add(seed_a, seed_b))) continue;
                        ElemSet a = ElemSet(f.q), b = ElemSet(f.q);
                        a.set(seed_a);
                        b.set(seed_b);
                        // grow each side greedily while A+B stays inside S_d u {0}
                        for (Elem x = 0; x < f.q; ++x) {
                            ElemSet nb = b;
                            nb.set(x);
                            if (sumset(f, a, nb).is_subset_of(sd0)) b = nb;
                        }
                        for (Elem x = 0; x < f.q; ++x) {
                            ElemSet na = a;
                            na.set(x);
                            if (sumset(f, na, b).is_subset_of(sd0)) a = na;
                        }
                        if (!kummer_nonvanishing(b.count() - 1 + sd.index_exponent,
                                                 sd.index_exponent, f.p))
                            continue;
                        auto res = hp_bound_check(f, sd, a, b);
                        ++tested;
                        holds += res.ok;
                    }
                rows.push_back({"q=" + std::to_string(f.q) + " d=" + std::to_string(d),
                                tested == holds,
                                std::to_string(holds) + "/" + std::to_string(tested)});
            }
        }
    } else if (name == "4.1") {
        for (auto [p, k] : prime_powers(3, 1000)) {
            auto f = make_field(p, k);
            for (std::uint64_t d : {2, 3, 4}) {
                if ((f.q - 1) % d != 0 || (f.q - 1) / d < 3) continue;
                bool empty = true, complete = true;
                for (auto m : {DecompMode::FullExact, DecompMode::FullExactZero}) {
                    auto rep = search_decomposition(f, d, m, opts);
                    empty = empty && rep.solutions.empty();
                    complete = complete && !rep.stats.timed_out;
                }
                rows.push_back({"q=" + std::to_string(f.q) + " d=" + std::to_string(d),
                                empty && complete, complete ? "exhausted" : "timed out"});
            }
        }
    }
    return emit_csv(name, rows);
}

} // namespace
