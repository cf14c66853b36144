#include "spectral_er/cli.hpp"

#include "spectral_er/acceptance.hpp"
#include "spectral_er/constructions.hpp"
#include "spectral_er/enumerate.hpp"
#include "spectral_er/errors.hpp"
#include "spectral_er/graph.hpp"
#include "spectral_er/polynomial.hpp"
#include "spectral_er/spectral.hpp"
#include "spectral_er/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace ser {

namespace {

using nlohmann::json;

struct CommonFlags {
    double tol = 1e-10;
    int workers = 0;
    unsigned seed = 0x5eed;
    std::string out;
    std::string format = "json";
};

int emit(const json& j, const CommonFlags& flags, std::ostream& os) {
    std::string text = flags.format == "text" ? j.dump(2) : j.dump();
    if (!flags.out.empty()) {
        std::ofstream f(flags.out);
        if (!f) {
            std::cerr << "cannot open output path: " << flags.out << "\n";
            return 2;
        }
        f << text << "\n";
        return 0;
    }
    os << text << "\n";
    return 0;
}

int emit_report(const VerificationReport& rep, const CommonFlags& flags, std::ostream& os) {
    int rc = emit(rep.to_json(), flags, os);
    return rc != 0 ? rc : rep.exit_code();
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--tol", flags.tol, "numeric tolerance");
    cmd->add_option("--workers", flags.workers, "worker threads (0 = all cores)");
    cmd->add_option("--seed", flags.seed, "seed for the eigensolver start vector");
    cmd->add_option("--out", flags.out, "write output to a file instead of stdout");
    cmd->add_option("--format", flags.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

struct ConstructArgs {
    std::string family;
    int n = 0, r = 2, q = 1;
    std::string kind, id;
    long a = -1, b = -1, c = -1;
};

Graph build_construction(const ConstructArgs& args) {
    auto opt_param = [](long v) -> std::optional<long> {
        return v >= 0 ? std::optional<long>(v) : std::nullopt;
    };
    if (args.family == "turan") return turan(args.n, args.r);
    if (args.family == "turan-plus-star") return turan_plus_star(args.n, args.r, args.q);
    if (args.family == "k-plus") return k_plus(args.n);
    if (args.family == "remark") {
        auto kind = remark_kind_from_name(args.kind);
        if (!kind) throw parameter_error("unknown remark kind: " + args.kind);
        return remark_graph(*kind, args.n);
    }
    if (args.family == "case") {
        auto tag = case_tag_from_name(args.id);
        if (!tag) throw parameter_error("unknown case id: " + args.id);
        CaseGraphId id{*tag, opt_param(args.a), opt_param(args.b), opt_param(args.c)};
        return case_graph(id, args.n);
    }
    if (args.family == "claim10") {
        if (args.kind != "even" && args.kind != "odd")
            throw parameter_error("claim10 needs --kind even|odd");
        return claim10_graph(args.kind == "even", args.n);
    }
    throw parameter_error("unknown construction family: " + args.family);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& os, std::ostream& err) {
    CLI::App app{"construct, measure and exhaustively verify triangle-count "
                 "spectral extremal results on small graphs"};
    app.require_subcommand(1);

    // construct ------------------------------------------------------------
    ConstructArgs cons;
    CommonFlags cons_flags;
    CLI::App* c_construct = app.add_subcommand("construct", "emit a named graph as graph6");
    c_construct
        ->add_option("family", cons.family,
                     "turan | turan-plus-star | k-plus | remark | case | claim10")
        ->required();
    c_construct->add_option("--n", cons.n, "vertex count")->required();
    c_construct->add_option("--r", cons.r, "part count");
    c_construct->add_option("--q", cons.q, "star size");
    c_construct->add_option("--kind", cons.kind, "remark kind or claim10 parity");
    c_construct->add_option("--id", cons.id, "case graph tag G1..G8");
    c_construct->add_option("--a", cons.a, "case parameter a (or split s1)");
    c_construct->add_option("--b", cons.b, "case parameter b (or split s2)");
    c_construct->add_option("--c", cons.c, "case parameter c");

    // spectral ---------------------------------------------------------------
    CommonFlags spec_flags;
    std::string spec_g6;
    bool spec_signless = false;
    CLI::App* c_spectral =
        app.add_subcommand("spectral", "certified spectral radius of a graph6 graph");
    c_spectral->add_option("--graph6", spec_g6, "graph in graph6 form")->required();
    c_spectral->add_flag("--signless", spec_signless, "use the signless Laplacian D+A");
    add_common(c_spectral, spec_flags);

    // poly -------------------------------------------------------------------
    CommonFlags poly_flags;
    std::string poly_name;
    long poly_n = 0;
    long poly_a = -1, poly_b = -1, poly_c = -1;
    bool poly_root = false;
    CLI::App* c_poly = app.add_subcommand("poly", "named characteristic polynomial families");
    c_poly->add_option("name", poly_name, "f g f1 f2 f3 g2 g4 g8 p1 p2")->required();
    c_poly->add_option("--n", poly_n, "vertex count parameter")->required();
    c_poly->add_option("--a", poly_a, "g8 parameter a");
    c_poly->add_option("--b", poly_b, "g8 parameter b");
    c_poly->add_option("--c", poly_c, "g8 parameter c");
    c_poly->add_flag("--root", poly_root, "also report the largest real root");
    add_common(c_poly, poly_flags);

    // count ------------------------------------------------------------------
    CommonFlags count_flags;
    std::string count_g6, count_pattern;
    CLI::App* c_count = app.add_subcommand("count", "triangle or subgraph-copy counts");
    c_count->add_option("--graph6", count_g6, "host graph")->required();
    c_count->add_option("--f", count_pattern, "pattern graph6 (default: triangles)");
    add_common(c_count, count_flags);

    // verify -------------------------------------------------------------
    CommonFlags verify_flags;
    std::string verify_check;
    int verify_n = 0, verify_q = 1, verify_r = 2;
    std::string verify_f;
    CLI::App* c_verify = app.add_subcommand("verify", "exhaustive checks over all graphs");
    c_verify
        ->add_option("check", verify_check,
                     "spectral-er | edge-er | nz | lovasz-simonovits | conjecture | sqrt-m | "
                     "signless | bn-bounds")
        ->required();
    c_verify->add_option("--n", verify_n, "vertex count")->required();
    c_verify->add_option("--q", verify_q, "q (lovasz-simonovits q_max / conjecture q)");
    c_verify->add_option("--r", verify_r, "part count for conjecture checks");
    c_verify->add_option("--f", verify_f, "pattern graph6 for conjecture checks");
    add_common(c_verify, verify_flags);

    // search -------------------------------------------------------------
    CommonFlags search_flags;
    std::string search_what;
    int search_n = 0;
    CLI::App* c_search = app.add_subcommand("search", "exploratory sweeps");
    c_search->add_option("what", search_what, "near-misses")->required();
    c_search->add_option("--n", search_n, "vertex count")->required();
    add_common(c_search, search_flags);

    // reproduce ------------------------------------------------------------
    CommonFlags rep_flags;
    int rep_nmax = 9;
    std::string rep_dir = "reports";
    CLI::App* c_rep =
        app.add_subcommand("reproduce", "run the full acceptance suite, one report per criterion");
    c_rep->add_option("--n-max", rep_nmax, "spectral Erdos-Rademacher sweep cap (<= 10)");
    c_rep->add_option("--out-dir", rep_dir, "directory for criterion reports");
    add_common(c_rep, rep_flags);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        os << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (c_construct->parsed()) {
            os << to_graph6(build_construction(cons)) << "\n";
            return 0;
        }
        if (c_spectral->parsed()) {
            Graph g = from_graph6(spec_g6);
            SpectralOptions opt;
            opt.tol = spec_flags.tol;
            opt.seed = spec_flags.seed;
            SpectralResult r =
                spec_signless ? signless_laplacian_radius(g, opt) : spectral_radius(g, opt);
            return emit(json{{"lambda", r.lambda},
                             {"lo", r.lo},
                             {"hi", r.hi},
                             {"residual", r.residual},
                             {"iterations", r.iterations}},
                        spec_flags, os);
        }
        if (c_poly->parsed()) {
            auto fam = poly_family_from_name(poly_name);
            if (!fam) throw parameter_error("unknown polynomial family: " + poly_name);
            std::optional<Abc> abc;
            if (poly_a >= 0 || poly_b >= 0 || poly_c >= 0) abc = Abc{poly_a, poly_b, poly_c};
            Polynomial p = poly_family(*fam, poly_n, abc);
            json coeffs = json::array();
            for (const Rational& c : p.coeffs()) coeffs.push_back(c.str());
            json j{{"family", poly_name}, {"n", poly_n}, {"coeffs", coeffs}};
            if (poly_root) j["root"] = largest_real_root(p, poly_flags.tol);
            return emit(j, poly_flags, os);
        }
        if (c_count->parsed()) {
            Graph g = from_graph6(count_g6);
            if (count_pattern.empty())
                return emit(json{{"triangles", count_triangles(g)}}, count_flags, os);
            Graph f = from_graph6(count_pattern);
            return emit(json{{"copies", count_copies(g, f)}}, count_flags, os);
        }
        if (c_verify->parsed()) {
            VerifyOptions opt;
            opt.tol = verify_flags.tol;
            opt.workers = verify_flags.workers;
            if (verify_check == "spectral-er")
                return emit_report(verify_spectral_er(verify_n, opt), verify_flags, os);
            if (verify_check == "edge-er")
                return emit_report(verify_edge_er(verify_n, opt), verify_flags, os);
            if (verify_check == "nz") return emit_report(verify_nz(verify_n, opt), verify_flags, os);
            if (verify_check == "lovasz-simonovits")
                return emit_report(verify_lovasz_simonovits(verify_n, verify_q, opt), verify_flags,
                                   os);
            if (verify_check == "conjecture") {
                Graph f = verify_f.empty()
                              ? Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}})
                              : from_graph6(verify_f);
                return emit_report(verify_conjecture(verify_n, verify_r, verify_q, f, opt),
                                   verify_flags, os);
            }
            if (verify_check == "sqrt-m")
                return emit_report(verify_sqrt_m(verify_n, opt), verify_flags, os);
            if (verify_check == "signless")
                return emit_report(verify_signless(verify_n, opt), verify_flags, os);
            if (verify_check == "bn-bounds")
                return emit_report(verify_bn_bounds(verify_n, opt), verify_flags, os);
            throw parameter_error("unknown check: " + verify_check);
        }
        if (c_search->parsed()) {
            if (search_what != "near-misses")
                throw parameter_error("unknown search: " + search_what);
            VerifyOptions opt;
            opt.tol = search_flags.tol;
            opt.workers = search_flags.workers;
            return emit_report(search_near_misses(search_n, opt), search_flags, os);
        }
        if (c_rep->parsed()) {
            if (rep_nmax < 3 || rep_nmax > 10)
                throw parameter_error("reproduce: --n-max must be in 3..10");
            AcceptanceConfig cfg;
            cfg.tol = rep_flags.tol;
            cfg.workers = rep_flags.workers;
            cfg.seed = rep_flags.seed;
            cfg.spectral_er_nmax = rep_nmax;
            std::error_code ec;
            std::filesystem::create_directories(rep_dir, ec);
            if (ec) {
                err << "cannot create report directory " << rep_dir << ": " << ec.message()
                    << "\n";
                return 2;
            }
            bool all_pass = true;
            auto progress = [&](const CriterionResult& r) {
                all_pass = all_pass && r.pass;
                os << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                   << (r.pass ? "" : " -- " + r.detail) << "\n"
                   << std::flush;
                json j{{"criterion", r.id},
                       {"name", r.name},
                       {"pass", r.pass},
                       {"detail", r.detail},
                       {"artifact", r.artifact}};
                std::ofstream f(std::filesystem::path(rep_dir) /
                                ("criterion_" + std::to_string(r.id) + ".json"));
                f << j.dump(2) << "\n";
            };
            run_acceptance(cfg, progress);
            return all_pass ? 0 : 1;
        }
    } catch (const parameter_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace ser
