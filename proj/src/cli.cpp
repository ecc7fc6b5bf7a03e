#include "qchroma/cli.hpp"

#include <ostream>

#include <CLI11.hpp>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "qchroma/gfuncs.hpp"
#include "qchroma/graphx.hpp"
#include "qchroma/kernels.hpp"
#include "qchroma/limits.hpp"
#include "qchroma/positivity.hpp"
#include "qchroma/render.hpp"
#include "qchroma/toric.hpp"
#include "qchroma/transition.hpp"
#include "qchroma/verify.hpp"

namespace qchroma {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceGuard = 3;

void print_symfunc(std::ostream& out, const SymFunc& f, Basis basis, Format format,
                   const Json& meta) {
    switch (format) {
        case Format::text:
            out << sym_to_text(f, basis) << "\n";
            break;
        case Format::latex:
            out << sym_to_latex(f, basis) << "\n";
            break;
        case Format::json: {
            Json doc = meta;
            doc["function"] = sym_to_json(f, basis);
            out << doc.dump() << "\n";
            break;
        }
    }
}

struct CommonArgs {
    std::string cache_path;
    int max_perm_n = 0;
    int max_degree = 0;
    int threads = 0;
    bool serial = false;

    void apply() const {
        if (max_perm_n > 0) limits().max_perm_n = max_perm_n;
        if (max_degree > 0) limits().max_degree = max_degree;
        if (!cache_path.empty()) enable_disk_cache(cache_path);
        set_force_serial(serial);
#ifdef _OPENMP
        if (threads > 0) omp_set_num_threads(threads);
#endif
    }
};

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact chromatic quasisymmetric functions of indifference graphs and the "
                 "g_k decomposition pieces"};
    app.name("qchroma");
    app.require_subcommand(1);

    CommonArgs common;
    app.add_option("--cache", common.cache_path, "transition-matrix disk cache file");
    app.add_option("--max-perm-n", common.max_perm_n, "enumeration guard override");
    app.add_option("--max-degree", common.max_degree, "ring-degree guard override");
    app.add_option("--threads", common.threads, "OpenMP thread count");
    app.add_flag("--serial", common.serial, "force serial kernels");

    std::string hess_text, basis_text = "e", format_text = "text";
    std::string method = "rho";
    auto* cmd_csf = app.add_subcommand("csf", "chromatic quasisymmetric function of G_m");
    cmd_csf->add_option("--hess", hess_text, "Hessenberg function, e.g. 2,4,4,5,6,6")->required();
    cmd_csf->add_option("--basis", basis_text, "output basis (m,e,h,p,s)");
    cmd_csf->add_option("--format", format_text, "text, json or latex");
    cmd_csf->add_option("--method", method, "rho (default) or coloring");

    std::string gk_hess, gk_basis = "e", gk_format = "text", gk_method = "def";
    int gk_k = 0;
    auto* cmd_gk = app.add_subcommand("gk", "the symmetric function g_k(m;x,q)");
    cmd_gk->add_option("--hess", gk_hess)->required();
    cmd_gk->add_option("--k", gk_k)->required();
    cmd_gk->add_option("--method", gk_method, "def (default), tree or extended");
    cmd_gk->add_option("--basis", gk_basis);
    cmd_gk->add_option("--format", gk_format);

    std::string suite = "all", verify_format = "text";
    int suite_max_n = 0;
    auto* cmd_verify = app.add_subcommand("verify", "run the exhaustive identity suites");
    cmd_verify->add_option("--suite", suite, "rho, csf, g, positivity, graphs, toric or all");
    cmd_verify->add_option("--max-n", suite_max_n, "range override (0 = suite default)");
    cmd_verify->add_option("--format", verify_format, "text or json");

    std::string dt_hess, dt_format = "text";
    int dt_k = 0;
    auto* cmd_delta = app.add_subcommand("delta-table", "the injection Delta, rendered row by row");
    cmd_delta->add_option("--hess", dt_hess)->required();
    cmd_delta->add_option("--k", dt_k)->required();
    cmd_delta->add_option("--format", dt_format, "text or json");

    std::string gg_graph, gg_basis = "e", gg_format = "text";
    int gg_k = -1;
    auto* cmd_graph =
        app.add_subcommand("graph-gk", "q-free g_k of a rooted graph");
    cmd_graph->add_option("--graph", gg_graph, "\"n; u-v,u-v,...; root=v0\"")->required();
    cmd_graph->add_option("--k", gg_k, "single k; omit for all k plus the recovered csf");
    cmd_graph->add_option("--basis", gg_basis);
    cmd_graph->add_option("--format", gg_format);

    int llt_n = 0;
    auto* cmd_llt = app.add_subcommand("llt-face", "both sides of the barycentric/LLT identity");
    cmd_llt->add_option("--n", llt_n)->required();

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv;
    argv.push_back("qchroma");
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        common.apply();

        if (cmd_csf->parsed()) {
            HessFunc m = HessFunc::parse(hess_text);
            Basis basis = basis_from_string(basis_text);
            Format format = format_from_string(format_text);
            SymFunc f;
            if (method == "rho")
                f = csf_rho(m);
            else if (method == "coloring")
                f = csf_coloring(m);
            else
                throw ParseError("csf: unknown method '" + method + "'");
            Json meta;
            meta["command"] = "csf";
            meta["hessenberg"] = m.values();
            meta["method"] = method;
            print_symfunc(out, f, basis, format, meta);
            return kExitOk;
        }

        if (cmd_gk->parsed()) {
            HessFunc m = HessFunc::parse(gk_hess);
            Basis basis = basis_from_string(gk_basis);
            Format format = format_from_string(gk_format);
            SymFunc f;
            if (gk_method == "def")
                f = g_def(m, gk_k);
            else if (gk_method == "tree")
                f = g_tree(m, gk_k);
            else if (gk_method == "extended")
                f = g_extended(m, gk_k);
            else
                throw ParseError("gk: unknown method '" + gk_method + "'");
            Json meta;
            meta["command"] = "gk";
            meta["hessenberg"] = m.values();
            meta["k"] = gk_k;
            meta["method"] = gk_method;
            print_symfunc(out, f, basis, format, meta);
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            std::vector<CheckResult> results = verify_suite(suite, suite_max_n);
            bool pass = all_passed(results);
            if (verify_format == "json") {
                Json doc;
                doc["command"] = "verify";
                doc["suite"] = suite;
                doc["max_n"] = suite_max_n;
                doc["pass"] = pass;
                Json checks = Json::array();
                for (const auto& r : results) {
                    Json c;
                    c["name"] = r.name;
                    c["range"] = r.range;
                    c["pass"] = r.pass;
                    c["informational"] = r.informational;
                    c["detail"] = r.detail;
                    checks.push_back(std::move(c));
                }
                doc["checks"] = std::move(checks);
                out << doc.dump() << "\n";
            } else if (verify_format == "text") {
                for (const auto& r : results) {
                    out << (r.informational ? "INFO" : (r.pass ? "PASS" : "FAIL")) << "  "
                        << r.name << "  [" << r.range << "]";
                    if (!r.detail.empty()) out << "  -- " << r.detail;
                    out << "\n";
                }
                out << (pass ? "all checks passed" : "SUITE FAILED") << "\n";
            } else {
                throw ParseError("verify: unknown format '" + verify_format + "'");
            }
            return pass ? kExitOk : kExitVerificationFailure;
        }

        if (cmd_delta->parsed()) {
            HessFunc m = HessFunc::parse(dt_hess);
            DeltaReport report = check_delta_injective(m, dt_k);
            if (dt_format == "json")
                out << delta_table_json(m, dt_k, report).dump() << "\n";
            else if (dt_format == "text")
                out << delta_table_text(m, dt_k, report);
            else
                throw ParseError("delta-table: unknown format '" + dt_format + "'");
            return (report.injective && report.count_identity) ? kExitOk
                                                               : kExitVerificationFailure;
        }

        if (cmd_graph->parsed()) {
            RootedGraph g = RootedGraph::parse(gg_graph);
            Basis basis = basis_from_string(gg_basis);
            Format format = format_from_string(gg_format);
            if (gg_k >= 0) {
                Json meta;
                meta["command"] = "graph-gk";
                meta["graph"] = g.to_string();
                meta["k"] = gg_k;
                print_symfunc(out, g_general(g, gg_k), basis, format, meta);
                return kExitOk;
            }
            std::vector<SymFunc> all = g_general_all(g);
            SymFunc csf = csf_general_from_g(g);
            if (format == Format::json) {
                Json doc;
                doc["command"] = "graph-gk";
                doc["graph"] = g.to_string();
                Json list = Json::array();
                for (const SymFunc& f : all) list.push_back(sym_to_json(f, basis));
                doc["g"] = std::move(list);
                doc["csf"] = sym_to_json(csf, basis);
                out << doc.dump() << "\n";
            } else {
                for (size_t k = 0; k < all.size(); ++k) {
                    out << "g_" << k << " = "
                        << (format == Format::latex ? sym_to_latex(all[k], basis)
                                                    : sym_to_text(all[k], basis))
                        << "\n";
                }
                out << "csf = "
                    << (format == Format::latex ? sym_to_latex(csf, basis)
                                                : sym_to_text(csf, basis))
                    << "\n";
            }
            return kExitOk;
        }

        if (cmd_llt->parsed()) {
            SymFunc lhs = frob_C_sigma1(llt_n);
            SymFunc rhs = llt_path(llt_n, true).omega();
            out << "ch(C_Sigma1)          = " << sym_to_text(lhs, Basis::h) << "\n";
            out << "omega(LLT(P_n;x,q+1)) = " << sym_to_text(rhs, Basis::h) << "\n";
            bool match = lhs == rhs;
            out << "match: " << (match ? "yes" : "no") << "\n";
            return match ? kExitOk : kExitVerificationFailure;
        }

        err << "no subcommand given\n";
        return kExitUsage;
    } catch (const ResourceGuardError& e) {
        err << "resource guard: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidHessenberg& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const KOutOfRange& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DeltaNotWellDefined& e) {
        err << "delta not well-defined: " << e.what() << "\n";
        return kExitVerificationFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
}

} // namespace qchroma
