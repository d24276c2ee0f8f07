#include "srpm/srpm.h"

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct Owned {
    char* p = nullptr;
    ~Owned() { srpm_string_free(p); }
};

// Configuration-side failures map to 2, failing checks to 1.
int report_status(srpm_status s)
{
    std::cerr << "srpm: " << srpm_status_name(s) << ": " << srpm_last_error();
    if (s == SRPM_INSUFFICIENT_ORDER && srpm_last_required_order() > 0)
        std::cerr << " (sufficient order " << srpm_last_required_order() << ")";
    std::cerr << "\n";
    return kExitConfig;
}

bool write_output(const std::string& path, const char* text)
{
    if (path.empty() || path == "-") {
        std::fputs(text, stdout);
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        std::cerr << "srpm: cannot write '" << path << "'\n";
        return false;
    }
    return true;
}

struct ContextOptions {
    long prec = 192;
    long guard = 32;
    std::size_t order = 0;
    std::size_t cutoff = 0;
    std::size_t nodes = 1 << 14;
    double step = 0;
    int stencil_order = 4;
    int richardson = 1;
    std::string points;

    void attach(CLI::App* app)
    {
        app->add_option("--prec", prec, "working precision in bits")->envname("SRPM_PREC")->capture_default_str();
        app->add_option("--guard", guard, "extra guard bits")->envname("SRPM_GUARD")->capture_default_str();
        app->add_option("--order", order, "q-series order, 0 = automatic")->envname("SRPM_ORDER")->capture_default_str();
        app->add_option("--cutoff", cutoff, "Fourier cutoff, 0 = automatic")->envname("SRPM_CUTOFF")->capture_default_str();
        app->add_option("--nodes", nodes, "Bessel quadrature node budget")->envname("SRPM_NODES")->capture_default_str();
        app->add_option("--step", step, "stencil step h/v, 0 = 2^(-prec/4)")->envname("SRPM_STEP")->capture_default_str();
        app->add_option("--stencil-order", stencil_order, "central stencil order (2 or 4)")
            ->envname("SRPM_STENCIL_ORDER")
            ->capture_default_str();
        app->add_option("--richardson", richardson, "Richardson levels")->envname("SRPM_RICHARDSON")->capture_default_str();
        app->add_option("--points", points, "JSON file of sample points [[u, v], ...]")->envname("SRPM_POINTS");
    }

    srpm_status build(srpm_context*& ctx) const
    {
        srpm_status s = srpm_context_new(&ctx);
        if (s == SRPM_OK) s = srpm_context_set_precision(ctx, prec);
        if (s == SRPM_OK) s = srpm_context_set_guard_bits(ctx, guard);
        if (s == SRPM_OK) s = srpm_context_set_series_order(ctx, order);
        if (s == SRPM_OK) s = srpm_context_set_fourier_cutoff(ctx, cutoff);
        if (s == SRPM_OK) s = srpm_context_set_quadrature_nodes(ctx, nodes);
        if (s == SRPM_OK) s = srpm_context_set_stencil(ctx, step, stencil_order, richardson);
        if (s == SRPM_OK && !points.empty()) s = srpm_context_set_points_file(ctx, points.c_str());
        return s;
    }
};

using ContextPtr = std::unique_ptr<srpm_context, decltype(&srpm_context_free)>;

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact and high-precision verification of reciprocal-part partition moment identities"};
    app.set_version_flag("--version", std::string(srpm_version()));
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    ContextOptions verify_ctx;
    std::string suite = "all", out, format = "json";
    bool slow = false;
    verify->add_option("--suite", suite, "exact, modularity, shadow, eigenvalue, limit, example, twisted or all")
        ->envname("SRPM_SUITE")
        ->capture_default_str();
    verify->add_option("--out", out, "report path (default: stdout)")->envname("SRPM_OUT");
    verify->add_option("--format", format, "json or csv")
        ->envname("SRPM_FORMAT")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    verify->add_flag("--slow", slow, "include the direct s -> 1 limit evaluation")->envname("SRPM_SLOW");
    verify_ctx.attach(verify);

    // table
    auto* table = app.add_subcommand("table", "write an exact coefficient table");
    std::string kind, table_format = "csv", table_out;
    long param = 1;
    std::size_t table_order = 10;
    table->add_option("--kind", kind, "s_k, g_k, srp3 or twisted")->required()->check(CLI::IsMember({"s_k", "g_k", "srp3", "twisted"}));
    table->add_option("--param", param, "k for s_k / g_k, prime p for twisted")->capture_default_str();
    table->add_option("--order", table_order, "highest power of q")->envname("SRPM_ORDER")->capture_default_str();
    table->add_option("--format", table_format, "csv or json")
        ->envname("SRPM_FORMAT")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    table->add_option("--out", table_out, "output path (default: stdout)")->envname("SRPM_OUT");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a completed function at one point");
    ContextOptions eval_ctx;
    std::string function, u, v;
    long eval_param = 2;
    eval->add_option("function", function,
                     "g1_hat, gk_hat, e2_hat, shadow_g1, g2_hat_explicit, kronecker, eisenstein, eta, eichler_sesqui, "
                     "raising_closed")
        ->required();
    eval->add_option("u", u, "real part of tau")->required();
    eval->add_option("v", v, "imaginary part of tau (> 0)")->required();
    eval->add_option("--param", eval_param, "k (or s for eisenstein)")->capture_default_str();
    eval_ctx.attach(eval);

    // list
    auto* list = app.add_subcommand("list", "list suites, or the checks of one suite");
    std::string list_suite;
    list->add_option("suite", list_suite, "suite name");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitConfig;
    }

    if (*verify) {
        srpm_context* raw = nullptr;
        const srpm_status built = verify_ctx.build(raw);
        ContextPtr ctx(raw, srpm_context_free);
        if (built != SRPM_OK) return report_status(built);
        if (srpm_status s = srpm_context_set_slow(ctx.get(), slow ? 1 : 0); s != SRPM_OK) return report_status(s);

        Owned report;
        int all_passed = 0;
        const srpm_status s = format == "csv" ? srpm_run_suite_csv(ctx.get(), suite.c_str(), &report.p, &all_passed)
                                              : srpm_run_suite(ctx.get(), suite.c_str(), &report.p, &all_passed);
        if (s != SRPM_OK) return report_status(s);
        if (!write_output(out, report.p)) return kExitConfig;
        std::cerr << "suite " << suite << ": " << (all_passed ? "all checks passed" : "FAILED") << "\n";
        return all_passed ? kExitPass : kExitFail;
    }

    if (*table) {
        if (table_out.empty()) {
            Owned text;
            const srpm_status s = srpm_series_table(kind.c_str(), param, table_order, table_format.c_str(), &text.p);
            if (s != SRPM_OK) return report_status(s);
            std::fputs(text.p, stdout);
            return kExitPass;
        }
        const srpm_status s = srpm_write_table(kind.c_str(), param, table_order, table_format.c_str(), table_out.c_str());
        return s == SRPM_OK ? kExitPass : report_status(s);
    }

    if (*eval) {
        srpm_context* raw = nullptr;
        const srpm_status built = eval_ctx.build(raw);
        ContextPtr ctx(raw, srpm_context_free);
        if (built != SRPM_OK) return report_status(built);
        Owned re, im;
        const srpm_status s = srpm_eval(ctx.get(), function.c_str(), eval_param, u.c_str(), v.c_str(), &re.p, &im.p);
        if (s != SRPM_OK) return report_status(s);
        std::printf("%s %s\n", re.p, im.p);
        return kExitPass;
    }

    if (*list) {
        Owned text;
        const srpm_status s = srpm_list_checks(list_suite.empty() ? nullptr : list_suite.c_str(), &text.p);
        if (s != SRPM_OK) return report_status(s);
        std::fputs(text.p, stdout);
        return kExitPass;
    }
    return kExitConfig;
}
