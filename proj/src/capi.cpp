#include "srpm/srpm.h"

#include "srpm/errors.hpp"
#include "srpm/maass.hpp"
#include "srpm/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <sstream>
#include <string>

struct srpm_context {
    srp::RunOptions options;
};

namespace {

thread_local std::string last_error;
thread_local std::size_t last_required = 0;

srpm_status to_status(srp::ErrorCode code)
{
    switch (code) {
    case srp::ErrorCode::invalid_argument: return SRPM_INVALID_ARGUMENT;
    case srp::ErrorCode::domain: return SRPM_DOMAIN;
    case srp::ErrorCode::insufficient_order: return SRPM_INSUFFICIENT_ORDER;
    case srp::ErrorCode::not_converged: return SRPM_NOT_CONVERGED;
    case srp::ErrorCode::io: return SRPM_IO;
    case srp::ErrorCode::unknown_suite: return SRPM_UNKNOWN_SUITE;
    }
    return SRPM_INTERNAL;
}

// Runs body, translating exceptions into status codes and the thread-local message.
template <class Body>
srpm_status guarded(Body&& body)
{
    last_error.clear();
    last_required = 0;
    try {
        body();
        return SRPM_OK;
    } catch (const srp::InsufficientOrder& e) {
        last_error = e.what();
        last_required = e.required();
        return SRPM_INSUFFICIENT_ORDER;
    } catch (const srp::Error& e) {
        last_error = e.what();
        return to_status(e.code());
    } catch (const std::bad_alloc&) {
        last_error = "out of memory";
        return SRPM_INTERNAL;
    } catch (const std::exception& e) {
        last_error = e.what();
        return SRPM_INTERNAL;
    }
}

char* duplicate(const std::string& s)
{
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void need(const void* p, const char* name)
{
    if (!p) srp::fail(srp::ErrorCode::invalid_argument, std::string(name) + " must not be null");
}

// Validates a modified copy before committing it.
template <class Edit>
srpm_status edit_context(srpm_context* ctx, Edit&& edit)
{
    return guarded([&] {
        need(ctx, "context");
        srp::PrecisionContext next = ctx->options.ctx;
        edit(next);
        next.validate();
        ctx->options.ctx = next;
    });
}

} // namespace

extern "C" {

const char* srpm_version(void) { return "1.0.0"; }

const char* srpm_status_name(srpm_status status)
{
    switch (status) {
    case SRPM_OK: return "ok";
    case SRPM_INVALID_ARGUMENT: return "invalid_argument";
    case SRPM_DOMAIN: return "domain";
    case SRPM_INSUFFICIENT_ORDER: return "insufficient_order";
    case SRPM_NOT_CONVERGED: return "not_converged";
    case SRPM_IO: return "io";
    case SRPM_UNKNOWN_SUITE: return "unknown_suite";
    case SRPM_INTERNAL: return "internal";
    }
    return "unknown";
}

const char* srpm_last_error(void) { return last_error.c_str(); }
size_t srpm_last_required_order(void) { return last_required; }

srpm_status srpm_context_new(srpm_context** out)
{
    return guarded([&] {
        need(out, "out");
        *out = new srpm_context();
    });
}

void srpm_context_free(srpm_context* ctx) { delete ctx; }

srpm_status srpm_context_set_precision(srpm_context* ctx, long bits)
{
    return edit_context(ctx, [&](srp::PrecisionContext& c) { c.precision_bits = bits; });
}

srpm_status srpm_context_set_guard_bits(srpm_context* ctx, long bits)
{
    return edit_context(ctx, [&](srp::PrecisionContext& c) { c.guard_bits = bits; });
}

srpm_status srpm_context_set_series_order(srpm_context* ctx, size_t order)
{
    return edit_context(ctx, [&](srp::PrecisionContext& c) { c.series_order = order; });
}

srpm_status srpm_context_set_fourier_cutoff(srpm_context* ctx, size_t cutoff)
{
    return edit_context(ctx, [&](srp::PrecisionContext& c) { c.fourier_cutoff = cutoff; });
}

srpm_status srpm_context_set_quadrature_nodes(srpm_context* ctx, size_t nodes)
{
    return edit_context(ctx, [&](srp::PrecisionContext& c) { c.quadrature_nodes = nodes; });
}

srpm_status srpm_context_set_stencil(srpm_context* ctx, double step, int order, int richardson_levels)
{
    return edit_context(ctx, [&](srp::PrecisionContext& c) {
        c.stencil_step = step;
        c.stencil_order = order;
        c.richardson_levels = richardson_levels;
    });
}

srpm_status srpm_context_set_points_json(srpm_context* ctx, const char* json)
{
    return guarded([&] {
        need(ctx, "context");
        need(json, "json");
        ctx->options.points = srp::parse_points_json(json);
    });
}

srpm_status srpm_context_set_points_file(srpm_context* ctx, const char* path)
{
    return guarded([&] {
        need(ctx, "context");
        need(path, "path");
        std::ifstream in(path, std::ios::binary);
        if (!in) srp::fail(srp::ErrorCode::io, std::string("cannot read points file '") + path + "'");
        std::ostringstream text;
        text << in.rdbuf();
        ctx->options.points = srp::parse_points_json(text.str());
    });
}

srpm_status srpm_context_set_slow(srpm_context* ctx, int enabled)
{
    return guarded([&] {
        need(ctx, "context");
        ctx->options.slow = enabled != 0;
    });
}

srpm_status srpm_run_suite(const srpm_context* ctx, const char* suite, char** report, int* all_passed)
{
    return guarded([&] {
        need(ctx, "context");
        need(suite, "suite");
        need(report, "report");
        const srp::SuiteReport r = srp::run_suite(suite, ctx->options);
        *report = duplicate(srp::report_to_json(r));
        if (all_passed) *all_passed = r.all_passed() ? 1 : 0;
    });
}

srpm_status srpm_run_suite_csv(const srpm_context* ctx, const char* suite, char** report, int* all_passed)
{
    return guarded([&] {
        need(ctx, "context");
        need(suite, "suite");
        need(report, "report");
        const srp::SuiteReport r = srp::run_suite(suite, ctx->options);
        *report = duplicate(srp::report_to_csv(r));
        if (all_passed) *all_passed = r.all_passed() ? 1 : 0;
    });
}

srpm_status srpm_precision_stability(const srpm_context* ctx, const char* check_id, char** report, int* passed)
{
    return guarded([&] {
        need(ctx, "context");
        need(check_id, "check_id");
        const srp::StabilityResult s = srp::precision_stability(check_id, ctx->options);
        if (report) {
            srp::ContextScope scope(ctx->options.ctx);
            *report = duplicate(s.id + " max_change " + s.max_change.to_string(6) + " tolerance " + s.tolerance.to_string(6));
        }
        if (passed) *passed = s.passed ? 1 : 0;
    });
}

srpm_status srpm_list_checks(const char* suite, char** out)
{
    return guarded([&] {
        need(out, "out");
        std::string text;
        const auto items = suite ? srp::suite_check_ids(suite) : srp::suite_names();
        for (const auto& id : items) text += id + "\n";
        *out = duplicate(text);
    });
}

srpm_status srpm_series_table(const char* kind, long param, size_t order, const char* format, char** out)
{
    return guarded([&] {
        need(kind, "kind");
        need(format, "format");
        need(out, "out");
        *out = duplicate(srp::emit_table(srp::parse_table_kind(kind), param, order, srp::parse_table_format(format)));
    });
}

srpm_status srpm_write_table(const char* kind, long param, size_t order, const char* format, const char* path)
{
    return guarded([&] {
        need(kind, "kind");
        need(format, "format");
        need(path, "path");
        srp::write_table(srp::parse_table_kind(kind), param, order, srp::parse_table_format(format), path);
    });
}

srpm_status srpm_eval(const srpm_context* ctx, const char* function, long param, const char* u, const char* v, char** re,
                      char** im)
{
    return guarded([&] {
        need(ctx, "context");
        need(function, "function");
        need(u, "u");
        need(v, "v");
        need(re, "re");
        const srp::PrecisionContext& pc = ctx->options.ctx;
        srp::ContextScope scope(pc);
        const srp::HalfPlanePoint tau = srp::HalfPlanePoint::parse(u, v);
        const std::string name = function;
        auto positive_k = [&] {
            if (param < 2) srp::fail(srp::ErrorCode::invalid_argument, name + " needs param k >= 2");
            return static_cast<unsigned>(param);
        };
        srp::Complex value;
        if (name == "g1_hat") value = srp::Complex(srp::g1_hat(tau, pc));
        else if (name == "gk_hat") value = srp::Complex(srp::gk_hat(positive_k(), tau, pc));
        else if (name == "e2_hat") value = srp::e2_hat(tau, pc);
        else if (name == "shadow_g1") value = srp::shadow_g1_closed(tau, pc);
        else if (name == "g2_hat_explicit") value = srp::Complex(srp::g2_hat_explicit(tau, pc));
        else if (name == "kronecker") value = srp::Complex(srp::kronecker_limit(tau, pc));
        else if (name == "eisenstein") {
            const srp::FourierEvaluation e = srp::eisenstein_maass(tau, srp::Real(param), pc);
            if (!e.sufficient) srp::fail(srp::ErrorCode::insufficient_order, "Fourier cutoff too small for E(tau; s)");
            value = e.value;
        }
        else if (name == "eta") value = srp::dedekind_eta(tau, pc);
        else if (name == "eichler_sesqui") value = srp::eichler_sesqui(1, tau, pc);
        else if (name == "raising_closed") value = srp::raising_eichler_closed(positive_k(), tau, pc);
        else srp::fail(srp::ErrorCode::invalid_argument, "unknown function '" + name + "'");

        const int digits = static_cast<int>(static_cast<double>(pc.precision_bits) * 0.30103);
        *re = duplicate(value.re.to_string(digits));
        if (im) *im = duplicate(value.im.to_string(digits));
    });
}

void srpm_string_free(char* s) { std::free(s); }

} // extern "C"
