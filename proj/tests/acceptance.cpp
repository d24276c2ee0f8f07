// Acceptance run: one line per criterion, nonzero exit if any is red.
#include "srpm/errors.hpp"
#include "srpm/verify.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace srp;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string describe(const CheckReport& r, const PrecisionContext& ctx)
{
    std::string out = r.id + " " + to_string(r.status);
    if (r.exact) {
        out += r.exact_mismatch ? " (mismatch)" : " (exact)";
    } else {
        ContextScope scope(ctx);
        out += " dev=" + r.max_deviation.to_string(3) + " tol=" + r.tolerance.to_string(3);
    }
    if (!r.note.empty()) out += " [" + r.note + "]";
    return out;
}

Outcome checks(const std::vector<std::string>& ids, const RunOptions& opts, double max_ms = 0)
{
    Outcome o;
    for (const auto& id : ids) {
        CheckReport r;
        try {
            r = run_check(id, opts);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail += id + " error: " + e.what() + "; ";
            continue;
        }
        if (r.status != CheckStatus::pass) o.ok = false;
        o.detail += describe(r, opts.ctx);
        if (max_ms > 0) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %.0f ms", r.runtime_ms);
            o.detail += buf;
            if (r.runtime_ms >= max_ms) {
                o.ok = false;
                o.detail += " (over budget)";
            }
        }
        o.detail += "; ";
    }
    return o;
}

Outcome stability(const std::vector<std::string>& ids, const RunOptions& opts)
{
    Outcome o;
    Real worst(0);
    for (const auto& id : ids) {
        try {
            const StabilityResult s = precision_stability(id, opts);
            if (!s.passed) {
                o.ok = false;
                ContextScope scope(opts.ctx);
                o.detail += id + " change=" + s.max_change.to_string(3) + " tol=" + s.tolerance.to_string(3) + "; ";
            }
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail += id + " error: " + e.what() + "; ";
        }
    }
    if (o.ok) o.detail = std::to_string(ids.size()) + " float checks stable at doubled precision; ";
    return o;
}

} // namespace

int main()
{
    RunOptions opts;
    RunOptions slow = opts;
    slow.slow = true;
    const double minute = 60000.0;

    std::vector<Outcome> results;
    results.push_back(checks({"exact.moment_oracle"}, opts, minute));
    results.push_back(checks({"exact.s1_s2_products"}, opts));
    results.push_back(checks({"modularity.g1_hat"}, opts, minute));
    results.push_back(checks({"shadow.g1_hat"}, opts));
    {
        Outcome a = checks({"limit.kronecker"}, opts);
        const Outcome b = checks({"limit.direct"}, slow);
        results.push_back({a.ok && b.ok, a.detail + b.detail});
    }
    results.push_back(checks({"modularity.gk_hat", "eigenvalue.gk_hat"}, opts));
    results.push_back(checks({"eigenvalue.raising_dual_path"}, opts));
    results.push_back(checks({"example.g2_hat", "example.srp3_oracle"}, opts));
    results.push_back(checks({"twisted.oracle", "twisted.inner_forms"}, opts));
    {
        Outcome a = stability({"modularity.g1_hat", "shadow.g1_hat", "limit.kronecker", "limit.direct", "modularity.gk_hat",
                               "eigenvalue.gk_hat", "eigenvalue.raising_dual_path", "example.g2_hat"},
                              slow);
        const Outcome b = checks({"shadow.stencil_rate", "eigenvalue.stencil_rate"}, opts);
        results.push_back({a.ok && b.ok, a.detail + b.detail});
    }

    int failed = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        std::string detail = results[i].detail;
        if (detail.size() >= 2) detail.resize(detail.size() - 2);
        std::printf("criterion %zu: %s %s\n", i + 1, results[i].ok ? "PASS" : "FAIL", detail.c_str());
        if (!results[i].ok) ++failed;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
    return failed == 0 ? 0 : 1;
}
