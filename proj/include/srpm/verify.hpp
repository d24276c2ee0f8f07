#pragma once

#include "srpm/complex.hpp"
#include "srpm/power_series.hpp"
#include "srpm/special.hpp"

#include <string>
#include <vector>

namespace srp {

enum class CheckStatus { pass, fail, skipped };
const char* to_string(CheckStatus status);

/// Sample point kept as decimal text so it can be re-read at any precision.
struct PointSpec {
    std::string u;
    std::string v;
    HalfPlanePoint at_working_precision() const { return HalfPlanePoint::parse(u, v); }
    std::string label() const { return u + "+" + v + "i"; }
};

/// Six points spanning v in [0.4, 2].
std::vector<PointSpec> default_manifest_points();
/// JSON array of [u, v] pairs (numbers or decimal strings) or {"u":..,"v":..} objects.
std::vector<PointSpec> parse_points_json(const std::string& text);

struct RunOptions {
    PrecisionContext ctx;
    std::vector<PointSpec> points = default_manifest_points();
    bool slow = false;  ///< enables the direct s -> 1 limit evaluation
};

/// Result of one verification. status is pass iff max_deviation < tolerance
/// (or, for rational checks, iff every compared value matched exactly).
struct CheckReport {
    std::string id;
    std::string anchor;  ///< the identity or property under test
    std::vector<std::string> points;
    bool exact = false;
    bool exact_mismatch = false;
    Real max_deviation;
    Real tolerance;
    CheckStatus status = CheckStatus::skipped;
    double runtime_ms = 0;
    std::string note;
    /// Computed values, kept for precision-stability comparisons.
    std::vector<Complex> observables;
};

struct SuiteReport {
    std::string suite;
    PrecisionContext ctx;
    std::vector<CheckReport> checks;  ///< sorted by id

    std::size_t count(CheckStatus status) const;
    bool all_passed() const { return count(CheckStatus::fail) == 0; }
};

/// Suite name with its checks and the defaults it runs under.
struct SuiteManifest {
    std::string name;
    std::vector<std::string> check_ids;
    PrecisionContext defaults;
    std::vector<PointSpec> points;
};

/// Every registered suite except "all"; each check id resolves to a registered check.
const std::vector<SuiteManifest>& suite_manifests();
std::vector<std::string> suite_names();           ///< including "all"
std::vector<std::string> suite_check_ids(const std::string& suite);
std::vector<std::string> all_check_ids();

/// Runs one registered check; unknown ids raise ErrorCode::unknown_suite.
CheckReport run_check(const std::string& id, const RunOptions& options);
/// Runs every check of a suite, report sorted by check id.
SuiteReport run_suite(const std::string& suite, const RunOptions& options);

struct StabilityResult {
    std::string id;
    Real max_change;   ///< max |a - b| / max(1, |a|) over the observables
    Real tolerance;    ///< tolerance of the coarser run
    bool passed = false;
};
/// Runs a check at ctx and at ctx.doubled() and compares the observables.
StabilityResult precision_stability(const std::string& id, const RunOptions& options);

std::string report_to_json(const SuiteReport& report);
/// One row per check: id,status,max_deviation,tolerance,runtime_ms
std::string report_to_csv(const SuiteReport& report);

enum class TableKind { s_k, g_k, srp3, twisted };
TableKind parse_table_kind(const std::string& text);
enum class TableFormat { csv, json };
TableFormat parse_table_format(const std::string& text);

/// Exact coefficient table for s_k / g_k (param = k), srp3 (param unused) or
/// twisted (param = p), orders 0..order.
PowerSeries table_series(TableKind kind, long param, std::size_t order);
std::string emit_table(TableKind kind, long param, std::size_t order, TableFormat format);
/// Writes emit_table output to path; I/O failures raise ErrorCode::io.
void write_table(TableKind kind, long param, std::size_t order, TableFormat format, const std::string& path);

} // namespace srp
