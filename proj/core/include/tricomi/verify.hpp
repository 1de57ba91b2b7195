#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tricomi {

/// Verification suites run by the batch driver.
enum class Suite {
    kernel_crosscheck,
    ode_residual,
    derivative,
    moments,
    stieltjes,
    bounds,
    dominance,
    sharpness,
    monotonicity,
};

std::string_view to_string(Suite suite);
/// Throws DomainError for an unknown name.
Suite parse_suite(std::string_view name);
const std::vector<Suite>& all_suites();

/// Tolerance semantics per suite:
///   kernel_crosscheck  relative agreement floor between quadrature and connection
///   ode_residual       residual relative to |xψ''| + |(c-x)ψ'| + |aψ|
///   derivative         relative deviation of the difference quotient from -aψ(a+1,c+1,x)
///   moments            absolute deviation allowed on top of the quadrature budget
///   stieltjes          relative accuracy requested from the φ-integrals
///   bounds             relative accuracy requested from ψ
///   dominance          relative roundoff allowed between the two bound values
///   sharpness          relative distance of the extrapolated limit from its closed form
///   monotonicity       relative accuracy requested from ψ
double default_tolerance(Suite suite);

enum class ReportFormat { csv, json };
std::string_view to_string(ReportFormat format);
ReportFormat parse_format(std::string_view name);

struct Grid {
    std::vector<double> a;
    std::vector<double> c;
    std::vector<double> x;
};

/// a ∈ {0.25,0.5,1,1.5,2,3,5}, c ∈ {-5,-2.5,-1.5,-0.5,0.25,0.75},
/// x ∈ {0.01,0.1,0.5,1,2,5,10,50,200}.
Grid default_grid();

struct RunConfig {
    std::vector<Suite> suites = all_suites();
    Grid grid = default_grid();
    std::map<Suite, double> tolerances;  // missing entries use default_tolerance
    std::string output_path;              // empty: no report file
    ReportFormat format = ReportFormat::csv;
    int jobs = 1;

    [[nodiscard]] double tolerance(Suite suite) const;
    /// Throws DomainError on empty grids, non-finite or non-positive x,
    /// non-positive tolerances, duplicate suites or jobs < 1.
    void validate() const;
};

/// Applies `key=value` lines (blank lines and # comments ignored). Keys:
/// suites, grid_a, grid_c, grid_x, tol_<suite>, out, format, jobs.
/// Throws DomainError on unknown keys or malformed values.
void apply_config_text(RunConfig& config, std::string_view text);
/// Same as apply_config_text on the contents of a file.
void apply_config_file(RunConfig& config, const std::string& path);

std::vector<double> parse_number_list(std::string_view text);
std::vector<Suite> parse_suite_list(std::string_view text);

/// One line of the report: a claim checked at a point. `x` is NaN for
/// claims that do not depend on x (moments). Status is pass, fail,
/// inconclusive or error.
struct ReportRow {
    std::string suite;
    std::string claim;
    double a = 0.0;
    double c = 0.0;
    double x = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    double budget = 0.0;
    std::string status;
    std::string anchor;
};

struct SuiteSummary {
    std::string suite;
    int pass = 0;
    int fail = 0;
    int inconclusive = 0;
    int error = 0;
    /// Rows from exploratory claims never count toward the exit status.
    bool exploratory = false;
    std::string note;

    [[nodiscard]] int rows() const { return pass + fail + inconclusive + error; }
};

struct RunResult {
    std::vector<ReportRow> rows;
    std::vector<SuiteSummary> summaries;

    [[nodiscard]] bool any_fail() const;
    [[nodiscard]] bool any_error() const;
    /// 0 no fails, 1 at least one fail, 2 at least one evaluation error.
    [[nodiscard]] int exit_code() const;
};

/// Runs every configured suite. Rows are ordered by suite, claim and grid
/// index whatever the number of workers.
RunResult run(const RunConfig& config);

}  // namespace tricomi
