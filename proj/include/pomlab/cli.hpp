#ifndef POMLAB_CLI_HPP
#define POMLAB_CLI_HPP

#include <string>
#include <vector>

namespace pomlab::cli {

/// Exit codes shared by every subcommand.
enum ExitCode {
    exit_ok = 0,
    exit_validation = 2,   // bad config, missing file, violated precondition
    exit_numerical = 3,    // quadrature/fit/search failed to converge
};

/// Resolved invocation of one subcommand. k_auto means "first zero of J1
/// divided by the shape's mean radius".
struct RunConfig {
    std::string command;            // ft|pompeiu|moments|extract|asympt|bvp|scan|search
    std::string shape_path;
    double k = 0.0;
    bool k_auto = false;
    double tol = 1e-12;
    std::string output_path;        // empty writes to stdout
    std::string output_format = "csv";  // csv | json

    // per-command knobs
    int dirs = 64;                  // ft
    int motions = 20;               // pompeiu
    unsigned seed = 12345;          // pompeiu
    double beta_angle = 0.0;        // pompeiu
    int j_min = 0, j_max = 20;      // moments
    int extract_jmax = 4;           // extract
    double a_min = 1e2, a_max = 1e4;// extract
    int a_points = 12;              // extract
    std::vector<int> m_list{200, 280, 400};  // asympt
    int trefftz_order = 8;          // bvp, scan
    int colloc = 0;                 // 0 means 4N + 16
    double k_lo = 0.0, k_hi = 0.0;  // scan (0 means first J1 zero +- 0.5)
    int k_steps = 41;               // scan
    double k_init = 0.0;            // search (0 means k or auto)
    int search_order = 0;           // search (0 means shape order)
    long budget = 20000;            // search
    std::string final_shape_path;   // search
};

/// Executes the command, writes the report, and returns the exit code.
/// Failure paths print the violated precondition or the non-convergence
/// diagnostics to stderr.
int run(const RunConfig& config);

}  // namespace pomlab::cli

#endif
