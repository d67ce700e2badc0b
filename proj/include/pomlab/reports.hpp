#ifndef POMLAB_REPORTS_HPP
#define POMLAB_REPORTS_HPP

#include <complex>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pomlab/asymptotics.hpp"
#include "pomlab/defect_search.hpp"
#include "pomlab/pompeiu.hpp"

namespace pomlab {

/// A numeric table plus the resolved configuration that produced it.
/// Writers are deterministic: the same table yields byte-identical output.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
    std::vector<std::pair<std::string, std::string>> config;
};

/// Shortest round-trip decimal representation of a double.
std::string format_double(double v);

/// CSV with the config as leading "# key=value" lines.
void write_csv(std::ostream& out, const Table& table);

/// JSON object mirroring the CSV: config block, column order, one array
/// per column.
void write_json(std::ostream& out, const Table& table);

// Fixed-layout tables for the batch reports.
Table direction_sweep_table(const std::vector<ComplexDirection>& dirs,
                            const std::vector<Complex>& values,
                            const std::vector<double>& error_estimates);
Table moment_table(const std::vector<MomentReport>& moments);
Table asymptotics_table(const AsymptoticsComparison& comparison);
Table defect_scan_table(const std::vector<double>& ks,
                        const std::vector<double>& boundary_residuals,
                        const std::vector<double>& neumann_defects,
                        const std::vector<double>& conditions);
Table search_trace_table(const DefectReport& report);

}  // namespace pomlab

#endif
