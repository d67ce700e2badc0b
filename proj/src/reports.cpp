#include "pomlab/reports.hpp"

#include <cstdio>

namespace pomlab {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_csv(std::ostream& out, const Table& table) {
    for (const auto& [key, value] : table.config) {
        out << "# " << key << "=" << value << "\n";
    }
    for (size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? "," : "") << table.columns[c];
    }
    out << "\n";
    for (const auto& row : table.rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << format_double(row[c]);
        }
        out << "\n";
    }
}

void write_json(std::ostream& out, const Table& table) {
    out << "{\n  \"config\": {";
    for (size_t i = 0; i < table.config.size(); ++i) {
        out << (i ? ", " : "") << "\"" << table.config[i].first << "\": \""
            << table.config[i].second << "\"";
    }
    out << "},\n  \"columns\": [";
    for (size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? ", " : "") << "\"" << table.columns[c] << "\"";
    }
    out << "],\n  \"data\": {";
    for (size_t c = 0; c < table.columns.size(); ++c) {
        out << (c ? ",\n    " : "\n    ") << "\"" << table.columns[c] << "\": [";
        for (size_t r = 0; r < table.rows.size(); ++r) {
            out << (r ? ", " : "") << format_double(table.rows[r][c]);
        }
        out << "]";
    }
    out << "\n  }\n}\n";
}

Table direction_sweep_table(const std::vector<ComplexDirection>& dirs,
                            const std::vector<Complex>& values,
                            const std::vector<double>& error_estimates) {
    Table t;
    t.columns = {"re_alpha1", "im_alpha1", "re_alpha2", "im_alpha2",
                 "re_value", "im_value", "error_estimate"};
    for (size_t i = 0; i < dirs.size(); ++i) {
        t.rows.push_back({dirs[i].alpha1().real(), dirs[i].alpha1().imag(),
                          dirs[i].alpha2().real(), dirs[i].alpha2().imag(),
                          values[i].real(), values[i].imag(),
                          error_estimates[i]});
    }
    return t;
}

Table moment_table(const std::vector<MomentReport>& moments) {
    Table t;
    t.columns = {"j", "log_scale", "re", "im", "error_estimate"};
    for (const MomentReport& m : moments) {
        t.rows.push_back({static_cast<double>(m.j), m.log_scale,
                          m.scaled_value.real(), m.scaled_value.imag(),
                          m.error_estimate});
    }
    return t;
}

Table asymptotics_table(const AsymptoticsComparison& comparison) {
    Table t;
    t.columns = {"m",        "log_abs_direct", "log_abs_predicted",
                 "re_ratio", "im_ratio",       "error_flag",
                 "re_ratio_refined", "im_ratio_refined"};
    for (const MomentComparisonRow& r : comparison.rows) {
        t.rows.push_back({static_cast<double>(r.m), r.direct_log_abs,
                          r.predicted_log_abs, r.ratio.real(), r.ratio.imag(),
                          r.flagged ? 1.0 : 0.0, r.ratio_refined.real(),
                          r.ratio_refined.imag()});
    }
    return t;
}

Table defect_scan_table(const std::vector<double>& ks,
                        const std::vector<double>& boundary_residuals,
                        const std::vector<double>& neumann_defects,
                        const std::vector<double>& conditions) {
    Table t;
    t.columns = {"k", "boundary_residual", "neumann_defect", "condition"};
    for (size_t i = 0; i < ks.size(); ++i) {
        t.rows.push_back({ks[i], boundary_residuals[i], neumann_defects[i],
                          conditions[i]});
    }
    return t;
}

Table search_trace_table(const DefectReport& report) {
    Table t;
    t.columns = {"evaluation", "defect", "k"};
    const size_t m = report.trace.empty() ? 0 : report.trace.front().coeffs.size() / 2;
    for (size_t i = 1; i <= m; ++i) t.columns.push_back("a" + std::to_string(i));
    for (size_t i = 1; i <= m; ++i) t.columns.push_back("b" + std::to_string(i));
    for (const auto& tp : report.trace) {
        std::vector<double> row{static_cast<double>(tp.evaluation), tp.defect, tp.k};
        row.insert(row.end(), tp.coeffs.begin(), tp.coeffs.end());
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace pomlab
