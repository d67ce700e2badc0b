#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "pomlab/cli.hpp"

namespace {

// "a..b" -> [a, b]
bool parse_range(const std::string& text, int& lo, int& hi) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            lo = hi = std::stoi(text);
        } else {
            lo = std::stoi(text.substr(0, pos));
            hi = std::stoi(text.substr(pos + 2));
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

bool parse_int_list(const std::string& text, std::vector<int>& out) {
    out.clear();
    std::stringstream ss(text);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(std::stoi(item));
        }
    } catch (const std::exception&) {
        return false;
    }
    return !out.empty();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pomlab: numerical experiments on the Pompeiu property of "
                 "planar star-shaped domains"};
    app.require_subcommand(1);

    pomlab::cli::RunConfig cfg;
    std::string k_text = "auto";
    std::string j_range = "0..20";
    std::string m_text = "200,280,400";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--shape", cfg.shape_path, "shape spec JSON file")->required();
        sub->add_option("--k", k_text,
                        "wavenumber, or 'auto' for (first J1 zero)/mean_radius");
        sub->add_option("--tol", cfg.tol, "quadrature tolerance");
        sub->add_option("--out", cfg.output_path, "output file (default stdout)");
        sub->add_option("--fmt", cfg.output_format, "csv or json");
    };

    auto* ft = app.add_subcommand("ft", "indicator transform over real directions");
    add_common(ft);
    ft->add_option("--dirs", cfg.dirs, "number of directions");

    auto* pom = app.add_subcommand("pompeiu", "rigid-motion integrals");
    add_common(pom);
    pom->add_option("--motions", cfg.motions, "number of pseudo-random motions");
    pom->add_option("--seed", cfg.seed, "RNG seed");
    pom->add_option("--beta", cfg.beta_angle, "direction angle of beta");

    auto* mom = app.add_subcommand("moments", "boundary moment table");
    add_common(mom);
    mom->add_option("--j", j_range, "moment index range, e.g. 0..20");

    auto* ext = app.add_subcommand("extract", "moment extraction from weighted integrals");
    add_common(ext);
    ext->add_option("--jmax", cfg.extract_jmax, "highest moment to fit");
    ext->add_option("--Amin", cfg.a_min, "smallest weight A");
    ext->add_option("--Amax", cfg.a_max, "largest weight A");
    ext->add_option("--Apoints", cfg.a_points, "grid size (logarithmic)");

    auto* asy = app.add_subcommand("asympt", "saddle-point prediction vs direct moments");
    add_common(asy);
    asy->add_option("--m", m_text, "comma-separated list of m values");

    auto* bvp = app.add_subcommand("bvp", "overdetermined Helmholtz defect at one k");
    add_common(bvp);
    bvp->add_option("--order", cfg.trefftz_order, "Fourier-Bessel half-width N");
    bvp->add_option("--colloc", cfg.colloc, "collocation nodes (default 4N+16)");

    auto* scan = app.add_subcommand("scan", "Neumann defect over a k interval");
    add_common(scan);
    scan->add_option("--order", cfg.trefftz_order, "Fourier-Bessel half-width N");
    scan->add_option("--colloc", cfg.colloc, "collocation nodes (default 4N+16)");
    scan->add_option("--klo", cfg.k_lo, "scan start (default first J1 zero - 0.5)");
    scan->add_option("--khi", cfg.k_hi, "scan end (default first J1 zero + 0.5)");
    scan->add_option("--ksteps", cfg.k_steps, "number of scan points");

    auto* search = app.add_subcommand("search", "minimize the direction defect");
    add_common(search);
    search->add_option("--kinit", cfg.k_init, "starting wavenumber (default k)");
    search->add_option("--max-order", cfg.search_order,
                       "coefficients optimized up to this order (default shape order)");
    search->add_option("--budget", cfg.budget, "objective evaluation budget");
    search->add_option("--final-shape", cfg.final_shape_path,
                       "path for the optimized shape JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pomlab::cli::exit_validation;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (k_text == "auto") {
        cfg.k_auto = true;
    } else {
        try {
            cfg.k = std::stod(k_text);
        } catch (const std::exception&) {
            std::cerr << "invalid configuration: --k must be a number or 'auto'\n";
            return pomlab::cli::exit_validation;
        }
    }
    if (!parse_range(j_range, cfg.j_min, cfg.j_max)) {
        std::cerr << "invalid configuration: --j must be j or jmin..jmax\n";
        return pomlab::cli::exit_validation;
    }
    if (!parse_int_list(m_text, cfg.m_list)) {
        std::cerr << "invalid configuration: --m must be a comma-separated list\n";
        return pomlab::cli::exit_validation;
    }
    return pomlab::cli::run(cfg);
}
