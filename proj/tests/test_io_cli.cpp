#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pomlab/cli.hpp"
#include "pomlab/reports.hpp"
#include "pomlab/shape_io.hpp"

using namespace pomlab;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name)
        : path("pomlab_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_SUITE("io_cli") {

TEST_CASE("shape files round trip") {
    const StarShape s(1.25, {0.2, 0.0, -0.1}, {0.05});
    const StarShape back = parse_shape_json(shape_to_json(s));
    CHECK(back.mean_radius() == s.mean_radius());
    REQUIRE(back.order() == s.order());
    for (int i = 0; i < s.order(); ++i) {
        CHECK(back.cos_coeffs()[static_cast<size_t>(i)] ==
              s.cos_coeffs()[static_cast<size_t>(i)]);
        CHECK(back.sin_coeffs()[static_cast<size_t>(i)] ==
              s.sin_coeffs()[static_cast<size_t>(i)]);
    }
}

TEST_CASE("shape files reject bad documents with named bounds") {
    CHECK_THROWS_WITH_AS(parse_shape_json("{\"mean_radius\": 1.0, \"cos\": [0.7, 0.5]}"),
                         doctest::Contains("positivity"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(parse_shape_json("{\"cos\": [0.1]}"),
                         doctest::Contains("mean_radius"), std::invalid_argument);
    CHECK_THROWS_AS(parse_shape_json("not json"), std::invalid_argument);
    CHECK_THROWS_WITH_AS(load_shape("no_such_file.json"),
                         doctest::Contains("no_such_file.json"),
                         std::invalid_argument);
}

TEST_CASE("csv writer is exact and deterministic") {
    Table t;
    t.columns = {"x", "y"};
    t.rows = {{1.0, 0.5}, {2.0, -0.25}};
    t.config = {{"command", "demo"}, {"k", "2"}};
    std::ostringstream a, b;
    write_csv(a, t);
    write_csv(b, t);
    CHECK(a.str() == b.str());
    CHECK(a.str() == "# command=demo\n# k=2\nx,y\n1,0.5\n2,-0.25\n");
}

TEST_CASE("json writer mirrors the csv columns") {
    Table t;
    t.columns = {"x", "y"};
    t.rows = {{1.0, 0.5}, {2.0, -0.25}};
    t.config = {{"command", "demo"}};
    std::ostringstream out;
    write_json(out, t);
    const nlohmann::json doc = nlohmann::json::parse(out.str());
    CHECK(doc["config"]["command"] == "demo");
    CHECK(doc["columns"].size() == 2);
    CHECK(doc["data"]["x"].size() == 2);
    CHECK(doc["data"]["y"][1].get<double>() == -0.25);
}

TEST_CASE("ft command resolves k automatically and reports near-zeros") {
    TempFile shape("disc.json");
    save_shape(shape.path, StarShape::disc(1.0));
    TempFile out("ft.csv");

    cli::RunConfig cfg;
    cfg.command = "ft";
    cfg.shape_path = shape.path;
    cfg.k_auto = true;
    cfg.dirs = 8;
    cfg.output_path = out.path;
    CHECK(cli::run(cfg) == cli::exit_ok);

    const std::string text = slurp(out.path);
    CHECK(text.find("# command=ft") != std::string::npos);
    CHECK(text.find("# k_mode=auto") != std::string::npos);
    CHECK(text.find("re_alpha1") != std::string::npos);

    // all eight transform values sit at the null wavenumber
    std::istringstream lines(text);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'r') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream cells(line);
        double a1r, a1i, a2r, a2i, vr, vi, err;
        cells >> a1r >> a1i >> a2r >> a2i >> vr >> vi >> err;
        CHECK(std::abs(Complex(vr, vi)) <= 1e-9);
        ++rows;
    }
    CHECK(rows == 8);
}

TEST_CASE("reports are byte identical across runs") {
    TempFile shape("bump.json");
    save_shape(shape.path, StarShape(1.0, {0.2}, {}));
    TempFile out1("m1.csv"), out2("m2.csv");

    cli::RunConfig cfg;
    cfg.command = "moments";
    cfg.shape_path = shape.path;
    cfg.k = 3.0;
    cfg.j_min = 0;
    cfg.j_max = 20;
    cfg.output_path = out1.path;
    REQUIRE(cli::run(cfg) == cli::exit_ok);
    cfg.output_path = out2.path;
    REQUIRE(cli::run(cfg) == cli::exit_ok);
    const std::string r1 = slurp(out1.path);
    CHECK(!r1.empty());
    CHECK(r1 == slurp(out2.path));

    // 21 data rows, each with error estimate within tolerance
    std::istringstream lines(r1);
    std::string line;
    int rows = 0;
    while (std::getline(lines, line)) {
        if (line.empty() || line[0] == '#' || line[0] == 'j') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream cells(line);
        double j, ls, re, im, err;
        cells >> j >> ls >> re >> im >> err;
        CHECK(err <= 1e-12);
        ++rows;
    }
    CHECK(rows == 21);
}

TEST_CASE("missing shape file exits with the validation code") {
    cli::RunConfig cfg;
    cfg.command = "ft";
    cfg.shape_path = "definitely_missing.json";
    cfg.k = 2.0;
    CHECK(cli::run(cfg) == cli::exit_validation);

    cli::RunConfig bad;
    bad.command = "nonsense";
    bad.shape_path = "also_missing.json";
    CHECK(cli::run(bad) == cli::exit_validation);
}

TEST_CASE("bvp and scan commands emit the fixed columns") {
    TempFile shape("disc2.json");
    save_shape(shape.path, StarShape::disc(1.0));

    TempFile bvp_out("bvp.csv");
    cli::RunConfig cfg;
    cfg.command = "bvp";
    cfg.shape_path = shape.path;
    cfg.k_auto = true;
    cfg.output_path = bvp_out.path;
    CHECK(cli::run(cfg) == cli::exit_ok);
    CHECK(slurp(bvp_out.path).find("k,boundary_residual,neumann_defect,condition") !=
          std::string::npos);

    TempFile scan_out("scan.csv");
    cfg.command = "scan";
    cfg.k_steps = 5;
    cfg.output_path = scan_out.path;
    CHECK(cli::run(cfg) == cli::exit_ok);
    const std::string scan_text = slurp(scan_out.path);
    CHECK(scan_text.find("# k_steps=5") != std::string::npos);
    CHECK(scan_text.find("k,boundary_residual,neumann_defect,condition") !=
          std::string::npos);
}

TEST_CASE("search command writes the trace and the final shape") {
    TempFile shape("disc3.json");
    save_shape(shape.path, StarShape::disc(1.0));
    TempFile out("trace.csv");
    TempFile final_shape("final.json");

    cli::RunConfig cfg;
    cfg.command = "search";
    cfg.shape_path = shape.path;
    cfg.k_auto = true;
    cfg.search_order = 1;
    cfg.budget = 3000;
    cfg.output_path = out.path;
    cfg.final_shape_path = final_shape.path;
    CHECK(cli::run(cfg) == cli::exit_ok);
    CHECK(slurp(out.path).find("evaluation,defect,k,a1,b1") != std::string::npos);
    const StarShape result = load_shape(final_shape.path);
    CHECK(result.mean_radius() == 1.0);
}

}  // TEST_SUITE
