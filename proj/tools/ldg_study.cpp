// Convergence sweeps for the LDG solver on Shishkin meshes.
//
//   ldg_study --dim 1 --degree 1,2,3 --eps 1e-4,1e-8 --N 32,64,128 --format table

#include "ldg/study.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv)
{
    CLI::App app{"LDG convergence study on Shishkin meshes"};

    ldg::StudyConfig cfg;
    std::string sigma = "k+1";
    std::string out_path;
    std::string format = "csv";
    std::string flux = "paper";

    app.add_option("--dim", cfg.dim, "Spatial dimension")->check(CLI::IsMember({1, 2}));
    app.add_option("--degree", cfg.degrees, "Polynomial degrees (comma list)")->delimiter(',');
    app.add_option("--eps", cfg.eps_list, "Perturbation parameters (comma list)")->delimiter(',');
    app.add_option("--N", cfg.N_list, "Cell counts, multiples of 4 (comma list)")->delimiter(',');
    app.add_option("--sigma", sigma, "Mesh grading constant, or k+1")->capture_default_str();
    app.add_option("--beta", cfg.beta, "Layer-strength constant")->capture_default_str();
    app.add_option("--problem", cfg.problem, "layer1d, layer2d, poly1d or poly2d");
    app.add_option("--out", out_path, "Write output here instead of stdout");
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "table"}))->capture_default_str();
    app.add_option("--flux", flux, "Numerical flux")->check(CLI::IsMember({"paper", "classic"}))->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (sigma != "k+1") {
        try {
            cfg.sigma = std::stod(sigma);
        } catch (const std::exception&) {
            std::cerr << "error: --sigma must be a number or k+1\n";
            return 2;
        }
    }
    cfg.flux = flux == "classic" ? ldg::FluxKind::Classic : ldg::FluxKind::Paper;
    if (app.count("--N") == 0 && cfg.dim == 2) {
        cfg.N_list = {8, 16, 32};
    }

    std::vector<ldg::ConvergenceRecord> records;
    try {
        records = ldg::run_study(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open " << out_path << '\n';
            return 2;
        }
    }
    std::ostream& os = out_path.empty() ? std::cout : file;
    if (format == "table") {
        ldg::write_table(os, records);
    } else {
        ldg::write_csv(os, records);
    }

    int failed = 0;
    for (const auto& r : records) {
        failed += r.ok() ? 0 : 1;
    }
    if (failed > 0) {
        std::cerr << failed << " case(s) failed\n";
        return 1;
    }
    return 0;
}
