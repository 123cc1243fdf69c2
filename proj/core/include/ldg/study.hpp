#pragma once

#include "ldg/assembly1d.hpp"
#include "ldg/norms.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace ldg {

struct StudyConfig {
    int dim = 1;
    std::vector<int> degrees{1};
    std::vector<double> eps_list{1e-8};
    std::vector<int> N_list{32, 64, 128, 256, 512, 1024};
    std::optional<double> sigma;  ///< unset: k + 1
    std::string problem;          ///< empty: layer1d / layer2d by dim
    FluxKind flux = FluxKind::Paper;
    double beta = 1.0;

    [[nodiscard]] std::string problem_name() const;
    [[nodiscard]] double sigma_for(int k) const;
    /// Throws std::invalid_argument on an unusable grid or problem name.
    void validate() const;
};

struct ConvergenceRecord {
    int dim = 1;
    int k = 1;
    double sigma = 2.0;
    double eps = 0.0;
    int N = 0;
    ErrorReport errors;
    std::optional<double> rs_energy;
    std::optional<double> rp_energy;
    std::optional<double> rs_balanced;
    std::optional<double> rp_balanced;
    std::string status = "ok";

    [[nodiscard]] bool ok() const noexcept { return status == "ok"; }
};

/// (ln eN - ln e2N) / ln 2. Throws std::invalid_argument for nonpositive errors.
double rate_s(double eN, double e2N);
/// (ln eN - ln e2N) / ln(2 ln N / ln 2N). Needs N >= 2.
double rate_p(double eN, double e2N, int N);

/// One mesh, assemble, solve, measure cycle. Failures land in `status`.
ConvergenceRecord run_case(int dim, const std::string& problem, int k, double sigma, double eps, int N,
                           FluxKind flux, double beta = 1.0);

/// Records ordered by (k, eps, N). Rates sit on the row of N and compare it
/// with the row for 2N when both solved.
std::vector<ConvergenceRecord> run_study(const StudyConfig& cfg);

void attach_rates(std::vector<ConvergenceRecord>& records);

inline constexpr const char* kCsvHeader =
    "dim,k,sigma,eps,N,err_energy,err_balanced,err_l2_u,err_linf_u,rs_energy,rp_energy,rs_balanced,rp_balanced,"
    "status";

void write_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records);
void write_table(std::ostream& os, const std::vector<ConvergenceRecord>& records);

}  // namespace ldg
