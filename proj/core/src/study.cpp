#include "ldg/study.hpp"

#include "ldg/assembly2d.hpp"
#include "ldg/mesh.hpp"
#include "ldg/problems.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>

namespace ldg {

std::string StudyConfig::problem_name() const
{
    if (!problem.empty()) {
        return problem;
    }
    return dim == 2 ? "layer2d" : "layer1d";
}

double StudyConfig::sigma_for(int k) const
{
    return sigma.value_or(static_cast<double>(k + 1));
}

void StudyConfig::validate() const
{
    if (dim != 1 && dim != 2) {
        throw std::invalid_argument("study: dim must be 1 or 2");
    }
    if (degrees.empty() || eps_list.empty() || N_list.empty()) {
        throw std::invalid_argument("study: degree, eps and N lists must be nonempty");
    }
    for (int k : degrees) {
        if (k < 1 || k > kMaxDegree) {
            throw std::invalid_argument("study: degree out of range");
        }
    }
    for (int n : N_list) {
        if (n < 4 || n % 4 != 0) {
            throw std::invalid_argument("study: every N must be a positive multiple of 4");
        }
    }
    for (double e : eps_list) {
        if (!(e > 0.0 && e < 1.0)) {
            throw std::invalid_argument("study: eps must lie in (0, 1)");
        }
    }
    if (sigma && !(*sigma > 0.0)) {
        throw std::invalid_argument("study: sigma must be positive");
    }
    const std::string name = problem_name();
    const bool is_2d = name == "layer2d" || name == "poly2d";
    const bool is_1d = name == "layer1d" || name == "poly1d";
    if ((dim == 1 && !is_1d) || (dim == 2 && !is_2d)) {
        throw std::invalid_argument("study: problem '" + name + "' does not match dim " + std::to_string(dim));
    }
}

double rate_s(double eN, double e2N)
{
    if (!(eN > 0.0) || !(e2N > 0.0)) {
        throw std::invalid_argument("rate_s: errors must be positive");
    }
    return std::log(eN / e2N) / std::log(2.0);
}

double rate_p(double eN, double e2N, int N)
{
    if (!(eN > 0.0) || !(e2N > 0.0)) {
        throw std::invalid_argument("rate_p: errors must be positive");
    }
    if (N < 2) {
        throw std::invalid_argument("rate_p: N must be at least 2");
    }
    const double n = static_cast<double>(N);
    return std::log(eN / e2N) / std::log(2.0 * std::log(n) / std::log(2.0 * n));
}

ConvergenceRecord run_case(int dim, const std::string& problem, int k, double sigma, double eps, int N,
                           FluxKind flux, double beta)
{
    ConvergenceRecord rec;
    rec.dim = dim;
    rec.k = k;
    rec.sigma = sigma;
    rec.eps = eps;
    rec.N = N;
    try {
        const MeshParams params{eps, beta, sigma, N};
        const ShishkinMesh1D mesh = build_shishkin_1d(params);
        if (dim == 1) {
            const ProblemSpec1D pb = make_problem_1d(problem, eps);
            const FluxConfig cfg = FluxConfig::make(flux, eps, N);
            const LdgSolution1D w = solve_ldg_1d(mesh, pb, k, cfg);
            rec.errors = measure_errors_1d(w, pb, cfg);
        } else {
            const ProblemSpec2D pb = make_problem_2d(problem, eps);
            const FluxConfig2D cfg = FluxConfig2D::make(flux, eps, N, N);
            const LdgSolution2D t = solve_ldg_2d(build_tensor_2d(mesh, mesh), pb, k, cfg);
            rec.errors = measure_errors_2d(t, pb, cfg);
        }
        const ErrorReport& e = rec.errors;
        for (double v : {e.energy, e.balanced, e.l2_u, e.linf_u, e.l2_q}) {
            if (!std::isfinite(v)) {
                rec.status = "error: non-finite error norm";
            }
        }
    } catch (const std::exception& ex) {
        rec.status = std::string("error: ") + ex.what();
    }
    return rec;
}

void attach_rates(std::vector<ConvergenceRecord>& records)
{
    for (auto& r : records) {
        if (!r.ok() || r.errors.energy <= 0.0 || r.errors.balanced <= 0.0) {
            continue;
        }
        const auto next = std::find_if(records.begin(), records.end(), [&](const ConvergenceRecord& o) {
            return o.dim == r.dim && o.k == r.k && o.sigma == r.sigma && o.eps == r.eps && o.N == 2 * r.N;
        });
        if (next == records.end() || !next->ok() || next->errors.energy <= 0.0 || next->errors.balanced <= 0.0) {
            continue;
        }
        r.rs_energy = rate_s(r.errors.energy, next->errors.energy);
        r.rp_energy = rate_p(r.errors.energy, next->errors.energy, r.N);
        r.rs_balanced = rate_s(r.errors.balanced, next->errors.balanced);
        r.rp_balanced = rate_p(r.errors.balanced, next->errors.balanced, r.N);
    }
}

std::vector<ConvergenceRecord> run_study(const StudyConfig& cfg)
{
    cfg.validate();
    std::vector<int> degrees = cfg.degrees;
    std::vector<double> eps_list = cfg.eps_list;
    std::vector<int> ns = cfg.N_list;
    std::sort(degrees.begin(), degrees.end());
    std::sort(eps_list.begin(), eps_list.end(), std::greater<>());
    std::sort(ns.begin(), ns.end());
    degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
    eps_list.erase(std::unique(eps_list.begin(), eps_list.end()), eps_list.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());

    const std::string name = cfg.problem_name();
    std::vector<ConvergenceRecord> out;
    for (int k : degrees) {
        for (double eps : eps_list) {
            for (int n : ns) {
                out.push_back(run_case(cfg.dim, name, k, cfg.sigma_for(k), eps, n, cfg.flux, cfg.beta));
            }
        }
    }
    attach_rates(out);
    return out;
}

namespace {

std::string fmt(const char* spec, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt_rate(const std::optional<double>& r)
{
    return r ? fmt("%.2f", *r) : std::string();
}

std::string csv_status(std::string s)
{
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ConvergenceRecord>& records)
{
    os << kCsvHeader << '\n';
    for (const auto& r : records) {
        os << r.dim << ',' << r.k << ',' << fmt("%.6g", r.sigma) << ',' << fmt("%.6g", r.eps) << ',' << r.N << ',';
        if (r.ok()) {
            const ErrorReport& e = r.errors;
            os << fmt("%.6g", e.energy) << ',' << fmt("%.6g", e.balanced) << ',' << fmt("%.6g", e.l2_u) << ','
               << fmt("%.6g", e.linf_u) << ',';
        } else {
            os << ",,,,";
        }
        os << fmt_rate(r.rs_energy) << ',' << fmt_rate(r.rp_energy) << ',' << fmt_rate(r.rs_balanced) << ','
           << fmt_rate(r.rp_balanced) << ',' << csv_status(r.status) << '\n';
    }
}

void write_table(std::ostream& os, const std::vector<ConvergenceRecord>& records)
{
    char line[256];
    std::snprintf(line, sizeof line, "%3s %2s %6s %9s %6s  %12s %6s %6s  %12s %6s %6s  %s\n", "dim", "k", "sigma",
                  "eps", "N", "energy", "r_s", "r_p", "balanced", "r_s", "r_p", "status");
    os << line;
    for (const auto& r : records) {
        const std::string en = r.ok() ? fmt("%.4e", r.errors.energy) : "-";
        const std::string ba = r.ok() ? fmt("%.4e", r.errors.balanced) : "-";
        std::snprintf(line, sizeof line, "%3d %2d %6g %9.1e %6d  %12s %6s %6s  %12s %6s %6s  ", r.dim, r.k,
                      r.sigma, r.eps, r.N, en.c_str(), fmt_rate(r.rs_energy).c_str(), fmt_rate(r.rp_energy).c_str(),
                      ba.c_str(), fmt_rate(r.rs_balanced).c_str(), fmt_rate(r.rp_balanced).c_str());
        os << line << r.status << '\n';
    }
}

}  // namespace ldg
