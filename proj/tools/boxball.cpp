#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "boxball/bbs.hpp"
#include "boxball/carrier.hpp"
#include "boxball/highest.hpp"
#include "boxball/io.hpp"
#include "boxball/ldp.hpp"
#include "boxball/mc.hpp"
#include "boxball/schur.hpp"
#include "boxball/tba.hpp"

namespace {

constexpr const char* kVersion = "boxball 0.1.0";

using namespace boxball;

std::string join_args(int argc, char** argv) {
    std::string s;
    for (int i = 0; i < argc; ++i) {
        if (i > 0) s += ' ';
        s += argv[i];
    }
    return s;
}

std::string g_command_line;

void write_header(std::ostream& out, std::uint64_t seed) {
    out << "# " << kVersion << "\n";
    out << "# command: " << g_command_line << "\n";
    out << "# seed: " << seed << "\n";
}

std::uint64_t resolve_seed(std::int64_t flag_seed) {
    if (flag_seed >= 0) return static_cast<std::uint64_t>(flag_seed);
    if (const char* env = std::getenv("BOXBALL_SEED")) return std::strtoull(env, nullptr, 10);
    return 20250810ULL;
}

std::string load_config_text(const std::string& arg) {
    if (!arg.empty() && arg.front() == '@') {
        std::ifstream in(arg.substr(1));
        if (!in) throw std::runtime_error("cannot open configuration file " + arg.substr(1));
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    return arg;
}

int infer_kappa(const std::string& text, int flag_kappa) {
    if (flag_kappa > 0) return flag_kappa;
    int kappa = 1;
    for (char ch : text)
        if (ch >= '0' && ch <= '9') kappa = std::max(kappa, ch - '0');
    return kappa;
}

std::vector<double> resolve_density(const std::string& p_text, bool uniform, int kappa) {
    if (uniform) {
        if (kappa < 1) throw std::runtime_error("--uniform needs --kappa");
        return std::vector<double>(static_cast<std::size_t>(kappa) + 1, 1.0 / (kappa + 1));
    }
    if (p_text.empty()) throw std::runtime_error("supply --p or --uniform");
    return parse_density(p_text);
}

int run_evolve(const std::string& config_arg, int steps, int kappa_flag, bool spaces, long long width) {
    write_header(std::cerr, 0);  // keep stdout a clean trajectory
    const std::string text = load_config_text(config_arg);
    Configuration x = parse_configuration(text, infer_kappa(text, kappa_flag));
    for (int t = 0; t <= steps; ++t) {
        Configuration shown = x;
        std::string line = to_text(shown, spaces);
        if (width > 0) {
            Configuration padded = shown;
            std::vector<Letter> cells = padded.cells();
            cells.resize(static_cast<std::size_t>(width), 0);
            line = to_text(Configuration(cells, x.kappa()), spaces);
        }
        std::cout << line << "\n";
        if (t < steps) x = evolve(x);
    }
    return 0;
}

int run_energy(const std::string& config_arg, int kappa_flag, long long n, const std::string& svg_path) {
    const std::string text = load_config_text(config_arg);
    const Configuration x = parse_configuration(text, infer_kappa(text, kappa_flag));
    CsvWriter csv(std::cout);
    write_header(std::cout, 0);
    if (x.ball_count() == 0) {
        csv.comment("energy matrix: empty (no balls)");
        return 0;
    }
    const EnergyMatrix em = energy_matrix(x);
    csv.comment("energy matrix E_c^(a)");
    {
        std::vector<std::string> head{"c"};
        for (int a = 1; a <= em.kappa; ++a) head.push_back("a" + std::to_string(a));
        csv.row(head);
        for (int c = 1; c <= em.row_count(); ++c) {
            std::vector<std::string> cells{std::to_string(c)};
            for (int a = 1; a <= em.kappa; ++a) cells.push_back(std::to_string(em.at(c, a)));
            csv.row(cells);
        }
    }
    const YoungTuple y = young_diagrams(em);
    csv.comment("Young diagram row lengths");
    csv.row({"a", "rows"});
    for (int a = 1; a <= y.kappa; ++a) {
        std::string rows;
        for (int i = 1; i <= y.depth(a); ++i) {
            if (i > 1) rows += ' ';
            rows += std::to_string(y.row(a, i));
        }
        csv.row({std::to_string(a), rows});
    }
    if (n > 0) {
        const VacancyTable v = vacancies(y, n);
        csv.comment("vacancies v_i^(a) at n=" + std::to_string(n));
        std::vector<std::string> head{"i"};
        for (int a = 1; a <= y.kappa; ++a) head.push_back("a" + std::to_string(a));
        csv.row(head);
        for (int i = 1; i <= v.depth(); ++i) {
            std::vector<std::string> cells{std::to_string(i)};
            for (int a = 1; a <= y.kappa; ++a) cells.push_back(std::to_string(v.at(i, a)));
            csv.row(cells);
        }
    }
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        svg_young_diagrams(svg, y);
    }
    return 0;
}

int run_shape(const std::string& p_text, double p1, bool uniform, int kappa, int a, long long i_max,
              long long empirical_n, std::int64_t seed_flag, const std::string& svg_path,
              bool table) {
    std::vector<double> p;
    if (p1 > 0.0)
        p = {1.0 - p1, p1};
    else
        p = resolve_density(p_text, uniform, kappa);
    kappa = static_cast<int>(p.size()) - 1;
    const std::uint64_t seed = resolve_seed(seed_flag);
    write_header(std::cout, seed);
    CsvWriter csv(std::cout);
    if (table) {
        // full equilibrium table over every color
        std::vector<std::string> head{"kappa", "a", "i"};
        for (int j = 0; j <= kappa; ++j) head.push_back("p" + std::to_string(j));
        head.push_back("epsilon");
        head.push_back("eta");
        csv.row(head);
        for (int color = 1; color <= kappa; ++color)
            for (long long i = 1; i <= i_max; ++i) {
                std::vector<std::string> cells{std::to_string(kappa), std::to_string(color),
                                               std::to_string(i)};
                for (double x : p) cells.push_back(format_g12(x));
                cells.push_back(format_g12(epsilon(i, color, p)));
                cells.push_back(format_g12(eta(i, color, p)));
                csv.row(cells);
            }
        return 0;
    }
    const auto limit = shape_curve(p, a, i_max);
    std::vector<ShapePoint> emp;
    if (empirical_n > 0) emp = empirical_shape(empirical_n, p, a, i_max, seed);
    std::vector<std::string> head{"i", "eta"};
    if (!emp.empty()) head.push_back("empirical");
    csv.row(head);
    for (std::size_t k = 0; k < limit.size(); ++k) {
        std::vector<std::string> cells{std::to_string(limit[k].i), format_g12(limit[k].x)};
        if (!emp.empty()) cells.push_back(format_g12(emp[k].x));
        csv.row(cells);
    }
    if (!svg_path.empty()) {
        std::ofstream svg(svg_path);
        svg_shape(svg, limit, emp);
    }
    return 0;
}

int run_ldp(const std::string& p_text, bool uniform, int kappa, int c, int a, bool joint,
            const std::string& g_kind, double t_min, double t_max, int t_points, double u_min,
            double u_max, int u_points, const std::string& kernel_path) {
    const std::vector<double> p = resolve_density(p_text, uniform, kappa);
    SparseKernel<double> kernel;
    std::vector<double> g;
    if (joint) {
        const JointChain chain = build_joint_chain(c, a, kappa);
        kernel = joint_kernel(chain, p);
        g = (g_kind == "row") ? chain.g_row() : chain.g_energy();
    } else {
        const SingleChain chain = build_single_chain(c, a, kappa);
        kernel = single_kernel(chain, p);
        g = chain.g_energy();
    }
    if (!kernel_path.empty()) {
        std::ofstream dump(kernel_path);
        dump << "# sparse triplets row,col,value\n";
        for (int r = 0; r < kernel.n; ++r)
            for (int k = kernel.row_ptr[r]; k < kernel.row_ptr[r + 1]; ++k)
                dump << r << "," << kernel.col[k] << "," << format_g12(kernel.val[k]) << "\n";
    }
    LdpAnalyzer analyzer(kernel, g);
    write_header(std::cout, 0);
    CsvWriter csv(std::cout);
    csv.comment("cumulant generating function");
    csv.row({"t", "Lambda"});
    for (int k = 0; k < t_points; ++k) {
        const double t = t_min + (t_max - t_min) * k / std::max(1, t_points - 1);
        csv.row({format_g12(t), format_g12(analyzer.Lambda(t))});
    }
    csv.comment("rate function");
    csv.row({"u", "LambdaStar", "converged"});
    for (int k = 0; k < u_points; ++k) {
        const double u = u_min + (u_max - u_min) * k / std::max(1, u_points - 1);
        const LegendreValue lv = analyzer.legendre(u);
        csv.row({format_g12(u), format_g12(lv.value), lv.converged ? "1" : "0"});
    }
    return 0;
}

int run_tba(double q, int kappa, long long i_max, bool check) {
    const PrincipalParams params = make_principal(q, kappa);
    write_header(std::cout, 0);
    CsvWriter csv(std::cout);
    csv.row({"q", "kappa", "a", "i", "y", "phi", "xi", "eta"});
    double worst = 0.0;
    for (int a = 1; a <= kappa; ++a)
        for (long long i = 1; i <= i_max; ++i) {
            const double yv = y_principal(i, a, params);
            const double phi = phi_principal(i, a, params);
            const double xi = xi_principal(i, a, params);
            const double etav = eta_principal(i, a, params);
            csv.row({format_g12(q), std::to_string(kappa), std::to_string(a), std::to_string(i),
                     format_g12(yv), format_g12(phi), format_g12(xi), format_g12(etav)});
            if (check) {
                worst = std::max(worst, std::abs(q_system_residual(i, a, params.w(), kappa)));
                worst = std::max(worst, std::abs(y_system_residual(i, a, params)));
                worst = std::max(worst, std::abs(difference_equation_residual(i, a, params)));
                worst = std::max(worst, std::abs(xi - phi / yv));
            }
        }
    if (check) {
        for (double r : equation_of_state_residual(params.densities()))
            worst = std::max(worst, std::abs(r));
        std::cerr << "worst TBA residual: " << format_g12(worst) << "\n";
        return worst < 1e-10 ? 0 : 1;
    }
    return 0;
}

int run_ballot(const std::string& m_text) {
    write_header(std::cerr, 0);  // stdout carries the bare count
    std::vector<long long> m;
    std::stringstream ss(m_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) m.push_back(std::stoll(tok));
    if (!in_weyl_chamber(m)) {
        std::cerr << "point lies outside the Weyl chamber; count is 0 by convention\n";
        std::cout << 0 << "\n";
        return 0;
    }
    std::cout << ballot_count(m) << "\n";
    return 0;
}

void print_report(const ExperimentReport& report, std::uint64_t seed) {
    write_header(std::cout, seed);
    CsvWriter csv(std::cout);
    csv.row({"name", "estimate", "std_error", "target", "tolerance", "pass", "samples"});
    for (const auto& line : report.lines)
        csv.row({line.name, format_g12(line.estimate), format_g12(line.std_error),
                 format_g12(line.target), format_g12(line.tolerance), line.pass ? "1" : "0",
                 std::to_string(line.samples)});
    std::cerr << report.estimator << ": " << (report.all_pass() ? "pass" : "FAIL") << " ("
              << format_g12(report.wall_seconds) << " s)\n";
}

int run_mc(const std::string& experiment, const std::string& p_text, bool uniform, int kappa,
           long long n, int a, long long i, long long c, long long trials, std::int64_t seed_flag,
           int threads, bool conditioned, double tolerance, bool check, long long steps) {
    const std::vector<double> p = resolve_density(p_text, uniform, kappa);
    const std::uint64_t seed = resolve_seed(seed_flag);
    if (experiment == "variance") {
        const double regen = limiting_variance(static_cast<int>(c), a, p, RowFunctional::energy,
                                               steps, seed);
        const double batch = limiting_variance_batch_means(static_cast<int>(c), a, p,
                                                           RowFunctional::energy, steps, seed);
        write_header(std::cout, seed);
        CsvWriter csv(std::cout);
        csv.row({"estimator", "gamma_sq"});
        csv.row({"regenerative", format_g12(regen)});
        csv.row({"batch_means", format_g12(batch)});
        const bool agree = std::abs(regen - batch) <= 0.1 * regen;
        std::cerr << "variance estimators " << (agree ? "agree" : "DISAGREE") << "\n";
        return (!check || agree) ? 0 : 1;
    }
    ExperimentReport report;
    if (experiment == "rows")
        report = estimate_rows(n, p, a, i, trials, seed, threads, conditioned, tolerance);
    else if (experiment == "energy")
        report = estimate_energy(n, p, a, c, trials, seed, threads, tolerance);
    else
        throw std::runtime_error("unknown experiment " + experiment);
    print_report(report, seed);
    return (!check || report.all_pass()) ? 0 : 1;
}

int run_persistence(const std::string& p_text, int c, int a, const std::string& grid_text,
                    long long trials, std::int64_t seed_flag, int threads, bool check) {
    const std::vector<Rational> p = parse_density_rational(p_text);
    std::vector<long long> grid;
    {
        std::stringstream ss(grid_text);
        std::string tok;
        while (std::getline(ss, tok, ',')) grid.push_back(std::stoll(tok));
    }
    const std::uint64_t seed = resolve_seed(seed_flag);
    const PersistenceResult res = persistence_experiment(c, a, p, grid, trials, seed, threads);
    write_header(std::cout, seed);
    CsvWriter csv(std::cout);
    csv.row({"n", "survival", "std_error"});
    for (std::size_t j = 0; j < res.n_grid.size(); ++j)
        csv.row({std::to_string(res.n_grid[j]), format_g12(res.survival[j]),
                 format_g12(res.std_error[j])});
    csv.comment("slope " + format_g12(res.slope));
    csv.comment("prefactor " + format_g12(res.prefactor) + " predicted " +
                format_g12(res.predicted_prefactor));
    csv.comment("gamma^2 " + format_g12(res.gamma_sq) + " eta " + format_g12(res.eta) +
                " epsilon " + format_g12(res.epsilon));
    if (check) {
        const bool slope_ok = res.slope >= -0.6 && res.slope <= -0.4;
        const bool prefactor_ok =
            std::abs(res.prefactor - res.predicted_prefactor) <= 0.25 * res.predicted_prefactor;
        std::cerr << "persistence: slope " << (slope_ok ? "pass" : "FAIL") << ", prefactor "
                  << (prefactor_ok ? "pass" : "FAIL") << "\n";
        return slope_ok && prefactor_ok ? 0 : 1;
    }
    return 0;
}

int run_highest(const std::string& p_text, bool uniform, int kappa, long long n, long long trials,
                std::int64_t seed_flag, bool exact, bool sample, bool check) {
    const std::vector<double> p = resolve_density(p_text, uniform, kappa);
    const std::uint64_t seed = resolve_seed(seed_flag);
    write_header(std::cout, seed);
    CsvWriter csv(std::cout);
    int rc = 0;
    if (sample) {
        const HighestSample hs = sample_highest(n, p, seed);
        csv.comment("conditioned sample, acceptance " + format_g12(hs.acceptance));
        std::cout << to_text(hs.config) << "\n";
        return 0;
    }
    csv.row({"quantity", "value", "std_error"});
    if (exact) {
        const double exact_p = prob_highest_exact(n, p);
        csv.row({"exact_prob", format_g12(exact_p), "0"});
    }
    if (trials > 0) {
        const LetterSampler sampler(p);
        long long hits = 0;
        for (long long t = 0; t < trials; ++t) {
            Xoshiro256pp rng = stream_for(seed, static_cast<std::uint64_t>(t));
            std::vector<long long> counts(p.size(), 0);
            bool ok = true;
            for (long long k = 0; k < n && ok; ++k) {
                const Letter x = sampler.draw(rng);
                ++counts[static_cast<std::size_t>(x)];
                if (x > 0 && counts[static_cast<std::size_t>(x) - 1] < counts[static_cast<std::size_t>(x)])
                    ok = false;
            }
            hits += ok;
        }
        const double est = static_cast<double>(hits) / static_cast<double>(trials);
        const double se = std::sqrt(est * (1.0 - est) / static_cast<double>(trials));
        csv.row({"empirical_prob", format_g12(est), format_g12(se)});
        if (check && is_strictly_decreasing(p) && kappa == 1) {
            // Wald limit for the two-letter walk
            const double target = (2.0 * p[0] - 1.0) / p[0];
            const bool ok = std::abs(est - target) <= 3.0 * se;
            csv.comment("wald_target " + format_g12(target) + (ok ? " pass" : " FAIL"));
            rc = ok ? 0 : 1;
        }
    }
    if (is_weakly_decreasing(p)) csv.comment("decay_exponent " + format_g12(decay_exponent(p)));
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    g_command_line = join_args(argc, argv);
    CLI::App app{"kappa-color box-ball system: evolution, invariants, limit theorems"};
    app.require_subcommand(1);
    int threads_default = static_cast<int>(std::thread::hardware_concurrency());
    if (threads_default <= 0) threads_default = 1;

    // evolve
    auto* evolve_cmd = app.add_subcommand("evolve", "run the time evolution");
    std::string config_arg;
    int steps = 1, kappa_flag = 0;
    bool spaces = false;
    long long width = 0;
    evolve_cmd->add_option("--config", config_arg, "configuration digits or @file")->required();
    evolve_cmd->add_option("--steps", steps, "number of steps");
    evolve_cmd->add_option("--kappa", kappa_flag, "number of colors (default: inferred)");
    evolve_cmd->add_flag("--spaces", spaces, "space-separated output");
    evolve_cmd->add_option("--width", width, "pad lines with zeros to this width");

    // energy
    auto* energy_cmd = app.add_subcommand("energy", "energy matrix and Young diagrams");
    std::string energy_config, energy_svg;
    int energy_kappa = 0;
    long long energy_n = 0;
    energy_cmd->add_option("--config", energy_config, "configuration digits or @file")->required();
    energy_cmd->add_option("--kappa", energy_kappa, "number of colors (default: inferred)");
    energy_cmd->add_option("--n", energy_n, "system size for vacancy columns");
    energy_cmd->add_option("--svg", energy_svg, "write diagram outlines to this SVG file");

    // shape
    auto* shape_cmd = app.add_subcommand("shape", "limit shape curve and empirical boundary");
    std::string shape_p, shape_svg;
    double shape_p1 = 0.0;
    bool shape_uniform = false;
    int shape_kappa = 1, shape_a = 1;
    long long shape_imax = 20, shape_empirical = 0;
    std::int64_t shape_seed = -1;
    shape_cmd->add_option("--p", shape_p, "density p_0,...,p_kappa");
    shape_cmd->add_option("--p1", shape_p1, "ball density for kappa=1");
    shape_cmd->add_flag("--uniform", shape_uniform, "uniform density");
    shape_cmd->add_option("--kappa", shape_kappa, "number of colors");
    shape_cmd->add_option("--a", shape_a, "diagram color");
    shape_cmd->add_option("--imax", shape_imax, "rows to emit");
    shape_cmd->add_option("--empirical", shape_empirical, "also sample one configuration of this size");
    shape_cmd->add_option("--seed", shape_seed, "RNG seed");
    shape_cmd->add_option("--svg", shape_svg, "write curve to this SVG file");
    bool shape_table = false;
    shape_cmd->add_flag("--table", shape_table, "emit the full (kappa,a,i,p...,epsilon,eta) table");

    // ldp
    auto* ldp_cmd = app.add_subcommand("ldp", "tilted-kernel rate function");
    std::string ldp_p, ldp_g = "energy", ldp_kernel;
    bool ldp_uniform = false, ldp_joint = false;
    int ldp_kappa = 1, ldp_c = 1, ldp_a = 1, ldp_tpoints = 81, ldp_upoints = 41;
    double ldp_tmin = -20.0, ldp_tmax = 20.0, ldp_umin = 0.0, ldp_umax = 0.6;
    ldp_cmd->add_option("--p", ldp_p, "density p_0,...,p_kappa");
    ldp_cmd->add_flag("--uniform", ldp_uniform, "uniform density");
    ldp_cmd->add_option("--kappa", ldp_kappa, "number of colors");
    ldp_cmd->add_option("--c", ldp_c, "carrier capacity");
    ldp_cmd->add_option("--a", ldp_a, "carrier height");
    ldp_cmd->add_flag("--joint", ldp_joint, "use the joint carrier chain");
    ldp_cmd->add_option("--g", ldp_g, "functional: energy or row (joint only)");
    ldp_cmd->add_option("--tmin", ldp_tmin);
    ldp_cmd->add_option("--tmax", ldp_tmax);
    ldp_cmd->add_option("--tpoints", ldp_tpoints);
    ldp_cmd->add_option("--umin", ldp_umin);
    ldp_cmd->add_option("--umax", ldp_umax);
    ldp_cmd->add_option("--upoints", ldp_upoints);
    ldp_cmd->add_option("--dump-kernel", ldp_kernel, "write sparse triplets to this file");

    // tba
    auto* tba_cmd = app.add_subcommand("tba", "principal-specialization closed forms");
    double tba_q = 0.5;
    int tba_kappa = 2;
    long long tba_imax = 20;
    bool tba_check = false;
    tba_cmd->add_option("--q", tba_q, "specialization parameter in (0,1)");
    tba_cmd->add_option("--kappa", tba_kappa, "number of colors");
    tba_cmd->add_option("--imax", tba_imax, "rows to emit");
    tba_cmd->add_flag("--check", tba_check, "verify the functional identities");

    // ballot
    auto* ballot_cmd = app.add_subcommand("ballot", "Weyl-chamber lattice path count");
    std::string ballot_m;
    ballot_cmd->add_option("--m", ballot_m, "destination point m_1,...,m_r")->required();

    // mc
    auto* mc_cmd = app.add_subcommand("mc", "Monte Carlo row/energy estimates");
    std::string mc_experiment = "rows", mc_p;
    bool mc_uniform = false, mc_conditioned = false, mc_check = false;
    int mc_kappa = 1, mc_a = 1, mc_threads = threads_default;
    long long mc_n = 100000, mc_i = 1, mc_c = 1, mc_trials = 1, mc_steps = 2000000;
    std::int64_t mc_seed = -1;
    double mc_tolerance = 5e-3;
    mc_cmd->add_option("--experiment", mc_experiment, "rows, energy, or variance");
    mc_cmd->add_option("--p", mc_p, "density p_0,...,p_kappa");
    mc_cmd->add_flag("--uniform", mc_uniform, "uniform density");
    mc_cmd->add_option("--kappa", mc_kappa, "number of colors");
    mc_cmd->add_option("--n", mc_n, "system size");
    mc_cmd->add_option("--a", mc_a, "diagram color");
    mc_cmd->add_option("--i", mc_i, "row index (rows experiment)");
    mc_cmd->add_option("--c", mc_c, "capacity (energy experiment)");
    mc_cmd->add_option("--trials", mc_trials, "independent trials");
    mc_cmd->add_option("--steps", mc_steps, "trajectory length (variance experiment)");
    mc_cmd->add_option("--seed", mc_seed, "RNG seed");
    mc_cmd->add_option("--threads", mc_threads, "worker threads");
    mc_cmd->add_flag("--conditioned", mc_conditioned, "condition on highest states");
    mc_cmd->add_option("--tolerance", mc_tolerance, "absolute tolerance (0: 3 sigma)");
    mc_cmd->add_flag("--check", mc_check, "exit 1 when outside tolerance");

    // persistence
    auto* pers_cmd = app.add_subcommand("persistence", "survival probability scaling");
    std::string pers_p = "0.6,0.4", pers_grid = "250,500,1000,2000";
    int pers_c = 1, pers_a = 1, pers_threads = threads_default;
    long long pers_trials = 1000000;
    std::int64_t pers_seed = -1;
    bool pers_check = false;
    pers_cmd->add_option("--p", pers_p, "density as exact decimals/fractions");
    pers_cmd->add_option("--c", pers_c, "row index");
    pers_cmd->add_option("--a", pers_a, "diagram color");
    pers_cmd->add_option("--ngrid", pers_grid, "comma-separated horizon grid");
    pers_cmd->add_option("--trials", pers_trials, "trials");
    pers_cmd->add_option("--seed", pers_seed, "RNG seed");
    pers_cmd->add_option("--threads", pers_threads, "worker threads");
    pers_cmd->add_flag("--check", pers_check, "exit 1 when slope/prefactor gates fail");

    // highest
    auto* high_cmd = app.add_subcommand("highest", "highest-state probability and sampling");
    std::string high_p;
    bool high_uniform = false, high_exact = false, high_sample = false, high_check = false;
    int high_kappa = 1;
    long long high_n = 1000, high_trials = 0;
    std::int64_t high_seed = -1;
    high_cmd->add_option("--p", high_p, "density p_0,...,p_kappa");
    high_cmd->add_flag("--uniform", high_uniform, "uniform density");
    high_cmd->add_option("--kappa", high_kappa, "number of colors");
    high_cmd->add_option("--n", high_n, "system size");
    high_cmd->add_option("--trials", high_trials, "Monte Carlo trials (0: skip)");
    high_cmd->add_option("--seed", high_seed, "RNG seed");
    high_cmd->add_flag("--exact", high_exact, "sum the exact ballot formula");
    high_cmd->add_flag("--sample", high_sample, "emit one conditioned sample");
    high_cmd->add_flag("--check", high_check, "exit 1 when outside tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(evolve_cmd))
            return run_evolve(config_arg, steps, kappa_flag, spaces, width);
        if (app.got_subcommand(energy_cmd))
            return run_energy(energy_config, energy_kappa, energy_n, energy_svg);
        if (app.got_subcommand(shape_cmd))
            return run_shape(shape_p, shape_p1, shape_uniform, shape_kappa, shape_a, shape_imax,
                             shape_empirical, shape_seed, shape_svg, shape_table);
        if (app.got_subcommand(ldp_cmd))
            return run_ldp(ldp_p, ldp_uniform, ldp_kappa, ldp_c, ldp_a, ldp_joint, ldp_g, ldp_tmin,
                           ldp_tmax, ldp_tpoints, ldp_umin, ldp_umax, ldp_upoints, ldp_kernel);
        if (app.got_subcommand(tba_cmd)) return run_tba(tba_q, tba_kappa, tba_imax, tba_check);
        if (app.got_subcommand(ballot_cmd)) return run_ballot(ballot_m);
        if (app.got_subcommand(mc_cmd))
            return run_mc(mc_experiment, mc_p, mc_uniform, mc_kappa, mc_n, mc_a, mc_i, mc_c,
                          mc_trials, mc_seed, mc_threads, mc_conditioned, mc_tolerance, mc_check,
                          mc_steps);
        if (app.got_subcommand(pers_cmd))
            return run_persistence(pers_p, pers_c, pers_a, pers_grid, pers_trials, pers_seed,
                                   pers_threads, pers_check);
        if (app.got_subcommand(high_cmd))
            return run_highest(high_p, high_uniform, high_kappa, high_n, high_trials, high_seed,
                               high_exact, high_sample, high_check);
    } catch (const ParseError& e) {
        std::cerr << "parse error at column " << e.column << ": " << e.message << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
