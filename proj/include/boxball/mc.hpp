#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "boxball/bbs.hpp"
#include "boxball/rng.hpp"
#include "boxball/schur.hpp"

namespace boxball {

// Compensated summation for float accumulators; merging partial sums in
// block order keeps results independent of the thread count.
class KahanSum {
public:
    void add(double x) {
        const double y = x - c_;
        const double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

struct ReportLine {
    std::string name;
    double estimate = 0.0;
    double std_error = 0.0;
    double target = 0.0;
    double tolerance = 0.0;  // absolute, on |estimate - target|
    bool pass = false;
    long long samples = 0;
};

struct ExperimentReport {
    std::string estimator;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
    std::vector<ReportLine> lines;
    bool all_pass() const;
};

// i.i.d. letters from p on sites [1,n], empty beyond; deterministic in seed.
Configuration sample_config(long long n, const std::vector<double>& p, std::uint64_t seed);

// Incremental trajectory statistics for one diagram row: feeds letters and
// exposes rho_c^(a) of the prefix (capacity pair (c-1, c); plain energy
// when c = 1).
class RowTracker {
public:
    RowTracker(int c, int a, int kappa);
    int step(Letter x);  // increment of rho (may be -1, 0, or 1)
    long long value() const { return value_; }
    bool at_ground() const;

private:
    int c_;
    bool row_mode_;
    std::vector<RowCarrier> row_carriers_;   // capacity c-1 (if any), then c
    std::vector<RectTableau> dense_;
    std::vector<RectTableau> dense_ground_;
    long long value_ = 0;
};

// Mean of rho_i^(a)/n over independent trials vs the Schur target; the
// conditioned variant draws via rejection from the highest states.
ExperimentReport estimate_rows(long long n, const std::vector<double>& p, int a, long long i,
                               long long trials, std::uint64_t seed, int threads = 1,
                               bool conditioned = false, double tolerance = 5e-3);

// Mean of E_c^(a)/n over independent trials vs epsilon_c^(a).
ExperimentReport estimate_energy(long long n, const std::vector<double>& p, int a, long long c,
                                 long long trials, std::uint64_t seed, int threads = 1,
                                 double tolerance = 5e-3);

struct ShapePoint {
    long long i = 0;
    double x = 0.0;  // rescaled row length
};

// Limit shape (eta_i^(a), i) for i = 1..i_max.
std::vector<ShapePoint> shape_curve(const std::vector<double>& p, int a, long long i_max);
// Rescaled diagram boundary (rho_i/n, i) of one sampled configuration.
std::vector<ShapePoint> empirical_shape(long long n, const std::vector<double>& p, int a,
                                        long long i_max, std::uint64_t seed);

enum class RowFunctional { energy, row };

// Limiting variance gamma^2 of the additive functional over the joint
// carrier chain, by regeneration at ground-pair visits. Centered at the
// exact Schur mean.
double limiting_variance(int c, int a, const std::vector<double>& p, RowFunctional kind,
                         long long steps, std::uint64_t seed, long long min_blocks = 100);
// Same trajectory statistic with batch means, for cross-checking.
double limiting_variance_batch_means(int c, int a, const std::vector<double>& p, RowFunctional kind,
                                     long long steps, std::uint64_t seed, long long batches = 1000);
// Test hook: custom functional of (H(C_c,x), H(C_{c+1},x), x).
using StepFunctional = std::function<double(int, int, Letter)>;
double limiting_variance_custom(int c, int a, const std::vector<double>& p, const StepFunctional& g,
                                double exact_mean, long long steps, std::uint64_t seed,
                                long long min_blocks = 100);

// Upper-tail counts P(rho_c^(a)(X^{n,p}) >= threshold) for several
// thresholds at once.
std::vector<double> row_upper_tail(int c, int a, const std::vector<double>& p, long long n,
                                   const std::vector<long long>& thresholds, long long trials,
                                   std::uint64_t seed, int threads = 1);

// Centered end values (rho(n) - eta n)/sqrt(n) over independent trials.
std::vector<double> fclt_samples(int c, int a, const std::vector<double>& p, double eta_exact,
                                 long long n, long long trials, std::uint64_t seed, int threads = 1);

struct PersistenceResult {
    std::vector<long long> n_grid;
    std::vector<double> survival;   // nested-event estimates, nonincreasing
    std::vector<double> std_error;
    long long trials = 0;
    double slope = 0.0;             // least-squares log-log slope
    double prefactor = 0.0;         // survival(n_max) * sqrt(n_max)
    double predicted_prefactor = 0.0;
    double gamma_sq = 0.0;
    double eta = 0.0;
    double epsilon = 0.0;
};

// Survival probabilities of the centered row staying nonnegative,
// P(rho(k) >= eta k for k = 1..n), with eta compared exactly through the
// rational density.
PersistenceResult persistence_experiment(int c, int a, const std::vector<Rational>& p,
                                         const std::vector<long long>& n_grid, long long trials,
                                         std::uint64_t seed, int threads = 1,
                                         long long variance_steps = 10000000);

// Fixed-block work scheduler; block boundaries do not depend on the thread
// count, so blockwise reductions stay deterministic.
void parallel_blocks(long long items, int threads,
                     const std::function<void(long long, long long, long long)>& run_block);

}  // namespace boxball
