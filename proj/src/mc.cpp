#include "boxball/mc.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "boxball/carrier.hpp"
#include "boxball/highest.hpp"
#include "boxball/schur.hpp"

namespace boxball {

namespace {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t s = master ^ (0x94d049bb133111ebULL + index * 0x9e3779b97f4a7c15ULL);
    return splitmix64(s);
}

double now_seconds() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

struct MeanSE {
    double mean = 0.0;
    double se = 0.0;
};

MeanSE mean_se(const std::vector<double>& v) {
    KahanSum s;
    for (double x : v) s.add(x);
    const double mean = s.value() / static_cast<double>(v.size());
    KahanSum q;
    for (double x : v) q.add((x - mean) * (x - mean));
    const double var = v.size() > 1 ? q.value() / static_cast<double>(v.size() - 1) : 0.0;
    return {mean, std::sqrt(var / static_cast<double>(v.size()))};
}

}  // namespace

bool ExperimentReport::all_pass() const {
    for (const auto& line : lines)
        if (!line.pass) return false;
    return true;
}

Configuration sample_config(long long n, const std::vector<double>& p, std::uint64_t seed) {
    validate_density(p);
    const int kappa = static_cast<int>(p.size()) - 1;
    const LetterSampler sampler(p);
    Xoshiro256pp rng = stream_for(seed, 0);
    std::vector<Letter> cells(static_cast<std::size_t>(n));
    for (auto& cell : cells) cell = sampler.draw(rng);
    return Configuration(std::move(cells), kappa);
}

RowTracker::RowTracker(int c, int a, int kappa) : c_(c), row_mode_(a == 1) {
    if (c < 1) throw std::invalid_argument("row index out of range");
    if (a < 1 || a > kappa) throw std::invalid_argument("diagram index out of range");
    if (row_mode_) {
        if (c > 1) row_carriers_.emplace_back(c - 1, kappa);
        row_carriers_.emplace_back(c, kappa);
    } else {
        if (c > 1) {
            dense_.push_back(ground_state(a, c - 1));
            dense_ground_.push_back(ground_state(a, c - 1));
        }
        dense_.push_back(ground_state(a, c));
        dense_ground_.push_back(ground_state(a, c));
    }
}

int RowTracker::step(Letter x) {
    int h_small = 0;
    int h_large = 0;
    if (row_mode_) {
        if (row_carriers_.size() == 2) {
            h_small = row_carriers_[0].energy(x);
            row_carriers_[0].step(x);
        }
        h_large = row_carriers_.back().energy(x);
        row_carriers_.back().step(x);
    } else {
        if (dense_.size() == 2) {
            h_small = local_energy(dense_[0], x);
            combinatorial_R_inplace(dense_[0], x);
        }
        h_large = local_energy(dense_.back(), x);
        combinatorial_R_inplace(dense_.back(), x);
    }
    const int inc = (c_ == 1) ? h_large : h_large - h_small;
    value_ += inc;
    return inc;
}

bool RowTracker::at_ground() const {
    if (row_mode_) {
        for (const auto& rc : row_carriers_)
            if (!rc.is_ground()) return false;
        return true;
    }
    for (std::size_t i = 0; i < dense_.size(); ++i)
        if (!(dense_[i] == dense_ground_[i])) return false;
    return true;
}

void parallel_blocks(long long items, int threads,
                     const std::function<void(long long, long long, long long)>& run_block) {
    if (items <= 0) return;
    threads = std::max(1, threads);
    const long long block_size = std::max<long long>(1, (items + 255) / 256);
    const long long blocks = (items + block_size - 1) / block_size;
    if (threads == 1) {
        for (long long b = 0; b < blocks; ++b)
            run_block(b * block_size, std::min(items, (b + 1) * block_size), b);
        return;
    }
    std::atomic<long long> next{0};
    auto worker = [&]() {
        for (;;) {
            const long long b = next.fetch_add(1);
            if (b >= blocks) return;
            run_block(b * block_size, std::min(items, (b + 1) * block_size), b);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

namespace {

ExperimentReport make_row_report(const std::string& name, const std::vector<double>& values,
                                 double target, double tolerance, std::uint64_t seed,
                                 double t0) {
    ExperimentReport report;
    report.estimator = name;
    report.seed = seed;
    const MeanSE stat = mean_se(values);
    ReportLine line;
    line.name = name;
    line.estimate = stat.mean;
    line.std_error = stat.se;
    line.target = target;
    line.samples = static_cast<long long>(values.size());
    line.tolerance = tolerance > 0.0 ? tolerance : 3.0 * stat.se;
    line.pass = std::abs(stat.mean - target) <= line.tolerance;
    report.lines.push_back(line);
    report.wall_seconds = now_seconds() - t0;
    return report;
}

}  // namespace

ExperimentReport estimate_rows(long long n, const std::vector<double>& p, int a, long long i,
                               long long trials, std::uint64_t seed, int threads, bool conditioned,
                               double tolerance) {
    validate_density(p);
    const double t0 = now_seconds();
    const int kappa = static_cast<int>(p.size()) - 1;
    const double target = eta(i, a, p);
    std::vector<double> values(static_cast<std::size_t>(trials));
    const LetterSampler sampler(p);
    parallel_blocks(trials, threads, [&](long long lo, long long hi, long long) {
        for (long long t = lo; t < hi; ++t) {
            RowTracker tracker(static_cast<int>(i), a, kappa);
            if (conditioned) {
                const HighestSample hs = sample_highest(n, p, derive_seed(seed, static_cast<std::uint64_t>(t)));
                for (long long k = 1; k <= n; ++k)
                    tracker.step(hs.config.at(static_cast<std::size_t>(k)));
            } else {
                Xoshiro256pp rng = stream_for(seed, static_cast<std::uint64_t>(t));
                for (long long k = 0; k < n; ++k) tracker.step(sampler.draw(rng));
            }
            values[static_cast<std::size_t>(t)] = static_cast<double>(tracker.value()) / static_cast<double>(n);
        }
    });
    const std::string name = std::string(conditioned ? "conditioned " : "") + "rho_" +
                             std::to_string(i) + "^(" + std::to_string(a) + ")/n";
    return make_row_report(name, values, target, tolerance, seed, t0);
}

ExperimentReport estimate_energy(long long n, const std::vector<double>& p, int a, long long c,
                                 long long trials, std::uint64_t seed, int threads, double tolerance) {
    validate_density(p);
    const double t0 = now_seconds();
    const int kappa = static_cast<int>(p.size()) - 1;
    const double target = epsilon(c, a, p);
    std::vector<double> values(static_cast<std::size_t>(trials));
    const LetterSampler sampler(p);
    parallel_blocks(trials, threads, [&](long long lo, long long hi, long long) {
        for (long long t = lo; t < hi; ++t) {
            Xoshiro256pp rng = stream_for(seed, static_cast<std::uint64_t>(t));
            long long e = 0;
            if (a == 1) {
                RowCarrier carrier(static_cast<int>(c), kappa);
                for (long long k = 0; k < n; ++k) {
                    const Letter x = sampler.draw(rng);
                    e += carrier.energy(x);
                    carrier.step(x);
                }
            } else {
                RectTableau carrier = ground_state(a, static_cast<int>(c));
                for (long long k = 0; k < n; ++k) {
                    const Letter x = sampler.draw(rng);
                    e += local_energy(carrier, x);
                    combinatorial_R_inplace(carrier, x);
                }
            }
            values[static_cast<std::size_t>(t)] = static_cast<double>(e) / static_cast<double>(n);
        }
    });
    const std::string name = "E_" + std::to_string(c) + "^(" + std::to_string(a) + ")/n";
    return make_row_report(name, values, target, tolerance, seed, t0);
}

std::vector<ShapePoint> shape_curve(const std::vector<double>& p, int a, long long i_max) {
    validate_density(p);
    std::vector<ShapePoint> out;
    out.reserve(static_cast<std::size_t>(i_max));
    for (long long i = 1; i <= i_max; ++i) out.push_back({i, eta(i, a, p)});
    return out;
}

std::vector<ShapePoint> empirical_shape(long long n, const std::vector<double>& p, int a,
                                        long long i_max, std::uint64_t seed) {
    const Configuration x = sample_config(n, p, seed);
    const std::vector<long long> e = energies_up_to(x, a, static_cast<int>(i_max));
    std::vector<ShapePoint> out;
    out.reserve(static_cast<std::size_t>(i_max));
    long long prev = 0;
    for (long long i = 1; i <= i_max; ++i) {
        const long long rho = e[static_cast<std::size_t>(i) - 1] - prev;
        prev = e[static_cast<std::size_t>(i) - 1];
        out.push_back({i, static_cast<double>(rho) / static_cast<double>(n)});
    }
    return out;
}

namespace {

struct JointSim {
    bool row_mode;
    std::vector<RowCarrier> rows;
    std::vector<RectTableau> dense;
    std::vector<RectTableau> dense_ground;

    JointSim(int c, int a, int kappa) : row_mode(a == 1) {
        if (row_mode) {
            rows.emplace_back(c, kappa);
            rows.emplace_back(c + 1, kappa);
        } else {
            dense.push_back(ground_state(a, c));
            dense.push_back(ground_state(a, c + 1));
            dense_ground = dense;
        }
    }

    // returns (H_small, H_large) and advances both carriers
    std::pair<int, int> step(Letter x) {
        if (row_mode) {
            const int hs = rows[0].energy(x);
            const int hl = rows[1].energy(x);
            rows[0].step(x);
            rows[1].step(x);
            return {hs, hl};
        }
        const int hs = local_energy(dense[0], x);
        const int hl = local_energy(dense[1], x);
        combinatorial_R_inplace(dense[0], x);
        combinatorial_R_inplace(dense[1], x);
        return {hs, hl};
    }

    bool at_ground() const {
        if (row_mode) return rows[0].is_ground() && rows[1].is_ground();
        return dense[0] == dense_ground[0] && dense[1] == dense_ground[1];
    }
};

double regenerative_variance(int c, int a, const std::vector<double>& p, const StepFunctional& g,
                             double exact_mean, long long steps, std::uint64_t seed,
                             long long min_blocks) {
    validate_density(p);
    const int kappa = static_cast<int>(p.size()) - 1;
    const LetterSampler sampler(p);
    Xoshiro256pp rng = stream_for(seed, 0);
    JointSim sim(c, a, kappa);
    KahanSum numer;
    long long total_len = 0;
    long long blocks = 0;
    double block_sum = 0.0;
    long long block_len = 0;
    for (long long k = 0; k < steps; ++k) {
        const Letter x = sampler.draw(rng);
        const auto [hs, hl] = sim.step(x);
        block_sum += g(hs, hl, x);
        ++block_len;
        if (sim.at_ground()) {
            const double centered = block_sum - exact_mean * static_cast<double>(block_len);
            numer.add(centered * centered);
            total_len += block_len;
            ++blocks;
            block_sum = 0.0;
            block_len = 0;
        }
    }
    if (blocks < min_blocks)
        throw std::runtime_error("regenerative estimator saw only " + std::to_string(blocks) +
                                 " blocks; increase steps");
    return numer.value() / static_cast<double>(total_len);
}

double exact_mean_for(int c, int a, const std::vector<double>& p, RowFunctional kind) {
    return kind == RowFunctional::energy ? epsilon<double>(c, a, p) : eta<double>(c + 1, a, p);
}

StepFunctional functional_for(RowFunctional kind) {
    if (kind == RowFunctional::energy)
        return [](int hs, int, Letter) { return static_cast<double>(hs); };
    return [](int hs, int hl, Letter) { return static_cast<double>(hl - hs); };
}

}  // namespace

double limiting_variance(int c, int a, const std::vector<double>& p, RowFunctional kind,
                         long long steps, std::uint64_t seed, long long min_blocks) {
    return regenerative_variance(c, a, p, functional_for(kind), exact_mean_for(c, a, p, kind), steps,
                                 seed, min_blocks);
}

double limiting_variance_custom(int c, int a, const std::vector<double>& p, const StepFunctional& g,
                                double exact_mean, long long steps, std::uint64_t seed,
                                long long min_blocks) {
    return regenerative_variance(c, a, p, g, exact_mean, steps, seed, min_blocks);
}

double limiting_variance_batch_means(int c, int a, const std::vector<double>& p, RowFunctional kind,
                                     long long steps, std::uint64_t seed, long long batches) {
    validate_density(p);
    const int kappa = static_cast<int>(p.size()) - 1;
    const StepFunctional g = functional_for(kind);
    const LetterSampler sampler(p);
    Xoshiro256pp rng = stream_for(seed, 0);
    JointSim sim(c, a, kappa);
    const long long m = steps / batches;
    std::vector<double> means(static_cast<std::size_t>(batches));
    for (long long b = 0; b < batches; ++b) {
        KahanSum s;
        for (long long k = 0; k < m; ++k) {
            const Letter x = sampler.draw(rng);
            const auto [hs, hl] = sim.step(x);
            s.add(g(hs, hl, x));
        }
        means[static_cast<std::size_t>(b)] = s.value() / static_cast<double>(m);
    }
    const MeanSE stat = mean_se(means);
    KahanSum q;
    for (double x : means) q.add((x - stat.mean) * (x - stat.mean));
    const double var_means = q.value() / static_cast<double>(batches - 1);
    return static_cast<double>(m) * var_means;
}

std::vector<double> row_upper_tail(int c, int a, const std::vector<double>& p, long long n,
                                   const std::vector<long long>& thresholds, long long trials,
                                   std::uint64_t seed, int threads) {
    validate_density(p);
    const int kappa = static_cast<int>(p.size()) - 1;
    const LetterSampler sampler(p);
    std::vector<std::vector<long long>> block_counts(256, std::vector<long long>(thresholds.size(), 0));
    parallel_blocks(trials, threads, [&](long long lo, long long hi, long long block) {
        auto& counts = block_counts[static_cast<std::size_t>(block)];
        for (long long t = lo; t < hi; ++t) {
            Xoshiro256pp rng = stream_for(seed, static_cast<std::uint64_t>(t));
            RowTracker tracker(c, a, kappa);
            for (long long k = 0; k < n; ++k) tracker.step(sampler.draw(rng));
            for (std::size_t j = 0; j < thresholds.size(); ++j)
                counts[j] += tracker.value() >= thresholds[j];
        }
    });
    std::vector<double> out(thresholds.size());
    for (std::size_t j = 0; j < thresholds.size(); ++j) {
        long long total = 0;
        for (const auto& counts : block_counts) total += counts[j];
        out[j] = static_cast<double>(total) / static_cast<double>(trials);
    }
    return out;
}

std::vector<double> fclt_samples(int c, int a, const std::vector<double>& p, double eta_exact,
                                 long long n, long long trials, std::uint64_t seed, int threads) {
    validate_density(p);
    const int kappa = static_cast<int>(p.size()) - 1;
    const LetterSampler sampler(p);
    std::vector<double> out(static_cast<std::size_t>(trials));
    parallel_blocks(trials, threads, [&](long long lo, long long hi, long long) {
        for (long long t = lo; t < hi; ++t) {
            Xoshiro256pp rng = stream_for(seed, static_cast<std::uint64_t>(t));
            RowTracker tracker(c, a, kappa);
            for (long long k = 0; k < n; ++k) tracker.step(sampler.draw(rng));
            out[static_cast<std::size_t>(t)] =
                (static_cast<double>(tracker.value()) - eta_exact * static_cast<double>(n)) /
                std::sqrt(static_cast<double>(n));
        }
    });
    return out;
}

PersistenceResult persistence_experiment(int c, int a, const std::vector<Rational>& p,
                                         const std::vector<long long>& n_grid, long long trials,
                                         std::uint64_t seed, int threads, long long variance_steps) {
    if (n_grid.empty()) throw std::invalid_argument("empty n grid");
    validate_density(p);
    const int kappa = static_cast<int>(p.size()) - 1;
    const Rational eta_exact = eta(c, a, p);
    const auto num_big = boost::multiprecision::numerator(eta_exact);
    const auto den_big = boost::multiprecision::denominator(eta_exact);
    if (num_big > 1000000000000LL || den_big > 1000000000000LL)
        throw std::invalid_argument("eta denominator too large for exact comparison");
    const long long eta_num = num_big.convert_to<long long>();
    const long long eta_den = den_big.convert_to<long long>();

    std::vector<double> pd(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) pd[i] = p[i].convert_to<double>();
    // renormalize the double image so the sampler accepts it
    double sum = 0.0;
    for (double x : pd) sum += x;
    for (double& x : pd) x /= sum;

    const long long n_max = *std::max_element(n_grid.begin(), n_grid.end());
    const LetterSampler sampler(pd);

    std::vector<std::vector<long long>> block_alive(256, std::vector<long long>(n_grid.size(), 0));
    parallel_blocks(trials, threads, [&](long long lo, long long hi, long long block) {
        auto& alive = block_alive[static_cast<std::size_t>(block)];
        for (long long t = lo; t < hi; ++t) {
            Xoshiro256pp rng = stream_for(seed, static_cast<std::uint64_t>(t));
            RowTracker tracker(c, a, kappa);
            long long death = n_max + 1;
            for (long long k = 1; k <= n_max; ++k) {
                tracker.step(sampler.draw(rng));
                // rho(k) >= eta k, compared exactly
                const __int128 lhs = static_cast<__int128>(tracker.value()) * eta_den;
                const __int128 rhs = static_cast<__int128>(eta_num) * k;
                if (lhs < rhs) {
                    death = k;
                    break;
                }
            }
            for (std::size_t j = 0; j < n_grid.size(); ++j) alive[j] += death > n_grid[j];
        }
    });

    PersistenceResult res;
    res.n_grid = n_grid;
    res.trials = trials;
    res.eta = static_cast<double>(eta_num) / static_cast<double>(eta_den);
    for (std::size_t j = 0; j < n_grid.size(); ++j) {
        long long total = 0;
        for (const auto& alive : block_alive) total += alive[j];
        if (total == 0)
            throw std::runtime_error("no surviving trials at n=" + std::to_string(n_grid[j]) +
                                     "; enlarge trials");
        const double prob = static_cast<double>(total) / static_cast<double>(trials);
        res.survival.push_back(prob);
        res.std_error.push_back(std::sqrt(prob * (1.0 - prob) / static_cast<double>(trials)));
    }
    // least-squares slope of log survival against log n
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    const auto pts = static_cast<double>(n_grid.size());
    for (std::size_t j = 0; j < n_grid.size(); ++j) {
        const double lx = std::log(static_cast<double>(n_grid[j]));
        const double ly = std::log(res.survival[j]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    res.slope = (pts * sxy - sx * sy) / (pts * sxx - sx * sx);

    res.gamma_sq = (c == 1) ? limiting_variance(1, a, pd, RowFunctional::energy, variance_steps,
                                                derive_seed(seed, 0xabcdefULL))
                            : limiting_variance(c - 1, a, pd, RowFunctional::row, variance_steps,
                                                derive_seed(seed, 0xabcdefULL));
    res.epsilon = epsilon<double>(c, a, pd);
    const std::size_t max_idx = static_cast<std::size_t>(
        std::max_element(n_grid.begin(), n_grid.end()) - n_grid.begin());
    res.prefactor = res.survival[max_idx] * std::sqrt(static_cast<double>(n_max));
    res.predicted_prefactor =
        std::sqrt(res.gamma_sq) / ((1.0 - res.epsilon) * std::sqrt(2.0 * 3.14159265358979323846));
    return res;
}

}  // namespace boxball
