#include "boxball/ldp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace boxball {

int SingleChain::ground_index() const {
    const RectTableau u = ground_state(height, capacity);
    const auto it = std::lower_bound(carriers.begin(), carriers.end(), u);
    return static_cast<int>(it - carriers.begin());
}

std::vector<double> SingleChain::g_energy() const {
    std::vector<double> g(static_cast<std::size_t>(state_count()));
    for (int c = 0; c < carrier_count(); ++c)
        for (int x = 0; x <= kappa; ++x)
            g[static_cast<std::size_t>(state_index(c, x))] =
                energy[static_cast<std::size_t>(c * letters() + x)];
    return g;
}

SingleChain build_single_chain(int capacity, int height, int kappa, long long state_cap) {
    if (height < 1 || height > kappa) throw std::invalid_argument("carrier height out of range");
    if (capacity < 1) throw std::invalid_argument("carrier capacity out of range");
    if (count_rect_tableaux(height, capacity, kappa, state_cap) * (kappa + 1) > state_cap)
        throw std::invalid_argument("state space exceeds enumeration cap");
    SingleChain chain;
    chain.kappa = kappa;
    chain.height = height;
    chain.capacity = capacity;
    chain.carriers = enumerate_rect_tableaux(height, capacity, kappa);
    std::map<RectTableau, int> index;
    for (int i = 0; i < chain.carrier_count(); ++i) index[chain.carriers[static_cast<std::size_t>(i)]] = i;
    const int letters = kappa + 1;
    chain.dest.resize(static_cast<std::size_t>(chain.carrier_count()) * letters);
    chain.energy.resize(static_cast<std::size_t>(chain.carrier_count()) * letters);
    for (int c = 0; c < chain.carrier_count(); ++c)
        for (int x = 0; x < letters; ++x) {
            RectTableau s = chain.carriers[static_cast<std::size_t>(c)];
            chain.energy[static_cast<std::size_t>(c * letters + x)] = local_energy(s, x);
            combinatorial_R_inplace(s, x);
            chain.dest[static_cast<std::size_t>(c * letters + x)] = index.at(s);
        }
    return chain;
}

std::vector<double> JointChain::g_energy() const {
    std::vector<double> g(static_cast<std::size_t>(state_count()));
    for (int p = 0; p < pair_count(); ++p)
        for (int x = 0; x <= kappa; ++x)
            g[static_cast<std::size_t>(state_index(p, x))] =
                energy_small[static_cast<std::size_t>(p * letters() + x)];
    return g;
}

std::vector<double> JointChain::g_row() const {
    std::vector<double> g(static_cast<std::size_t>(state_count()));
    for (int p = 0; p < pair_count(); ++p)
        for (int x = 0; x <= kappa; ++x)
            g[static_cast<std::size_t>(state_index(p, x))] =
                energy_large[static_cast<std::size_t>(p * letters() + x)] -
                energy_small[static_cast<std::size_t>(p * letters() + x)];
    return g;
}

JointChain build_joint_chain(int capacity, int height, int kappa, long long state_cap) {
    if (height < 1 || height > kappa) throw std::invalid_argument("carrier height out of range");
    if (capacity < 1) throw std::invalid_argument("carrier capacity out of range");
    JointChain chain;
    chain.kappa = kappa;
    chain.height = height;
    chain.capacity = capacity;
    const int letters = kappa + 1;

    std::map<std::pair<RectTableau, RectTableau>, int> index;
    auto add = [&](std::pair<RectTableau, RectTableau> pr) {
        const auto it = index.find(pr);
        if (it != index.end()) return it->second;
        const int id = static_cast<int>(chain.pairs.size());
        if ((static_cast<long long>(id) + 1) * letters > state_cap)
            throw std::invalid_argument("joint state space exceeds enumeration cap");
        index[pr] = id;
        chain.pairs.push_back(std::move(pr));
        return id;
    };
    add({ground_state(height, capacity), ground_state(height, capacity + 1)});
    for (std::size_t head = 0; head < chain.pairs.size(); ++head) {
        for (int x = 0; x < letters; ++x) {
            auto next = chain.pairs[head];
            combinatorial_R_inplace(next.first, x);
            combinatorial_R_inplace(next.second, x);
            add(std::move(next));
        }
    }
    // tables filled once the closure is complete
    chain.dest.resize(static_cast<std::size_t>(chain.pair_count()) * letters);
    for (int p = 0; p < chain.pair_count(); ++p)
        for (int x = 0; x < letters; ++x) {
            auto next = chain.pairs[static_cast<std::size_t>(p)];
            combinatorial_R_inplace(next.first, x);
            combinatorial_R_inplace(next.second, x);
            chain.dest[static_cast<std::size_t>(p * letters + x)] = index.at(next);
        }
    chain.energy_small.resize(static_cast<std::size_t>(chain.pair_count()) * letters);
    chain.energy_large.resize(static_cast<std::size_t>(chain.pair_count()) * letters);
    for (int p = 0; p < chain.pair_count(); ++p)
        for (int x = 0; x < letters; ++x) {
            chain.energy_small[static_cast<std::size_t>(p * letters + x)] =
                local_energy(chain.pairs[static_cast<std::size_t>(p)].first, x);
            chain.energy_large[static_cast<std::size_t>(p * letters + x)] =
                local_energy(chain.pairs[static_cast<std::size_t>(p)].second, x);
        }
    return chain;
}

SparseKernel<double> tilt(const SparseKernel<double>& p, const std::vector<double>& g, double t) {
    if (static_cast<int>(g.size()) != p.n) throw std::invalid_argument("functional size mismatch");
    SparseKernel<double> out = p;
    if (t == 0.0) return out;
    std::vector<double> factor(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) factor[i] = std::exp(t * g[i]);
    for (std::size_t k = 0; k < out.val.size(); ++k)
        out.val[k] *= factor[static_cast<std::size_t>(out.col[k])];
    out.row_stochastic = false;
    return out;
}

SparseKernel<double> tilt_by_source(const SparseKernel<double>& p, const std::vector<double>& g,
                                    double t) {
    if (static_cast<int>(g.size()) != p.n) throw std::invalid_argument("functional size mismatch");
    SparseKernel<double> out = p;
    if (t == 0.0) return out;
    for (int r = 0; r < out.n; ++r) {
        const double factor = std::exp(t * g[static_cast<std::size_t>(r)]);
        for (int k = out.row_ptr[static_cast<std::size_t>(r)]; k < out.row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
            out.val[static_cast<std::size_t>(k)] *= factor;
    }
    out.row_stochastic = false;
    return out;
}

namespace {

struct CollatzBounds {
    double lo = 0.0;
    double hi = 0.0;
};

CollatzBounds collatz_bounds(const SparseKernel<double>& m, const std::vector<double>& v,
                             std::vector<double>& w) {
    w = right_multiply(m, v);
    CollatzBounds b{std::numeric_limits<double>::infinity(), 0.0};
    for (int i = 0; i < m.n; ++i) {
        const double ratio = w[static_cast<std::size_t>(i)] / v[static_cast<std::size_t>(i)];
        b.lo = std::min(b.lo, ratio);
        b.hi = std::max(b.hi, ratio);
    }
    return b;
}

// Solves (shift*I - M) z = v in place by dense LU with partial pivoting.
// Returns false when the shifted matrix is numerically singular.
bool shifted_solve(const SparseKernel<double>& m, double shift, const std::vector<double>& v,
                   std::vector<double>& z) {
    const int n = m.n;
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int r = 0; r < n; ++r) {
        a[static_cast<std::size_t>(r) * n + r] = shift;
        for (int k = m.row_ptr[static_cast<std::size_t>(r)]; k < m.row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
            a[static_cast<std::size_t>(r) * n + m.col[static_cast<std::size_t>(k)]] -=
                m.val[static_cast<std::size_t>(k)];
    }
    z = v;
    for (int c = 0; c < n; ++c) {
        int pivot = c;
        for (int r = c + 1; r < n; ++r)
            if (std::abs(a[static_cast<std::size_t>(r) * n + c]) >
                std::abs(a[static_cast<std::size_t>(pivot) * n + c]))
                pivot = r;
        if (a[static_cast<std::size_t>(pivot) * n + c] == 0.0) return false;
        if (pivot != c) {
            for (int j = c; j < n; ++j)
                std::swap(a[static_cast<std::size_t>(pivot) * n + j], a[static_cast<std::size_t>(c) * n + j]);
            std::swap(z[static_cast<std::size_t>(pivot)], z[static_cast<std::size_t>(c)]);
        }
        const double inv = 1.0 / a[static_cast<std::size_t>(c) * n + c];
        for (int r = c + 1; r < n; ++r) {
            const double f = a[static_cast<std::size_t>(r) * n + c] * inv;
            if (f == 0.0) continue;
            for (int j = c + 1; j < n; ++j)
                a[static_cast<std::size_t>(r) * n + j] -= f * a[static_cast<std::size_t>(c) * n + j];
            z[static_cast<std::size_t>(r)] -= f * z[static_cast<std::size_t>(c)];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        double acc = z[static_cast<std::size_t>(r)];
        for (int j = r + 1; j < n; ++j) acc -= a[static_cast<std::size_t>(r) * n + j] * z[static_cast<std::size_t>(j)];
        z[static_cast<std::size_t>(r)] = acc / a[static_cast<std::size_t>(r) * n + r];
    }
    return true;
}

}  // namespace

PerronResult perron_root(const SparseKernel<double>& m_in, double rel_tol, int max_iter) {
    if (m_in.n == 0) throw std::invalid_argument("empty matrix");
    // scale to unit max entry so the shifted solves stay in range
    double max_val = 0.0;
    for (double x : m_in.val) max_val = std::max(max_val, x);
    if (max_val <= 0.0) return {0.0, 0, 0.0};
    SparseKernel<double> m = m_in;
    for (double& x : m.val) x /= max_val;
    std::vector<double> v(static_cast<std::size_t>(m.n), 1.0 / m.n);
    std::vector<double> w;
    PerronResult res;
    // plain power iteration first; clustered Perron spectra (uniform
    // densities at extreme tilts) stall it, so cap the burn-in
    const int power_cap = m.n <= 2048 ? 3000 : max_iter;
    for (int iter = 1; iter <= power_cap; ++iter) {
        const CollatzBounds b = collatz_bounds(m, v, w);
        res.iterations = iter;
        res.bound_width = (b.hi - b.lo) * max_val;
        res.root = 0.5 * (b.lo + b.hi) * max_val;
        if (b.hi - b.lo <= rel_tol * b.hi) return res;
        double norm = 0.0;
        for (double x : w) norm += x;
        for (double& x : w) x /= norm;
        v = std::move(w);
    }
    if (m.n > 2048)
        throw std::runtime_error("perron_root: power iteration did not converge (gap " +
                                 std::to_string(res.bound_width) + " after " +
                                 std::to_string(max_iter) + " iterations)");
    // Certified bisection on the Collatz-Wielandt bracket. For irreducible
    // nonnegative M, (s I - M)^{-1} v > 0 for positive v exactly when
    // s > lambda_1 (pair the solution with the left Perron vector), so each
    // shifted solve classifies the midpoint; a positive solve also supplies
    // a refined eigenvector estimate that retightens the bracket.
    {
        CollatzBounds b = collatz_bounds(m, v, w);
        double lo = b.lo, hi = b.hi;
        for (int iter = 1; iter <= 200; ++iter) {
            ++res.iterations;
            res.bound_width = (hi - lo) * max_val;
            res.root = 0.5 * (lo + hi) * max_val;
            if (hi - lo <= rel_tol * hi) return res;
            const double mid = 0.5 * (lo + hi);
            std::vector<double> z;
            bool above_root = false;
            if (shifted_solve(m, mid, v, z)) {
                above_root = true;
                for (double x : z)
                    if (!(x > 0.0)) {
                        above_root = false;
                        break;
                    }
            }
            if (above_root) {
                hi = mid;
                double norm = 0.0;
                for (double x : z) norm += x;
                for (double& x : z) x /= norm;
                v = std::move(z);
                b = collatz_bounds(m, v, w);
                lo = std::max(lo, b.lo);
                hi = std::min(hi, b.hi);
            } else {
                lo = mid;
            }
        }
        res.bound_width = (hi - lo) * max_val;
        res.root = 0.5 * (lo + hi) * max_val;
        // bisection floors out around cond(LU) * eps; accept anything that
        // still certifies ten digits
        if (hi - lo <= std::max(rel_tol, 1e-10) * hi) return res;
    }
    throw std::runtime_error("perron_root: iteration did not converge (gap " +
                             std::to_string(res.bound_width) + " after " +
                             std::to_string(res.iterations) + " iterations)");
}

LdpAnalyzer::LdpAnalyzer(SparseKernel<double> kernel, std::vector<double> g)
    : base_(std::move(kernel)), g_(std::move(g)) {
    if (static_cast<int>(g_.size()) != base_.n) throw std::invalid_argument("functional size mismatch");
}

double LdpAnalyzer::Lambda(double t) const { return std::log(perron_root(tilt(base_, g_, t)).root); }

double LdpAnalyzer::Lambda_prime_at_zero(double h) const {
    return (Lambda(h) - Lambda(-h)) / (2.0 * h);
}

LegendreValue LdpAnalyzer::legendre(double u) const {
    const auto f = [&](double t) { return u * t - Lambda(t); };
    constexpr double kCap = 64.0;
    double lo = -1.0, mid = 0.0, hi = 1.0;
    double f_lo = f(lo), f_mid = f(mid), f_hi = f(hi);
    while (f_hi >= f_mid) {
        lo = mid;
        f_lo = f_mid;
        mid = hi;
        f_mid = f_hi;
        hi = 2.0 * hi + 1.0;
        if (hi > kCap) return {f_mid, mid, false};
        f_hi = f(hi);
    }
    while (f_lo >= f_mid) {
        hi = mid;
        f_hi = f_mid;
        mid = lo;
        f_mid = f_lo;
        lo = 2.0 * lo - 1.0;
        if (lo < -kCap) return {f_mid, mid, false};
        f_lo = f(lo);
    }
    // golden-section search on the bracketed concave maximum
    constexpr double kInvPhi = 0.6180339887498949;
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a);
    double d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > 1e-10 * std::max(1.0, std::abs(a) + std::abs(b))) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    const double t_star = 0.5 * (a + b);
    return {f(t_star), t_star, true};
}

}  // namespace boxball
