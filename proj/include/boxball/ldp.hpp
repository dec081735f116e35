#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "boxball/tableau.hpp"

namespace boxball {

// Compressed sparse rows; every chain kernel here has exactly kappa+1
// entries per row.
template <typename T>
struct SparseKernel {
    int n = 0;
    std::vector<int> row_ptr;
    std::vector<int> col;
    std::vector<T> val;
    bool row_stochastic = false;
};

template <typename T>
std::vector<T> left_multiply(const std::vector<T>& v, const SparseKernel<T>& m) {
    std::vector<T> out(static_cast<std::size_t>(m.n), T(0));
    for (int r = 0; r < m.n; ++r)
        for (int k = m.row_ptr[static_cast<std::size_t>(r)]; k < m.row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
            out[static_cast<std::size_t>(m.col[static_cast<std::size_t>(k)])] +=
                v[static_cast<std::size_t>(r)] * m.val[static_cast<std::size_t>(k)];
    return out;
}

template <typename T>
std::vector<T> right_multiply(const SparseKernel<T>& m, const std::vector<T>& v) {
    std::vector<T> out(static_cast<std::size_t>(m.n), T(0));
    for (int r = 0; r < m.n; ++r) {
        T acc = T(0);
        for (int k = m.row_ptr[static_cast<std::size_t>(r)]; k < m.row_ptr[static_cast<std::size_t>(r) + 1]; ++k)
            acc += m.val[static_cast<std::size_t>(k)] * v[static_cast<std::size_t>(m.col[static_cast<std::size_t>(k)])];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

// Carrier-plus-letter chain: states (C, x) indexed carrier*(kappa+1)+x,
// with the deterministic carrier transition C' = R_2(C, x) precomputed.
struct SingleChain {
    int kappa = 0;
    int height = 0;
    int capacity = 0;
    std::vector<RectTableau> carriers;  // lexicographic order
    std::vector<int> dest;              // [carrier*(kappa+1)+x] -> carrier index
    std::vector<int> energy;            // H(C, x) per (carrier, letter)

    int letters() const { return kappa + 1; }
    int carrier_count() const { return static_cast<int>(carriers.size()); }
    int state_count() const { return carrier_count() * letters(); }
    int state_index(int carrier, Letter x) const { return carrier * letters() + x; }
    int ground_index() const;  // index of U_c^(a) among carriers

    std::vector<double> g_energy() const;  // g_E(C,x) = H(C,x)
};

SingleChain build_single_chain(int capacity, int height, int kappa, long long state_cap = 200000);

// Coupled carriers of capacities c and c+1 on the jointly reachable set
// Omega_0 (breadth-first closure of the ground pair).
struct JointChain {
    int kappa = 0;
    int height = 0;
    int capacity = 0;  // the smaller carrier; the partner has capacity+1
    std::vector<std::pair<RectTableau, RectTableau>> pairs;  // BFS order, ground first
    std::vector<int> dest;    // [pair*(kappa+1)+x] -> pair index
    std::vector<int> energy_small;
    std::vector<int> energy_large;

    int letters() const { return kappa + 1; }
    int pair_count() const { return static_cast<int>(pairs.size()); }
    int state_count() const { return pair_count() * letters(); }
    int state_index(int pair, Letter x) const { return pair * letters() + x; }

    std::vector<double> g_energy() const;  // H(C_1, x)
    std::vector<double> g_row() const;     // H(C_2, x) - H(C_1, x)
};

JointChain build_joint_chain(int capacity, int height, int kappa, long long state_cap = 200000);

// P((C,x),(C',x')) = 1(C' = R_2(C,x)) p(x') as CSR over the chain's states.
template <typename T>
SparseKernel<T> transition_kernel(const std::vector<int>& dest, int carrier_count, int letters,
                                  const std::vector<T>& p) {
    if (static_cast<int>(p.size()) != letters) throw std::invalid_argument("density size mismatch");
    SparseKernel<T> m;
    m.n = carrier_count * letters;
    m.row_ptr.resize(static_cast<std::size_t>(m.n) + 1);
    m.col.resize(static_cast<std::size_t>(m.n) * letters);
    m.val.resize(static_cast<std::size_t>(m.n) * letters);
    std::size_t k = 0;
    for (int s = 0; s < m.n; ++s) {
        m.row_ptr[static_cast<std::size_t>(s)] = static_cast<int>(k);
        const int target = dest[static_cast<std::size_t>(s)];
        for (int x = 0; x < letters; ++x, ++k) {
            m.col[k] = target * letters + x;
            m.val[k] = p[static_cast<std::size_t>(x)];
        }
    }
    m.row_ptr[static_cast<std::size_t>(m.n)] = static_cast<int>(k);
    m.row_stochastic = true;
    return m;
}

template <typename T>
SparseKernel<T> single_kernel(const SingleChain& chain, const std::vector<T>& p) {
    return transition_kernel(chain.dest, chain.carrier_count(), chain.letters(), p);
}

template <typename T>
SparseKernel<T> joint_kernel(const JointChain& chain, const std::vector<T>& p) {
    return transition_kernel(chain.dest, chain.pair_count(), chain.letters(), p);
}

// Exponentially weighted kernel P_tg(x,y) = P(x,y) e^{t g(y)}.
SparseKernel<double> tilt(const SparseKernel<double>& p, const std::vector<double>& g, double t);
// Companion with the weight on the departing state; similar to the above,
// so the spectrum and Lambda agree.
SparseKernel<double> tilt_by_source(const SparseKernel<double>& p, const std::vector<double>& g,
                                    double t);

struct PerronResult {
    double root = 0.0;
    int iterations = 0;
    double bound_width = 0.0;  // final Collatz-Wielandt gap
};

// Spectral radius of a nonnegative irreducible aperiodic matrix by power
// iteration with Collatz-Wielandt stopping.
PerronResult perron_root(const SparseKernel<double>& m, double rel_tol = 1e-13,
                         int max_iter = 2000000);

struct LegendreValue {
    double value = 0.0;
    double t_star = 0.0;
    bool converged = false;  // false: bracket cap hit, value is a lower bound
};

// Lambda(t) = log lambda_P(tg) and its Legendre transform.
class LdpAnalyzer {
public:
    LdpAnalyzer(SparseKernel<double> kernel, std::vector<double> g);

    double Lambda(double t) const;
    double Lambda_prime_at_zero(double h = 1e-5) const;
    // sup_t [ut - Lambda(t)] by bracketed golden-section maximization.
    LegendreValue legendre(double u) const;

    const SparseKernel<double>& kernel() const { return base_; }
    const std::vector<double>& g() const { return g_; }

private:
    SparseKernel<double> base_;
    std::vector<double> g_;
};

}  // namespace boxball
