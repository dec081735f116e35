#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "boxball/tableau.hpp"

namespace boxball {

using Rational = boost::multiprecision::cpp_rational;

// Nonincreasing row lengths; trailing zeros allowed.
using Partition = std::vector<long long>;

inline Partition rect_partition(long long width, int height) {
    return Partition(static_cast<std::size_t>(height), width);
}

// (c^a, 1): c repeated a times followed by a single box.
inline Partition rect_plus_box(long long width, int height) {
    Partition p(static_cast<std::size_t>(height), width);
    p.push_back(1);
    return p;
}

namespace detail {

template <typename T>
T det_in_place(std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    T det = T(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        if constexpr (std::is_floating_point_v<T>) {
            for (std::size_t i = k + 1; i < n; ++i)
                if (std::abs(m[i][k]) > std::abs(m[pivot][k])) pivot = i;
        } else {
            while (pivot < n && m[pivot][k] == T(0)) ++pivot;
            if (pivot == n) return T(0);
        }
        if (m[pivot][k] == T(0)) return T(0);
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == T(0)) continue;
            const T f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

template <typename T>
T ipow(T base, long long e) {
    T r = T(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline std::size_t partition_length(const Partition& lambda) {
    std::size_t len = lambda.size();
    while (len > 0 && lambda[len - 1] == 0) --len;
    return len;
}

}  // namespace detail

// Bialternant form: det(w_i^{lambda_j + r - j}) / det(w_i^{r - j}) over the
// r supplied variables. Rejects repeated variables (zero Vandermonde).
template <typename T>
T schur_bialternant(const Partition& lambda, const std::vector<T>& w) {
    const std::size_t r = w.size();
    const std::size_t len = detail::partition_length(lambda);
    if (len > r) return T(0);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            if (w[i] == w[j]) throw std::invalid_argument("bialternant form requires distinct variables");
    std::vector<std::vector<T>> num(r, std::vector<T>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const long long part = j < lambda.size() ? lambda[j] : 0;
            num[i][j] = detail::ipow(w[i], part + static_cast<long long>(r - 1 - j));
        }
    T den = T(1);
    for (std::size_t j = 0; j < r; ++j)
        for (std::size_t i = 0; i < j; ++i) den *= (w[i] - w[j]);
    return detail::det_in_place(num) / den;
}

// Complete homogeneous sums h_0..h_max of the supplied variables.
template <typename T>
std::vector<T> complete_homogeneous(const std::vector<T>& w, long long max_degree) {
    std::vector<T> h(static_cast<std::size_t>(max_degree) + 1, T(0));
    h[0] = T(1);
    for (const T& v : w)
        for (long long k = 1; k <= max_degree; ++k)
            h[static_cast<std::size_t>(k)] += v * h[static_cast<std::size_t>(k) - 1];
    return h;
}

// Jacobi-Trudi determinant det(h_{lambda_i - i + j}); stable at repeated
// variables, used as the default evaluator.
template <typename T>
T schur_jacobi_trudi(const Partition& lambda, const std::vector<T>& w) {
    const std::size_t len = detail::partition_length(lambda);
    if (len > w.size()) return T(0);
    if (len == 0) return T(1);
    const long long max_degree = lambda[0] + static_cast<long long>(len);
    const std::vector<T> h = complete_homogeneous(w, max_degree);
    std::vector<std::vector<T>> m(len, std::vector<T>(len));
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = 0; j < len; ++j) {
            const long long deg = lambda[i] - static_cast<long long>(i) + static_cast<long long>(j);
            m[i][j] = (deg < 0) ? T(0) : h[static_cast<std::size_t>(deg)];
        }
    return detail::det_in_place(m);
}

template <typename T>
T schur(const Partition& lambda, const std::vector<T>& w) {
    return schur_jacobi_trudi(lambda, w);
}

// Double entry point. The determinant cancels catastrophically in plain
// doubles (relative errors past 1e-7 already at lambda_1 ~ 10), so the
// evaluation runs over exact rationals -- a double is an exact binary
// fraction -- and rounds once at the end.
inline double schur(const Partition& lambda, const std::vector<double>& w) {
    std::vector<Rational> rw;
    rw.reserve(w.size());
    for (double x : w) rw.emplace_back(x);
    return schur_jacobi_trudi(lambda, rw).convert_to<double>();
}

// Z_c^(a) = s_{(c^a)}(p_0..p_kappa).
template <typename T>
T partition_Z(long long c, int a, const std::vector<T>& p) {
    return schur(rect_partition(c, a), p);
}

template <typename T>
bool is_weakly_decreasing(const std::vector<T>& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] > p[i - 1]) return false;
    return true;
}

template <typename T>
bool is_strictly_decreasing(const std::vector<T>& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] >= p[i - 1]) return false;
    return true;
}

template <typename T>
void validate_density(const std::vector<T>& p) {
    if (p.size() < 2) throw std::invalid_argument("density needs kappa >= 1");
    T sum = T(0);
    for (const T& x : p) {
        if (x <= T(0)) throw std::invalid_argument("density entries must be positive");
        sum += x;
    }
    if constexpr (std::is_floating_point_v<T>) {
        if (std::abs(sum - T(1)) > 1e-12) throw std::invalid_argument("density must sum to 1");
    } else {
        if (sum != T(1)) throw std::invalid_argument("density must sum to 1");
    }
}

// Stationary product measure on B_c^(a): pi(C) proportional to
// prod_i p_i^{m_i(C)}, normalized by the enumerated sum (which equals the
// Schur polynomial Z_c^(a)).
template <typename T>
struct StationaryTable {
    int kappa = 0;
    int height = 0;
    int width = 0;
    std::vector<RectTableau> states;
    std::vector<T> pi;
    T partition = T(0);
};

template <typename T>
StationaryTable<T> stationary_pi(long long c, int a, const std::vector<T>& p,
                                 long long state_cap = 200000) {
    validate_density(p);
    const int kappa = static_cast<int>(p.size()) - 1;
    if (a < 1 || a > kappa) throw std::invalid_argument("carrier height out of range");
    if (count_rect_tableaux(a, static_cast<int>(c), kappa, state_cap) > state_cap)
        throw std::invalid_argument("state space exceeds enumeration cap");
    StationaryTable<T> table;
    table.kappa = kappa;
    table.height = a;
    table.width = static_cast<int>(c);
    table.states = enumerate_rect_tableaux(a, static_cast<int>(c), kappa);
    table.pi.reserve(table.states.size());
    T z = T(0);
    for (const auto& state : table.states) {
        T weight = T(1);
        for (Letter x : state.entries()) weight *= p[static_cast<std::size_t>(x)];
        table.pi.push_back(weight);
        z += weight;
    }
    for (T& w : table.pi) w /= z;
    table.partition = z;
    return table;
}

// Limiting energy density: epsilon_c^(a) = s_{(c^a,1)} / s_{(c^a)}.
template <typename T>
T epsilon(long long c, int a, const std::vector<T>& p) {
    if (c == 0) return T(0);
    return schur(rect_plus_box(c, a), p) / schur(rect_partition(c, a), p);
}

// Same quantity through the stationary measure: the chance that the next
// letter exceeds the carrier's bottom-left entry.
template <typename T>
T epsilon_sum_form(long long c, int a, const std::vector<T>& p, long long state_cap = 200000) {
    const auto table = stationary_pi(c, a, p, state_cap);
    const int kappa = table.kappa;
    T out = T(0);
    for (std::size_t s = 0; s < table.states.size(); ++s) {
        const Letter z = table.states[s].bottom_left();
        T tail = T(0);
        for (int i = z + 1; i <= kappa; ++i) tail += p[static_cast<std::size_t>(i)];
        out += table.pi[s] * tail;
    }
    return out;
}

// Limiting row density eta_i^(a), the Schur-polynomial four-factor ratio.
template <typename T>
T eta(long long i, int a, const std::vector<T>& p) {
    const T num = schur(rect_partition(i - 1, a - 1), p) * schur(rect_partition(i, a + 1), p);
    const T den = schur(rect_partition(i, a), p) * schur(rect_partition(i - 1, a), p);
    return num / den;
}

}  // namespace boxball
