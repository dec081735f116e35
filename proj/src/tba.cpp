#include "boxball/tba.hpp"

#include <cmath>
#include <stdexcept>

#include "boxball/carrier.hpp"

namespace boxball {

namespace {

double qpow(double q, double e) { return std::pow(q, e); }

}  // namespace

std::vector<double> PrincipalParams::densities() const {
    std::vector<double> p(static_cast<std::size_t>(kappa) + 1);
    const double norm = (1.0 - std::pow(q, kappa + 1)) / (1.0 - q);
    for (int a = 0; a <= kappa; ++a) p[static_cast<std::size_t>(a)] = std::pow(q, a) / norm;
    return p;
}

std::vector<double> PrincipalParams::z() const {
    std::vector<double> out(static_cast<std::size_t>(kappa));
    for (int a = 1; a <= kappa; ++a)
        out[static_cast<std::size_t>(a) - 1] = qpow(q, -0.5 * a * (kappa + 1 - a));
    return out;
}

std::vector<double> PrincipalParams::w() const { return w_from_z(z()); }

std::vector<double> w_from_z(const std::vector<double>& z) {
    const int kappa = static_cast<int>(z.size());
    std::vector<double> out(static_cast<std::size_t>(kappa) + 1);
    for (int a = 1; a <= kappa + 1; ++a) {
        const double za = (a <= kappa) ? z[static_cast<std::size_t>(a) - 1] : 1.0;
        const double zprev = (a >= 2) ? z[static_cast<std::size_t>(a) - 2] : 1.0;
        out[static_cast<std::size_t>(a) - 1] = za / zprev;
    }
    return out;
}

double PrincipalParams::density_product() const {
    double u = 1.0;
    for (double p : densities()) u *= p;
    return u;
}

double PrincipalParams::chemical_potential(int) const { return -std::log(q); }

PrincipalParams make_principal(double q, int kappa) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
    if (kappa < 1) throw std::invalid_argument("kappa must be >= 1");
    return PrincipalParams{q, kappa};
}

std::vector<double> fugacities(const std::vector<double>& p) {
    validate_density(p);
    if (!is_strictly_decreasing(p)) throw std::invalid_argument("fugacities need strictly decreasing p");
    const int kappa = static_cast<int>(p.size()) - 1;
    double u = 1.0;
    for (double x : p) u *= x;
    std::vector<double> z(static_cast<std::size_t>(kappa));
    double prefix = 1.0;
    for (int a = 1; a <= kappa; ++a) {
        prefix *= p[static_cast<std::size_t>(a) - 1];
        z[static_cast<std::size_t>(a) - 1] = std::pow(u, -static_cast<double>(a) / (kappa + 1)) * prefix;
    }
    return z;
}

double Q(long long i, int a, const std::vector<double>& w) {
    if (i < 0) return 0.0;
    if (i == 0) return 1.0;
    if (a == 0 || a == static_cast<int>(w.size())) return 1.0;
    return schur(rect_partition(i, a), w);
}

double Q(long long i, int a, const PrincipalParams& params) { return Q(i, a, params.w()); }

double q_system_residual(long long i, int a, const std::vector<double>& w, int kappa) {
    const double qi = Q(i, a, w);
    double neighbor = 1.0;
    for (int b = 1; b <= kappa; ++b)
        if (cartan(a, b) == -1) neighbor *= Q(i, b, w);
    return (qi * qi - Q(i - 1, a, w) * Q(i + 1, a, w) - neighbor) / (qi * qi);
}

double y_from_Q(long long i, int a, const std::vector<double>& w, int kappa) {
    if (i == 0) return 0.0;
    double neighbor = 1.0;
    for (int b = 1; b <= kappa; ++b)
        if (cartan(a, b) == -1) neighbor *= Q(i, b, w);
    return Q(i - 1, a, w) * Q(i + 1, a, w) / neighbor;
}

double y_principal(long long i, int a, const PrincipalParams& params) {
    if (i == 0) return 0.0;
    const double q = params.q;
    const int kappa = params.kappa;
    return qpow(q, -static_cast<double>(i)) * (1.0 - qpow(q, i)) * (1.0 - qpow(q, i + kappa + 1)) /
           ((1.0 - qpow(q, a)) * (1.0 - qpow(q, kappa + 1 - a)));
}

double y_system_residual(long long i, int a, const PrincipalParams& params) {
    const int kappa = params.kappa;
    auto y = [&](long long ii, int aa) { return y_principal(ii, aa, params); };
    const double lhs = (1.0 + y(i, a)) * (1.0 + y(i, a)) /
                       ((1.0 + y(i - 1, a)) * (1.0 + y(i + 1, a)));
    double rhs = 1.0;
    for (int b = 1; b <= kappa; ++b) {
        const int c = cartan(a, b);
        if (c == 0) continue;
        rhs *= std::pow(1.0 + 1.0 / y(i, b), c);
    }
    return lhs - rhs;
}

double phi_principal(long long i, int a, const PrincipalParams& params) {
    const double q = params.q;
    const int kappa = params.kappa;
    if (a == 1) {
        // (1-q^i)/(1-q^{i+a-1}) cancels identically when a = 1
        return (1.0 - q) * (1.0 - q) * (1.0 - qpow(q, i + kappa + 1)) * (1.0 + qpow(q, i + 1)) /
               ((1.0 - qpow(q, kappa + 1)) * (1.0 - qpow(q, i + 1)) * (1.0 - qpow(q, i + 2)));
    }
    return qpow(q, a - 1) * (1.0 - q) * (1.0 - q) * (1.0 - qpow(q, i)) *
           (1.0 - qpow(q, i + kappa + 1)) * (1.0 + qpow(q, i + a)) /
           ((1.0 - qpow(q, kappa + 1)) * (1.0 - qpow(q, i + a - 1)) * (1.0 - qpow(q, i + a)) *
            (1.0 - qpow(q, i + a + 1)));
}

double difference_equation_residual(long long i, int a, const PrincipalParams& params) {
    auto phi = [&](long long ii, int aa) {
        if (ii == 0) return aa == 1 ? 1.0 : 0.0;
        return phi_principal(ii, aa, params);
    };
    double lhs = phi(i - 1, a) - 2.0 * phi(i, a) + phi(i + 1, a);
    double rhs = 0.0;
    for (int b = 1; b <= params.kappa; ++b) {
        const int c = cartan(a, b);
        if (c == 0) continue;
        rhs += c * phi(i, b) / y_principal(i, b, params);
    }
    return lhs - rhs;
}

double xi_principal(long long i, int a, const PrincipalParams& params) {
    const double q = params.q;
    const int kappa = params.kappa;
    return qpow(q, i + a - 1) * (1.0 - q) * (1.0 - q) * (1.0 - qpow(q, a)) *
           (1.0 - qpow(q, kappa + 1 - a)) * (1.0 + qpow(q, i + a)) /
           ((1.0 - qpow(q, kappa + 1)) * (1.0 - qpow(q, i + a - 1)) * (1.0 - qpow(q, i + a)) *
            (1.0 - qpow(q, i + a + 1)));
}

double eta_principal(long long i, int a, const PrincipalParams& params) {
    const double q = params.q;
    const int kappa = params.kappa;
    return qpow(q, i + a - 1) * (1.0 - q) * (1.0 - qpow(q, a)) * (1.0 - qpow(q, kappa + 1 - a)) /
           ((1.0 - qpow(q, kappa + 1)) * (1.0 - qpow(q, i + a - 1)) * (1.0 - qpow(q, i + a)));
}

double eta_uniform_limit(long long i, int a, int kappa) {
    return static_cast<double>(a) * (kappa + 1 - a) /
           (static_cast<double>(kappa + 1) * static_cast<double>(i + a - 1) * static_cast<double>(i + a));
}

namespace {

double log_q11(const std::vector<double>& z, int kappa) {
    double f = 0.0;
    for (int b = 0; b <= kappa; ++b) {
        const double zb = (b >= 1) ? z[static_cast<std::size_t>(b) - 1] : 1.0;
        const double znext = (b + 1 <= kappa) ? z[static_cast<std::size_t>(b)] : 1.0;
        f += znext / zb;
    }
    return std::log(f);
}

}  // namespace

std::vector<double> equation_of_state_residual(const std::vector<double>& p) {
    const int kappa = static_cast<int>(p.size()) - 1;
    const auto z = fugacities(p);
    double f = 0.0;
    for (int b = 0; b <= kappa; ++b) {
        const double zb = (b >= 1) ? z[static_cast<std::size_t>(b) - 1] : 1.0;
        const double znext = (b + 1 <= kappa) ? z[static_cast<std::size_t>(b)] : 1.0;
        f += znext / zb;
    }
    std::vector<double> tails(static_cast<std::size_t>(kappa) + 2, 0.0);
    for (int b = kappa; b >= 1; --b)
        tails[static_cast<std::size_t>(b)] = tails[static_cast<std::size_t>(b) + 1] + p[static_cast<std::size_t>(b)];
    std::vector<double> residuals(static_cast<std::size_t>(kappa));
    for (int a = 1; a <= kappa; ++a) {
        const double za = z[static_cast<std::size_t>(a) - 1];
        const double zprev = (a >= 2) ? z[static_cast<std::size_t>(a) - 2] : 1.0;
        const double znext = (a + 1 <= kappa) ? z[static_cast<std::size_t>(a)] : 1.0;
        const double lhs = (za / zprev - znext / za) / f;
        double cart = 0.0;
        for (int b = 1; b <= kappa; ++b) cart += cartan(a, b) * tails[static_cast<std::size_t>(b)];
        residuals[static_cast<std::size_t>(a) - 1] = lhs - ((a == 1) ? 1.0 : 0.0) + cart;
    }
    return residuals;
}

std::vector<double> equation_of_state_residual_fd(const std::vector<double>& p, double h) {
    const int kappa = static_cast<int>(p.size()) - 1;
    auto z = fugacities(p);
    std::vector<double> tails(static_cast<std::size_t>(kappa) + 2, 0.0);
    for (int b = kappa; b >= 1; --b)
        tails[static_cast<std::size_t>(b)] = tails[static_cast<std::size_t>(b) + 1] + p[static_cast<std::size_t>(b)];
    std::vector<double> residuals(static_cast<std::size_t>(kappa));
    for (int a = 1; a <= kappa; ++a) {
        auto zp = z;
        auto zm = z;
        const double za = z[static_cast<std::size_t>(a) - 1];
        zp[static_cast<std::size_t>(a) - 1] = za * (1.0 + h);
        zm[static_cast<std::size_t>(a) - 1] = za * (1.0 - h);
        const double deriv = (log_q11(zp, kappa) - log_q11(zm, kappa)) / (2.0 * h * za);
        const double lhs = za * deriv;
        double cart = 0.0;
        for (int b = 1; b <= kappa; ++b) cart += cartan(a, b) * tails[static_cast<std::size_t>(b)];
        residuals[static_cast<std::size_t>(a) - 1] = lhs - ((a == 1) ? 1.0 : 0.0) + cart;
    }
    return residuals;
}

double first_column_estimate(double n, int a, const PrincipalParams& params) {
    const double q = params.q;
    const int kappa = params.kappa;
    const double inner = qpow(q, a - 1) * (1.0 - q) * (1.0 - qpow(q, a)) *
                         (1.0 - qpow(q, kappa + 1 - a)) * n / (1.0 - qpow(q, kappa + 1));
    return -std::log(inner) / std::log(q);
}

}  // namespace boxball
