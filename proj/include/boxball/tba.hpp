#pragma once

#include <vector>

#include "boxball/schur.hpp"

namespace boxball {

// One-parameter family p_a proportional to q^a with 0 < q < 1; everything
// downstream factorizes in q.
struct PrincipalParams {
    double q = 0.5;
    int kappa = 1;

    std::vector<double> densities() const;          // p_0..p_kappa
    std::vector<double> z() const;                  // z_1..z_kappa, q^{-a(kappa+1-a)/2}
    std::vector<double> w() const;                  // w_a = z_a/z_{a-1}, a = 1..kappa+1
    double density_product() const;                 // u = p_0 ... p_kappa
    double chemical_potential(int a) const;         // beta_a, e^{beta_a} = p_{a-1}/p_a
};

PrincipalParams make_principal(double q, int kappa);

// Fugacities from a strictly decreasing density: z_a = u^{-a/(kappa+1)} p_0...p_{a-1}.
std::vector<double> fugacities(const std::vector<double>& p);

// Character variables w_a = z_a / z_{a-1} (with z_0 = z_{kappa+1} = 1) from a
// general fugacity vector.
std::vector<double> w_from_z(const std::vector<double>& z);

// Q_i^(a) = s_{(i^a)}(w_1..w_{kappa+1}); Q_0 = 1, Q_{-1} = 0.
double Q(long long i, int a, const std::vector<double>& w);
double Q(long long i, int a, const PrincipalParams& params);

// (Q_i^(a))^2 - Q_{i-1}Q_{i+1} - prod_{|b-a|=1} Q_i^(b), normalized by
// (Q_i^(a))^2; zero on the solution.
double q_system_residual(long long i, int a, const std::vector<double>& w, int kappa);

// y_i^(a), via the Q-ratio or the factorized principal form; both agree.
double y_from_Q(long long i, int a, const std::vector<double>& w, int kappa);
double y_principal(long long i, int a, const PrincipalParams& params);

// (1+y_i)^2 / ((1+y_{i-1})(1+y_{i+1})) - prod_b (1+1/y_i^(b))^{C_ab}.
double y_system_residual(long long i, int a, const PrincipalParams& params);

// Scaled vacancy phi_i^(a); the a = 1 row uses the cancelled closed form
// (the raw expression is 0/0 there).
double phi_principal(long long i, int a, const PrincipalParams& params);

// phi_{i-1} - 2 phi_i + phi_{i+1} - sum_b C_ab phi_i^(b)/y_i^(b).
double difference_equation_residual(long long i, int a, const PrincipalParams& params);

// Scaled column multiplicity xi_i^(a) = phi/y, in factorized form.
double xi_principal(long long i, int a, const PrincipalParams& params);

// Scaled row length eta_i^(a) = sum_{j>=i} xi_j^(a), in factorized form.
double eta_principal(long long i, int a, const PrincipalParams& params);

// Uniform-density limit of eta as q -> 1: a(kappa+1-a)/((kappa+1)(i+a-1)(i+a)).
double eta_uniform_limit(long long i, int a, int kappa);

// Equation-of-state residuals for a strictly decreasing density, one per
// color: z_a d/dz_a log(sum_b z_{b+1}/z_b) - delta_{a,1} + sum_b C_ab tail_b.
std::vector<double> equation_of_state_residual(const std::vector<double>& p);
// The same derivative by central finite difference, for self-consistency.
std::vector<double> equation_of_state_residual_fd(const std::vector<double>& p, double h = 1e-6);

// Logarithmic estimate of the first-column length at system size n.
double first_column_estimate(double n, int a, const PrincipalParams& params);

}  // namespace boxball
