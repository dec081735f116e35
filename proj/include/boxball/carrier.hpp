#pragma once

#include <vector>

#include "boxball/bbs.hpp"
#include "boxball/tableau.hpp"

namespace boxball {

// One full carrier sweep: states[k] = carrier after scanning sites [1,k]
// (states[0] is the ground state), emissions[k-1] and energies[k-1] belong
// to site k. The sweep covers the support plus the drain tail.
struct CarrierPath {
    int height = 0;
    int capacity = 0;
    std::vector<RectTableau> states;
    std::vector<Letter> emissions;
    std::vector<int> energies;
    long long total_energy() const;
};

CarrierPath run_carrier(const Configuration& x, int height, int capacity);

// E_c^(a) for c = 1..c_max at fixed height a; entry [c-1] is E_c^(a).
// Uses the count-vector carrier when a = 1.
std::vector<long long> energies_up_to(const Configuration& x, int height, int c_max);

// Energy matrix rows E[c][a], c = 1..row_count, a = 1..kappa (stored
// 0-based). Rows grow until two consecutive rows coincide, capped at the
// total ball count.
struct EnergyMatrix {
    int kappa = 0;
    std::vector<std::vector<long long>> rows;  // rows[c-1][a-1] = E_c^(a)
    std::vector<bool> stabilized;              // per column a

    long long at(int c, int a) const { return rows[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(a) - 1]; }
    int row_count() const { return static_cast<int>(rows.size()); }
};

EnergyMatrix energy_matrix(const Configuration& x);

// The kappa-tuple of invariant Young diagrams: diagrams[a-1] lists the row
// lengths of mu^(a), trailing zeros dropped.
struct YoungTuple {
    int kappa = 0;
    std::vector<std::vector<long long>> diagrams;

    long long row(int a, int i) const;  // rho_i^(a), 0 beyond the diagram
    long long size(int a) const;        // |mu^(a)|
    // m_i^(a): number of columns of length exactly i.
    long long column_multiplicity(int a, int i) const;
    // E_i^(a) = rho_1 + ... + rho_i.
    long long partial_sum(int a, int i) const;
    int depth(int a) const { return static_cast<int>(diagrams[static_cast<std::size_t>(a) - 1].size()); }
};

// rho_i^(a) = E_i^(a) - E_{i-1}^(a); rejects non-concave input.
YoungTuple young_diagrams(const EnergyMatrix& e);

// v_i^(a) = n*delta_{a,1} - sum_b C_ab E_i^(b) with the sl_{kappa+1} Cartan
// matrix. Negative entries mean the diagrams are not realizable by a
// highest state of size n (the reference example has one, since its
// initial state is not highest); strict mode rejects them.
struct VacancyTable {
    long long n = 0;
    std::vector<std::vector<long long>> v;
    std::vector<long long> v_infinity;  // per color a
    bool nonnegative = true;
    long long at(int i, int a) const { return v[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(a) - 1]; }
    int depth() const { return static_cast<int>(v.size()); }
};

VacancyTable vacancies(const YoungTuple& y, long long n, int i_max = 0, bool strict = false);

int cartan(int a, int b);

}  // namespace boxball
