#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "boxball/bbs.hpp"
#include "boxball/carrier.hpp"

namespace boxball {

using BigInt = boost::multiprecision::cpp_int;

// Prefix color counts weakly decreasing in the color, empty box counting as
// color 0; equivalently the associated lattice path stays in the Weyl
// chamber.
bool is_highest(const Configuration& x);

bool in_weyl_chamber(const std::vector<long long>& m);

// Number of monotone lattice paths from the origin to m inside the Weyl
// chamber (the generalized ballot count). Zero outside the chamber.
BigInt ballot_count(const std::vector<long long>& m);

// Exact P(X^{n,p} is highest) by summing the ballot count against the
// multinomial weights over all chamber points with |m| = n.
double prob_highest_exact(long long n, const std::vector<double>& p,
                          long long composition_guard = 10000000);

// Half the number of tied density pairs; the polynomial decay exponent of
// the highest-state probability. Requires weakly decreasing p.
double decay_exponent(const std::vector<double>& p);

struct HighestSample {
    Configuration config;
    long long draws = 0;       // configurations attempted
    double acceptance = 0.0;   // 1/draws for a single accepted sample
};

// Rejection sampling of X^{n,p} conditioned on being highest.
HighestSample sample_highest(long long n, const std::vector<double>& p, std::uint64_t seed,
                             long long draw_budget = 10000000);

// Number of highest states with support in [1,n] carrying the prescribed
// Young diagrams: prod_{a,i} binom(v_i^(a) + m_i^(a), m_i^(a)); zero when
// some vacancy is negative.
BigInt fermionic_count(const YoungTuple& y, long long n);

}  // namespace boxball
