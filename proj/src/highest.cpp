#include "boxball/highest.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "boxball/rng.hpp"
#include "boxball/schur.hpp"

namespace boxball {

bool is_highest(const Configuration& x) {
    std::vector<long long> counts(static_cast<std::size_t>(x.kappa()) + 1, 0);
    const std::size_t n = x.support();
    for (std::size_t k = 1; k <= n; ++k) {
        const Letter c = x.at(k);
        ++counts[static_cast<std::size_t>(c)];
        if (c > 0 && counts[static_cast<std::size_t>(c) - 1] < counts[static_cast<std::size_t>(c)])
            return false;
    }
    return true;
}

bool in_weyl_chamber(const std::vector<long long>& m) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] < 0) return false;
        if (i > 0 && m[i] > m[i - 1]) return false;
    }
    return true;
}

namespace {

BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt num = 1;
    for (long long i = 0; i < k; ++i) num *= (n - i);
    return num / factorial(k);
}

}  // namespace

BigInt ballot_count(const std::vector<long long>& m) {
    if (!in_weyl_chamber(m)) return 0;
    const std::size_t r = m.size();
    long long total = 0;
    for (long long v : m) total += v;
    BigInt num = factorial(total);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = i + 1; j < r; ++j)
            num *= (m[i] - m[j] + static_cast<long long>(j) - static_cast<long long>(i));
    BigInt den = 1;
    for (std::size_t k = 0; k < r; ++k)
        den *= factorial(m[k] + static_cast<long long>(r) - 1 - static_cast<long long>(k));
    return num / den;
}

namespace {

template <typename Visit>
void enumerate_chamber_points(long long remaining, long long max_part, std::vector<long long>& m,
                              std::size_t pos, Visit&& visit) {
    if (pos + 1 == m.size()) {
        if (remaining <= max_part) {
            m[pos] = remaining;
            visit(m);
        }
        return;
    }
    for (long long v = std::min(remaining, max_part); v >= 0; --v) {
        if (v * static_cast<long long>(m.size() - pos) < remaining) break;
        m[pos] = v;
        enumerate_chamber_points(remaining - v, v, m, pos + 1, visit);
    }
}

}  // namespace

double prob_highest_exact(long long n, const std::vector<double>& p, long long composition_guard) {
    validate_density(p);
    const std::size_t r = p.size();
    BigInt guard = binomial(n + static_cast<long long>(r) - 1, static_cast<long long>(r) - 1);
    if (guard > composition_guard)
        throw std::invalid_argument("composition count exceeds the enumeration guard; use Monte Carlo");
    std::vector<double> logp(r);
    for (std::size_t i = 0; i < r; ++i) logp[i] = std::log(p[i]);
    double total = 0.0;
    std::vector<long long> m(r, 0);
    enumerate_chamber_points(n, n, m, 0, [&](const std::vector<long long>& point) {
        double logw = 0.0;
        for (std::size_t k = 0; k < r; ++k) logw += static_cast<double>(point[k]) * logp[k];
        total += ballot_count(point).convert_to<double>() * std::exp(logw);
    });
    return total;
}

double decay_exponent(const std::vector<double>& p) {
    validate_density(p);
    if (!is_weakly_decreasing(p)) throw std::invalid_argument("decay exponent needs weakly decreasing p");
    int ties = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = i + 1; j < p.size(); ++j) ties += (p[i] == p[j]);
    return 0.5 * ties;
}

HighestSample sample_highest(long long n, const std::vector<double>& p, std::uint64_t seed,
                             long long draw_budget) {
    validate_density(p);
    if (!is_weakly_decreasing(p)) throw std::invalid_argument("sample_highest needs weakly decreasing p");
    const int kappa = static_cast<int>(p.size()) - 1;
    const LetterSampler sampler(p);
    std::vector<Letter> cells(static_cast<std::size_t>(n));
    std::vector<long long> counts(p.size(), 0);
    for (long long attempt = 1; attempt <= draw_budget; ++attempt) {
        Xoshiro256pp rng = stream_for(seed, static_cast<std::uint64_t>(attempt));
        std::fill(counts.begin(), counts.end(), 0);
        bool ok = true;
        for (long long k = 0; k < n; ++k) {
            const Letter c = sampler.draw(rng);
            cells[static_cast<std::size_t>(k)] = c;
            ++counts[static_cast<std::size_t>(c)];
            if (c > 0 && counts[static_cast<std::size_t>(c) - 1] < counts[static_cast<std::size_t>(c)]) {
                ok = false;
                break;
            }
        }
        if (ok) {
            HighestSample out{Configuration(cells, kappa), attempt, 1.0 / static_cast<double>(attempt)};
            return out;
        }
    }
    throw std::runtime_error("sample_highest: rejection budget exhausted (acceptance < " +
                             std::to_string(1.0 / static_cast<double>(draw_budget)) + ")");
}

BigInt fermionic_count(const YoungTuple& y, long long n) {
    int max_depth = 0;
    for (int a = 1; a <= y.kappa; ++a) max_depth = std::max(max_depth, y.depth(a));
    BigInt product = 1;
    for (int a = 1; a <= y.kappa; ++a) {
        // v_i is constant beyond the deepest diagram, so checking through
        // max_depth covers every binomial factor and every sign constraint
        for (int i = 1; i <= max_depth + 1; ++i) {
            long long v = (a == 1) ? n : 0;
            for (int b = 1; b <= y.kappa; ++b) v -= cartan(a, b) * y.partial_sum(b, i);
            if (v < 0) return 0;
            const long long mult = y.column_multiplicity(a, i);
            if (mult > 0) product *= binomial(v + mult, mult);
        }
    }
    return product;
}

}  // namespace boxball
