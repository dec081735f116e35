#include "boxball/carrier.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace boxball {

long long CarrierPath::total_energy() const {
    long long e = 0;
    for (int h : energies) e += h;
    return e;
}

CarrierPath run_carrier(const Configuration& x, int height, int capacity) {
    if (height < 1 || height > x.kappa()) throw std::invalid_argument("carrier height out of range");
    if (capacity < 1) throw std::invalid_argument("carrier capacity out of range");
    CarrierPath path;
    path.height = height;
    path.capacity = capacity;
    RectTableau carrier = ground_state(height, capacity);
    path.states.push_back(carrier);
    const std::size_t n = x.support();
    auto feed = [&](Letter in) {
        path.energies.push_back(local_energy(carrier, in));
        path.emissions.push_back(combinatorial_R_inplace(carrier, in));
        path.states.push_back(carrier);
    };
    for (std::size_t i = 1; i <= n; ++i) feed(x.at(i));
    auto row1_clear = [&]() {
        for (int j = 0; j < capacity; ++j)
            if (carrier.at(0, j) != 0) return false;
        return true;
    };
    while (!row1_clear()) feed(0);
    return path;
}

std::vector<long long> energies_up_to(const Configuration& x, int height, int c_max) {
    if (height < 1 || height > x.kappa()) throw std::invalid_argument("carrier height out of range");
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(c_max));
    const std::size_t n = x.support();
    for (int c = 1; c <= c_max; ++c) {
        long long e = 0;
        if (height == 1) {
            RowCarrier carrier(c, x.kappa());
            for (std::size_t i = 1; i <= n; ++i) {
                const Letter in = x.at(i);
                e += carrier.energy(in);
                carrier.step(in);
            }
        } else {
            RectTableau carrier = ground_state(height, c);
            for (std::size_t i = 1; i <= n; ++i) {
                const Letter in = x.at(i);
                e += local_energy(carrier, in);
                combinatorial_R_inplace(carrier, in);
            }
        }
        out.push_back(e);
    }
    return out;
}

EnergyMatrix energy_matrix(const Configuration& x) {
    EnergyMatrix em;
    em.kappa = x.kappa();
    const long long balls = x.ball_count();
    // a diagram has at most `balls` rows, so one extra row always certifies
    // stabilization by repetition
    const int cap = static_cast<int>(std::max<long long>(balls + 1, 1));
    std::vector<std::vector<long long>> cols(static_cast<std::size_t>(em.kappa));
    for (int a = 1; a <= em.kappa; ++a)
        cols[static_cast<std::size_t>(a) - 1] = energies_up_to(x, a, cap);

    auto row_of = [&](int c) {
        std::vector<long long> r(static_cast<std::size_t>(em.kappa));
        for (int a = 1; a <= em.kappa; ++a)
            r[static_cast<std::size_t>(a) - 1] = cols[static_cast<std::size_t>(a) - 1][static_cast<std::size_t>(c) - 1];
        return r;
    };
    for (int c = 1; c <= cap; ++c) {
        em.rows.push_back(row_of(c));
        if (c >= 2 && em.rows[static_cast<std::size_t>(c) - 1] == em.rows[static_cast<std::size_t>(c) - 2]) break;
    }
    em.stabilized.assign(static_cast<std::size_t>(em.kappa), false);
    if (em.rows.size() >= 2) {
        const auto& last = em.rows.back();
        const auto& prev = em.rows[em.rows.size() - 2];
        for (int a = 1; a <= em.kappa; ++a)
            em.stabilized[static_cast<std::size_t>(a) - 1] =
                last[static_cast<std::size_t>(a) - 1] == prev[static_cast<std::size_t>(a) - 1];
    } else {
        // no balls: the zero matrix is trivially stable
        for (int a = 1; a <= em.kappa; ++a)
            em.stabilized[static_cast<std::size_t>(a) - 1] = em.rows[0][static_cast<std::size_t>(a) - 1] == 0;
    }
    return em;
}

long long YoungTuple::row(int a, int i) const {
    const auto& d = diagrams[static_cast<std::size_t>(a) - 1];
    if (i < 1 || static_cast<std::size_t>(i) > d.size()) return 0;
    return d[static_cast<std::size_t>(i) - 1];
}

long long YoungTuple::size(int a) const {
    long long s = 0;
    for (long long r : diagrams[static_cast<std::size_t>(a) - 1]) s += r;
    return s;
}

long long YoungTuple::column_multiplicity(int a, int i) const { return row(a, i) - row(a, i + 1); }

long long YoungTuple::partial_sum(int a, int i) const {
    long long s = 0;
    for (int j = 1; j <= i; ++j) s += row(a, j);
    return s;
}

YoungTuple young_diagrams(const EnergyMatrix& e) {
    YoungTuple y;
    y.kappa = e.kappa;
    y.diagrams.assign(static_cast<std::size_t>(e.kappa), {});
    for (int a = 1; a <= e.kappa; ++a) {
        auto& d = y.diagrams[static_cast<std::size_t>(a) - 1];
        long long prev_e = 0;
        long long prev_row = std::numeric_limits<long long>::max();
        for (int c = 1; c <= e.row_count(); ++c) {
            const long long row = e.at(c, a) - prev_e;
            prev_e = e.at(c, a);
            if (row < 0 || row > prev_row)
                throw std::invalid_argument("energy matrix violates Young diagram concavity");
            prev_row = row;
            if (row > 0) d.push_back(row);
        }
    }
    return y;
}

int cartan(int a, int b) {
    if (a == b) return 2;
    if (a == b - 1 || a == b + 1) return -1;
    return 0;
}

VacancyTable vacancies(const YoungTuple& y, long long n, int i_max, bool strict) {
    VacancyTable t;
    t.n = n;
    int depth = i_max;
    if (depth <= 0) {
        for (int a = 1; a <= y.kappa; ++a) depth = std::max(depth, y.depth(a));
        depth = std::max(depth, 1);
    }
    for (int i = 1; i <= depth; ++i) {
        std::vector<long long> row(static_cast<std::size_t>(y.kappa));
        for (int a = 1; a <= y.kappa; ++a) {
            long long v = (a == 1) ? n : 0;
            for (int b = 1; b <= y.kappa; ++b) v -= cartan(a, b) * y.partial_sum(b, i);
            if (v < 0) {
                if (strict)
                    throw std::invalid_argument(
                        "negative vacancy: diagrams not realizable at this system size");
                t.nonnegative = false;
            }
            row[static_cast<std::size_t>(a) - 1] = v;
        }
        t.v.push_back(std::move(row));
    }
    t.v_infinity.assign(static_cast<std::size_t>(y.kappa), 0);
    for (int a = 1; a <= y.kappa; ++a) {
        long long v = (a == 1) ? n : 0;
        for (int b = 1; b <= y.kappa; ++b) v -= cartan(a, b) * y.size(b);
        t.v_infinity[static_cast<std::size_t>(a) - 1] = v;
    }
    return t;
}

}  // namespace boxball
