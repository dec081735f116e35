#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boxball/tableau.hpp"

namespace boxball {

// splitmix64, used only to expand seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// xoshiro256++ (Blackman & Vigna). Per-trial streams are seeded from
// (master seed, stream index) through splitmix64, so parallel trials are
// reproducible bit for bit regardless of scheduling.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // [0, 1) with 53 random bits
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::uint64_t s_[4];
};

inline Xoshiro256pp stream_for(std::uint64_t master_seed, std::uint64_t stream_index) {
    std::uint64_t sm = master_seed ^ (0x6a09e667f3bcc909ULL + stream_index * 0x9e3779b97f4a7c15ULL);
    return Xoshiro256pp(splitmix64(sm));
}

// Inverse-CDF letter draw for a fixed density.
class LetterSampler {
public:
    explicit LetterSampler(const std::vector<double>& p) : cum_(p) {
        double acc = 0.0;
        for (double& c : cum_) {
            if (c <= 0.0) throw std::invalid_argument("density entries must be positive");
            acc += c;
            c = acc;
        }
        if (acc < 1.0 - 1e-9 || acc > 1.0 + 1e-9) throw std::invalid_argument("density must sum to 1");
        cum_.back() = 1.0;
    }

    Letter draw(Xoshiro256pp& rng) const {
        const double u = rng.uniform();
        for (std::size_t i = 0; i + 1 < cum_.size(); ++i)
            if (u < cum_[i]) return static_cast<Letter>(i);
        return static_cast<Letter>(cum_.size() - 1);
    }

private:
    std::vector<double> cum_;
};

}  // namespace boxball
