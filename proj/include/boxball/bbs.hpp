#pragma once

#include <optional>
#include <string>
#include <vector>

#include "boxball/tableau.hpp"

namespace boxball {

// Finite-support coloring of the half line; cells_[i] is the letter at
// site i+1, sites beyond the stored suffix are empty.
class Configuration {
public:
    Configuration() : kappa_(1) {}
    Configuration(std::vector<Letter> cells, int kappa);

    int kappa() const { return kappa_; }
    const std::vector<Letter>& cells() const { return cells_; }
    // 1-based site access; 0 beyond the stored suffix.
    Letter at(std::size_t site) const {
        return site >= 1 && site <= cells_.size() ? cells_[site - 1] : 0;
    }
    std::size_t support() const;  // last occupied site (0 if empty)
    long long ball_count() const;
    long long ball_count_at_least(Letter color) const;
    std::vector<long long> color_counts() const;  // counts for 0..kappa over the support
    void trim();                                  // drop trailing zeros

    bool operator==(const Configuration& o) const;

private:
    std::vector<Letter> cells_;
    int kappa_;
};

struct Soliton {
    std::vector<Letter> colors;  // non-increasing, nonzero
    std::size_t position;        // 1-based site of the leftmost ball
    std::size_t length() const { return colors.size(); }
};

// Move every ball of color `a` once, left to right, each to the leftmost
// empty site on its right.
Configuration apply_K(const Configuration& x, int a);

// One time step: K_1 ∘ K_2 ∘ ... ∘ K_kappa.
Configuration evolve(const Configuration& x);

// Update induced by sweeping a B_c^(a)-carrier seeded at the ground state;
// agrees with evolve() when a = 1 and c covers the total ball count.
Configuration evolve_by_carrier(const Configuration& x, int height, int capacity);

// Maximal nonzero blocks, accepted only when every block is non-increasing,
// block lengths are non-decreasing left to right, and each inter-block gap
// is at least the length of the block on its left. nullopt otherwise.
std::optional<std::vector<Soliton>> soliton_decomposition(const Configuration& x);

// Text forms: contiguous digits for kappa <= 9, comma-separated otherwise.
// parse_configuration accepts either, with optional whitespace.
struct ParseError {
    std::size_t column;
    std::string message;
};
Configuration parse_configuration(const std::string& text, int kappa);
std::string to_text(const Configuration& x, bool spaces = false);

}  // namespace boxball
