#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace boxball {

// A letter is a box content in [0, kappa]; 0 denotes an empty box.
using Letter = int;
using Word = std::vector<Letter>;

// Semistandard tableau of arbitrary partition shape. Used for Schensted
// insertion and for the product-based test oracles; the carrier code uses
// the dense RectTableau below instead.
class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<Letter>> rows);

    const std::vector<std::vector<Letter>>& rows() const { return rows_; }
    bool empty() const { return rows_.empty(); }
    std::size_t row_count() const { return rows_.size(); }
    std::size_t cell_count() const;

    // Weakly increasing rows, strictly increasing columns, weakly
    // decreasing row lengths, entries >= 0.
    bool is_semistandard() const;

    // m_i = number of letters equal to i, for i in [0, kappa].
    std::vector<long long> letter_counts(int kappa) const;

    bool operator==(const Tableau& other) const { return rows_ == other.rows_; }

private:
    std::vector<std::vector<Letter>> rows_;
    friend Tableau row_insert(Tableau t, Letter x);
    friend Tableau column_insert(Tableau t, Letter x);
};

// Schensted row insertion: bump the leftmost strictly larger entry.
Tableau row_insert(Tableau t, Letter x);
Tableau row_insert(Tableau t, const Word& w);

// Schensted column insertion: bump the topmost entry >= x into the next
// column.
Tableau column_insert(Tableau t, Letter x);

// Row word: rows concatenated from the bottom row up.
Word row_word(const Tableau& t);
Word reverse_row_word(const Tableau& t);

// Plactic product s*t = (s <- row(t)). Letter counts add.
Tableau product(const Tableau& s, const Tableau& t);

// Rectangular semistandard tableau in B_c^(a)(kappa): `height()` = a rows,
// `width()` = c columns, entries stored dense row-major. Carrier states
// live here.
class RectTableau {
public:
    RectTableau() : height_(0), width_(0) {}
    RectTableau(int height, int width, std::vector<Letter> entries);

    int height() const { return height_; }
    int width() const { return width_; }
    Letter at(int row, int col) const { return e_[static_cast<std::size_t>(row) * width_ + col]; }
    Letter& at(int row, int col) { return e_[static_cast<std::size_t>(row) * width_ + col]; }
    Letter bottom_left() const { return at(height_ - 1, 0); }
    const std::vector<Letter>& entries() const { return e_; }

    bool is_semistandard() const;
    std::vector<long long> letter_counts(int kappa) const;
    Tableau to_tableau() const;

    bool operator==(const RectTableau& o) const = default;
    auto operator<=>(const RectTableau& o) const = default;

private:
    int height_;
    int width_;
    std::vector<Letter> e_;
};

// U_c^(a): row i filled with i-1.
RectTableau ground_state(int height, int width);
// V_c^(a): row a-i filled with kappa-i, i.e. bottom row all kappa.
RectTableau lowest_state(int height, int width, int kappa);

// Local energy H(C,x) = 1 iff x exceeds the bottom-left entry of C.
inline int local_energy(const RectTableau& c, Letter x) {
    return x > c.bottom_left() ? 1 : 0;
}

// Combinatorial R on B_c^(a) x B_1^(1) -> B_1^(1) x B_c^(a) by the
// two-branch algorithm: reverse bumping when x exceeds the bottom-left
// entry, column insertion otherwise. O(height + width). Mutates C to the
// outgoing carrier state and returns the emitted letter.
Letter combinatorial_R_inplace(RectTableau& c, Letter x);

// Validating wrapper: rejects malformed tableaux or out-of-range letters.
std::pair<Letter, RectTableau> combinatorial_R(const RectTableau& c, Letter x, int kappa);

// All of B_c^(a)(kappa) in lexicographic (row-major entry) order.
std::vector<RectTableau> enumerate_rect_tableaux(int height, int width, int kappa);
// |B_c^(a)(kappa)| without materializing the list.
long long count_rect_tableaux(int height, int width, int kappa, long long cap);

// Count-vector representation of a height-1 carrier: count_[i] = number of
// letters i in the single row, including letter 0. Per-step cost O(kappa)
// instead of O(width).
class RowCarrier {
public:
    RowCarrier(int width, int kappa);

    int width() const { return width_; }
    int energy(Letter x) const { return x > min_letter() ? 1 : 0; }
    // One combinatorial-R step; returns the emitted letter.
    Letter step(Letter x);
    bool is_ground() const { return count_[0] == width_; }
    Letter min_letter() const;
    Letter max_letter() const;
    RectTableau to_rect() const;

private:
    int width_;
    int kappa_;
    std::vector<int> count_;
};

// Text form: rows joined by '/', entries as contiguous digits when all
// letters fit one digit, comma-separated otherwise. "011/234" round-trips.
std::string to_text(const RectTableau& t);
std::string to_text(const Tableau& t);
RectTableau parse_rect_tableau(const std::string& text);

}  // namespace boxball
