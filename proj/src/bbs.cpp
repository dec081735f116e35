#include "boxball/bbs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace boxball {

Configuration::Configuration(std::vector<Letter> cells, int kappa)
    : cells_(std::move(cells)), kappa_(kappa) {
    if (kappa_ < 1) throw std::invalid_argument("kappa must be >= 1");
    for (Letter x : cells_)
        if (x < 0 || x > kappa_) throw std::invalid_argument("cell letter out of range");
}

std::size_t Configuration::support() const {
    for (std::size_t i = cells_.size(); i > 0; --i)
        if (cells_[i - 1] != 0) return i;
    return 0;
}

long long Configuration::ball_count() const {
    long long n = 0;
    for (Letter x : cells_) n += (x != 0);
    return n;
}

long long Configuration::ball_count_at_least(Letter color) const {
    long long n = 0;
    for (Letter x : cells_) n += (x >= color);
    return n;
}

std::vector<long long> Configuration::color_counts() const {
    std::vector<long long> m(static_cast<std::size_t>(kappa_) + 1, 0);
    for (Letter x : cells_) ++m[static_cast<std::size_t>(x)];
    return m;
}

void Configuration::trim() { cells_.resize(support()); }

bool Configuration::operator==(const Configuration& o) const {
    if (kappa_ != o.kappa_) return false;
    const std::size_t n = std::max(cells_.size(), o.cells_.size());
    for (std::size_t i = 1; i <= n; ++i)
        if (at(i) != o.at(i)) return false;
    return true;
}

Configuration apply_K(const Configuration& x, int a) {
    if (a < 1 || a > x.kappa()) throw std::invalid_argument("color out of range");
    std::vector<Letter> cells = x.cells();
    // room for every ball to move past the current suffix
    cells.resize(x.support() + static_cast<std::size_t>(x.ball_count()) + 1, 0);

    std::vector<std::size_t> balls;
    std::set<std::size_t> empties;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i] == a) balls.push_back(i);
        if (cells[i] == 0) empties.insert(i);
    }
    for (std::size_t p : balls) {
        cells[p] = 0;
        empties.insert(p);
        auto it = empties.upper_bound(p);
        cells[*it] = a;
        empties.erase(it);
    }
    Configuration out(std::move(cells), x.kappa());
    out.trim();
    return out;
}

Configuration evolve(const Configuration& x) {
    Configuration y = x;
    for (int a = x.kappa(); a >= 1; --a) y = apply_K(y, a);
    return y;
}

Configuration evolve_by_carrier(const Configuration& x, int height, int capacity) {
    if (height < 1 || height > x.kappa()) throw std::invalid_argument("carrier height out of range");
    if (capacity < 1) throw std::invalid_argument("carrier capacity out of range");
    RectTableau carrier = ground_state(height, capacity);
    std::vector<Letter> out;
    const std::size_t n = x.support();
    for (std::size_t i = 1; i <= n; ++i) out.push_back(combinatorial_R_inplace(carrier, x.at(i)));
    // Feeding empty boxes drains the first carrier row; afterwards every
    // emission is 0.
    auto row1_clear = [&]() {
        for (int j = 0; j < capacity; ++j)
            if (carrier.at(0, j) != 0) return false;
        return true;
    };
    while (!row1_clear()) out.push_back(combinatorial_R_inplace(carrier, 0));
    Configuration y(std::move(out), x.kappa());
    y.trim();
    return y;
}

std::optional<std::vector<Soliton>> soliton_decomposition(const Configuration& x) {
    // Blocks are maximal non-increasing nonzero runs. An increasing junction
    // inside a nonzero run starts a new block: equal-speed solitons can
    // travel adjacent forever (the reference trajectory ends with such a
    // "24" pair), so zero gaps are fine; positive gaps must be wide enough
    // that the left block cannot catch up.
    std::vector<Soliton> blocks;
    const std::size_t n = x.support();
    std::size_t i = 1;
    while (i <= n) {
        if (x.at(i) == 0) {
            ++i;
            continue;
        }
        Soliton s;
        s.position = i;
        s.colors.push_back(x.at(i));
        ++i;
        while (i <= n && x.at(i) != 0 && x.at(i) <= s.colors.back()) {
            s.colors.push_back(x.at(i));
            ++i;
        }
        blocks.push_back(std::move(s));
    }
    for (std::size_t k = 1; k < blocks.size(); ++k) {
        const auto& left = blocks[k - 1];
        const auto& right = blocks[k];
        if (left.length() > right.length()) return std::nullopt;
        const std::size_t gap = right.position - (left.position + left.length());
        if (gap > 0 && gap < left.length()) return std::nullopt;
    }
    return blocks;
}

Configuration parse_configuration(const std::string& text, int kappa) {
    std::vector<Letter> cells;
    const bool comma = text.find(',') != std::string::npos;
    if (comma) {
        std::string tok;
        std::size_t col = 1;
        std::size_t tok_col = 1;
        auto flush = [&]() {
            if (tok.empty()) return;
            try {
                cells.push_back(std::stoi(tok));
            } catch (const std::exception&) {
                throw ParseError{tok_col, "expected an integer"};
            }
            tok.clear();
        };
        for (char ch : text) {
            if (ch == ',') {
                flush();
            } else if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
                // skip
            } else {
                if (tok.empty()) tok_col = col;
                tok += ch;
            }
            ++col;
        }
        flush();
    } else {
        std::size_t col = 1;
        for (char ch : text) {
            if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r') {
                ++col;
                continue;
            }
            if (ch < '0' || ch > '9') throw ParseError{col, "expected a digit"};
            cells.push_back(ch - '0');
            ++col;
        }
    }
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] < 0 || cells[i] > kappa)
            throw ParseError{i + 1, "letter exceeds kappa"};
    Configuration out(std::move(cells), kappa);
    return out;
}

std::string to_text(const Configuration& x, bool spaces) {
    std::string s;
    const auto& cells = x.cells();
    if (x.kappa() <= 9) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (spaces && i > 0) s += ' ';
            s += static_cast<char>('0' + cells[i]);
        }
    } else {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) s += ',';
            s += std::to_string(cells[i]);
        }
    }
    return s;
}

}  // namespace boxball
