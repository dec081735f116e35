#include "boxball/tableau.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace boxball {

Tableau::Tableau(std::vector<std::vector<Letter>> rows) : rows_(std::move(rows)) {
    while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

std::size_t Tableau::cell_count() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
}

bool Tableau::is_semistandard() const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (rows_[i].empty()) return false;
        if (i + 1 < rows_.size() && rows_[i + 1].size() > rows_[i].size()) return false;
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            if (rows_[i][j] < 0) return false;
            if (j > 0 && rows_[i][j] < rows_[i][j - 1]) return false;
            if (i > 0 && rows_[i][j] <= rows_[i - 1][j]) return false;
        }
    }
    return true;
}

std::vector<long long> Tableau::letter_counts(int kappa) const {
    std::vector<long long> m(static_cast<std::size_t>(kappa) + 1, 0);
    for (const auto& r : rows_)
        for (Letter x : r) {
            if (x < 0 || x > kappa) throw std::invalid_argument("letter out of range");
            ++m[static_cast<std::size_t>(x)];
        }
    return m;
}

Tableau row_insert(Tableau t, Letter x) {
    auto& rows = t.rows_;
    Letter carry = x;
    for (std::size_t i = 0;; ++i) {
        if (i == rows.size()) {
            rows.push_back({carry});
            break;
        }
        auto& row = rows[i];
        auto it = std::upper_bound(row.begin(), row.end(), carry);
        if (it == row.end()) {
            row.push_back(carry);
            break;
        }
        std::swap(*it, carry);
    }
    return t;
}

Tableau row_insert(Tableau t, const Word& w) {
    for (Letter x : w) t = row_insert(std::move(t), x);
    return t;
}

Tableau column_insert(Tableau t, Letter x) {
    auto& rows = t.rows_;
    Letter carry = x;
    for (std::size_t col = 0;; ++col) {
        // topmost entry >= carry in this column
        std::size_t row = 0;
        while (row < rows.size() && rows[row].size() > col && rows[row][col] < carry) ++row;
        if (row == rows.size() || rows[row].size() <= col) {
            if (row == rows.size()) rows.push_back({});
            rows[row].push_back(carry);
            break;
        }
        std::swap(rows[row][col], carry);
    }
    return t;
}

Word row_word(const Tableau& t) {
    Word w;
    w.reserve(t.cell_count());
    const auto& rows = t.rows();
    for (auto it = rows.rbegin(); it != rows.rend(); ++it) w.insert(w.end(), it->begin(), it->end());
    return w;
}

Word reverse_row_word(const Tableau& t) {
    Word w = row_word(t);
    std::reverse(w.begin(), w.end());
    return w;
}

Tableau product(const Tableau& s, const Tableau& t) { return row_insert(s, row_word(t)); }

RectTableau::RectTableau(int height, int width, std::vector<Letter> entries)
    : height_(height), width_(width), e_(std::move(entries)) {
    if (height_ < 0 || width_ < 0 ||
        e_.size() != static_cast<std::size_t>(height_) * static_cast<std::size_t>(width_))
        throw std::invalid_argument("entry count does not match shape");
}

bool RectTableau::is_semistandard() const {
    for (int i = 0; i < height_; ++i)
        for (int j = 0; j < width_; ++j) {
            if (at(i, j) < 0) return false;
            if (j > 0 && at(i, j) < at(i, j - 1)) return false;
            if (i > 0 && at(i, j) <= at(i - 1, j)) return false;
        }
    return true;
}

std::vector<long long> RectTableau::letter_counts(int kappa) const {
    std::vector<long long> m(static_cast<std::size_t>(kappa) + 1, 0);
    for (Letter x : e_) {
        if (x < 0 || x > kappa) throw std::invalid_argument("letter out of range");
        ++m[static_cast<std::size_t>(x)];
    }
    return m;
}

Tableau RectTableau::to_tableau() const {
    std::vector<std::vector<Letter>> rows(static_cast<std::size_t>(height_));
    for (int i = 0; i < height_; ++i)
        rows[static_cast<std::size_t>(i)].assign(e_.begin() + static_cast<std::ptrdiff_t>(i) * width_,
                                                 e_.begin() + static_cast<std::ptrdiff_t>(i + 1) * width_);
    return Tableau(std::move(rows));
}

RectTableau ground_state(int height, int width) {
    std::vector<Letter> e(static_cast<std::size_t>(height) * width);
    for (int i = 0; i < height; ++i)
        for (int j = 0; j < width; ++j) e[static_cast<std::size_t>(i) * width + j] = i;
    return RectTableau(height, width, std::move(e));
}

RectTableau lowest_state(int height, int width, int kappa) {
    std::vector<Letter> e(static_cast<std::size_t>(height) * width);
    for (int i = 0; i < height; ++i)
        for (int j = 0; j < width; ++j)
            e[static_cast<std::size_t>(i) * width + j] = kappa - (height - 1 - i);
    return RectTableau(height, width, std::move(e));
}

Letter combinatorial_R_inplace(RectTableau& c, Letter x) {
    const int a = c.height();
    const int w = c.width();
    if (x > c.bottom_left()) {
        // Reverse bumping from the bottom row to the top.
        Letter carry = x;
        for (int i = a - 1; i >= 0; --i) {
            // rightmost entry < carry in row i; rows are sorted
            int lo = 0, hi = w;  // first index with entry >= carry
            while (lo < hi) {
                int mid = (lo + hi) / 2;
                if (c.at(i, mid) < carry)
                    lo = mid + 1;
                else
                    hi = mid;
            }
            Letter bumped = c.at(i, lo - 1);
            c.at(i, lo - 1) = carry;
            carry = bumped;
        }
        return carry;
    }
    // Column insertion from the first column to the last.
    Letter carry = x;
    for (int j = 0; j < w; ++j) {
        // topmost entry >= carry in column j; columns are strictly increasing
        int lo = 0, hi = a;
        while (lo < hi) {
            int mid = (lo + hi) / 2;
            if (c.at(mid, j) < carry)
                lo = mid + 1;
            else
                hi = mid;
        }
        Letter bumped = c.at(lo, j);
        c.at(lo, j) = carry;
        carry = bumped;
    }
    return carry;
}

std::pair<Letter, RectTableau> combinatorial_R(const RectTableau& c, Letter x, int kappa) {
    if (!c.is_semistandard()) throw std::invalid_argument("carrier tableau is not semistandard");
    if (x < 0 || x > kappa) throw std::invalid_argument("letter out of range");
    for (Letter v : c.entries())
        if (v > kappa) throw std::invalid_argument("carrier entry out of range");
    RectTableau s = c;
    Letter y = combinatorial_R_inplace(s, x);
    return {y, std::move(s)};
}

namespace {

template <typename Visit>
void gen_rect(int height, int width, int kappa, std::vector<Letter>& e, std::size_t pos, Visit&& visit) {
    const std::size_t total = static_cast<std::size_t>(height) * width;
    if (pos == total) {
        visit(e);
        return;
    }
    const int i = static_cast<int>(pos) / width;
    const int j = static_cast<int>(pos) % width;
    Letter lo = 0;
    if (j > 0) lo = std::max(lo, e[pos - 1]);
    if (i > 0) lo = std::max(lo, e[pos - static_cast<std::size_t>(width)] + 1);
    // leave room for the strictly increasing column tail, so every partial
    // filling completes and the walk never enters dead subtrees
    const Letter hi = kappa - (height - 1 - i);
    for (Letter v = lo; v <= hi; ++v) {
        e[pos] = v;
        gen_rect(height, width, kappa, e, pos + 1, visit);
    }
}

}  // namespace

std::vector<RectTableau> enumerate_rect_tableaux(int height, int width, int kappa) {
    std::vector<RectTableau> out;
    std::vector<Letter> e(static_cast<std::size_t>(height) * width);
    gen_rect(height, width, kappa, e, 0,
             [&](const std::vector<Letter>& entries) { out.emplace_back(height, width, entries); });
    return out;
}

long long count_rect_tableaux(int height, int width, int kappa, long long cap) {
    long long n = 0;
    std::vector<Letter> e(static_cast<std::size_t>(height) * width);
    try {
        gen_rect(height, width, kappa, e, 0, [&](const std::vector<Letter>&) {
            if (++n > cap) throw std::overflow_error("cap");
        });
    } catch (const std::overflow_error&) {
        return cap + 1;
    }
    return n;
}

RowCarrier::RowCarrier(int width, int kappa)
    : width_(width), kappa_(kappa), count_(static_cast<std::size_t>(kappa) + 1, 0) {
    if (width <= 0 || kappa < 1) throw std::invalid_argument("invalid carrier shape");
    count_[0] = width;
}

Letter RowCarrier::min_letter() const {
    for (int i = 0; i <= kappa_; ++i)
        if (count_[static_cast<std::size_t>(i)] > 0) return i;
    return 0;
}

Letter RowCarrier::max_letter() const {
    for (int i = kappa_; i >= 0; --i)
        if (count_[static_cast<std::size_t>(i)] > 0) return i;
    return 0;
}

Letter RowCarrier::step(Letter x) {
    if (x > min_letter()) {
        // reverse bumping: swap out the largest letter below x
        for (int j = x - 1; j >= 0; --j)
            if (count_[static_cast<std::size_t>(j)] > 0) {
                --count_[static_cast<std::size_t>(j)];
                ++count_[static_cast<std::size_t>(x)];
                return j;
            }
    }
    // column insertion: the row shifts right, dropping its largest letter
    Letter out = max_letter();
    --count_[static_cast<std::size_t>(out)];
    ++count_[static_cast<std::size_t>(x)];
    return out;
}

RectTableau RowCarrier::to_rect() const {
    std::vector<Letter> e;
    e.reserve(static_cast<std::size_t>(width_));
    for (int i = 0; i <= kappa_; ++i)
        e.insert(e.end(), static_cast<std::size_t>(count_[static_cast<std::size_t>(i)]), i);
    return RectTableau(1, width_, std::move(e));
}

namespace {

std::string row_to_text(const std::vector<Letter>& row, bool digits) {
    std::string s;
    for (std::size_t j = 0; j < row.size(); ++j) {
        if (digits)
            s += static_cast<char>('0' + row[j]);
        else {
            if (j > 0) s += ',';
            s += std::to_string(row[j]);
        }
    }
    return s;
}

}  // namespace

std::string to_text(const RectTableau& t) { return to_text(t.to_tableau()); }

std::string to_text(const Tableau& t) {
    bool digits = true;
    for (const auto& r : t.rows())
        for (Letter x : r)
            if (x > 9) digits = false;
    std::string s;
    for (std::size_t i = 0; i < t.rows().size(); ++i) {
        if (i > 0) s += '/';
        s += row_to_text(t.rows()[i], digits);
    }
    return s;
}

RectTableau parse_rect_tableau(const std::string& text) {
    std::vector<std::vector<Letter>> rows;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '/')) {
        std::vector<Letter> row;
        if (part.find(',') != std::string::npos) {
            std::stringstream rs(part);
            std::string tok;
            while (std::getline(rs, tok, ',')) row.push_back(std::stoi(tok));
        } else {
            for (char ch : part) {
                if (ch < '0' || ch > '9') throw std::invalid_argument("bad tableau digit");
                row.push_back(ch - '0');
            }
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::invalid_argument("empty tableau text");
    const std::size_t w = rows.front().size();
    std::vector<Letter> e;
    for (const auto& r : rows) {
        if (r.size() != w) throw std::invalid_argument("ragged tableau text");
        e.insert(e.end(), r.begin(), r.end());
    }
    RectTableau t(static_cast<int>(rows.size()), static_cast<int>(w), std::move(e));
    if (!t.is_semistandard()) throw std::invalid_argument("tableau text is not semistandard");
    return t;
}

}  // namespace boxball
