#pragma once

#include "lehman/graph.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace lehman {

// Lex-max labelling of a 0/1 matrix under independent row and column
// permutations. Rows are read as bitstrings with column 0 most significant;
// the canonical matrix maximizes the row sequence lexicographically.
namespace detail {

class LexMax {
public:
    LexMax(const std::vector<Mask>& rows, int cols) : rows_(rows), m_(int(rows.size())), cols_(cols) {
        cells_.resize(m_ + 1);
        cells_[0].clear();
        if (cols_) cells_[0].push_back(cols_ == 64 ? ~Mask(0) : bit(cols_) - 1);
        vals_.resize(m_);
    }

    // Canonical row values, non-increasing.
    std::vector<Mask> maximum() {
        test_ = false;
        best_.assign(m_, 0);
        best_len_ = 0;
        dfs(0, 0);
        return best_;
    }

    // True iff no relabelling beats `target` (target given as row values).
    bool is_maximal(const std::vector<Mask>& target) {
        test_ = true;
        best_ = target;
        best_len_ = m_;
        bigger_ = false;
        dfs(0, 0);
        return !bigger_;
    }

private:
    Mask value(Mask row, const std::vector<Mask>& cells) const {
        Mask v = 0;
        int off = 0;
        for (Mask c : cells) {
            int cnt = popcount(row & c);
            if (cnt) v |= ((cnt == 64 ? ~Mask(0) : bit(cnt) - 1)) << (cols_ - off - cnt);
            off += popcount(c);
        }
        return v;
    }

    void split(const std::vector<Mask>& in, Mask row, std::vector<Mask>& out) const {
        out.clear();
        for (Mask c : in) {
            Mask a = c & row, b = c & ~row;
            if (a) out.push_back(a);
            if (b) out.push_back(b);
        }
    }

    void dfs(int d, std::uint64_t used) {
        if (d == m_ || bigger_) return;
        const auto& cells = cells_[d];
        Mask vmax = 0;
        for (int i = 0; i < m_; ++i) {
            if (used >> i & 1) continue;
            vals_[i] = value(rows_[i], cells);
            if (vals_[i] > vmax) vmax = vals_[i];
        }
        if (d >= best_len_) {
            best_[d] = vmax;
            best_len_ = d + 1;
        } else if (vmax > best_[d]) {
            if (test_) {
                bigger_ = true;
                return;
            }
            best_[d] = vmax;
            best_len_ = d + 1;
        } else if (vmax < best_[d]) {
            return;
        }
        // vals_ is clobbered by recursion; collect branch rows first
        std::uint64_t branch = 0;
        for (int i = 0; i < m_; ++i)
            if (!(used >> i & 1) && vals_[i] == vmax) branch |= std::uint64_t(1) << i;
        for (std::uint64_t b = branch; b; b &= b - 1) {
            int i = std::countr_zero(b);
            split(cells, rows_[i], cells_[d + 1]);
            dfs(d + 1, used | (std::uint64_t(1) << i));
            if (bigger_) return;
        }
    }

    const std::vector<Mask>& rows_;
    int m_, cols_;
    std::vector<std::vector<Mask>> cells_;
    std::vector<Mask> vals_;
    std::vector<Mask> best_;
    int best_len_ = 0;
    bool test_ = false;
    bool bigger_ = false;
};

// Row value (column 0 most significant) <-> column mask.
inline Mask to_value(Mask row, int cols) {
    Mask v = 0;
    for (Mask m = row; m; m &= m - 1) v |= bit(cols - 1 - std::countr_zero(m));
    return v;
}
inline Mask from_value(Mask v, int cols) { return to_value(v, cols); }

}  // namespace detail

enum class Equivalence { colour_preserving, colour_blind };

struct CanonicalForm {
    int rows = 0, cols = 0;
    std::vector<Mask> values;  // lex-max row values, first row most significant
    Equivalence mode = Equivalence::colour_preserving;

    std::string bytes() const {
        std::string s = std::to_string(rows) + "x" + std::to_string(cols) + ":";
        for (Mask v : values)
            for (int sh = 56; sh >= 0; sh -= 8) s.push_back(char((v >> sh) & 0xff));
        return s;
    }
    BinaryMatrix matrix() const {
        std::vector<Mask> r;
        for (Mask v : values) r.push_back(detail::from_value(v, cols));
        return BinaryMatrix(cols, r);
    }
    friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
        return a.rows == b.rows && a.cols == b.cols && a.values == b.values;
    }
    friend std::strong_ordering operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
        if (auto c = a.rows <=> b.rows; c != 0) return c;
        if (auto c = a.cols <=> b.cols; c != 0) return c;
        return a.values <=> b.values;
    }
};

inline CanonicalForm canonical_matrix(const BinaryMatrix& a) {
    detail::LexMax s(a.row_masks(), a.cols());
    return CanonicalForm{a.rows(), a.cols(), s.maximum(), Equivalence::colour_preserving};
}

// Whether `a`, read as given, is already its own lex-max labelling.
inline bool is_canonical(const BinaryMatrix& a) {
    std::vector<Mask> vals;
    for (int i = 0; i < a.rows(); ++i) vals.push_back(detail::to_value(a.row(i), a.cols()));
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (vals[i] > vals[i - 1]) return false;
    detail::LexMax s(a.row_masks(), a.cols());
    return s.is_maximal(vals);
}

inline CanonicalForm canonical_form(const BinaryMatrix& a, Equivalence mode) {
    auto c = canonical_matrix(a);
    if (mode == Equivalence::colour_blind) {
        auto t = canonical_matrix(a.transpose());
        if (t > c) c = t;
        c.mode = Equivalence::colour_blind;
    }
    return c;
}

inline CanonicalForm canonical_form(const BipartiteGraph& g, Equivalence mode) {
    return canonical_form(g.matrix(), mode);
}

inline bool has_colour_reversing_automorphism(const BipartiteGraph& g) {
    return canonical_matrix(g.matrix()) == canonical_matrix(g.matrix().transpose());
}

inline bool isomorphic(const BipartiteGraph& x, const BipartiteGraph& y, Equivalence mode) {
    return canonical_form(x, mode) == canonical_form(y, mode);
}

}  // namespace lehman
