#pragma once

#include "lehman/exactmat.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lehman {

using Mask = std::uint64_t;
constexpr int kMaxDim = 64;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask(1) << i; }

inline std::vector<int> members(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask mask_of(const std::vector<int>& xs) {
    Mask m = 0;
    for (int x : xs) m |= bit(x);
    return m;
}

// 0/1 matrix with at most 64 columns; row i is a bitmask over columns.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols) : rows_(rows), cols_(cols), r_(rows, 0) {
        if (rows < 0 || cols < 0 || cols > kMaxDim) throw std::invalid_argument("unsupported matrix shape");
    }
    BinaryMatrix(int cols, std::vector<Mask> rows) : rows_(int(rows.size())), cols_(cols), r_(std::move(rows)) {
        if (cols < 0 || cols > kMaxDim) throw std::invalid_argument("unsupported matrix shape");
        Mask full = cols == 64 ? ~Mask(0) : bit(cols) - 1;
        for (Mask m : r_)
            if (m & ~full) throw std::invalid_argument("row has bits outside the column range");
    }

    static BinaryMatrix from_strings(const std::vector<std::string>& rows) {
        if (rows.empty()) return BinaryMatrix(0, 0);
        BinaryMatrix m(int(rows.size()), int(rows[0].size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (int(rows[i].size()) != m.cols()) throw std::invalid_argument("ragged rows");
            for (int j = 0; j < m.cols(); ++j) {
                if (rows[i][j] == '1') m.set(i, j);
                else if (rows[i][j] != '0') throw std::invalid_argument("non-0/1 character");
            }
        }
        return m;
    }
    static BinaryMatrix from_rational(const RationalMatrix& a) {
        if (!a.is_binary()) throw std::invalid_argument("matrix is not 0/1");
        BinaryMatrix m(a.rows(), a.cols());
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (a(i, j) == 1) m.set(i, j);
        return m;
    }
    static BinaryMatrix identity(int n) {
        BinaryMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.set(i, i);
        return m;
    }
    static BinaryMatrix ones(int rows, int cols) {
        BinaryMatrix m(rows, cols);
        for (int i = 0; i < rows; ++i) m.r_[i] = cols == 64 ? ~Mask(0) : bit(cols) - 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    bool get(int i, int j) const { return (r_[i] >> j) & 1; }
    void set(int i, int j, bool v = true) {
        if (v) r_[i] |= bit(j);
        else r_[i] &= ~bit(j);
    }
    Mask row(int i) const { return r_[i]; }
    const std::vector<Mask>& row_masks() const { return r_; }
    Mask col(int j) const {
        Mask m = 0;
        for (int i = 0; i < rows_; ++i)
            if (get(i, j)) m |= bit(i);
        return m;
    }
    int row_sum(int i) const { return popcount(r_[i]); }
    int col_sum(int j) const { return popcount(col(j)); }

    BinaryMatrix transpose() const {
        BinaryMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (Mask m = r_[i]; m; m &= m - 1) t.set(std::countr_zero(m), i);
        return t;
    }

    RationalMatrix to_rational() const {
        RationalMatrix a(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (get(i, j)) a(i, j) = 1;
        return a;
    }

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out(rows_, std::string(cols_, '0'));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (get(i, j)) out[i][j] = '1';
        return out;
    }

    // Common regular degree, if every row and column has it.
    std::optional<int> regular_degree() const {
        if (rows_ == 0) return std::nullopt;
        int r = row_sum(0);
        for (int i = 0; i < rows_; ++i)
            if (row_sum(i) != r) return std::nullopt;
        for (int j = 0; j < cols_; ++j)
            if (col_sum(j) != r) return std::nullopt;
        return r;
    }

    friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.r_ == b.r_;
    }
    friend bool operator!=(const BinaryMatrix& a, const BinaryMatrix& b) { return !(a == b); }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Mask> r_;
};

inline std::string to_lmx(const BinaryMatrix& m) { return to_lmx(m.to_rational()); }

struct Edge {
    int black;
    int white;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Bipartite graph with n black (rows) and n white (columns) vertices.
class BipartiteGraph {
public:
    BipartiteGraph() = default;
    explicit BipartiteGraph(BinaryMatrix a) : a_(std::move(a)) {
        if (!a_.square()) throw std::invalid_argument("bipartite adjacency must be square");
        cols_.resize(a_.cols());
        for (int j = 0; j < a_.cols(); ++j) cols_[j] = a_.col(j);
    }
    static BipartiteGraph from_edges(int n, const std::vector<Edge>& edges) {
        BinaryMatrix a(n, n);
        for (auto e : edges) {
            if (e.black < 0 || e.black >= n || e.white < 0 || e.white >= n)
                throw std::invalid_argument("edge endpoint out of range");
            if (a.get(e.black, e.white)) throw std::invalid_argument("duplicate edge");
            a.set(e.black, e.white);
        }
        return BipartiteGraph(std::move(a));
    }

    int n() const { return a_.rows(); }
    const BinaryMatrix& matrix() const { return a_; }
    bool has_edge(int b, int w) const { return a_.get(b, w); }
    Mask black_nbrs(int b) const { return a_.row(b); }  // whites adjacent to b
    Mask white_nbrs(int w) const { return cols_[w]; }   // blacks adjacent to w
    std::optional<int> regular_degree() const { return a_.regular_degree(); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int b = 0; b < n(); ++b)
            for (int w : members(a_.row(b))) out.push_back({b, w});
        return out;
    }

    BipartiteGraph transpose() const { return BipartiteGraph(a_.transpose()); }

    bool is_connected() const {
        if (n() == 0) return true;
        Mask seen_b = 1, seen_w = 0, frontier_b = 1, frontier_w = 0;
        while (frontier_b || frontier_w) {
            Mask nw = 0, nb = 0;
            for (int b : members(frontier_b)) nw |= a_.row(b);
            for (int w : members(frontier_w)) nb |= cols_[w];
            frontier_w = nw & ~seen_w;
            frontier_b = nb & ~seen_b;
            seen_w |= frontier_w;
            seen_b |= frontier_b;
        }
        Mask full = n() == 64 ? ~Mask(0) : bit(n()) - 1;
        return seen_b == full && seen_w == full;
    }

    friend bool operator==(const BipartiteGraph& x, const BipartiteGraph& y) { return x.a_ == y.a_; }

private:
    BinaryMatrix a_;
    std::vector<Mask> cols_;
};

// "B6:" + graph6 of the 2n-vertex graph, blacks 0..n-1 then whites n..2n-1.
inline std::string to_b6(const BipartiteGraph& g) {
    int v = 2 * g.n();
    if (v > 62) throw std::invalid_argument("B6 encoding limited to 62 vertices");
    std::string out = "B6:";
    out.push_back(char(63 + v));
    int acc = 0, nbits = 0;
    auto push = [&](bool b) {
        acc = (acc << 1) | int(b);
        if (++nbits == 6) {
            out.push_back(char(63 + acc));
            acc = nbits = 0;
        }
    };
    for (int j = 1; j < v; ++j)
        for (int i = 0; i < j; ++i) {
            bool e = false;
            if (i < g.n() && j >= g.n()) e = g.has_edge(i, j - g.n());
            push(e);
        }
    if (nbits) {
        while (nbits) push(false);
    }
    return out;
}

inline BipartiteGraph from_b6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    if (s.rfind("B6:", 0) != 0) throw std::invalid_argument("B6: missing prefix");
    s = s.substr(3);
    if (s.empty() || s[0] < 63 || s[0] > 125) throw std::invalid_argument("B6: bad vertex count");
    int v = s[0] - 63;
    if (v % 2) throw std::invalid_argument("B6: odd vertex count");
    int n = v / 2;
    std::size_t need = (std::size_t(v) * (v - 1) / 2 + 5) / 6;
    if (s.size() != need + 1) throw std::invalid_argument("B6: wrong length");
    BinaryMatrix a(n, n);
    std::size_t k = 0;
    for (int j = 1; j < v; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int c = s[1 + k / 6] - 63;
            if (c < 0 || c > 63) throw std::invalid_argument("B6: bad character");
            if (!((c >> (5 - k % 6)) & 1)) continue;
            if (i >= n || j < n) throw std::invalid_argument("B6: edge inside a colour class");
            a.set(i, j - n);
        }
    return BipartiteGraph(std::move(a));
}

}  // namespace lehman
